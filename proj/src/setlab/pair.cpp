#include "cantorlab/setlab/pair.hpp"

#include <memory>

namespace cantorlab::setlab {

Side parse_side(const std::string& text) {
  if (text == "C" || text == "c") return Side::C;
  if (text == "D" || text == "d") return Side::D;
  throw InvalidInput("side: expected C or D, got \"" + text + "\"");
}

std::string side_name(Side side) { return side == Side::C ? "C" : "D"; }

PairSpec::PairSpec(QBase q, ASequenceRule rule, std::uint64_t depth_limit)
    : q_(std::move(q)), rule_(std::move(rule)), depth_limit_(depth_limit) {
  if (depth_limit_ == 0) throw InvalidInput("depth limit must be positive");
  const BigInt limit(std::to_string(depth_limit_));
  std::size_t count = 16;
  for (;;) {
    a_ = rule_.generate(count);
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (a_[i] < 1) {
        throw InvalidInput("a_" + std::to_string(i + 1) + " = " + a_[i].get_str() +
                           " must be a positive integer");
      }
    }
    // Largest k with 2k+1 terms available.
    const std::size_t k = (count - 1) / 2;
    if (n(k) > limit && m(k) > limit) break;
    count *= 2;
  }

  exp_c_.assign(depth_limit_ + 1, 1);
  exp_d_.assign(depth_limit_ + 1, 1);
  for (std::size_t k = 1; 2 * k + 1 <= a_.size(); ++k) {
    const BigInt nk = n(k);
    if (nk <= limit) exp_c_[numerics::to_u64(nk)] = numerics::to_u64(a(2 * k) + 1);
    const BigInt mk = m(k);
    if (mk <= limit) exp_d_[numerics::to_u64(mk)] = numerics::to_u64(a(2 * k + 1) + 1);
    if (nk > limit && mk > limit) break;
  }
}

const BigInt& PairSpec::a(std::size_t i) const {
  if (i == 0 || i > a_.size()) {
    throw InvalidInput("a_" + std::to_string(i) + " outside generated prefix of length " +
                       std::to_string(a_.size()));
  }
  return a_[i - 1];
}

BigInt PairSpec::s(std::size_t k) const {
  BigInt total = 0;
  for (std::size_t i = 1; i <= k; ++i) total += a(i);
  return total;
}

BigInt PairSpec::o(std::size_t k) const {
  BigInt total = 0;
  for (std::size_t j = 1; j <= k; ++j) total += a(2 * j - 1);
  return total;
}

BigInt PairSpec::e(std::size_t k) const {
  BigInt total = 0;
  for (std::size_t j = 1; j <= k; ++j) total += a(2 * j);
  return total;
}

BigInt PairSpec::m(std::size_t k) const { return a(1) + e(k); }

std::uint64_t PairSpec::exponent(Side side, std::uint64_t i) const {
  if (i == 0) throw InvalidInput("generator index starts at 1");
  if (i > depth_limit_) {
    throw InvalidInput("generator index " + std::to_string(i) + " beyond depth limit " +
                       std::to_string(depth_limit_));
  }
  return side == Side::C ? exp_c_[i] : exp_d_[i];
}

std::string PairSpec::describe() const {
  std::string text = "pair q=" + q_.str() + " rule=" + rule_.name();
  if (rule_.kind == ASequenceRule::Kind::lemma44) text += " beta=" + rule_.beta.str();
  if (rule_.kind == ASequenceRule::Kind::lemma45) {
    text += " beta=" + rule_.beta.str() + " gamma=" + rule_.gamma.str();
  }
  if (rule_.kind == ASequenceRule::Kind::constant) text += " value=" + rule_.value.get_str();
  return text;
}

GeneratorSequence generators_from_pair(const PairSpec& spec, Side side) {
  auto shared = std::make_shared<const PairSpec>(spec);
  return GeneratorSequence::q_power(
      spec.q(), [shared, side](std::uint64_t i) { return shared->exponent(side, i); },
      spec.describe() + " side " + side_name(side));
}

}  // namespace cantorlab::setlab
