#include "cantorlab/setlab/sequences.hpp"

namespace cantorlab::setlab {

namespace {

void require_open_unit(const Rational& x, const std::string& name) {
  if (x.sign() <= 0 || x >= Rational(1)) {
    throw InvalidInput(name + " = " + x.str() + " must lie in (0,1)");
  }
}

}  // namespace

std::vector<BigInt> lemma44_sequence(const Rational& beta, std::size_t count) {
  require_open_unit(beta, "beta");
  const Rational rest = Rational(1) - beta;
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    const long k = static_cast<long>((i + 1) / 2);
    out.push_back(((i % 2 == 1 ? beta : rest) * Rational(k)).ceil());
  }
  return out;
}

std::vector<BigInt> lemma45_sequence(const Rational& beta, const Rational& gamma,
                                     std::size_t count) {
  require_open_unit(beta, "beta");
  require_open_unit(gamma, "gamma");
  if (beta + gamma <= Rational(1)) {
    throw InvalidInput("beta + gamma = " + (beta + gamma).str() + " must exceed 1");
  }
  const Rational b = beta / (Rational(1) - beta);
  const Rational g = gamma / (Rational(1) - gamma);
  std::vector<BigInt> out;
  out.reserve(count);
  BigInt odd_sum = 0;
  BigInt even_sum = 0;
  for (std::size_t i = 1; i <= count; ++i) {
    BigInt term;
    if (i == 1) {
      term = 1;
    } else if (i % 2 == 0) {
      term = (g * Rational(odd_sum) - Rational(even_sum)).ceil() + 1;
    } else {
      term = (b * Rational(even_sum) - Rational(odd_sum)).ceil() + 1;
    }
    (i % 2 == 1 ? odd_sum : even_sum) += term;
    out.push_back(term);
  }
  return out;
}

ASequenceRule ASequenceRule::lemma44(const Rational& beta) {
  require_open_unit(beta, "beta");
  ASequenceRule r;
  r.kind = Kind::lemma44;
  r.beta = beta;
  return r;
}

ASequenceRule ASequenceRule::lemma45(const Rational& beta, const Rational& gamma) {
  lemma45_sequence(beta, gamma, 1);
  ASequenceRule r;
  r.kind = Kind::lemma45;
  r.beta = beta;
  r.gamma = gamma;
  return r;
}

ASequenceRule ASequenceRule::constant(const BigInt& value) {
  if (value < 1) throw InvalidInput("constant a value must be >= 1");
  ASequenceRule r;
  r.kind = Kind::constant;
  r.value = value;
  return r;
}

ASequenceRule ASequenceRule::custom(std::vector<BigInt> terms) {
  if (terms.empty()) throw InvalidInput("custom a sequence is empty");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i] < 1) {
      throw InvalidInput("a[" + std::to_string(i + 1) + "] = " + terms[i].get_str() +
                         " must be >= 1");
    }
  }
  ASequenceRule r;
  r.kind = Kind::custom;
  r.terms = std::move(terms);
  return r;
}

std::vector<BigInt> ASequenceRule::generate(std::size_t count) const {
  switch (kind) {
    case Kind::lemma44:
      return lemma44_sequence(beta, count);
    case Kind::lemma45:
      return lemma45_sequence(beta, gamma, count);
    case Kind::constant:
      return std::vector<BigInt>(count, value);
    case Kind::custom: {
      std::vector<BigInt> out;
      out.reserve(count);
      for (std::size_t i = 0; i < count; ++i) out.push_back(terms[i % terms.size()]);
      return out;
    }
  }
  return {};
}

std::string ASequenceRule::name() const {
  switch (kind) {
    case Kind::lemma44:
      return "lemma44";
    case Kind::lemma45:
      return "lemma45";
    case Kind::constant:
      return "constant";
    case Kind::custom:
      return "custom";
  }
  return "unknown";
}

ASequenceRule::Kind parse_rule_kind(const std::string& name) {
  if (name == "lemma44") return ASequenceRule::Kind::lemma44;
  if (name == "lemma45") return ASequenceRule::Kind::lemma45;
  if (name == "constant") return ASequenceRule::Kind::constant;
  if (name == "custom") return ASequenceRule::Kind::custom;
  throw InvalidInput("rule: unknown value \"" + name + "\"");
}

}  // namespace cantorlab::setlab
