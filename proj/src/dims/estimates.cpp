#include "cantorlab/dims/estimates.hpp"

#include <algorithm>
#include <cmath>

namespace cantorlab::dims {

namespace {

const double kLog2 = std::log(2.0);

}  // namespace

DimEstimate box_dims_from_profile(const covers::CoverProfile& profile) {
  std::vector<const covers::ProfileEntry*> usable;
  for (const auto& e : profile.entries) {
    if (e.scale < Rational(1)) usable.push_back(&e);
  }
  if (usable.size() < 3) {
    throw InvalidInput("profile needs at least 3 scales below 1, got " +
                       std::to_string(usable.size()));
  }
  const Rational span = usable.front()->scale / usable.back()->scale;
  if (span < Rational(100)) {
    throw InvalidInput("profile scales span less than two decades");
  }
  const std::size_t half = (usable.size() + 1) / 2;
  DimEstimate est;
  est.method = Method::profile;
  est.lower = INFINITY;
  est.upper = -INFINITY;
  for (std::size_t i = usable.size() - half; i < usable.size(); ++i) {
    const auto& e = *usable[i];
    const double ratio = std::log(static_cast<double>(e.count_n)) / -e.scale.log();
    est.lower = std::min(est.lower, ratio);
    est.upper = std::max(est.upper, ratio);
  }
  est.scale_hi = usable[usable.size() - half]->scale;
  est.scale_lo = usable.back()->scale;
  return est;
}

DimEstimate box_dims_from_generators(const setlab::GeneratorSequence& seq, std::uint64_t n_max) {
  if (n_max < 2) throw InvalidInput("n_max must be at least 2");
  DimEstimate est;
  est.method = Method::formula;
  const std::uint64_t first = (n_max + 1) / 2;
  est.scale_hi = Rational(static_cast<long>(first));
  est.scale_lo = Rational(static_cast<long>(n_max));
  if (seq.kind() == setlab::GeneratorSequence::Kind::constant) {
    est.lower = est.upper = kLog2 / seq.neg_log_lambda(1);
    return est;
  }
  est.lower = INFINITY;
  est.upper = -INFINITY;
  const bool q_power = seq.kind() == setlab::GeneratorSequence::Kind::q_power;
  std::uint64_t exponent_sum = 0;
  double log_sum = 0.0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (q_power) {
      exponent_sum = numerics::checked_add(exponent_sum, seq.exponent(n));
    } else {
      log_sum += seq.neg_log_lambda(n);
    }
    if (n < first) continue;
    const double denom = q_power ? static_cast<double>(exponent_sum) * -seq.q().log_q : log_sum;
    const double ratio = static_cast<double>(n) * kLog2 / denom;
    est.lower = std::min(est.lower, ratio);
    est.upper = std::max(est.upper, ratio);
  }
  return est;
}

DimEstimate self_product_dims(const covers::CoverProfile& profile) {
  DimEstimate est = box_dims_from_profile(profile);
  est.lower *= 2.0;
  est.upper *= 2.0;
  return est;
}

RatioSequences theorem42_ratios(const setlab::ASequenceRule& rule, std::size_t k_max) {
  if (k_max < 2) throw InvalidInput("k_max must be at least 2");
  const auto a = rule.generate(2 * k_max);
  RatioSequences out;
  numerics::BigInt odd = 0, even = 0, total = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    odd += a[2 * k - 2];
    total += a[2 * k - 2];
    out.c.push_back(Rational(odd, total));
    even += a[2 * k - 1];
    total += a[2 * k - 1];
    out.d.push_back(Rational(even, total));
  }
  return out;
}

AttainmentReport attainment_check(const covers::CoverProfile& profile, double d) {
  if (profile.entries.empty()) throw InvalidInput("attainment needs a non-empty profile");
  AttainmentReport rep;
  rep.exponent = d;
  rep.c_min = INFINITY;
  rep.c_max = -INFINITY;
  for (const auto& e : profile.entries) {
    const double c = std::exp(std::log(static_cast<double>(e.count_n)) + d * e.scale.log());
    rep.c_min = std::min(rep.c_min, c);
    rep.c_max = std::max(rep.c_max, c);
  }
  rep.scale_hi = profile.entries.front().scale;
  rep.scale_lo = profile.entries.back().scale;
  return rep;
}

Theorem42Report verify_theorem42(const setlab::PairSpec& pair, std::uint64_t n_max,
                                 std::size_t k_max) {
  if (n_max < 2 || n_max > pair.depth_limit()) {
    throw InvalidInput("n_max must lie in [2, " + std::to_string(pair.depth_limit()) + "]");
  }
  using numerics::BigInt;
  Theorem42Report rep;
  rep.n_max = n_max;
  const BigInt limit = numerics::to_big(n_max);

  // C: blocks [n_k, n_{k+1}) with base s_{2k}; D: [0, a_1) then [m_k, m_{k+1}) with base s_{2k+1}.
  struct Spec {
    BigInt start, end, base, den;
  };
  const auto blocks_for = [&](setlab::Side side) {
    std::vector<Spec> out;
    if (side == setlab::Side::D) out.push_back({0, pair.a(1), 0, pair.a(1)});
    for (std::size_t k = 0;; ++k) {
      Spec b;
      if (side == setlab::Side::C) {
        b = {pair.n(k), pair.n(k + 1), pair.s(2 * k), pair.s(2 * k + 1)};
      } else {
        b = {pair.m(k), pair.m(k + 1), pair.s(2 * k + 1), pair.s(2 * k + 2)};
      }
      if (b.start > limit) break;
      out.push_back(b);
    }
    return out;
  };

  for (const auto side : {setlab::Side::C, setlab::Side::D}) {
    BigInt exponent_sum = 0;
    std::uint64_t index = 0;
    for (const auto& spec : blocks_for(side)) {
      ExponentBlock b;
      b.side = side;
      b.index = index++;
      b.start = numerics::to_u64(spec.start);
      b.end = numerics::to_u64(spec.end);
      b.base = spec.base;
      b.bound_den = spec.den;
      b.first_level = std::max<std::uint64_t>(b.start, 1);
      b.last_level = std::min(b.end - 1, n_max);
      b.block_max = Rational(0);
      for (std::uint64_t n = b.first_level; n <= b.last_level; ++n) {
        exponent_sum += numerics::to_big(pair.exponent(side, n));
        const BigInt expected = numerics::to_big(n) - spec.start + spec.base;
        if (exponent_sum != expected) b.exponents_match = false;
        b.block_max = std::max(b.block_max, Rational(numerics::to_big(n), exponent_sum));
      }
      b.pass = b.exponents_match && b.block_max <= Rational(spec.end, spec.den);
      if (!b.pass) rep.pass = false;
      if (b.first_level <= b.last_level) rep.blocks.push_back(std::move(b));
    }
  }

  rep.ratios = theorem42_ratios(pair.rule(), k_max);
  const double scale = kLog2 / -pair.q().log_q;
  const std::size_t tail_first = (k_max + 1) / 2;
  for (std::size_t k = tail_first; k <= k_max; ++k) {
    rep.tail_c = std::max(rep.tail_c, scale * rep.ratios.c[k - 1].to_double());
    rep.tail_d = std::max(rep.tail_d, scale * rep.ratios.d[k - 1].to_double());
  }
  rep.formula_c = box_dims_from_generators(setlab::generators_from_pair(pair, setlab::Side::C), n_max);
  rep.formula_d = box_dims_from_generators(setlab::generators_from_pair(pair, setlab::Side::D), n_max);
  return rep;
}

}  // namespace cantorlab::dims
