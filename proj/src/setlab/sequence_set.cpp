#include "cantorlab/setlab/sequence_set.hpp"

#include <cmath>
#include <limits>

namespace cantorlab::setlab {

namespace {

unsigned long to_ulong(const BigInt& v, const char* what) {
  if (!v.fits_ulong_p()) throw InvalidInput(std::string(what) + " component of alpha too large");
  return v.get_ui();
}

}  // namespace

SequenceSet::SequenceSet(Rational alpha, numerics::AdaptiveConfig adaptive)
    : alpha_(std::move(alpha)), adaptive_(adaptive) {
  if (alpha_.sign() <= 0) throw InvalidInput("alpha = " + alpha_.str() + " must be positive");
  p_ = to_ulong(alpha_.num(), "numerator");
  q_ = to_ulong(alpha_.den(), "denominator");
}

SequenceSet::Value SequenceSet::point(const BigInt& n) const {
  if (n < 1) throw InvalidInput("sequence index must be >= 1");
  // n^(-p/q) is rational exactly when n is a perfect q-th power.
  BigInt root;
  if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), q_) != 0) {
    BigInt den;
    mpz_pow_ui(den.get_mpz_t(), root.get_mpz_t(), p_);
    return Value{std::nullopt, Rational(BigInt(1), den)};
  }
  return Value{n, Rational(0)};
}

SequenceSet::Value SequenceSet::shifted(const Value& v, const Rational& by) const {
  return Value{v.index, v.offset + by};
}

numerics::Enclosure SequenceSet::enclose(const Value& v, mpfr_prec_t bits) const {
  const auto off = numerics::enclose(v.offset, bits);
  if (!v.index) return off;
  return numerics::enclose_inverse_root(*v.index, p_, q_, bits) + off;
}

std::strong_ordering SequenceSet::compare(const Value& a, const Value& b) const {
  if (a.index == b.index) return a.offset <=> b.offset;
  return numerics::certified_compare([&](mpfr_prec_t bits) { return enclose(a, bits); },
                                     [&](mpfr_prec_t bits) { return enclose(b, bits); },
                                     adaptive_);
}

double SequenceSet::to_double(const Value& v) const {
  double out = v.offset.to_double();
  if (v.index) out += std::exp(-alpha_.to_double() * numerics::log(*v.index));
  return out;
}

Rational SequenceSet::exact(const Value& v) const {
  if (!v.index) return v.offset;
  throw InvalidInput("value is irrational for alpha = " + alpha_.str());
}

std::optional<BigInt> SequenceSet::last_index_above(const Value& v, bool strict) const {
  const auto qualifies = [&](const BigInt& n) {
    const auto c = compare(point(n), v);
    return strict ? c == std::strong_ordering::greater : c != std::strong_ordering::less;
  };
  if (!qualifies(BigInt(1))) return std::nullopt;
  const double approx = to_double(v);
  if (!(approx > 0.0)) throw InvalidInput("last_index_above needs a positive threshold");
  const double estimate = std::exp(-std::log(approx) / alpha_.to_double());
  if (!(estimate < 1e300)) throw std::overflow_error("sequence index estimate overflow");
  BigInt n;
  mpz_set_d(n.get_mpz_t(), std::max(1.0, std::floor(estimate)));
  while (n > 1 && !qualifies(n)) n -= 1;
  while (qualifies(n + 1)) n += 1;
  return n;
}

SequencePoints sequence_set_points(const SequenceSet& set, const Rational& cutoff) {
  if (cutoff.sign() <= 0) throw InvalidInput("cutoff must be positive");
  SequencePoints out;
  const auto last = set.last_index_above(SequenceSet::Value{std::nullopt, cutoff}, false);
  if (!last) return out;
  for (BigInt n = 1; n <= *last; ++n) {
    out.indices.push_back(n);
    if (set.exact_values()) out.values.push_back(set.exact(set.point(n)));
  }
  return out;
}

}  // namespace cantorlab::setlab
