#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "cantorlab/numerics/adaptive.hpp"
#include "cantorlab/numerics/rational.hpp"

namespace cantorlab::setlab {

using numerics::BigInt;

/// The set {n^(-alpha) : n >= 1} together with 0.
class SequenceSet {
 public:
  /// A real of the form n^(-alpha) + offset (or just offset when `index` is empty).
  struct Value {
    std::optional<BigInt> index;
    Rational offset;
  };

  explicit SequenceSet(Rational alpha, numerics::AdaptiveConfig adaptive = {});

  const Rational& alpha() const { return alpha_; }
  /// Point values are rational exactly when alpha is an integer.
  bool exact_values() const { return alpha_.is_integer(); }

  static Value zero() { return Value{std::nullopt, Rational(0)}; }
  Value point(const BigInt& n) const;
  Value shifted(const Value& v, const Rational& by) const;

  std::strong_ordering compare(const Value& a, const Value& b) const;
  /// Largest n >= 1 with n^(-alpha) > v (strict) or >= v; empty when there is none.
  /// Requires v > 0.
  std::optional<BigInt> last_index_above(const Value& v, bool strict) const;

  double to_double(const Value& v) const;
  /// Exact value; throws InvalidInput when it is irrational.
  Rational exact(const Value& v) const;

 private:
  numerics::Enclosure enclose(const Value& v, mpfr_prec_t bits) const;

  Rational alpha_;
  unsigned long p_;
  unsigned long q_;
  numerics::AdaptiveConfig adaptive_;
};

struct SequencePoints {
  std::vector<BigInt> indices;   // 1, 2, ..., N in descending value order
  std::vector<Rational> values;  // filled when the values are rational
  bool tail_below_cutoff = true; // [0, cutoff) holds the remaining points and 0
};

/// Every point n^(-alpha) >= cutoff, descending.
SequencePoints sequence_set_points(const SequenceSet& set, const Rational& cutoff);

}  // namespace cantorlab::setlab
