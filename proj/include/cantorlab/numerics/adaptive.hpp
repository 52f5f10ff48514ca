#pragma once

#include <compare>
#include <functional>

#include <mpfr.h>

#include "cantorlab/numerics/rational.hpp"

namespace cantorlab::numerics {

/// Owning wrapper around an mpfr_t.
class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t precision);
  ~MpfrValue();
  MpfrValue(const MpfrValue& other);
  MpfrValue& operator=(const MpfrValue& other);
  MpfrValue(MpfrValue&& other) noexcept;
  MpfrValue& operator=(MpfrValue&& other) noexcept;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

 private:
  mpfr_t value_;
  bool live_ = false;
};

/// Closed enclosure [lo, hi] of a real number; lo and hi are computed with outward rounding.
struct Enclosure {
  MpfrValue lo;
  MpfrValue hi;

  explicit Enclosure(mpfr_prec_t precision) : lo(precision), hi(precision) {}
};

Enclosure enclose(const Rational& value, mpfr_prec_t precision);
/// Encloses n^(-p/q) for n >= 1, p, q >= 1.
Enclosure enclose_inverse_root(const BigInt& n, unsigned long p, unsigned long q,
                               mpfr_prec_t precision);
Enclosure operator+(const Enclosure& a, const Enclosure& b);

struct AdaptiveConfig {
  mpfr_prec_t start_bits = 64;
  mpfr_prec_t max_bits = 4096;
};

/// Produces an enclosure of some fixed real number at the requested precision.
using Evaluator = std::function<Enclosure(mpfr_prec_t)>;

/// Orders two reals known only through enclosures. Precision doubles until the enclosures
/// separate; throws Undecidable at the cap (which includes the case of exact equality).
std::strong_ordering certified_compare(const Evaluator& a, const Evaluator& b,
                                       const AdaptiveConfig& config = {});

}  // namespace cantorlab::numerics
