#include "cantorlab/numerics/adaptive.hpp"

#include <algorithm>
#include <string>

namespace cantorlab::numerics {

MpfrValue::MpfrValue(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  live_ = true;
}

MpfrValue::~MpfrValue() {
  if (live_) mpfr_clear(value_);
}

MpfrValue::MpfrValue(const MpfrValue& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
  live_ = true;
}

MpfrValue& MpfrValue::operator=(const MpfrValue& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

MpfrValue::MpfrValue(MpfrValue&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
  live_ = true;
}

MpfrValue& MpfrValue::operator=(MpfrValue&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Enclosure enclose(const Rational& value, mpfr_prec_t precision) {
  Enclosure out(precision);
  mpfr_set_q(out.lo.get(), value.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi.get(), value.raw().get_mpq_t(), MPFR_RNDU);
  return out;
}

Enclosure enclose_inverse_root(const BigInt& n, unsigned long p, unsigned long q,
                               mpfr_prec_t precision) {
  if (n < 1 || p == 0 || q == 0) throw InvalidInput("inverse root needs n, p, q >= 1");
  BigInt power;
  mpz_pow_ui(power.get_mpz_t(), n.get_mpz_t(), p);
  MpfrValue base_lo(precision), base_hi(precision);
  mpfr_set_z(base_lo.get(), power.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(base_hi.get(), power.get_mpz_t(), MPFR_RNDU);
  mpfr_rootn_ui(base_lo.get(), base_lo.get(), q, MPFR_RNDD);
  mpfr_rootn_ui(base_hi.get(), base_hi.get(), q, MPFR_RNDU);
  Enclosure out(precision);
  mpfr_ui_div(out.lo.get(), 1, base_hi.get(), MPFR_RNDD);
  mpfr_ui_div(out.hi.get(), 1, base_lo.get(), MPFR_RNDU);
  return out;
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  Enclosure out(std::max(a.lo.precision(), b.lo.precision()));
  mpfr_add(out.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_add(out.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
  return out;
}

std::strong_ordering certified_compare(const Evaluator& a, const Evaluator& b,
                                       const AdaptiveConfig& config) {
  for (mpfr_prec_t bits = config.start_bits;; bits *= 2) {
    const mpfr_prec_t p = std::min(bits, config.max_bits);
    const Enclosure ea = a(p);
    const Enclosure eb = b(p);
    if (mpfr_less_p(ea.hi.get(), eb.lo.get())) return std::strong_ordering::less;
    if (mpfr_greater_p(ea.lo.get(), eb.hi.get())) return std::strong_ordering::greater;
    if (p >= config.max_bits) {
      throw Undecidable("comparison unresolved at " + std::to_string(config.max_bits) +
                        " bits of precision");
    }
  }
}

}  // namespace cantorlab::numerics
