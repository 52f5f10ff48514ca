#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cantorlab {

/// Raised for malformed arguments: zero denominators, scales outside (0,1), bad specs.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact procedure cannot settle a question within its budget
/// (depth cap of an address descent, precision cap of the adaptive backend).
class Undecidable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace numerics {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& num, const BigInt& den);

  /// n/d in lowest terms. Throws InvalidInput when d == 0.
  static Rational reduce(const BigInt& num, const BigInt& den);
  /// Parses "p/q" or "p" (optional sign, decimal digits).
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }
  /// Natural logarithm, accurate for arbitrarily large numerators and denominators.
  double log() const;
  /// "p/q" in lowest terms; integers keep the "/1" suffix.
  std::string str() const;

  /// Smallest integer >= value / largest integer <= value.
  BigInt ceil() const;
  BigInt floor() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = ::cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_;
};

/// Exact total order by cross-multiplication.
std::strong_ordering cmp(const Rational& a, const Rational& b);

/// q^j for 0 < q < 1. Throws InvalidInput for q outside (0,1).
Rational pow_scale(const Rational& q, std::uint64_t j);

/// base^exponent for arbitrary base (exponent may be negative when base != 0).
Rational pow(const Rational& base, std::int64_t exponent);

/// log of a positive big integer.
double log(const BigInt& value);

/// BigInt -> uint64 with range check.
std::uint64_t to_u64(const BigInt& value);

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
inline BigInt to_big(std::uint64_t value) { return BigInt(static_cast<unsigned long>(value)); }

/// Overflow-checked arithmetic on counts and exponents.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// Value base^exponent kept in factored form; the exact value is materialised on demand.
struct ScalePower {
  Rational base;
  std::uint64_t exponent = 0;

  ScalePower(Rational base_value, std::uint64_t exp);

  Rational value() const { return pow_scale(base, exponent); }
  /// Same-base product: exponents add (overflow-checked).
  ScalePower operator*(const ScalePower& other) const;
  double log() const { return static_cast<double>(exponent) * base.log(); }
};

}  // namespace numerics

using numerics::Rational;

}  // namespace cantorlab

template <>
struct std::hash<cantorlab::numerics::Rational> {
  std::size_t operator()(const cantorlab::numerics::Rational& r) const noexcept;
};
