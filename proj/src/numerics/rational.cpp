#include "cantorlab/numerics/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace cantorlab::numerics {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw InvalidInput("malformed rational \"" + std::string(whole) + "\"");
  }
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw InvalidInput("malformed rational \"" + std::string(whole) + "\"");
    }
  }
  BigInt value(std::string(text.substr(i)), 10);
  return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidInput("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::reduce(const BigInt& num, const BigInt& den) { return Rational(num, den); }

Rational Rational::parse(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(body, text));
  const BigInt num = parse_integer(trim(body.substr(0, slash)), text);
  const BigInt den = parse_integer(trim(body.substr(slash + 1)), text);
  return Rational(num, den);
}

double Rational::log() const {
  if (sign() <= 0) throw InvalidInput("log of non-positive rational " + str());
  return numerics::log(value_.get_num()) - numerics::log(value_.get_den());
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) throw InvalidInput("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering cmp(const Rational& a, const Rational& b) { return a <=> b; }

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base.sign() == 0) throw InvalidInput("negative power of zero");
    return Rational(1) / pow(base, -exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), e);
  return Rational(num, den);
}

Rational pow_scale(const Rational& q, std::uint64_t j) {
  if (q.sign() <= 0 || q >= Rational(1)) {
    throw InvalidInput("scale base " + q.str() + " outside (0,1)");
  }
  if (j > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw std::overflow_error("scale exponent too large");
  }
  return pow(q, static_cast<std::int64_t>(j));
}

double log(const BigInt& value) {
  if (value <= 0) throw InvalidInput("log of non-positive integer");
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp) * std::log(2.0);
}

std::uint64_t to_u64(const BigInt& value) {
  if (value < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) {
    throw std::overflow_error("integer " + value.get_str() + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("64-bit count overflow");
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("64-bit count overflow");
  return out;
}

ScalePower::ScalePower(Rational base_value, std::uint64_t exp)
    : base(std::move(base_value)), exponent(exp) {
  if (base.sign() <= 0 || base >= Rational(1)) {
    throw InvalidInput("scale base " + base.str() + " outside (0,1)");
  }
}

ScalePower ScalePower::operator*(const ScalePower& other) const {
  if (base != other.base) throw InvalidInput("scale powers with different bases");
  return ScalePower(base, checked_add(exponent, other.exponent));
}

}  // namespace cantorlab::numerics

std::size_t std::hash<cantorlab::numerics::Rational>::operator()(
    const cantorlab::numerics::Rational& r) const noexcept {
  const auto& q = r.raw();
  const std::size_t h1 = mpz_get_ui(q.get_num_mpz_t()) ^ (mpz_size(q.get_num_mpz_t()) << 48);
  const std::size_t h2 = mpz_get_ui(q.get_den_mpz_t());
  return h1 * 0x9E3779B97F4A7C15ULL ^ (h2 + (h1 << 6) + (h1 >> 2));
}
