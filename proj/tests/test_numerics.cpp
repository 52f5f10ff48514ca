#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cantorlab/numerics/adaptive.hpp"
#include "cantorlab/numerics/rational.hpp"
#include "oracles.hpp"

using cantorlab::InvalidInput;
using cantorlab::Undecidable;
using namespace cantorlab::numerics;
using oracle::frac;

TEST_CASE("reduce normalises sign and gcd") {
  CHECK(Rational::reduce(BigInt(2), BigInt(6)).str() == "1/3");
  CHECK(Rational::reduce(BigInt(-1), BigInt(-3)).str() == "1/3");
  CHECK(Rational::reduce(BigInt(0), BigInt(7)).str() == "0/1");
  CHECK(Rational::reduce(BigInt(3), BigInt(-9)).str() == "-1/3");
  CHECK_THROWS_AS(Rational::reduce(BigInt(1), BigInt(0)), InvalidInput);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), InvalidInput);
}

TEST_CASE("parse accepts p/q and integers") {
  CHECK(Rational::parse("4/6") == frac(2, 3));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational::parse(" 7/21 ").str() == "1/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("abc"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse(""), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("0.5"), InvalidInput);
}

TEST_CASE("pow_scale") {
  CHECK(pow_scale(frac(1, 3), 2) == frac(1, 9));
  CHECK(pow_scale(frac(1, 4), 0) == Rational(1));
  CHECK(pow_scale(frac(2, 5), 3) == frac(8, 125));
  CHECK_THROWS_AS(pow_scale(Rational(1), 2), InvalidInput);
  CHECK_THROWS_AS(pow_scale(Rational(0), 2), InvalidInput);
  CHECK_THROWS_AS(pow_scale(frac(3, 2), 2), InvalidInput);
  CHECK(pow(frac(1, 3), -2) == Rational(9));
}

TEST_CASE("cmp") {
  CHECK(cmp(frac(1, 3), frac(2, 6)) == std::strong_ordering::equal);
  CHECK(cmp(frac(1, 3), frac(2, 5)) == std::strong_ordering::less);
  CHECK(cmp(frac(1, 1048576), frac(1, 1594323)) == std::strong_ordering::greater);
  CHECK(cmp(pow_scale(frac(1, 4), 10), pow_scale(frac(1, 3), 13)) == std::strong_ordering::greater);
}

TEST_CASE("random rationals: order and associativity") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int i = 0; i < 500; ++i) {
    const Rational a = frac(num(rng), den(rng));
    const Rational b = frac(num(rng), den(rng));
    const Rational c = frac(num(rng), den(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    if (a < b && b < c) CHECK(a < c);
    CHECK((cmp(a, b) == std::strong_ordering::less) == (cmp(b, a) == std::strong_ordering::greater));
    CHECK(gcd(a.num(), a.den()) == 1);
    CHECK(a.den() > 0);
  }
}

TEST_CASE("pow_scale is a homomorphism in the exponent") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> den(2, 50);
  std::uniform_int_distribution<std::uint64_t> exp(0, 32);
  for (int i = 0; i < 200; ++i) {
    const long d = den(rng);
    std::uniform_int_distribution<long> num(1, d - 1);
    const Rational q = frac(num(rng), d);
    const auto j1 = exp(rng), j2 = exp(rng);
    CHECK(pow_scale(q, j1 + j2) == pow_scale(q, j1) * pow_scale(q, j2));
  }
}

TEST_CASE("ScalePower evaluates exactly") {
  const ScalePower p{frac(1, 4), 5};
  CHECK(p.value() == frac(1, 1024));
  CHECK(p.log() == doctest::Approx(5 * std::log(0.25)));
}

TEST_CASE("checked integer arithmetic refuses overflow") {
  CHECK(checked_add(1, 2) == 3);
  CHECK_THROWS_AS(checked_add(UINT64_MAX, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(UINT64_MAX / 2 + 1, 2), std::overflow_error);
  CHECK_THROWS_AS(to_u64(BigInt(-1)), std::overflow_error);
  CHECK(to_u64(to_big(UINT64_MAX)) == UINT64_MAX);
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(frac(1, 2) / Rational(0), InvalidInput);
}

TEST_CASE("log handles huge values") {
  const Rational tiny = pow_scale(frac(1, 3), 5000);
  CHECK(tiny.log() == doctest::Approx(5000 * std::log(1.0 / 3.0)));
}

TEST_CASE("certified comparison of irrational powers") {
  // 2^(-1/2) vs 3^(-1/2): enclosures separate quickly.
  const Evaluator a = [](mpfr_prec_t p) { return enclose_inverse_root(BigInt(2), 1, 2, p); };
  const Evaluator b = [](mpfr_prec_t p) { return enclose_inverse_root(BigInt(3), 1, 2, p); };
  CHECK(certified_compare(a, b) == std::strong_ordering::greater);
  // 4^(-1/2) = 1/2 exactly: undecidable by enclosure.
  const Evaluator c = [](mpfr_prec_t p) { return enclose_inverse_root(BigInt(4), 1, 2, p); };
  const Evaluator half = [](mpfr_prec_t p) { return enclose(frac(1, 2), p); };
  CHECK_THROWS_AS(certified_compare(c, half, AdaptiveConfig{64, 256}), Undecidable);
}

TEST_CASE("enclosures contain the value") {
  const auto e = enclose(frac(1, 3), 53);
  CHECK(mpfr_cmp_d(e.lo.get(), 1.0 / 3.0) <= 0);
  CHECK(mpfr_cmp_d(e.hi.get(), 1.0 / 3.0) >= 0);
}
