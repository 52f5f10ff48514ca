#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cantorlab/setlab/cantor_set.hpp"
#include "cantorlab/setlab/pair.hpp"
#include "cantorlab/setlab/sequence_set.hpp"
#include "cantorlab/setlab/sequences.hpp"
#include "oracles.hpp"

using cantorlab::InvalidInput;
using namespace cantorlab::setlab;
using cantorlab::numerics::BigInt;
using cantorlab::numerics::Rational;
using oracle::frac;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

PairSpec alternating_pair() {
  return PairSpec(QBase::rational(frac(1, 4)), ASequenceRule::custom(big({1, 2})), 256);
}

}  // namespace

TEST_CASE("pair generators, alternating a = (1,2,1,2,...)") {
  const auto spec = alternating_pair();
  const auto c = generators_from_pair(spec, Side::C);
  const auto d = generators_from_pair(spec, Side::D);
  for (std::uint64_t i = 1; i <= 40; ++i) CHECK(c.lambda(i) == frac(1, 64));
  const std::vector<Rational> mu = {frac(1, 4), frac(1, 4), frac(1, 16), frac(1, 4), frac(1, 16)};
  for (std::size_t i = 0; i < mu.size(); ++i) CHECK(d.lambda(i + 1) == mu[i]);
}

TEST_CASE("pair generators follow the case split") {
  const PairSpec spec(QBase::rational(frac(1, 4)), ASequenceRule::lemma44(frac(1, 2)), 512);
  std::map<std::uint64_t, std::uint64_t> special_c, special_d;
  for (std::size_t k = 1; k < 40; ++k) {
    special_c[cantorlab::numerics::to_u64(spec.n(k))] =
        cantorlab::numerics::to_u64(spec.a(2 * k) + 1);
    special_d[cantorlab::numerics::to_u64(spec.m(k))] =
        cantorlab::numerics::to_u64(spec.a(2 * k + 1) + 1);
  }
  const auto c = generators_from_pair(spec, Side::C);
  const auto d = generators_from_pair(spec, Side::D);
  for (std::uint64_t i = 1; i <= 300; ++i) {
    const auto ic = special_c.find(i);
    CHECK(c.exponent(i) == (ic == special_c.end() ? 1 : ic->second));
    const auto id = special_d.find(i);
    CHECK(d.exponent(i) == (id == special_d.end() ? 1 : id->second));
    if (ic == special_c.end()) CHECK(c.lambda(i) == frac(1, 4));
  }
}

TEST_CASE("pair indices are strictly increasing and L_{n_k} = q^{s_{2k}}") {
  const PairSpec spec(QBase::rational(frac(1, 4)), ASequenceRule::lemma44(frac(1, 3)), 400);
  const CantorSet c(generators_from_pair(spec, Side::C));
  for (std::size_t k = 1; k < 30; ++k) {
    CHECK(spec.n(k) < spec.n(k + 1));
    CHECK(spec.m(k) < spec.m(k + 1));
    CHECK(spec.s(k) < spec.s(k + 1));
    const auto nk = cantorlab::numerics::to_u64(spec.n(k));
    if (nk > 400) break;
    CHECK(c.length(nk) ==
          cantorlab::numerics::pow_scale(frac(1, 4), cantorlab::numerics::to_u64(spec.s(2 * k))));
  }
}

TEST_CASE("ceiling a-sequence") {
  CHECK(lemma44_sequence(frac(1, 2), 8) == big({1, 1, 1, 1, 2, 2, 2, 2}));
  for (const auto& beta : {frac(1, 7), frac(1, 2), frac(99, 100)}) {
    CHECK(lemma44_sequence(beta, 1)[0] == 1);
  }
  CHECK_THROWS_AS(lemma44_sequence(Rational(1), 4), InvalidInput);
  CHECK_THROWS_AS(lemma44_sequence(Rational(0), 4), InvalidInput);
  // Direct ceiling evaluation.
  const auto seq = lemma44_sequence(frac(2, 7), 60);
  for (std::size_t k = 1; k <= 30; ++k) {
    CHECK(seq[2 * k - 2] == (BigInt(2 * static_cast<long>(k)) + 6) / 7);
    CHECK(seq[2 * k - 1] == (BigInt(5 * static_cast<long>(k)) + 6) / 7);
  }
}

TEST_CASE("recursive a-sequence") {
  CHECK(lemma45_sequence(frac(3, 5), frac(3, 5), 5) == big({1, 3, 5, 7, 10}));
  CHECK_THROWS_AS(lemma45_sequence(frac(1, 4), frac(1, 2), 3), InvalidInput);
  CHECK_THROWS_AS(lemma45_sequence(frac(1, 2), frac(1, 2), 3), InvalidInput);
  const auto seq = lemma45_sequence(frac(3, 5), frac(7, 10), 40);
  for (const auto& t : seq) CHECK(t >= 1);
  for (std::size_t i = 6; i + 2 < seq.size(); ++i) CHECK(seq[i] < seq[i + 2]);
}

TEST_CASE("recursive a-sequence against a floating evaluation") {
  const double b = 0.6 / 0.4, g = 0.7 / 0.3;
  const auto seq = lemma45_sequence(frac(3, 5), frac(7, 10), 12);
  double odd = 0, even = 0;
  for (std::size_t i = 1; i <= seq.size(); ++i) {
    double t;
    if (i == 1) t = 1;
    else if (i % 2 == 0) t = std::ceil(g * odd - even - 1e-9) + 1;
    else t = std::ceil(b * even - odd - 1e-9) + 1;
    (i % 2 ? odd : even) += t;
    CHECK(seq[i - 1] == BigInt(static_cast<long>(t)));
  }
}

TEST_CASE("rules") {
  CHECK(ASequenceRule::constant(BigInt(3)).generate(4) == big({3, 3, 3, 3}));
  CHECK(ASequenceRule::custom(big({1, 2, 5})).generate(7) == big({1, 2, 5, 1, 2, 5, 1}));
  CHECK_THROWS_AS(ASequenceRule::custom({}), InvalidInput);
  CHECK_THROWS_AS(ASequenceRule::custom(big({1, 0})), InvalidInput);
  CHECK_THROWS_AS(parse_rule_kind("lemma46"), InvalidInput);
  CHECK(parse_rule_kind("lemma45") == ASequenceRule::Kind::lemma45);
}

TEST_CASE("generator validation names the index") {
  CHECK_THROWS_WITH_AS(GeneratorSequence::explicit_list({frac(1, 3), frac(1, 2)}).lambda(2),
                       doctest::Contains("2"), InvalidInput);
  CHECK_THROWS_AS(validate_lambda(frac(1, 2), "lambda"), InvalidInput);
  CHECK_THROWS_AS(validate_lambda(Rational(0), "lambda"), InvalidInput);
  CHECK_NOTHROW(validate_lambda(frac(49, 100), "lambda"));
  CHECK_THROWS_AS(QBase::rational(frac(1, 2)), InvalidInput);
  CHECK_THROWS_AS(QBase::from_alpha(1.0), InvalidInput);
  CHECK(QBase::from_alpha(0.5).log_q == doctest::Approx(-2 * std::log(2.0)));
  const auto tail = GeneratorSequence::explicit_list({frac(1, 3)}, frac(1, 4));
  CHECK(tail.lambda(1) == frac(1, 3));
  CHECK(tail.lambda(9) == frac(1, 4));
}

TEST_CASE("interval geometry") {
  const auto mt = GeneratorSequence::constant(frac(1, 3));
  auto i1 = interval(mt, Address{{true}});
  CHECK(i1.left == frac(2, 3));
  CHECK(i1.length == frac(1, 3));
  auto i01 = interval(mt, Address{{false, true}});
  CHECK(i01.left == frac(2, 9));
  CHECK(i01.length == frac(1, 9));
  const auto mixed = GeneratorSequence::explicit_list({frac(1, 3), frac(2, 5), frac(1, 4)}, frac(3, 7));
  for (std::uint64_t n = 0; n <= 6; ++n) {
    auto z = interval(mixed, Address{std::vector<bool>(n, false)});
    CHECK(z.left == Rational(0));
    Rational prod(1);
    for (std::uint64_t i = 1; i <= n; ++i) prod = prod * mixed.lambda(i);
    CHECK(z.length == prod);
  }
}

TEST_CASE("intervals at equal depth: order, disjointness, agreement with the oracle") {
  const std::vector<Rational> lambdas = {frac(1, 3), frac(2, 5), frac(1, 4), frac(3, 7), frac(1, 5)};
  const auto seq = GeneratorSequence::explicit_list(lambdas, frac(1, 3));
  for (std::uint64_t n = 1; n <= 5; ++n) {
    const auto level = oracle::cantor_level(lambdas, n);
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
      const auto node = interval(seq, Address::from_index(j, n));
      CHECK(node.left == level[j].lo);
      CHECK(node.right() == level[j].hi);
      CHECK(node.right() <= Rational(1));
      if (j > 0) {
        const auto prev = interval(seq, Address::from_index(j - 1, n));
        CHECK(prev.right() < node.left);
        CHECK(Address::from_index(j - 1, n) < Address::from_index(j, n));
      }
    }
  }
}

TEST_CASE("next_point") {
  const CantorSet mt(GeneratorSequence::constant(frac(1, 3)));
  CHECK(next_point(mt, frac(2, 5), 64) == frac(2, 3));
  CHECK(next_point(mt, Rational(0), 64) == Rational(0));
  CHECK(next_point(mt, frac(1, 3), 64) == frac(1, 3));
  CHECK(next_point(mt, frac(-5, 2), 64) == Rational(0));
  CHECK_THROWS_AS(next_point(mt, frac(3, 2), 64), InvalidInput);
  // 1/4 lies in C (ternary 0.0202...), reached by a periodic descent.
  CHECK(next_point(mt, frac(1, 4), 64) == frac(1, 4));
  CHECK(contains(mt, frac(1, 4), 64));
  CHECK_FALSE(contains(mt, frac(1, 2), 64));
}

TEST_CASE("next_point properties on random queries") {
  const std::vector<Rational> lambdas = {frac(1, 3), frac(2, 5), frac(1, 4), frac(3, 7)};
  const CantorSet set(GeneratorSequence::explicit_list(lambdas, frac(2, 5)));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(0, 997);
  const auto level = oracle::cantor_level(
      {frac(1, 3), frac(2, 5), frac(1, 4), frac(3, 7), frac(2, 5), frac(2, 5)}, 6);
  for (int i = 0; i < 300; ++i) {
    const Rational y = frac(num(rng), 997);
    const Rational x = next_point(set, y, 256);
    CHECK(x >= y);
    CHECK(contains(set, x, 256));
    // x lies in the first level-6 interval ending at or after y.
    for (const auto& s : level) {
      if (s.hi >= y) {
        CHECK(x >= s.lo);
        CHECK(x <= s.hi);
        break;
      }
    }
  }
  for (const auto& e : oracle::endpoints(level)) CHECK(next_point(set, e, 256) == e);
}

TEST_CASE("sequence set points") {
  const SequenceSet f1(Rational(1));
  auto p = sequence_set_points(f1, frac(1, 4));
  REQUIRE(p.values.size() == 4);
  CHECK(p.values == std::vector<Rational>{Rational(1), frac(1, 2), frac(1, 3), frac(1, 4)});
  CHECK(p.tail_below_cutoff);
  CHECK(sequence_set_points(f1, Rational(1)).values == std::vector<Rational>{Rational(1)});
  const SequenceSet f2(Rational(2));
  CHECK(sequence_set_points(f2, frac(1, 10)).values ==
        std::vector<Rational>{Rational(1), frac(1, 4), frac(1, 9)});
  CHECK_THROWS_AS(sequence_set_points(f1, Rational(0)), InvalidInput);
}

TEST_CASE("sequence set with irrational points orders values exactly") {
  const SequenceSet f(frac(1, 2));
  const auto p = sequence_set_points(f, frac(1, 3));
  CHECK(p.indices.size() == 9);  // n^(-1/2) >= 1/3 iff n <= 9
  CHECK(f.compare(f.point(BigInt(2)), f.point(BigInt(3))) == std::strong_ordering::greater);
  CHECK(f.compare(f.point(BigInt(4)), SequenceSet::Value{std::nullopt, frac(1, 2)}) ==
        std::strong_ordering::equal);
  CHECK_THROWS_AS(SequenceSet(Rational(0)), InvalidInput);
}

TEST_CASE("Cantor set level lookup") {
  const CantorSet mt(GeneratorSequence::constant(frac(1, 3)));
  CHECK(mt.level_for_scale(Rational(1)) == 0);
  CHECK(mt.level_for_scale(frac(1, 3)) == 1);
  CHECK(mt.level_for_scale(frac(1, 4)) == 2);
  CHECK(mt.level_for_scale(frac(1, 9)) == 2);
  CHECK(default_depth_cap(3) == 32);
  CHECK(default_depth_cap(20) == 80);
}
