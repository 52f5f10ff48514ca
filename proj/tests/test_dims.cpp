#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cantorlab/covers/covers.hpp"
#include "cantorlab/covers/profile.hpp"
#include "cantorlab/dims/assouad.hpp"
#include "cantorlab/dims/estimates.hpp"
#include "cantorlab/dims/product.hpp"
#include "cantorlab/setlab/pair.hpp"
#include "cantorlab/setlab/sequence_set.hpp"
#include "oracles.hpp"

using cantorlab::InvalidInput;
using namespace cantorlab::dims;
using namespace cantorlab::covers;
using namespace cantorlab::setlab;
using cantorlab::numerics::BigInt;
using cantorlab::numerics::pow_scale;
using cantorlab::numerics::Rational;
using oracle::frac;

namespace {

const double kLog2 = std::log(2.0);
const double kMiddleThirds = std::log(2.0) / std::log(3.0);

CantorSet constant_set(const Rational& l) { return CantorSet(GeneratorSequence::constant(l)); }

PairSpec lemma44_pair() {
  return PairSpec(QBase::rational(frac(1, 4)), ASequenceRule::lemma44(frac(1, 2)), 1024);
}

CantorSet side(const PairSpec& p, Side s) { return CantorSet(generators_from_pair(p, s)); }

std::vector<Rational> powers(const Rational& base, std::uint64_t first, std::uint64_t last) {
  return power_scales(base, first, last);
}

}  // namespace

TEST_CASE("profile estimate for middle thirds") {
  const auto profile = cover_profile(SetHandle{constant_set(frac(1, 3))}, powers(frac(1, 3), 1, 20));
  const auto est = box_dims_from_profile(profile);
  CHECK(est.lower == doctest::Approx(kMiddleThirds).epsilon(0.05 / kMiddleThirds));
  CHECK(est.upper <= kMiddleThirds + 0.05);
  CHECK(est.lower >= kMiddleThirds - 0.05);
  CHECK(est.method_name() == "profile");
  CHECK(est.lower <= est.upper);
}

TEST_CASE("profile estimate edge cases") {
  const SetHandle point{FinitePointSet({frac(1, 3)})};
  const auto flat = box_dims_from_profile(cover_profile(point, powers(frac(1, 10), 1, 5)));
  CHECK(flat.lower == 0.0);
  CHECK(flat.upper == 0.0);
  CHECK(self_product_dims(cover_profile(point, powers(frac(1, 10), 1, 5))).upper == 0.0);
  const SetHandle mt{constant_set(frac(1, 3))};
  CHECK_THROWS_AS(box_dims_from_profile(cover_profile(mt, powers(frac(1, 3), 1, 2))), InvalidInput);
  CHECK_THROWS_AS(box_dims_from_profile(cover_profile(mt, {frac(1, 3), frac(1, 4), frac(1, 5)})),
                  InvalidInput);
}

TEST_CASE("extending the profile to coarser scales only widens the estimate") {
  const SetHandle set{CantorSet(GeneratorSequence::explicit_list(
      {frac(1, 3), frac(1, 5), frac(2, 5), frac(1, 4), frac(1, 3), frac(2, 7)}, frac(3, 10)))};
  const auto fine = powers(frac(1, 2), 10, 24);
  const auto base = box_dims_from_profile(cover_profile(set, fine));
  for (std::uint64_t first = 9; first >= 1; --first) {
    const auto wider = box_dims_from_profile(cover_profile(set, powers(frac(1, 2), first, 24)));
    CHECK(wider.lower <= base.lower);
    CHECK(wider.upper >= base.upper);
  }
}

TEST_CASE("formula estimate") {
  const auto mt = GeneratorSequence::constant(frac(1, 3));
  for (std::uint64_t n : {2, 3, 10, 400}) {
    const auto e = box_dims_from_generators(mt, n);
    CHECK(e.lower == e.upper);
    CHECK(e.lower == doctest::Approx(kMiddleThirds).epsilon(1e-15));
  }
  const auto pair = lemma44_pair();
  const auto c = box_dims_from_generators(generators_from_pair(pair, Side::C), 400);
  const auto d = box_dims_from_generators(generators_from_pair(pair, Side::D), 400);
  CHECK(std::abs(c.upper - 0.25) <= 0.03);
  CHECK(std::abs(d.upper - 0.25) <= 0.03);
  CHECK(c.method_name() == "formula");
  CHECK_THROWS_AS(box_dims_from_generators(mt, 1), InvalidInput);
}

TEST_CASE("formula estimate with an irrational base") {
  // q = 2^(-1/alpha) with alpha = 1/2 and beta = 1/3: limits alpha beta and alpha (1 - beta).
  const PairSpec pair(QBase::from_alpha(0.5), ASequenceRule::lemma44(frac(1, 3)), 4096);
  const auto c = box_dims_from_generators(generators_from_pair(pair, Side::C), 4000);
  const auto d = box_dims_from_generators(generators_from_pair(pair, Side::D), 4000);
  CHECK(std::abs(c.upper - 1.0 / 6.0) <= 0.01);
  CHECK(std::abs(d.upper - 1.0 / 3.0) <= 0.01);
}

TEST_CASE("formula and profile agree for lambda in [1/5, 2/5]") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> num(20, 40);
  const double bound = kLog2 / std::log(2.5);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Rational> lambdas;
    for (int i = 0; i < 40; ++i) lambdas.push_back(frac(num(rng), 100));
    const auto seq = GeneratorSequence::explicit_list(lambdas, frac(3, 10));
    const CantorSet set(seq);
    const std::uint64_t n_max = 32;
    std::vector<Rational> scales;
    for (std::uint64_t n = 1; n <= n_max; ++n) scales.push_back(set.length(n));
    const auto prof = box_dims_from_profile(cover_profile(SetHandle{set}, scales));
    const auto form = box_dims_from_generators(seq, n_max);
    const double tol = 2.0 / static_cast<double>(n_max) * bound;
    CHECK(tol <= 0.05);
    CHECK(std::abs(prof.upper - form.upper) <= tol);
    CHECK(std::abs(prof.lower - form.lower) <= tol);
  }
}

TEST_CASE("odd and even partial-sum ratio sequences") {
  const auto r = theorem42_ratios(ASequenceRule::lemma44(frac(1, 2)), 200);
  CHECK(std::abs(r.c.back().to_double() - 0.5) <= 0.01);
  const auto ones = theorem42_ratios(ASequenceRule::constant(BigInt(1)), 30);
  for (std::size_t k = 1; k <= 30; ++k) {
    CHECK(ones.c[k - 1] == Rational(BigInt(static_cast<long>(k)), BigInt(2 * static_cast<long>(k) - 1)));
    CHECK(ones.d[k - 1] == frac(1, 2));
  }
  const auto l45 = theorem42_ratios(ASequenceRule::lemma45(frac(3, 5), frac(3, 5)), 50);
  CHECK(std::abs(l45.c.back().to_double() - 0.6) <= 0.05);
  CHECK_THROWS_AS(theorem42_ratios(ASequenceRule::constant(BigInt(1)), 1), InvalidInput);
}

TEST_CASE("closed-form level exponents on each block") {
  for (const auto& rule : {ASequenceRule::lemma44(frac(1, 2)), ASequenceRule::lemma44(frac(2, 7)),
                           ASequenceRule::lemma45(frac(3, 5), frac(3, 5)),
                           ASequenceRule::custom({BigInt(2), BigInt(1), BigInt(3)})}) {
    const PairSpec pair(QBase::rational(frac(1, 4)), rule, 1024);
    const auto rep = verify_theorem42(pair, 1000, 20);
    CHECK(rep.pass);
    CHECK(!rep.blocks.empty());
    // Independent recomputation of the exponent sums from the generator tables.
    for (const auto s : {Side::C, Side::D}) {
      const CantorSet set(generators_from_pair(pair, s));
      std::uint64_t sum = 0;
      for (std::uint64_t n = 1; n <= 60; ++n) {
        sum += generators_from_pair(pair, s).exponent(n);
        CHECK(set.length(n) == pow_scale(frac(1, 4), sum));
      }
    }
  }
  const PairSpec irr(QBase::from_alpha(0.5), ASequenceRule::lemma44(frac(1, 3)), 4096);
  const auto rep = verify_theorem42(irr, 4000, 40);
  CHECK(rep.pass);
  CHECK(std::abs(rep.formula_c.upper - 1.0 / 6.0) <= 0.01);
  CHECK_THROWS_AS(verify_theorem42(irr, 5000, 40), InvalidInput);
}

TEST_CASE("attainment diagnostics") {
  const auto mt = cover_profile(SetHandle{constant_set(frac(1, 3))}, powers(frac(1, 3), 1, 20));
  const auto a = attainment_check(mt, kMiddleThirds);
  CHECK(a.c_min > 0.0);
  CHECK(a.c_min <= a.c_max);
  CHECK(a.spread() <= 4.0);
  const auto short_zero = attainment_check(
      cover_profile(SetHandle{constant_set(frac(1, 3))}, powers(frac(1, 3), 1, 5)), 0.0);
  const auto long_zero = attainment_check(mt, 0.0);
  CHECK(long_zero.c_max > short_zero.c_max);

  // C x D through exact 1D products at q^j: N(C x D, d) stands in as D(C,2d) D(D,2d).
  const auto pair = lemma44_pair();
  const SetHandle c{side(pair, Side::C)}, d{side(pair, Side::D)};
  CoverProfile product;
  for (std::uint64_t j = 2; j <= 24; ++j) {
    const Rational s = pow_scale(frac(1, 4), j);
    product.entries.push_back(
        ProfileEntry{s, 0, ball_cover_count(c, s) * ball_cover_count(d, s), 0});
  }
  const auto pa = attainment_check(product, 0.5);
  CHECK(pa.spread() <= std::pow(2.0, 1 + 3) * 64);
  const auto pd = box_dims_from_profile(product);
  CHECK(std::abs(pd.upper - 0.5) <= 0.05);
  CHECK(std::abs(pd.lower - 0.5) <= 0.1);
}

TEST_CASE("Assouad windows on middle thirds") {
  const auto mt = constant_set(frac(1, 3));
  const auto windows = lattice_windows(mt, 1, 6, 1, 4);
  CHECK(windows.size() == 24);
  const auto rep = assouad_windows(SetHandle{mt}, windows, 32);
  for (const auto& w : rep.windows) {
    const auto kk = static_cast<std::uint64_t>((w.stat.delta / w.stat.rho).log() / std::log(3.0) + 0.5);
    const auto k = static_cast<double>(kk);
    // The closed window centred at 3^-n reaches one point of the neighbouring interval.
    CHECK(w.stat.sup_sampled == (std::uint64_t{1} << kk) + 1);
    CHECK(w.slope >= kMiddleThirds);
    CHECK(w.slope == doctest::Approx(std::log(std::pow(2.0, k) + 1) / (k * std::log(3.0))));
    CHECK(w.self_product_lower == w.stat.sup_sampled * w.stat.sup_sampled);
  }
  CHECK(*rep.upper_bound_from_lambda == doctest::Approx(kMiddleThirds));
  // Oracle for the witness centre x = 3^-2, k = 2.
  const Rational x = frac(1, 9);
  const auto [lo, hi] = oracle::cantor_bracket(std::vector<Rational>(8, frac(1, 3)), 8, frac(1, 81),
                                               x - frac(1, 9), x + frac(1, 9));
  CHECK(lo == 5);
  CHECK(hi == 5);

  const auto wide = assouad_windows(SetHandle{mt}, {Window{frac(1, 9), frac(1, 3)}}, 8);
  CHECK(wide.windows[0].slope == 0.0);
  CHECK_THROWS_AS(assouad_windows(SetHandle{mt}, {Window{frac(1, 9), frac(1, 9)}}, 8), InvalidInput);
}

TEST_CASE("finite-window slope bound and pair-set slopes") {
  const auto pair = lemma44_pair();
  for (const auto& set : {constant_set(frac(1, 3)), constant_set(frac(2, 5)), side(pair, Side::C),
                          side(pair, Side::D)}) {
    const double log_inv_max = -*set.generators().log_upper_bound();
    const auto rep = assouad_windows(SetHandle{set}, lattice_windows(set, 0, 10, 1, 6), 32);
    for (const auto& w : rep.windows) {
      const double k = (w.stat.delta / w.stat.rho).log() / log_inv_max;
      CHECK(w.slope <= std::log(3.0 * std::pow(2.0, k + 1)) / (k * log_inv_max) + 1e-9);
    }
  }
  const auto c = side(pair, Side::C);
  const auto rep = assouad_windows(SetHandle{c}, lattice_windows(c, 0, 12, 1, 6), 64);
  CHECK(rep.best_slope <= 0.5 + 0.05);
  CHECK(*rep.upper_bound_from_lambda == doctest::Approx(0.5));
}

TEST_CASE("Assouad lower witnesses") {
  const auto c = side(lemma44_pair(), Side::C);
  const auto w = assouad_lower_witness(c, 6);
  REQUIRE(w.size() == 6);
  for (const auto& e : w) {
    REQUIRE(e.found);
    CHECK(e.pass);
    CHECK(e.ratio >= Rational(BigInt(BigInt(1) << static_cast<unsigned>(e.m - 1))));
    if (e.count_rho <= (1u << 16)) {
      CHECK(e.count_rho == literal_sweep_cover(c, e.rho, 512));
      CHECK(e.count_delta == literal_sweep_cover(c, e.delta, 512));
    }
    // Witness slopes sit at the upper bound 1/2.
    CHECK(std::log(e.ratio.to_double()) / (e.delta / e.rho).log() == doctest::Approx(0.5));
  }
  CHECK(w[0].ratio >= Rational(1));
  CHECK(w[2].ratio >= Rational(4));
  CHECK(w[5].ratio >= Rational(32));

  // No maximal run: the lone largest generator never repeats.
  const CantorSet lone(GeneratorSequence::explicit_list({frac(2, 5)}, frac(1, 3)));
  const auto none = assouad_lower_witness(lone, 2, 20);
  CHECK(none[0].found);
  CHECK_FALSE(none[1].found);
  CHECK_FALSE(none[1].notice.empty());
}

TEST_CASE("equi-homogeneity") {
  const auto pair = lemma44_pair();
  for (const auto& set : {constant_set(frac(1, 3)), constant_set(frac(2, 5)), side(pair, Side::C),
                          side(pair, Side::D)}) {
    const auto rep = equihom_check(SetHandle{set}, lattice_windows(set, 0, 12, 1, 6), 64);
    CHECK(rep.window_count == 78);
    CHECK(rep.within_bound());
    CHECK(rep.max_ratio >= Rational(1));
    for (const auto& s : rep.windows) {
      CHECK(s.inf_sampled >= 1);
      CHECK(s.inf_sampled <= s.sup_sampled);
    }
  }
  const auto mt = constant_set(frac(1, 3));
  CHECK(equihom_check(SetHandle{mt}, lattice_windows(mt, 0, 12, 1, 6), 64).max_ratio <= Rational(3));
  CHECK(equihom_check(SetHandle{mt}, {Window{frac(1, 9), frac(1, 3)}}, 8).max_ratio == Rational(1));
}

TEST_CASE("product brackets") {
  const SetHandle mt{constant_set(frac(1, 3))};
  const auto b = product_bracket(mt, mt, frac(1, 9));
  CHECK(b.lower_scale == frac(8, 9));
  CHECK(b.upper_scale == frac(1, 27));
  CHECK(b.lower == 4);
  CHECK(b.upper == 64);
  const auto [lo8, hi8] = oracle::cantor_bracket(std::vector<Rational>(6, frac(1, 3)), 6, frac(8, 9));
  CHECK(lo8 == 2);
  CHECK(hi8 == 2);
  const auto [lo27, hi27] = oracle::cantor_bracket(std::vector<Rational>(8, frac(1, 3)), 8, frac(1, 27));
  CHECK(lo27 == 8);
  CHECK(hi27 == 8);

  const auto whole = product_bracket(mt, mt, Rational(2));
  CHECK(whole.lower == 1);
  CHECK(whole.upper == 1);

  const auto prof = cover_profile(mt, {frac(1, 27)});
  CHECK_THROWS_WITH_AS(product_bracket(prof, prof, frac(1, 9)), doctest::Contains("8/9"), InvalidInput);

  const auto pair = lemma44_pair();
  const SetHandle c{side(pair, Side::C)}, d{side(pair, Side::D)};
  for (std::uint64_t j = 2; j <= 16; ++j) {
    const Rational s = pow_scale(frac(1, 4), j);
    const auto pb = product_bracket(c, d, s);
    CHECK(pb.lower >= 1);
    CHECK(pb.lower <= pb.upper);
    CHECK(pb.lower <= (std::uint64_t{1} << (j + 1)));
    CHECK(pb.upper >= (std::uint64_t{1} << (j - 2)));
  }
}

TEST_CASE("product theorem") {
  const auto rep = verify_product_theorem(lemma44_pair(), 0, 32);
  CHECK(rep.pass);
  CHECK(rep.a1 == 1);
  CHECK(rep.s2 == 2);
  CHECK(rep.entries[0].skipped);
  for (const auto& e : rep.entries) {
    if (e.skipped) continue;
    CHECK(e.pass);
    CHECK(e.product == BigInt(static_cast<unsigned long>(e.count_c)) * BigInt(static_cast<unsigned long>(e.count_d)));
  }
  const PairSpec l45(QBase::rational(frac(1, 5)), ASequenceRule::lemma45(frac(3, 5), frac(3, 5)), 512);
  const auto r45 = verify_product_theorem(l45, cantorlab::numerics::to_u64(l45.s(2)), 24);
  CHECK(r45.pass);
  for (const auto& e : r45.entries) CHECK_FALSE(e.skipped);
  CHECK_THROWS_AS(verify_product_theorem(lemma44_pair(), 5, 4), InvalidInput);
}

TEST_CASE("self-product estimate") {
  const auto profile = cover_profile(SetHandle{constant_set(frac(1, 3))}, powers(frac(1, 3), 1, 20));
  const auto e = self_product_dims(profile);
  CHECK(std::abs(e.lower - 2 * kMiddleThirds) <= 0.1);
  CHECK(std::abs(e.upper - 2 * kMiddleThirds) <= 0.1);
}

TEST_CASE("box, lower box and Assouad agree on a homogeneous set") {
  const auto mt = constant_set(frac(1, 3));
  const auto profile = cover_profile(SetHandle{mt}, powers(frac(1, 3), 1, 20));
  const auto est = box_dims_from_profile(profile);
  CHECK(est.upper - est.lower < 1e-9);
  CHECK(attainment_check(profile, est.upper).spread() <= 4.0);
  const auto rep = assouad_windows(SetHandle{mt}, lattice_windows(mt, 0, 10, 3, 6), 32);
  CHECK(rep.best_slope <= est.upper + 0.1);
}
