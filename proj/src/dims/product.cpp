#include "cantorlab/dims/product.hpp"

#include <algorithm>

#include "cantorlab/parallel.hpp"

namespace cantorlab::dims {

namespace {

void require_metric(const Rational& delta, const Rational& m1, const Rational& m2) {
  if (delta.sign() <= 0) throw InvalidInput("product scale must be positive");
  if (m1.sign() <= 0 || m2 < m1) throw InvalidInput("metric constants need 0 < m1 <= m2");
}

std::uint64_t count_at(const covers::CoverProfile& prof, const Rational& scale,
                       const Rational& diam, const char* which) {
  if (scale >= diam) return 1;
  const auto* e = prof.find(scale);
  if (!e) throw InvalidInput(std::string("profile ") + which + " lacks scale " + scale.str());
  return e->count_d;
}

}  // namespace

std::vector<Rational> bracket_scales(const Rational& delta, const Rational& m1, const Rational& m2) {
  require_metric(delta, m1, m2);
  return {delta * Rational(8) / m1, delta / (Rational(2) * m2)};
}

ProductBracket product_bracket(const covers::CoverProfile& f, const covers::CoverProfile& g,
                               const Rational& delta, const Rational& m1, const Rational& m2,
                               const Rational& diam_f, const Rational& diam_g) {
  const auto scales = bracket_scales(delta, m1, m2);
  ProductBracket b{1, 1, scales[0], scales[1]};
  if (delta >= m2 * std::max(diam_f, diam_g)) return b;
  b.lower = numerics::checked_mul(count_at(f, b.lower_scale, diam_f, "F"),
                                  count_at(g, b.lower_scale, diam_g, "G"));
  b.upper = numerics::checked_mul(count_at(f, b.upper_scale, diam_f, "F"),
                                  count_at(g, b.upper_scale, diam_g, "G"));
  return b;
}

ProductBracket product_bracket(const covers::SetHandle& f, const covers::SetHandle& g,
                               const Rational& delta, const Rational& m1, const Rational& m2) {
  const auto scales = bracket_scales(delta, m1, m2);
  const auto profile = [&](const covers::SetHandle& s) {
    return covers::cover_profile(s, {scales[0], scales[1]});
  };
  return product_bracket(profile(f), profile(g), delta, m1, m2, covers::diameter(f),
                         covers::diameter(g));
}

ProductTheoremReport verify_product_theorem(const setlab::PairSpec& pair, std::uint64_t j_first,
                                            std::uint64_t j_last) {
  if (j_first > j_last) throw InvalidInput("empty j range");
  if (!pair.q().is_exact()) throw InvalidInput("exact counts need a rational q");
  const Rational q = *pair.q().exact;
  const setlab::CantorSet c(setlab::generators_from_pair(pair, setlab::Side::C), "C");
  const setlab::CantorSet d(setlab::generators_from_pair(pair, setlab::Side::D), "D");

  ProductTheoremReport rep;
  rep.a1 = numerics::to_u64(pair.a(1));
  rep.s2 = numerics::to_u64(pair.s(2));
  rep.entries.resize(j_last - j_first + 1);
  parallel_for(rep.entries.size(), [&](std::size_t i) {
    ProductTheoremEntry& e = rep.entries[i];
    e.j = j_first + i;
    if (e.j < rep.s2) {
      e.skipped = true;
      return;
    }
    const Rational scale = numerics::pow_scale(q, e.j);
    e.count_c = covers::min_cover_count(covers::SetHandle{c}, scale);
    e.count_d = covers::min_cover_count(covers::SetHandle{d}, scale);
    e.product = numerics::to_big(e.count_c) * numerics::to_big(e.count_d);
    mpz_ui_pow_ui(e.lower.get_mpz_t(), 2, e.j + rep.a1 - 3);
    mpz_ui_pow_ui(e.upper.get_mpz_t(), 2, e.j + rep.a1);
    e.pass = e.lower <= e.product && e.product <= e.upper;
  });
  for (const auto& e : rep.entries) {
    if (!e.skipped && !e.pass) rep.pass = false;
  }
  return rep;
}

}  // namespace cantorlab::dims
