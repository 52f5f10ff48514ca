#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantorlab/covers/profile.hpp"
#include "cantorlab/setlab/pair.hpp"

namespace cantorlab::dims {

/// Default metric constants for the Euclidean product; 3/2 stands in for sqrt 2.
inline const Rational kDefaultM1{1};
inline const Rational kDefaultM2{numerics::BigInt(3), numerics::BigInt(2)};

struct ProductBracket {
  std::uint64_t lower = 1;
  std::uint64_t upper = 1;
  Rational lower_scale;  // 8 delta / m1
  Rational upper_scale;  // delta / (2 m2)
};

/// Scales whose 1D counts the bracket at delta needs.
std::vector<Rational> bracket_scales(const Rational& delta, const Rational& m1, const Rational& m2);

/// D(F,8d/m1) D(G,8d/m1) <= D(FxG,d) <= D(F,d/(2m2)) D(G,d/(2m2)). Counts at scales at or
/// above a factor's diameter are 1; any other needed scale must be in its profile.
ProductBracket product_bracket(const covers::CoverProfile& f, const covers::CoverProfile& g,
                               const Rational& delta, const Rational& m1 = kDefaultM1,
                               const Rational& m2 = kDefaultM2, const Rational& diam_f = 1,
                               const Rational& diam_g = 1);

/// Same bracket with counts computed directly.
ProductBracket product_bracket(const covers::SetHandle& f, const covers::SetHandle& g,
                               const Rational& delta, const Rational& m1 = kDefaultM1,
                               const Rational& m2 = kDefaultM2);

struct ProductTheoremEntry {
  std::uint64_t j = 0;
  bool skipped = false;
  std::uint64_t count_c = 0;
  std::uint64_t count_d = 0;
  numerics::BigInt product;
  numerics::BigInt lower;  // 2^(j + a_1 - 3)
  numerics::BigInt upper;  // 2^(j + a_1)
  bool pass = false;
};

struct ProductTheoremReport {
  std::uint64_t a1 = 0;
  std::uint64_t s2 = 0;
  std::vector<ProductTheoremEntry> entries;
  bool pass = true;
};

/// Checks 2^(j+a_1-3) <= D(C,q^j) D(D,q^j) <= 2^(j+a_1) for each j in [j_first, j_last];
/// indices below s_2 are marked skipped.
ProductTheoremReport verify_product_theorem(const setlab::PairSpec& pair, std::uint64_t j_first,
                                            std::uint64_t j_last);

}  // namespace cantorlab::dims
