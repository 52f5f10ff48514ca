#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantorlab/covers/profile.hpp"
#include "cantorlab/setlab/generators.hpp"
#include "cantorlab/setlab/pair.hpp"
#include "cantorlab/setlab/sequences.hpp"

namespace cantorlab::dims {

enum class Method { profile, formula };

struct DimEstimate {
  double lower = 0.0;
  double upper = 0.0;
  /// Coarsest and finest scale (profile) or first and last level (formula) used.
  Rational scale_hi;
  Rational scale_lo;
  Method method = Method::profile;

  std::string method_name() const { return method == Method::profile ? "profile" : "formula"; }
};

/// Min and max of log N(F,s) / -log s over the finest half of the scales below 1.
/// Needs at least 3 such scales spanning at least two decades.
DimEstimate box_dims_from_profile(const covers::CoverProfile& profile);

/// Min and max of n log 2 / (-sum_{i<=n} log lambda_i) over n in [ceil(n_max/2), n_max].
/// Only logarithms of the generators enter, so irrational q-power bases work too.
DimEstimate box_dims_from_generators(const setlab::GeneratorSequence& seq, std::uint64_t n_max);

/// Doubled estimate, for F x F.
DimEstimate self_product_dims(const covers::CoverProfile& profile);

struct RatioSequences {
  /// c[k-1] = o_k / s_{2k-1}; d[k-1] = e_k / s_{2k}, k = 1..k_max.
  std::vector<Rational> c;
  std::vector<Rational> d;
};

RatioSequences theorem42_ratios(const setlab::ASequenceRule& rule, std::size_t k_max);

struct AttainmentReport {
  double exponent = 0.0;
  double c_min = 0.0;
  double c_max = 0.0;
  Rational scale_hi;
  Rational scale_lo;

  double spread() const { return c_max / c_min; }
};

/// Extremes of N(F,s) s^d over the profile.
AttainmentReport attainment_check(const covers::CoverProfile& profile, double d);

/// One run of levels on which L_n (or M_n) has a closed exponent form: for start <= n < end,
/// -log_q L_n = n - start + base, so n / (-log_q L_n) <= end / bound_den on the whole block.
struct ExponentBlock {
  setlab::Side side = setlab::Side::C;
  std::uint64_t index = 0;
  std::uint64_t start = 0;
  std::uint64_t end = 0;
  std::uint64_t first_level = 0;  // levels actually checked, within [1, n_max]
  std::uint64_t last_level = 0;
  numerics::BigInt base;
  numerics::BigInt bound_den;
  bool exponents_match = true;
  Rational block_max;  // max of n / (-log_q L_n) over the checked levels
  bool pass = false;
};

struct Theorem42Report {
  std::uint64_t n_max = 0;
  std::vector<ExponentBlock> blocks;
  RatioSequences ratios;
  DimEstimate formula_c;
  DimEstimate formula_d;
  /// -(log 2 / log q) times the largest ratio over k in [ceil(k_max/2), k_max].
  double tail_c = 0.0;
  double tail_d = 0.0;
  bool pass = true;
};

/// Checks the closed forms of the level exponents of C and D through level n_max and the
/// blockwise ratio bounds behind the limsup formulas; the dimensions themselves are reported.
Theorem42Report verify_theorem42(const setlab::PairSpec& pair, std::uint64_t n_max,
                                 std::size_t k_max);

}  // namespace cantorlab::dims
