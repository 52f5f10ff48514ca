#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cantorlab/covers/covers.hpp"

namespace cantorlab::dims {

struct Window {
  Rational delta;
  Rational rho;
};

/// (L_n, L_{n+k}) for n in [n_first, n_last], k in [k_first, k_last], sorted by (n, k).
std::vector<Window> lattice_windows(const setlab::CantorSet& set, std::uint64_t n_first,
                                    std::uint64_t n_last, std::uint64_t k_first,
                                    std::uint64_t k_last);

struct WindowSlope {
  covers::WindowStat stat;
  double slope = 0.0;  // log(sup) / log(delta / rho)
  /// sup^2: reported lower bound for the same window on F x F, not a checked quantity.
  std::uint64_t self_product_lower = 0;
};

struct AssouadReport {
  std::vector<WindowSlope> windows;
  double best_slope = 0.0;
  /// -log 2 / log max_i lambda_i when a uniform bound exists.
  std::optional<double> upper_bound_from_lambda;
};

/// Windows are evaluated in parallel and reported in input order.
AssouadReport assouad_windows(const covers::SetHandle& set, const std::vector<Window>& windows,
                              std::uint64_t samples, std::uint64_t seed = 0);

struct WitnessEntry {
  std::uint64_t m = 0;
  bool found = false;
  std::uint64_t j = 0;  // delta = L_j, rho = L_{j+m}
  Rational delta;
  Rational rho;
  std::uint64_t count_delta = 0;
  std::uint64_t count_rho = 0;
  Rational ratio;
  bool pass = false;
  std::string notice;
};

/// For each m, the first run lambda_{j+1} = ... = lambda_{j+m} = max lambda within levels
/// j + m <= max_level, and the exact ratio D(C, L_{j+m}) / D(C, L_j) against 2^(m-1).
std::vector<WitnessEntry> assouad_lower_witness(const setlab::CantorSet& set, std::uint64_t m_max,
                                                std::uint64_t max_level = 60);

struct EquiHomReport {
  Rational max_ratio{1};
  std::uint64_t window_count = 0;
  Rational m_bound{6};
  Rational c1{1};
  Rational c2{1};
  std::vector<covers::WindowStat> windows;

  bool within_bound() const { return max_ratio <= m_bound; }
};

EquiHomReport equihom_check(const covers::SetHandle& set, const std::vector<Window>& windows,
                            std::uint64_t samples, std::uint64_t seed = 0);

}  // namespace cantorlab::dims
