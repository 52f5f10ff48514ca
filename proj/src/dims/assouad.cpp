#include "cantorlab/dims/assouad.hpp"

#include <cmath>

#include "cantorlab/parallel.hpp"

namespace cantorlab::dims {

using setlab::CantorSet;
using setlab::GeneratorSequence;

namespace {

std::vector<covers::WindowStat> evaluate(const covers::SetHandle& set,
                                         const std::vector<Window>& windows,
                                         std::uint64_t samples, std::uint64_t seed) {
  std::vector<covers::WindowStat> stats(windows.size());
  parallel_for(windows.size(), [&](std::size_t i) {
    stats[i] = covers::window_stats(set, windows[i].delta, windows[i].rho, samples, seed);
  });
  return stats;
}

bool is_maximal_generator(const GeneratorSequence& seq, std::uint64_t i) {
  switch (seq.kind()) {
    case GeneratorSequence::Kind::constant:
      return true;
    case GeneratorSequence::Kind::q_power:
      return seq.exponent(i) == 1;
    case GeneratorSequence::Kind::explicit_list: {
      Rational best = seq.lambda(seq.listed().size() + 1);
      for (const auto& l : seq.listed()) best = std::max(best, l);
      return seq.lambda(i) == best;
    }
  }
  return false;
}

}  // namespace

std::vector<Window> lattice_windows(const CantorSet& set, std::uint64_t n_first,
                                    std::uint64_t n_last, std::uint64_t k_first,
                                    std::uint64_t k_last) {
  if (n_first > n_last || k_first > k_last || k_first == 0) {
    throw InvalidInput("window lattice needs n_first <= n_last and 1 <= k_first <= k_last");
  }
  const auto table = set.table(n_last + k_last);
  std::vector<Window> out;
  for (std::uint64_t n = n_first; n <= n_last; ++n) {
    for (std::uint64_t k = k_first; k <= k_last; ++k) {
      out.push_back(Window{table->length[n], table->length[n + k]});
    }
  }
  return out;
}

AssouadReport assouad_windows(const covers::SetHandle& set, const std::vector<Window>& windows,
                              std::uint64_t samples, std::uint64_t seed) {
  AssouadReport rep;
  for (const auto& w : windows) {
    if (w.rho.sign() <= 0 || w.delta.sign() <= 0 ||
        (w.delta <= w.rho && w.rho < w.delta * Rational(2))) {
      throw InvalidInput("window needs 0 < rho < delta or rho >= 2 delta, got (" +
                         w.delta.str() + ", " + w.rho.str() + ")");
    }
  }
  for (auto& stat : evaluate(set, windows, samples, seed)) {
    WindowSlope ws;
    ws.slope = stat.sup_sampled <= 1
                   ? 0.0
                   : std::log(static_cast<double>(stat.sup_sampled)) / (stat.delta / stat.rho).log();
    ws.self_product_lower = numerics::checked_mul(stat.sup_sampled, stat.sup_sampled);
    ws.stat = std::move(stat);
    rep.best_slope = std::max(rep.best_slope, ws.slope);
    rep.windows.push_back(std::move(ws));
  }
  if (const auto* c = std::get_if<CantorSet>(&set)) {
    if (const auto bound = c->generators().log_upper_bound()) {
      rep.upper_bound_from_lambda = -std::log(2.0) / *bound;
    }
  }
  return rep;
}

std::vector<WitnessEntry> assouad_lower_witness(const CantorSet& set, std::uint64_t m_max,
                                                std::uint64_t max_level) {
  if (max_level > 62) throw InvalidInput("witness search limited to level 62");
  const auto& seq = set.generators();
  std::vector<bool> maximal(max_level + 1, false);
  for (std::uint64_t i = 1; i <= max_level; ++i) maximal[i] = is_maximal_generator(seq, i);

  std::vector<WitnessEntry> out(m_max);
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    WitnessEntry& w = out[m - 1];
    w.m = m;
    std::uint64_t run = 0;
    for (std::uint64_t i = 1; i <= max_level; ++i) {
      run = maximal[i] ? run + 1 : 0;
      if (run >= m) {
        w.found = true;
        w.j = i - m;
        break;
      }
    }
    if (!w.found) {
      w.notice = "no run of " + std::to_string(m) + " maximal generators up to level " +
                 std::to_string(max_level);
    }
  }
  parallel_for(out.size(), [&](std::size_t idx) {
    WitnessEntry& w = out[idx];
    if (!w.found) return;
    w.delta = set.length(w.j);
    w.rho = set.length(w.j + w.m);
    w.count_delta = covers::min_cover_count(covers::SetHandle{set}, w.delta);
    w.count_rho = covers::min_cover_count(covers::SetHandle{set}, w.rho);
    w.ratio = Rational(numerics::to_big(w.count_rho),
                       numerics::to_big(w.count_delta));
    const std::uint64_t needed = numerics::checked_mul(std::uint64_t{1} << (w.m - 1), w.count_delta);
    w.pass = w.count_rho >= needed;
  });
  return out;
}

EquiHomReport equihom_check(const covers::SetHandle& set, const std::vector<Window>& windows,
                            std::uint64_t samples, std::uint64_t seed) {
  for (const auto& w : windows) {
    if (w.rho.sign() <= 0 || w.delta.sign() <= 0) throw InvalidInput("window scales must be positive");
  }
  EquiHomReport rep;
  rep.windows = evaluate(set, windows, samples, seed);
  rep.window_count = rep.windows.size();
  for (const auto& s : rep.windows) {
    const Rational ratio(numerics::to_big(s.sup_sampled),
                         numerics::to_big(s.inf_sampled));
    rep.max_ratio = std::max(rep.max_ratio, ratio);
  }
  return rep;
}

}  // namespace cantorlab::dims
