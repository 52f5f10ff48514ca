#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cantorlab/setlab/cantor_set.hpp"
#include "cantorlab/setlab/sequence_set.hpp"

namespace cantorlab::covers {

/// Finite subset of the line, kept sorted and without duplicates.
class FinitePointSet {
 public:
  explicit FinitePointSet(std::vector<Rational> points);
  const std::vector<Rational>& points() const { return points_; }

 private:
  std::vector<Rational> points_;
};

using SetHandle = std::variant<setlab::CantorSet, setlab::SequenceSet, FinitePointSet>;

/// Diameter-delta sets are closed intervals of length delta; delta-balls are closed intervals
/// of length 2 delta.
enum class CoverKind { diameter, ball };

/// D(F, delta).
std::uint64_t min_cover_count(const SetHandle& set, const Rational& delta);
/// N(F, delta) = D(F, 2 delta).
std::uint64_t ball_cover_count(const SetHandle& set, const Rational& delta);
/// P(F, delta): most centres in F that are pairwise more than 2 delta apart.
std::uint64_t packing_count(const SetHandle& set, const Rational& delta);

/// Cover count of F cap [x - delta, x + delta] at scale rho. x must lie in F.
std::uint64_t local_cover_count(const SetHandle& set, const Rational& x, const Rational& delta,
                                const Rational& rho, CoverKind kind = CoverKind::diameter);
/// Sequence-set variant with an arbitrary (possibly irrational) point as centre.
std::uint64_t local_cover_count(const setlab::SequenceSet& set,
                                const setlab::SequenceSet::Value& x, const Rational& delta,
                                const Rational& rho, CoverKind kind = CoverKind::diameter);

/// D(I_n^1 cap C, rho), memoised in a process-wide synchronised cache.
std::uint64_t canonical_window_count(const setlab::CantorSet& set, std::uint64_t n,
                                     const Rational& rho);
void clear_window_cache();

struct WindowStat {
  Rational delta;
  Rational rho;
  std::uint64_t sup_sampled = 0;
  std::uint64_t inf_sampled = 0;
  std::uint64_t sample_size = 0;
  std::string sup_at;
  std::string inf_at;
};

/// Sup and inf of the local diameter-rho cover count over structural and sampled centres.
WindowStat window_stats(const SetHandle& set, const Rational& delta, const Rational& rho,
                        std::uint64_t samples, std::uint64_t seed = 0);

/// Candidate centres used by window_stats on a Cantor set.
std::vector<Rational> window_candidates(const setlab::CantorSet& set, const Rational& delta,
                                        const Rational& rho, std::uint64_t samples,
                                        std::uint64_t seed);

/// Oracle: DP over intervals anchored at points. Input sorted; empty input gives 0.
std::uint64_t brute_force_min_cover(const std::vector<Rational>& points, const Rational& delta);
/// Leftmost-first greedy on a sorted finite list.
std::uint64_t greedy_min_cover(const std::vector<Rational>& points, const Rational& delta);
std::uint64_t greedy_packing(const std::vector<Rational>& points, const Rational& delta);
/// Oracle: exhaustive search over subsets (at most 20 points).
std::uint64_t brute_force_packing(const std::vector<Rational>& points, const Rational& delta);

/// D(F_alpha, delta).
std::uint64_t sequence_set_cover(const setlab::SequenceSet& set, const Rational& delta);
/// Point-by-point greedy on a Cantor set through next_point_after; cross-check for the sweep.
std::uint64_t literal_sweep_cover(const setlab::CantorSet& set, const Rational& delta,
                                  std::uint64_t depth_cap);

/// Upper bound of the set (1 for Cantor and sequence sets).
Rational diameter(const SetHandle& set);
std::string describe(const SetHandle& set);

}  // namespace cantorlab::covers
