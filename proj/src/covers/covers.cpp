#include "cantorlab/covers/covers.hpp"

#include <algorithm>

#include "cantorlab/covers/cantor_sweep.hpp"
#include "cantorlab/covers/sequence_sweep.hpp"

namespace cantorlab::covers {

using numerics::checked_add;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive(const Rational& delta) {
  if (delta.sign() <= 0) throw InvalidInput("scale must be positive, got " + delta.str());
}

}  // namespace

FinitePointSet::FinitePointSet(std::vector<Rational> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

std::uint64_t min_cover_count(const SetHandle& set, const Rational& delta) {
  require_positive(delta);
  return std::visit(Overloaded{
                        [&](const setlab::CantorSet& c) { return CantorSweep(c, delta).whole(); },
                        [&](const setlab::SequenceSet& s) { return sequence_set_cover(s, delta); },
                        [&](const FinitePointSet& f) { return greedy_min_cover(f.points(), delta); },
                    },
                    set);
}

std::uint64_t ball_cover_count(const SetHandle& set, const Rational& delta) {
  require_positive(delta);
  return min_cover_count(set, delta * Rational(2));
}

std::uint64_t packing_count(const SetHandle& set, const Rational& delta) {
  require_positive(delta);
  if (const auto* f = std::get_if<FinitePointSet>(&set)) return greedy_packing(f->points(), delta);
  // Centres at the greedy infima, each strictly beyond the previous centre plus 2 delta.
  return min_cover_count(set, delta * Rational(2));
}

std::uint64_t greedy_min_cover(const std::vector<Rational>& points, const Rational& delta) {
  std::uint64_t count = 0;
  std::size_t i = 0;
  while (i < points.size()) {
    const Rational reach = points[i] + delta;
    ++count;
    while (i < points.size() && points[i] <= reach) ++i;
  }
  return count;
}

std::uint64_t greedy_packing(const std::vector<Rational>& points, const Rational& delta) {
  if (points.empty()) return 0;
  const Rational gap = delta * Rational(2);
  std::uint64_t count = 1;
  Rational last = points.front();
  for (const auto& p : points) {
    if (p - last > gap) {
      ++count;
      last = p;
    }
  }
  return count;
}

std::uint64_t brute_force_min_cover(const std::vector<Rational>& points, const Rational& delta) {
  const std::size_t n = points.size();
  if (n == 0) return 0;
  std::vector<Rational> anchors;
  for (const auto& p : points) {
    anchors.push_back(p);
    anchors.push_back(p - delta);
  }
  // best[i]: fewest intervals covering points[i..n).
  std::vector<std::uint64_t> best(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    std::uint64_t value = UINT64_MAX;
    for (const auto& a : anchors) {
      if (a > points[i] || a + delta < points[i]) continue;
      std::size_t j = i;
      while (j < n && points[j] <= a + delta) ++j;
      value = std::min(value, 1 + best[j]);
    }
    best[i] = value;
  }
  return best[0];
}

std::uint64_t brute_force_packing(const std::vector<Rational>& points, const Rational& delta) {
  const std::size_t n = points.size();
  if (n > 20) throw InvalidInput("brute-force packing limited to 20 points");
  const Rational gap = delta * Rational(2);
  std::uint64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::uint64_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1U)) continue;
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if ((mask >> j & 1U) && !(points[j] - points[i] > gap)) ok = false;
      }
    }
    if (ok) best = size;
  }
  return best;
}

std::uint64_t sequence_set_cover(const setlab::SequenceSet& set, const Rational& delta) {
  require_positive(delta);
  return sequence_window_cover(set, setlab::SequenceSet::zero(), set.point(1), delta);
}

std::uint64_t literal_sweep_cover(const setlab::CantorSet& set, const Rational& delta,
                                  std::uint64_t depth_cap) {
  require_positive(delta);
  std::uint64_t count = 0;
  std::optional<Rational> start = Rational(0);
  while (start) {
    count = checked_add(count, 1);
    start = setlab::next_point_after(set, *start + delta, depth_cap);
  }
  return count;
}

Rational diameter(const SetHandle& set) {
  if (const auto* f = std::get_if<FinitePointSet>(&set)) {
    const auto& p = f->points();
    return p.empty() ? Rational(0) : p.back() - p.front();
  }
  return Rational(1);
}

std::string describe(const SetHandle& set) {
  return std::visit(Overloaded{
                        [](const setlab::CantorSet& c) {
                          return "cantor " + (c.name().empty() ? c.generators().describe() : c.name());
                        },
                        [](const setlab::SequenceSet& s) {
                          return "sequence_set alpha=" + s.alpha().str();
                        },
                        [](const FinitePointSet& f) {
                          return "finite " + std::to_string(f.points().size()) + " points";
                        },
                    },
                    set);
}

}  // namespace cantorlab::covers
