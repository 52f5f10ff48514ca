#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <tuple>

#include "cantorlab/covers/cantor_sweep.hpp"
#include "cantorlab/covers/covers.hpp"
#include "cantorlab/covers/sequence_sweep.hpp"

namespace cantorlab::covers {

using setlab::CantorSet;
using numerics::BigInt;
using setlab::SequenceSet;

namespace {

std::mutex cache_mutex;
std::map<std::tuple<std::uint64_t, std::uint64_t, Rational>, std::uint64_t> window_cache;

Rational span_for(const Rational& rho, CoverKind kind) {
  return kind == CoverKind::ball ? rho * Rational(2) : rho;
}

void require_window(const Rational& delta, const Rational& rho) {
  if (delta.sign() <= 0 || rho.sign() <= 0) {
    throw InvalidInput("window scales must be positive");
  }
}

std::uint64_t cantor_depth_cap(const CantorSet& set, const Rational& span) {
  return setlab::default_depth_cap(set.level_for_scale(span));
}

WindowStat empty_stat(const Rational& delta, const Rational& rho) {
  WindowStat stat;
  stat.delta = delta;
  stat.rho = rho;
  return stat;
}

WindowStat accumulate(WindowStat stat, std::uint64_t count, const std::string& where) {
  if (stat.sample_size == 0 || count > stat.sup_sampled) {
    stat.sup_sampled = count;
    stat.sup_at = where;
  }
  if (stat.sample_size == 0 || count < stat.inf_sampled) {
    stat.inf_sampled = count;
    stat.inf_at = where;
  }
  ++stat.sample_size;
  return stat;
}

WindowStat cantor_window_stats(const CantorSet& set, const Rational& delta, const Rational& rho,
                               std::uint64_t samples, std::uint64_t seed) {
  WindowStat stat = empty_stat(delta, rho);
  CantorSweep sweep(set, rho);
  for (const auto& x : window_candidates(set, delta, rho, samples, seed)) {
    stat = accumulate(stat, sweep.window(x - delta, x + delta), x.str());
  }
  return stat;
}

WindowStat sequence_window_stats(const SequenceSet& set, const Rational& delta,
                                 const Rational& rho, std::uint64_t samples,
                                 std::uint64_t seed) {
  WindowStat stat = empty_stat(delta, rho);
  const auto last = set.last_index_above(SequenceSet::Value{std::nullopt, delta}, false);
  const BigInt reach = last ? BigInt(4 * *last + 64) : BigInt(64);
  std::set<BigInt> indices;
  for (BigInt n = 1; n <= 64 && n <= reach; ++n) indices.insert(n);
  std::mt19937_64 rng(seed);
  const std::uint64_t bound = reach.fits_ulong_p() ? reach.get_ui() : UINT64_MAX;
  for (std::uint64_t i = 0; i < samples; ++i) {
    indices.insert(numerics::to_big(1 + rng() % bound));
  }
  const auto count_at = [&](const SequenceSet::Value& x) {
    return local_cover_count(set, x, delta, rho);
  };
  stat = accumulate(stat, count_at(SequenceSet::zero()), "0");
  for (const auto& n : indices) {
    stat = accumulate(stat, count_at(set.point(n)), "n=" + n.get_str());
  }
  return stat;
}

}  // namespace

std::uint64_t local_cover_count(const SetHandle& set, const Rational& x, const Rational& delta,
                                const Rational& rho, CoverKind kind) {
  require_window(delta, rho);
  const Rational span = span_for(rho, kind);
  if (const auto* c = std::get_if<CantorSet>(&set)) {
    const auto cap = cantor_depth_cap(*c, std::min(span, delta));
    if (!setlab::contains(*c, x, cap)) throw InvalidInput("centre " + x.str() + " is not in the set");
    return CantorSweep(*c, span, cap).window(x - delta, x + delta);
  }
  if (const auto* s = std::get_if<SequenceSet>(&set)) {
    SequenceSet::Value centre = SequenceSet::zero();
    if (x.sign() != 0) {
      const auto n = x.sign() > 0 ? s->last_index_above(SequenceSet::Value{std::nullopt, x}, false)
                                  : std::nullopt;
      if (!n || s->compare(s->point(*n), SequenceSet::Value{std::nullopt, x}) !=
                    std::strong_ordering::equal) {
        throw InvalidInput("centre " + x.str() + " is not in the set");
      }
      centre = s->point(*n);
    }
    return local_cover_count(*s, centre, delta, rho, kind);
  }
  const auto& pts = std::get<FinitePointSet>(set).points();
  if (!std::binary_search(pts.begin(), pts.end(), x)) {
    throw InvalidInput("centre " + x.str() + " is not in the set");
  }
  std::vector<Rational> inside;
  for (const auto& p : pts) {
    if (p >= x - delta && p <= x + delta) inside.push_back(p);
  }
  return greedy_min_cover(inside, span);
}

std::uint64_t local_cover_count(const SequenceSet& set, const SequenceSet::Value& x,
                                const Rational& delta, const Rational& rho, CoverKind kind) {
  require_window(delta, rho);
  return sequence_window_cover(set, set.shifted(x, -delta), set.shifted(x, delta),
                               span_for(rho, kind));
}

std::uint64_t canonical_window_count(const CantorSet& set, std::uint64_t n, const Rational& rho) {
  if (rho.sign() <= 0) throw InvalidInput("scale must be positive, got " + rho.str());
  const auto key = std::make_tuple(set.uid(), n, rho);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = window_cache.find(key); it != window_cache.end()) return it->second;
  }
  const std::uint64_t cap = std::max(cantor_depth_cap(set, rho), setlab::default_depth_cap(n));
  const std::uint64_t value = CantorSweep(set, rho, cap).node(n);
  std::lock_guard lock(cache_mutex);
  window_cache.emplace(key, value);
  return value;
}

void clear_window_cache() {
  std::lock_guard lock(cache_mutex);
  window_cache.clear();
}

std::vector<Rational> window_candidates(const CantorSet& set, const Rational& delta,
                                        const Rational& rho, std::uint64_t samples,
                                        std::uint64_t seed) {
  constexpr std::uint64_t kStructuralCap = 64;
  const std::uint64_t n = set.level_for_scale(delta);
  const std::uint64_t fine = std::max(n, set.level_for_scale(rho));
  std::set<Rational> points{Rational(0), Rational(1)};
  const auto add_interval = [&](const setlab::Address& addr) {
    const auto node = setlab::interval(set, addr);
    points.insert(node.left);
    points.insert(node.right());
  };
  if (n <= 62) {
    const std::uint64_t total = std::uint64_t{1} << n;
    if (total <= kStructuralCap) {
      for (std::uint64_t j = 0; j < total; ++j) add_interval(setlab::Address::from_index(j, n));
    } else {
      for (std::uint64_t k = 0; k < kStructuralCap; ++k) {
        const std::uint64_t j = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(total - 1) * k) / (kStructuralCap - 1));
        add_interval(setlab::Address::from_index(j, n));
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    setlab::Address addr;
    addr.bits.resize(fine);
    for (std::uint64_t b = 0; b < fine; b += 64) {
      const std::uint64_t word = rng();
      for (std::uint64_t k = 0; k < 64 && b + k < fine; ++k) addr.bits[b + k] = (word >> k) & 1U;
    }
    points.insert(setlab::interval(set, addr).left);
  }
  return {points.begin(), points.end()};
}

WindowStat window_stats(const SetHandle& set, const Rational& delta, const Rational& rho,
                        std::uint64_t samples, std::uint64_t seed) {
  require_window(delta, rho);
  if (const auto* c = std::get_if<CantorSet>(&set)) {
    return cantor_window_stats(*c, delta, rho, samples, seed);
  }
  if (const auto* s = std::get_if<SequenceSet>(&set)) {
    return sequence_window_stats(*s, delta, rho, samples, seed);
  }
  WindowStat stat = empty_stat(delta, rho);
  const SetHandle& handle = set;
  for (const auto& x : std::get<FinitePointSet>(set).points()) {
    stat = accumulate(stat, local_cover_count(handle, x, delta, rho), x.str());
  }
  return stat;
}

}  // namespace cantorlab::covers
