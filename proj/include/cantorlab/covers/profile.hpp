#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cantorlab/covers/covers.hpp"

namespace cantorlab::covers {

struct ProfileEntry {
  Rational scale;
  std::uint64_t count_d = 0;
  std::uint64_t count_n = 0;
  std::uint64_t count_p = 0;
};

/// Exact D, N, P counts per scale, scales strictly descending.
struct CoverProfile {
  std::vector<ProfileEntry> entries;

  const ProfileEntry* find(const Rational& scale) const;
  std::string to_csv() const;
};

/// Computes every count at every scale; scales are sorted descending and deduplicated.
/// Per-scale work runs in parallel; the result does not depend on thread count.
CoverProfile cover_profile(const SetHandle& set, std::vector<Rational> scales);

/// base^first, ..., base^last for 0 < base < 1, first <= last.
std::vector<Rational> power_scales(const Rational& base, std::uint64_t first, std::uint64_t last);

struct ChainEntry {
  Rational delta;
  std::uint64_t d4 = 0;  // D(F, 4 delta)
  std::uint64_t n2 = 0;  // N(F, 2 delta)
  std::uint64_t p1 = 0;  // P(F, delta)
  std::uint64_t d1 = 0;  // D(F, delta)
  bool holds() const { return d4 <= n2 && n2 <= p1 && p1 <= d1; }
};

/// The chain D(F,4d) <= N(F,2d) <= P(F,d) <= D(F,d) evaluated at delta.
ChainEntry chain_at(const SetHandle& set, const Rational& delta);
/// The chain at every profile scale whose 2x and 4x companions are also in the profile.
std::vector<ChainEntry> chain_from_profile(const CoverProfile& profile);

}  // namespace cantorlab::covers
