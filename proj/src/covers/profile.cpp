#include "cantorlab/covers/profile.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cantorlab/parallel.hpp"

namespace cantorlab::covers {

const ProfileEntry* CoverProfile::find(const Rational& scale) const {
  for (const auto& e : entries) {
    if (e.scale == scale) return &e;
  }
  return nullptr;
}

std::string CoverProfile::to_csv() const {
  std::ostringstream out;
  out << "scale,countD,countN,countP\n";
  for (const auto& e : entries) {
    out << e.scale.str() << ',' << e.count_d << ',' << e.count_n << ',' << e.count_p << '\n';
  }
  return out.str();
}

CoverProfile cover_profile(const SetHandle& set, std::vector<Rational> scales) {
  std::sort(scales.begin(), scales.end(), std::greater<>());
  scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
  for (const auto& s : scales) {
    if (s.sign() <= 0) throw InvalidInput("profile scale must be positive, got " + s.str());
  }
  CoverProfile profile;
  profile.entries.resize(scales.size());
  parallel_for(scales.size(), [&](std::size_t i) {
    ProfileEntry& e = profile.entries[i];
    e.scale = scales[i];
    e.count_d = min_cover_count(set, scales[i]);
    e.count_n = ball_cover_count(set, scales[i]);
    e.count_p = packing_count(set, scales[i]);
  });
  return profile;
}

std::vector<Rational> power_scales(const Rational& base, std::uint64_t first, std::uint64_t last) {
  if (first > last) throw InvalidInput("empty scale range");
  std::vector<Rational> out;
  for (std::uint64_t j = first; j <= last; ++j) out.push_back(numerics::pow_scale(base, j));
  return out;
}

ChainEntry chain_at(const SetHandle& set, const Rational& delta) {
  ChainEntry e{delta};
  e.d4 = min_cover_count(set, delta * Rational(4));
  e.n2 = ball_cover_count(set, delta * Rational(2));
  e.p1 = packing_count(set, delta);
  e.d1 = min_cover_count(set, delta);
  return e;
}

std::vector<ChainEntry> chain_from_profile(const CoverProfile& profile) {
  std::vector<ChainEntry> out;
  for (const auto& e : profile.entries) {
    const auto* twice = profile.find(e.scale * Rational(2));
    const auto* four = profile.find(e.scale * Rational(4));
    if (!twice || !four) continue;
    out.push_back(ChainEntry{e.scale, four->count_d, twice->count_n, e.count_p, e.count_d});
  }
  return out;
}

}  // namespace cantorlab::covers
