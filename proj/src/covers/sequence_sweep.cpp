#include "cantorlab/covers/sequence_sweep.hpp"

namespace cantorlab::covers {

using setlab::SequenceSet;
using Value = SequenceSet::Value;

std::uint64_t sequence_window_cover(const SequenceSet& set, const Value& lo, const Value& hi,
                                    const Rational& span) {
  const auto below = [&](const Value& a, const Value& b) {
    return set.compare(a, b) == std::strong_ordering::less;
  };
  Value start = SequenceSet::zero();
  if (below(SequenceSet::zero(), lo)) {
    const auto n = set.last_index_above(lo, false);
    if (!n) return 0;
    start = set.point(*n);
  }
  if (below(hi, start)) return 0;

  const Value one = set.point(1);
  std::uint64_t count = 0;
  for (;;) {
    count = numerics::checked_add(count, 1);
    const Value reach = set.shifted(start, span);
    if (!below(reach, hi) || !below(reach, one)) break;
    const auto n = set.last_index_above(reach, true);
    if (!n) break;
    start = set.point(*n);
    if (below(hi, start)) break;
  }
  return count;
}

}  // namespace cantorlab::covers
