#pragma once

#include <cstdint>

#include "cantorlab/setlab/sequence_set.hpp"

namespace cantorlab::covers {

/// Greedy count of length-span intervals covering F_alpha cap [lo, hi].
std::uint64_t sequence_window_cover(const setlab::SequenceSet& set,
                                    const setlab::SequenceSet::Value& lo,
                                    const setlab::SequenceSet::Value& hi, const Rational& span);

}  // namespace cantorlab::covers
