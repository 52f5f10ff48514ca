#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "cantorlab/setlab/cantor_set.hpp"

namespace cantorlab::covers {

/// Greedy cover of a generalised Cantor set by closed intervals of a fixed length.
///
/// Every depth-d node is a translate of the leftmost one, so the greedy result on a node
/// depends only on d and on how far the previous interval already reaches into it. Those
/// results are memoised, which makes counts far beyond enumeration range cheap.
/// Not thread-safe; use one instance per thread.
class CantorSweep {
 public:
  CantorSweep(setlab::CantorSet set, Rational span, std::uint64_t depth_cap);
  /// Depth cap from default_depth_cap(level of span).
  CantorSweep(setlab::CantorSet set, Rational span);

  const Rational& span() const { return span_; }

  /// Minimal number of length-span intervals covering C.
  std::uint64_t whole();
  /// Same for I_d^1 cap C.
  std::uint64_t node(std::uint64_t d);
  /// Same for C cap [lo, hi].
  std::uint64_t window(const Rational& lo, const Rational& hi);

 private:
  struct Result {
    std::uint64_t count = 0;
    std::optional<Rational> reach;  // relative to the node's left end
  };
  struct WindowState {
    Rational lo;
    Rational hi;
    std::uint64_t count = 0;
    std::optional<Rational> reach;  // absolute
    bool done = false;
  };

  Result full(std::uint64_t d, std::optional<Rational> carry);
  void visit(std::uint64_t d, const Rational& left, WindowState& st);
  const setlab::LevelTable& levels(std::uint64_t d);

  setlab::CantorSet set_;
  Rational span_;
  std::uint64_t depth_cap_;
  std::shared_ptr<const setlab::LevelTable> table_;
  std::map<std::uint64_t, Result> fresh_;
  std::map<std::pair<std::uint64_t, Rational>, Result> carried_;
};

}  // namespace cantorlab::covers
