#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cantorlab/setlab/generators.hpp"

namespace cantorlab::setlab {

/// Binary address b_1..b_n of an interval I_n^j (0 = left child, 1 = right child).
struct Address {
  std::vector<bool> bits;

  std::uint64_t depth() const { return bits.size(); }
  /// Address of the j-th interval (0-based, left to right) at the given depth (<= 63).
  static Address from_index(std::uint64_t index, std::uint64_t depth);

  friend bool operator==(const Address&, const Address&) = default;
  friend std::strong_ordering operator<=>(const Address& a, const Address& b);
};

struct IntervalNode {
  Rational left;
  Rational length;

  Rational right() const { return left + length; }
};

/// Exact lengths L_d and child offsets G_d = L_{d-1} - L_d up to some depth.
struct LevelTable {
  std::vector<Rational> length;  // L_0 = 1, L_1, ...
  std::vector<Rational> offset;  // offset[0] unused
};

/// Handle to the generalised Cantor set built from a generator sequence. Copies share one
/// lazily grown, internally synchronised table of level lengths.
class CantorSet {
 public:
  explicit CantorSet(GeneratorSequence generators, std::string name = "");

  const GeneratorSequence& generators() const;
  const std::string& name() const;
  std::uint64_t uid() const;

  /// Snapshot holding at least levels 0..depth.
  std::shared_ptr<const LevelTable> table(std::uint64_t depth) const;
  Rational length(std::uint64_t depth) const;
  /// n with L_n <= delta < L_{n-1}; 0 when delta >= 1.
  std::uint64_t level_for_scale(const Rational& delta) const;

  /// Smallest point x of C in the depth-d node [0, L_d] (relative coordinates) with x >= t,
  /// or x > t when `strict`; for strict queries at accumulation points the infimum t itself
  /// is returned. Empty when no such point exists. Throws Undecidable past `depth_cap`.
  std::optional<Rational> first_point_in_node(std::uint64_t d, const Rational& t, bool strict,
                                              std::uint64_t depth_cap) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// max(4n, 32), the default descent cap for a working level n.
std::uint64_t default_depth_cap(std::uint64_t level);

IntervalNode interval(const CantorSet& set, const Address& addr);
IntervalNode interval(const GeneratorSequence& seq, const Address& addr);

/// Smallest x in C with x >= y; y <= 0 gives 0. Throws InvalidInput for y > 1.
Rational next_point(const CantorSet& set, const Rational& y, std::uint64_t depth_cap);
/// inf { x in C : x > y }, empty for y >= 1.
std::optional<Rational> next_point_after(const CantorSet& set, const Rational& y,
                                         std::uint64_t depth_cap);
bool contains(const CantorSet& set, const Rational& x, std::uint64_t depth_cap);

}  // namespace cantorlab::setlab
