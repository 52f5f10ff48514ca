#include "cantorlab/setlab/cantor_set.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>

namespace cantorlab::setlab {

namespace {

std::atomic<std::uint64_t> next_uid{1};

}  // namespace

std::strong_ordering operator<=>(const Address& a, const Address& b) {
  return std::lexicographical_compare_three_way(a.bits.begin(), a.bits.end(), b.bits.begin(),
                                                b.bits.end());
}

Address Address::from_index(std::uint64_t index, std::uint64_t depth) {
  if (depth > 63) throw InvalidInput("index addressing supports depth <= 63");
  if (depth < 64 && index >> depth != 0) throw InvalidInput("interval index out of range");
  Address addr;
  addr.bits.resize(depth);
  for (std::uint64_t i = 0; i < depth; ++i) addr.bits[i] = (index >> (depth - 1 - i)) & 1U;
  return addr;
}

struct CantorSet::State {
  GeneratorSequence generators;
  std::string name;
  std::uint64_t uid;
  mutable std::mutex mutex;
  std::shared_ptr<const LevelTable> table;

  State(GeneratorSequence g, std::string n)
      : generators(std::move(g)), name(std::move(n)), uid(next_uid++) {}
};

CantorSet::CantorSet(GeneratorSequence generators, std::string name)
    : state_(std::make_shared<State>(std::move(generators), std::move(name))) {
  if (!state_->generators.is_exact()) {
    throw InvalidInput("exact set geometry needs rational generators");
  }
  auto initial = std::make_shared<LevelTable>();
  initial->length.push_back(Rational(1));
  initial->offset.push_back(Rational(0));
  state_->table = std::move(initial);
  table(8);
}

const GeneratorSequence& CantorSet::generators() const { return state_->generators; }
const std::string& CantorSet::name() const { return state_->name; }
std::uint64_t CantorSet::uid() const { return state_->uid; }

std::shared_ptr<const LevelTable> CantorSet::table(std::uint64_t depth) const {
  std::lock_guard lock(state_->mutex);
  if (state_->table->length.size() > depth) return state_->table;
  auto grown = std::make_shared<LevelTable>(*state_->table);
  const std::uint64_t target = std::max<std::uint64_t>(depth + 1, 2 * grown->length.size());
  while (grown->length.size() < target) {
    const std::uint64_t d = grown->length.size();
    const Rational lambda = state_->generators.lambda(d);
    const Rational& parent = grown->length.back();
    Rational child = parent * lambda;
    grown->offset.push_back(parent - child);
    grown->length.push_back(std::move(child));
  }
  state_->table = grown;
  return grown;
}

Rational CantorSet::length(std::uint64_t depth) const { return table(depth)->length[depth]; }

std::uint64_t CantorSet::level_for_scale(const Rational& delta) const {
  if (delta.sign() <= 0) throw InvalidInput("scale must be positive, got " + delta.str());
  if (delta >= Rational(1)) return 0;
  std::uint64_t depth = 16;
  for (;;) {
    auto snap = table(depth);
    const auto& len = snap->length;
    // Lengths decrease strictly; find the first entry <= delta.
    auto it = std::partition_point(len.begin(), len.end(),
                                   [&](const Rational& l) { return l > delta; });
    if (it != len.end()) return static_cast<std::uint64_t>(it - len.begin());
    depth = 2 * len.size();
  }
}

std::optional<Rational> CantorSet::first_point_in_node(std::uint64_t d, const Rational& t,
                                                       bool strict,
                                                       std::uint64_t depth_cap) const {
  const auto tail_from = state_->generators.constant_from();
  auto snap = table(d + 1);
  Rational base(0);
  Rational cur = t;
  std::optional<Rational> candidate;
  std::set<Rational> seen;
  for (std::uint64_t e = d;; ++e) {
    if (snap->length.size() <= e + 1) snap = table(e + 1);
    const Rational& len = snap->length[e];
    if (cur.sign() <= 0) return base;
    if (cur > len || (cur == len && strict)) return candidate;
    if (cur == len) return base + len;
    if (e >= depth_cap) {
      throw Undecidable("next point of " + (base + cur).str() + " unresolved at depth cap " +
                        std::to_string(depth_cap));
    }
    if (tail_from && e + 1 >= *tail_from && !seen.insert(cur / len).second) {
      return base + cur;
    }
    const Rational& child = snap->length[e + 1];
    const Rational& offset = snap->offset[e + 1];
    if (cur < child) {
      candidate = base + offset;
      continue;
    }
    if (cur == child && !strict) return base + child;
    if (cur < offset || cur == child) return base + offset;
    cur -= offset;
    base += offset;
  }
}

std::uint64_t default_depth_cap(std::uint64_t level) { return std::max<std::uint64_t>(4 * level, 32); }

IntervalNode interval(const CantorSet& set, const Address& addr) {
  const auto snap = set.table(addr.depth());
  IntervalNode node{Rational(0), snap->length[addr.depth()]};
  for (std::uint64_t i = 0; i < addr.depth(); ++i) {
    if (addr.bits[i]) node.left += snap->offset[i + 1];
  }
  return node;
}

IntervalNode interval(const GeneratorSequence& seq, const Address& addr) {
  return interval(CantorSet(seq), addr);
}

Rational next_point(const CantorSet& set, const Rational& y, std::uint64_t depth_cap) {
  if (y > Rational(1)) throw InvalidInput("next_point needs y <= 1, got " + y.str());
  if (y.sign() <= 0) return Rational(0);
  auto x = set.first_point_in_node(0, y, false, depth_cap);
  return *x;
}

std::optional<Rational> next_point_after(const CantorSet& set, const Rational& y,
                                         std::uint64_t depth_cap) {
  if (y >= Rational(1)) return std::nullopt;
  if (y.sign() < 0) return Rational(0);
  return set.first_point_in_node(0, y, true, depth_cap);
}

bool contains(const CantorSet& set, const Rational& x, std::uint64_t depth_cap) {
  if (x.sign() < 0 || x > Rational(1)) return false;
  return next_point(set, x, depth_cap) == x;
}

}  // namespace cantorlab::setlab
