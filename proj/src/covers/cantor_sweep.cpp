#include "cantorlab/covers/cantor_sweep.hpp"

namespace cantorlab::covers {

using numerics::checked_add;

CantorSweep::CantorSweep(setlab::CantorSet set, Rational span, std::uint64_t depth_cap)
    : set_(std::move(set)), span_(std::move(span)), depth_cap_(depth_cap) {
  if (span_.sign() <= 0) throw InvalidInput("cover scale must be positive, got " + span_.str());
  table_ = set_.table(16);
}

CantorSweep::CantorSweep(setlab::CantorSet set, Rational span)
    : CantorSweep(set, span, setlab::default_depth_cap(set.level_for_scale(span))) {}

const setlab::LevelTable& CantorSweep::levels(std::uint64_t d) {
  if (table_->length.size() <= d) table_ = set_.table(d);
  return *table_;
}

std::uint64_t CantorSweep::whole() { return full(0, std::nullopt).count; }

std::uint64_t CantorSweep::node(std::uint64_t d) { return full(d, std::nullopt).count; }

CantorSweep::Result CantorSweep::full(std::uint64_t d, std::optional<Rational> carry) {
  if (d > depth_cap_) {
    throw Undecidable("cover sweep at scale " + span_.str() + " exceeded depth cap " +
                      std::to_string(depth_cap_));
  }
  const Rational len = levels(d + 1).length[d];
  if (carry && carry->sign() < 0) carry.reset();
  if (carry && *carry >= len) return Result{0, carry};

  if (carry) {
    const auto key = std::make_pair(d, *carry);
    if (auto it = carried_.find(key); it != carried_.end()) return it->second;
  } else if (auto it = fresh_.find(d); it != fresh_.end()) {
    return it->second;
  }

  Result out;
  if (len <= span_) {
    if (!carry) {
      out = Result{1, span_};
    } else {
      const auto x = set_.first_point_in_node(d, *carry, true, depth_cap_);
      out = Result{1, *x + span_};
    }
  } else {
    const Rational offset = levels(d + 1).offset[d + 1];
    const Result left = full(d + 1, carry);
    std::optional<Rational> into_right;
    if (left.reach) into_right = *left.reach - offset;
    const Result right = full(d + 1, into_right);
    out.count = checked_add(left.count, right.count);
    if (right.reach) {
      out.reach = *right.reach + offset;
    } else {
      out.reach = left.reach;
    }
  }

  if (carry) {
    carried_.emplace(std::make_pair(d, *carry), out);
  } else {
    fresh_.emplace(d, out);
  }
  return out;
}

std::uint64_t CantorSweep::window(const Rational& lo, const Rational& hi) {
  if (hi < lo) return 0;
  WindowState st;
  st.lo = lo;
  st.hi = hi;
  visit(0, Rational(0), st);
  return st.count;
}

void CantorSweep::visit(std::uint64_t d, const Rational& left, WindowState& st) {
  if (st.done) return;
  if (d > depth_cap_) {
    throw Undecidable("window sweep at scale " + span_.str() + " exceeded depth cap " +
                      std::to_string(depth_cap_));
  }
  const Rational len = levels(d + 1).length[d];
  const Rational right = left + len;
  if (left > st.hi) {
    st.done = true;
    return;
  }
  if (right < st.lo) return;
  if (st.reach && *st.reach >= right) return;

  if (st.lo <= left && right <= st.hi) {
    std::optional<Rational> carry;
    if (st.reach) carry = *st.reach - left;
    const Result r = full(d, carry);
    st.count = checked_add(st.count, r.count);
    if (r.reach) st.reach = left + *r.reach;
    if (st.reach && *st.reach >= st.hi) st.done = true;
    return;
  }

  if (len <= span_) {
    // One interval started at the first uncovered point reaches past this node.
    const bool after_reach = st.reach && *st.reach >= st.lo;
    const Rational t = (after_reach ? *st.reach : st.lo) - left;
    const auto x = set_.first_point_in_node(d, t, after_reach, depth_cap_);
    if (!x) return;
    const Rational start = left + *x;
    if (start > st.hi) {
      st.done = true;
      return;
    }
    st.count = checked_add(st.count, 1);
    st.reach = start + span_;
    if (*st.reach >= st.hi) st.done = true;
    return;
  }

  const Rational offset = levels(d + 1).offset[d + 1];
  visit(d + 1, left, st);
  visit(d + 1, left + offset, st);
}

}  // namespace cantorlab::covers
