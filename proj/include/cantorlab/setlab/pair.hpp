#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantorlab/setlab/generators.hpp"
#include "cantorlab/setlab/sequences.hpp"

namespace cantorlab::setlab {

enum class Side { C, D };

Side parse_side(const std::string& text);
std::string side_name(Side side);

/// Data (q, a) generating the coupled sets C and D. The a-sequence is kept as a rule plus a
/// finite prefix long enough to describe generators at every index up to `depth_limit`.
class PairSpec {
 public:
  static constexpr std::uint64_t kDefaultDepthLimit = 4096;

  PairSpec(QBase q, ASequenceRule rule, std::uint64_t depth_limit = kDefaultDepthLimit);

  const QBase& q() const { return q_; }
  const ASequenceRule& rule() const { return rule_; }
  std::uint64_t depth_limit() const { return depth_limit_; }

  std::size_t prefix_size() const { return a_.size(); }
  /// a_i, 1-based, i <= prefix_size().
  const BigInt& a(std::size_t i) const;
  const std::vector<BigInt>& prefix() const { return a_; }

  /// s_k = a_1 + ... + a_k.
  BigInt s(std::size_t k) const;
  /// o_k = sum of the first k odd-indexed terms; e_k likewise for even indices.
  BigInt o(std::size_t k) const;
  BigInt e(std::size_t k) const;
  /// n_k = o_k; m_k = a_1 + e_k.
  BigInt n(std::size_t k) const { return o(k); }
  BigInt m(std::size_t k) const;

  /// Exponent of the i-th generator of the requested side (lambda_i for C, mu_i for D).
  std::uint64_t exponent(Side side, std::uint64_t i) const;

  std::string describe() const;

 private:
  QBase q_;
  ASequenceRule rule_;
  std::uint64_t depth_limit_;
  std::vector<BigInt> a_;
  std::vector<std::uint64_t> exp_c_;
  std::vector<std::uint64_t> exp_d_;
};

/// Generators of C (exponent a_{2k}+1 at i = n_k) or D (exponent a_{2k+1}+1 at i = m_k),
/// exponent 1 elsewhere, k >= 1.
GeneratorSequence generators_from_pair(const PairSpec& spec, Side side);

}  // namespace cantorlab::setlab
