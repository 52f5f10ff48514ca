#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cantorlab/numerics/rational.hpp"

namespace cantorlab::setlab {

using numerics::BigInt;

/// a_{2k-1} = ceil(beta k), a_{2k} = ceil((1-beta) k), first K terms.
std::vector<BigInt> lemma44_sequence(const Rational& beta, std::size_t count);

/// a_1 = 1, a_2 = ceil(g) + 1,
/// a_{2k+1} = ceil(b e_k - o_k) + 1, a_{2k+2} = ceil(g o_{k+1} - e_k) + 1,
/// with b = beta/(1-beta), g = gamma/(1-gamma) and o_k, e_k the odd and even partial sums.
std::vector<BigInt> lemma45_sequence(const Rational& beta, const Rational& gamma,
                                     std::size_t count);

/// Named generation rule for a positive-integer sequence a_1, a_2, ...
struct ASequenceRule {
  enum class Kind { lemma44, lemma45, constant, custom };

  Kind kind = Kind::lemma44;
  Rational beta;
  Rational gamma;
  BigInt value = 1;
  /// Explicit terms for `custom`; repeated periodically past the end.
  std::vector<BigInt> terms;

  static ASequenceRule lemma44(const Rational& beta);
  static ASequenceRule lemma45(const Rational& beta, const Rational& gamma);
  static ASequenceRule constant(const BigInt& value);
  static ASequenceRule custom(std::vector<BigInt> terms);

  /// First `count` terms.
  std::vector<BigInt> generate(std::size_t count) const;
  std::string name() const;
};

ASequenceRule::Kind parse_rule_kind(const std::string& name);

}  // namespace cantorlab::setlab
