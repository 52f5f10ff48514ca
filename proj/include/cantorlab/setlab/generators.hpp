#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cantorlab/numerics/rational.hpp"

namespace cantorlab::setlab {

/// Base q of a q-power generator rule. Rational q supports exact geometry; a base known only
/// through log q supports formula-only operations.
struct QBase {
  std::optional<Rational> exact;
  double log_q = 0.0;

  static QBase rational(const Rational& q);
  /// q = 2^(-1/alpha), known only through its logarithm.
  static QBase from_alpha(double alpha);

  bool is_exact() const { return exact.has_value(); }
  std::string str() const;
};

/// Rule i -> lambda_i in (0, 1/2), indices starting from 1.
class GeneratorSequence {
 public:
  enum class Kind { constant, explicit_list, q_power };
  using ExponentRule = std::function<std::uint64_t(std::uint64_t)>;

  static GeneratorSequence constant(const Rational& lambda);
  /// lambda_1..lambda_N followed by `tail` forever (default: the last listed value).
  static GeneratorSequence explicit_list(std::vector<Rational> lambdas,
                                         std::optional<Rational> tail = std::nullopt);
  /// lambda_i = q^(e_i). `constant_from`, when set, promises e_i is constant for i >= it.
  static GeneratorSequence q_power(QBase q, ExponentRule exponent, std::string description,
                                   std::optional<std::uint64_t> constant_from = std::nullopt);

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ != Kind::q_power || q_.is_exact(); }

  /// Exact lambda_i; throws InvalidInput for i == 0, an out-of-range value, or a
  /// q-power rule without a rational base.
  Rational lambda(std::uint64_t i) const;
  /// e_i of a q-power rule.
  std::uint64_t exponent(std::uint64_t i) const;
  /// -log lambda_i, available for every kind.
  double neg_log_lambda(std::uint64_t i) const;

  /// sup_i lambda_i as a log, when a uniform bound below 1/2 is known.
  std::optional<double> log_upper_bound() const;
  /// First index from which lambda_i no longer changes, if known.
  std::optional<std::uint64_t> constant_from() const { return constant_from_; }

  const QBase& q() const { return q_; }
  const std::vector<Rational>& listed() const { return listed_; }
  std::string describe() const { return description_; }

 private:
  GeneratorSequence() = default;

  Kind kind_ = Kind::constant;
  std::vector<Rational> listed_;
  Rational tail_;
  QBase q_;
  ExponentRule exponent_;
  std::optional<std::uint64_t> constant_from_;
  std::string description_;
};

/// Throws InvalidInput unless 0 < lambda < 1/2; `where` names the offending entry.
void validate_lambda(const Rational& lambda, const std::string& where);

}  // namespace cantorlab::setlab
