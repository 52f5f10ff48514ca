#include "cantorlab/setlab/generators.hpp"

#include <cmath>
#include <sstream>

namespace cantorlab::setlab {

QBase QBase::rational(const Rational& q) {
  if (q.sign() <= 0 || q >= Rational(1, 2)) {
    throw InvalidInput("q = " + q.str() + " must lie in (0,1/2)");
  }
  return QBase{q, q.log()};
}

QBase QBase::from_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidInput("alpha must lie in (0,1) so that q = 2^(-1/alpha) < 1/2");
  }
  return QBase{std::nullopt, -std::log(2.0) / alpha};
}

std::string QBase::str() const {
  if (exact) return exact->str();
  std::ostringstream out;
  out.precision(17);
  out << "exp(" << log_q << ")";
  return out.str();
}

void validate_lambda(const Rational& lambda, const std::string& where) {
  if (lambda.sign() <= 0 || lambda >= Rational(1, 2)) {
    throw InvalidInput(where + " = " + lambda.str() + " must lie in (0,1/2)");
  }
}

GeneratorSequence GeneratorSequence::constant(const Rational& lambda) {
  validate_lambda(lambda, "lambda");
  GeneratorSequence seq;
  seq.kind_ = Kind::constant;
  seq.tail_ = lambda;
  seq.constant_from_ = 1;
  seq.description_ = "constant " + lambda.str();
  return seq;
}

GeneratorSequence GeneratorSequence::explicit_list(std::vector<Rational> lambdas,
                                                   std::optional<Rational> tail) {
  if (lambdas.empty() && !tail) throw InvalidInput("lambdas: empty list without tail");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    validate_lambda(lambdas[i], "lambdas[" + std::to_string(i + 1) + "]");
  }
  GeneratorSequence seq;
  seq.kind_ = Kind::explicit_list;
  seq.tail_ = tail ? *tail : lambdas.back();
  validate_lambda(seq.tail_, "tail");
  // The tail starts after the last listed entry that differs from it.
  std::size_t from = lambdas.size();
  while (from > 0 && lambdas[from - 1] == seq.tail_) --from;
  seq.constant_from_ = from + 1;
  seq.listed_ = std::move(lambdas);
  std::string desc = "list [";
  for (std::size_t i = 0; i < seq.listed_.size(); ++i) {
    desc += (i ? ", " : "") + seq.listed_[i].str();
  }
  seq.description_ = desc + "] tail " + seq.tail_.str();
  return seq;
}

GeneratorSequence GeneratorSequence::q_power(QBase q, ExponentRule exponent,
                                             std::string description,
                                             std::optional<std::uint64_t> constant_from) {
  if (!(q.log_q < -std::log(2.0))) throw InvalidInput("q must lie in (0,1/2)");
  GeneratorSequence seq;
  seq.kind_ = Kind::q_power;
  seq.q_ = std::move(q);
  seq.exponent_ = std::move(exponent);
  seq.constant_from_ = constant_from;
  seq.description_ = std::move(description);
  return seq;
}

std::uint64_t GeneratorSequence::exponent(std::uint64_t i) const {
  if (kind_ != Kind::q_power) throw InvalidInput("exponent() needs a q-power rule");
  if (i == 0) throw InvalidInput("generator index starts at 1");
  const std::uint64_t e = exponent_(i);
  if (e == 0) throw InvalidInput("exponent e_" + std::to_string(i) + " must be >= 1");
  return e;
}

Rational GeneratorSequence::lambda(std::uint64_t i) const {
  if (i == 0) throw InvalidInput("generator index starts at 1");
  switch (kind_) {
    case Kind::constant:
      return tail_;
    case Kind::explicit_list:
      return i <= listed_.size() ? listed_[i - 1] : tail_;
    case Kind::q_power: {
      if (!q_.exact) throw InvalidInput("exact lambda needs a rational q");
      const std::uint64_t e = exponent(i);
      if (e > 100000) {
        throw InvalidInput("exponent e_" + std::to_string(i) + " = " + std::to_string(e) +
                           " too large for exact geometry");
      }
      return numerics::pow_scale(*q_.exact, e);
    }
  }
  throw InvalidInput("unknown generator kind");
}

double GeneratorSequence::neg_log_lambda(std::uint64_t i) const {
  if (kind_ == Kind::q_power) return -static_cast<double>(exponent(i)) * q_.log_q;
  return -lambda(i).log();
}

std::optional<double> GeneratorSequence::log_upper_bound() const {
  switch (kind_) {
    case Kind::constant:
      return tail_.log();
    case Kind::explicit_list: {
      Rational best = tail_;
      for (const auto& l : listed_) best = std::max(best, l);
      return best.log();
    }
    case Kind::q_power:
      return q_.log_q;
  }
  return std::nullopt;
}

}  // namespace cantorlab::setlab
