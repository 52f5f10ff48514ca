#include "cantorlab/cli/scales.hpp"

#include <charconv>

namespace cantorlab::cli {

namespace {

struct PowerToken {
  std::string base;
  std::int64_t exponent = 0;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::int64_t parse_exponent(const std::string& text, const std::string& token) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw InvalidInput("scales: bad exponent in \"" + token + "\"");
  }
  return v;
}

PowerToken split_power(const std::string& token) {
  const auto caret = token.rfind('^');
  if (caret == std::string::npos) throw InvalidInput("scales: expected B^E, got \"" + token + "\"");
  return PowerToken{trim(token.substr(0, caret)), parse_exponent(trim(token.substr(caret + 1)), token)};
}

Rational power_value(const PowerToken& p, const ResolvedSet* set, const std::string& token) {
  if (p.base == "q") {
    if (!set || !set->base_q()) {
      throw InvalidInput("scales: \"" + token + "\" needs a set with a rational base q");
    }
    if (p.exponent < 0) throw InvalidInput("scales: q exponents must be >= 0");
    return numerics::pow(*set->base_q(), p.exponent);
  }
  if (p.base == "L") {
    if (!set) throw InvalidInput("scales: \"" + token + "\" needs a Cantor set");
    if (p.exponent < 0) throw InvalidInput("scales: level indices must be >= 0");
    return set->cantor("L scales").length(static_cast<std::uint64_t>(p.exponent));
  }
  Rational base(0);
  try {
    base = Rational::parse(p.base);
  } catch (const InvalidInput&) {
    throw InvalidInput("scales: bad base in \"" + token + "\"");
  }
  if (base.sign() <= 0 || base == Rational(1)) {
    throw InvalidInput("scales: base must be positive and not 1 in \"" + token + "\"");
  }
  return numerics::pow(base, p.exponent);
}

Rational single(const std::string& token, const ResolvedSet* set) {
  if (token.find('^') != std::string::npos) return power_value(split_power(token), set, token);
  try {
    return Rational::parse(token);
  } catch (const InvalidInput&) {
    throw InvalidInput("scales: cannot parse \"" + token + "\"");
  }
}

}  // namespace

std::vector<Rational> parse_scales(const std::string& text, const ResolvedSet* set) {
  std::vector<Rational> out;
  const std::string body = trim(text);
  if (const auto dots = body.find(".."); dots != std::string::npos) {
    const PowerToken a = split_power(trim(body.substr(0, dots)));
    const PowerToken b = split_power(trim(body.substr(dots + 2)));
    if (a.base != b.base) throw InvalidInput("scales: range ends use different bases");
    const std::int64_t step = a.exponent <= b.exponent ? 1 : -1;
    for (std::int64_t e = a.exponent;; e += step) {
      out.push_back(power_value(PowerToken{a.base, e}, set, body));
      if (e == b.exponent) break;
    }
  } else {
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t comma = std::min(body.find(',', start), body.size());
      const std::string token = trim(std::string_view(body).substr(start, comma - start));
      if (!token.empty()) out.push_back(single(token, set));
      start = comma + 1;
    }
  }
  if (out.empty()) throw InvalidInput("scales: empty scale range \"" + text + "\"");
  for (const auto& s : out) {
    if (s.sign() <= 0) throw InvalidInput("scales: scale " + s.str() + " is not positive");
  }
  return out;
}

}  // namespace cantorlab::cli
