#include "cantorlab/cli/spec_file.hpp"

#include <set>

#include "cantorlab/setlab/sequence_set.hpp"

namespace cantorlab::cli {

namespace {

using setlab::ASequenceRule;

const TomlValue* find(const TomlTable& t, const std::string& key) {
  auto it = t.find(key);
  return it == t.end() ? nullptr : &it->second;
}

std::string scalar(const TomlTable& t, const std::string& key) {
  const auto* v = find(t, key);
  if (!v) throw InvalidInput("spec: missing field \"" + key + "\"");
  if (v->is_array()) throw InvalidInput("spec: field \"" + key + "\" must not be an array");
  return v->text();
}

std::optional<std::string> optional_scalar(const TomlTable& t, const std::string& key) {
  if (!find(t, key)) return std::nullopt;
  return scalar(t, key);
}

Rational rational_field(const TomlTable& t, const std::string& key) {
  const std::string text = scalar(t, key);
  try {
    return Rational::parse(text);
  } catch (const InvalidInput& e) {
    throw InvalidInput("spec: field \"" + key + "\": " + e.what());
  }
}

std::vector<std::string> array_field(const TomlTable& t, const std::string& key) {
  const auto* v = find(t, key);
  if (!v) throw InvalidInput("spec: missing field \"" + key + "\"");
  if (!v->is_array()) throw InvalidInput("spec: field \"" + key + "\" must be an array");
  return std::get<std::vector<std::string>>(v->data);
}

void check_keys(const TomlTable& t, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : t) {
    if (!allowed.count(key)) throw InvalidInput("spec: unknown field \"" + key + "\"");
  }
}

std::uint64_t positive_integer(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used == text.size() && v >= 1) return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
  }
  throw InvalidInput("spec: field \"" + key + "\" must be a positive integer, got \"" + text + "\"");
}

ResolvedSet resolve_cantor(const TomlTable& t) {
  check_keys(t, {"type", "name", "lambda", "lambdas", "tail"});
  const std::string name = optional_scalar(t, "name").value_or("");
  std::optional<setlab::GeneratorSequence> seq;
  if (find(t, "lambda")) {
    if (find(t, "lambdas")) throw InvalidInput("spec: give either \"lambda\" or \"lambdas\"");
    const Rational lambda = rational_field(t, "lambda");
    setlab::validate_lambda(lambda, "lambda");
    seq = setlab::GeneratorSequence::constant(lambda);
  } else {
    std::vector<Rational> lambdas;
    const auto items = array_field(t, "lambdas");
    for (std::size_t i = 0; i < items.size(); ++i) {
      const std::string where = "lambdas[" + std::to_string(i + 1) + "]";
      Rational l(0);
      try {
        l = Rational::parse(items[i]);
      } catch (const InvalidInput& e) {
        throw InvalidInput("spec: " + where + ": " + e.what());
      }
      setlab::validate_lambda(l, where);
      lambdas.push_back(l);
    }
    std::optional<Rational> tail;
    if (find(t, "tail")) {
      tail = rational_field(t, "tail");
      setlab::validate_lambda(*tail, "tail");
    }
    seq = setlab::GeneratorSequence::explicit_list(std::move(lambdas), tail);
  }
  setlab::CantorSet set(*seq, name);
  return ResolvedSet{"cantor", t, covers::SetHandle{set}, seq, std::nullopt, setlab::Side::C};
}

ASequenceRule rule_from(const TomlTable& t) {
  const std::string rule = optional_scalar(t, "rule").value_or("lemma44");
  switch (setlab::parse_rule_kind(rule)) {
    case ASequenceRule::Kind::lemma44:
      return ASequenceRule::lemma44(rational_field(t, "beta"));
    case ASequenceRule::Kind::lemma45:
      return ASequenceRule::lemma45(rational_field(t, "beta"), rational_field(t, "gamma"));
    case ASequenceRule::Kind::constant:
      return ASequenceRule::constant(positive_integer("value", scalar(t, "value")));
    case ASequenceRule::Kind::custom: {
      std::vector<numerics::BigInt> terms;
      for (const auto& item : array_field(t, "a")) {
        terms.push_back(numerics::to_big(positive_integer("a", item)));
      }
      return ASequenceRule::custom(std::move(terms));
    }
  }
  throw InvalidInput("spec: field \"rule\" unsupported");
}

ResolvedSet resolve_pair(const TomlTable& t) {
  check_keys(t, {"type", "q", "alpha", "rule", "beta", "gamma", "value", "a", "side",
                 "depth_limit"});
  setlab::QBase q;
  if (find(t, "q")) {
    if (find(t, "alpha")) throw InvalidInput("spec: give either \"q\" or \"alpha\"");
    q = setlab::QBase::rational(rational_field(t, "q"));
  } else if (find(t, "alpha")) {
    const Rational alpha = rational_field(t, "alpha");
    q = setlab::QBase::from_alpha(alpha.to_double());
  } else {
    throw InvalidInput("spec: missing field \"q\"");
  }
  const auto side = setlab::parse_side(optional_scalar(t, "side").value_or("C"));
  std::uint64_t depth = setlab::PairSpec::kDefaultDepthLimit;
  if (auto d = optional_scalar(t, "depth_limit")) depth = positive_integer("depth_limit", *d);
  setlab::PairSpec pair(q, rule_from(t), depth);
  auto seq = setlab::generators_from_pair(pair, side);
  std::optional<covers::SetHandle> handle;
  if (seq.is_exact()) handle = covers::SetHandle{setlab::CantorSet(seq, setlab::side_name(side))};
  return ResolvedSet{"pair", t, handle, seq, pair, side};
}

ResolvedSet resolve_sequence(const TomlTable& t) {
  check_keys(t, {"type", "alpha"});
  setlab::SequenceSet set(rational_field(t, "alpha"));
  return ResolvedSet{"sequence_set", t, covers::SetHandle{set}, std::nullopt, std::nullopt,
                     setlab::Side::C};
}

}  // namespace

const covers::SetHandle& ResolvedSet::set(const std::string& command) const {
  if (!handle) throw InvalidInput(command + " needs exact geometry; give a rational q");
  return *handle;
}

const setlab::CantorSet& ResolvedSet::cantor(const std::string& command) const {
  if (const auto* c = std::get_if<setlab::CantorSet>(&set(command))) return *c;
  throw InvalidInput(command + " needs a cantor or pair set, got " + type);
}

std::optional<Rational> ResolvedSet::base_q() const {
  if (pair) return pair->q().exact;
  if (generators && generators->kind() == setlab::GeneratorSequence::Kind::constant) {
    return generators->lambda(1);
  }
  return std::nullopt;
}

ResolvedSet resolve_spec(const TomlTable& table) {
  const std::string type = scalar(table, "type");
  if (type == "cantor") return resolve_cantor(table);
  if (type == "pair") return resolve_pair(table);
  if (type == "sequence_set") return resolve_sequence(table);
  throw InvalidInput("spec: field \"type\" must be cantor, pair or sequence_set, got \"" + type +
                     "\"");
}

ResolvedSet parse_spec(const std::string& path) { return resolve_spec(parse_toml_file(path)); }

TomlTable pair_table(const std::optional<std::string>& q, const std::optional<std::string>& alpha,
                     const std::string& rule, const std::optional<std::string>& beta,
                     const std::optional<std::string>& gamma,
                     const std::optional<std::string>& value, const std::optional<std::string>& a,
                     const std::string& side) {
  TomlTable t;
  t["type"] = TomlValue{std::string("pair")};
  if (q) t["q"] = TomlValue{*q};
  if (alpha) t["alpha"] = TomlValue{*alpha};
  t["rule"] = TomlValue{rule};
  if (beta) t["beta"] = TomlValue{*beta};
  if (gamma) t["gamma"] = TomlValue{*gamma};
  if (value) t["value"] = TomlValue{*value};
  if (a) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= a->size()) {
      const std::size_t comma = std::min(a->find(',', start), a->size());
      items.push_back(a->substr(start, comma - start));
      start = comma + 1;
    }
    t["a"] = TomlValue{std::move(items)};
  }
  t["side"] = TomlValue{side};
  return t;
}

}  // namespace cantorlab::cli
