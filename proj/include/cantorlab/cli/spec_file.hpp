#pragma once

#include <optional>
#include <string>

#include "cantorlab/cli/toml_lite.hpp"
#include "cantorlab/covers/covers.hpp"
#include "cantorlab/setlab/pair.hpp"

namespace cantorlab::cli {

/// A validated set spec: the set itself plus whatever construction data produced it.
struct ResolvedSet {
  std::string type;  // cantor | pair | sequence_set
  TomlTable source;  // the spec as read, echoed into reports
  /// Empty for pairs over an irrational q, which only support formula-level work.
  std::optional<covers::SetHandle> handle;
  std::optional<setlab::GeneratorSequence> generators;
  std::optional<setlab::PairSpec> pair;
  setlab::Side side = setlab::Side::C;

  /// The set, or InvalidInput naming `command` when it has no exact geometry.
  const covers::SetHandle& set(const std::string& command) const;
  /// The Cantor set, or InvalidInput naming `command`.
  const setlab::CantorSet& cantor(const std::string& command) const;
  /// Construction base q for q-power scale ranges, when the set has one.
  std::optional<Rational> base_q() const;
};

/// Validates a parsed table. Unknown keys and malformed values raise InvalidInput naming
/// the field.
ResolvedSet resolve_spec(const TomlTable& table);
ResolvedSet parse_spec(const std::string& path);

/// Builds the pair table used by `pair` and `verify` from --q/--alpha/--rule style inputs.
TomlTable pair_table(const std::optional<std::string>& q, const std::optional<std::string>& alpha,
                     const std::string& rule, const std::optional<std::string>& beta,
                     const std::optional<std::string>& gamma,
                     const std::optional<std::string>& value, const std::optional<std::string>& a,
                     const std::string& side);

}  // namespace cantorlab::cli
