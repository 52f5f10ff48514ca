#pragma once

#include <string>
#include <vector>

#include "cantorlab/cli/spec_file.hpp"

namespace cantorlab::cli {

/// Parses a scale selection. Accepted forms:
///   B^E1..B^E2   integer exponents from E1 to E2 inclusive, B a positive rational other than 1
///   q^a..q^b     powers of the set's construction base q
///   L^a..L^b     level lengths of a Cantor set
///   s1,s2,...    comma list whose items are rationals or single B^E / q^a / L^a tokens
/// `set` may be null when no q or L tokens are used. Throws InvalidInput on an empty selection.
std::vector<Rational> parse_scales(const std::string& text, const ResolvedSet* set);

}  // namespace cantorlab::cli
