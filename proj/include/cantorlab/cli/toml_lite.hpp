#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cantorlab::cli {

/// Value of a flat TOML document: string, integer, boolean or array of strings/integers.
/// Array elements are kept as their textual form.
struct TomlValue {
  std::variant<std::string, long long, bool, std::vector<std::string>> data;

  bool is_string() const { return std::holds_alternative<std::string>(data); }
  bool is_array() const { return std::holds_alternative<std::vector<std::string>>(data); }
  /// Strings as-is, integers and booleans in decimal / true|false form.
  std::string text() const;
};

using TomlTable = std::map<std::string, TomlValue>;

/// Parses key = value lines with # comments. Supported values: basic strings, integers,
/// true/false, and single-line arrays of those. Throws InvalidInput naming the line.
TomlTable parse_toml(std::string_view source);
TomlTable parse_toml_file(const std::string& path);

std::string to_toml(const TomlTable& table);

}  // namespace cantorlab::cli
