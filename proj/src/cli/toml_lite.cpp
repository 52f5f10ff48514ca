#include "cantorlab/cli/toml_lite.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "cantorlab/numerics/rational.hpp"

namespace cantorlab::cli {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line;

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("toml line " + std::to_string(line) + ": " + what);
  }
  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size() || text[pos] == '#';
  }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
};

std::string parse_string(Cursor& c) {
  if (c.peek() != '"') c.fail("expected '\"'");
  ++c.pos;
  std::string out;
  while (c.pos < c.text.size() && c.text[c.pos] != '"') {
    char ch = c.text[c.pos++];
    if (ch == '\\') {
      if (c.pos >= c.text.size()) c.fail("dangling escape");
      const char esc = c.text[c.pos++];
      switch (esc) {
        case 'n': ch = '\n'; break;
        case 't': ch = '\t'; break;
        case '"': ch = '"'; break;
        case '\\': ch = '\\'; break;
        default: c.fail(std::string("unsupported escape \\") + esc);
      }
    }
    out += ch;
  }
  if (c.pos >= c.text.size()) c.fail("unterminated string");
  ++c.pos;
  return out;
}

std::string parse_bare(Cursor& c) {
  const std::size_t start = c.pos;
  while (c.pos < c.text.size()) {
    const char ch = c.text[c.pos];
    if (ch == ',' || ch == ']' || ch == '#' || ch == ' ' || ch == '\t') break;
    ++c.pos;
  }
  if (c.pos == start) c.fail("missing value");
  return std::string(c.text.substr(start, c.pos - start));
}

TomlValue scalar_from_bare(Cursor& c, const std::string& word) {
  if (word == "true") return TomlValue{true};
  if (word == "false") return TomlValue{false};
  std::size_t i = (word[0] == '+' || word[0] == '-') ? 1 : 0;
  if (i == word.size()) c.fail("malformed value \"" + word + "\"");
  for (; i < word.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(word[i])) && word[i] != '_') {
      c.fail("malformed value \"" + word + "\" (strings must be quoted)");
    }
  }
  std::string digits;
  for (char ch : word) {
    if (ch != '_') digits += ch;
  }
  try {
    return TomlValue{std::stoll(digits)};
  } catch (const std::exception&) {
    c.fail("integer out of range \"" + word + "\"");
  }
}

TomlValue parse_value(Cursor& c) {
  c.skip_ws();
  if (c.peek() == '"') return TomlValue{parse_string(c)};
  if (c.peek() == '[') {
    ++c.pos;
    std::vector<std::string> items;
    for (;;) {
      c.skip_ws();
      if (c.peek() == ']') {
        ++c.pos;
        break;
      }
      if (c.peek() == '"') {
        items.push_back(parse_string(c));
      } else {
        items.push_back(scalar_from_bare(c, parse_bare(c)).text());
      }
      c.skip_ws();
      if (c.peek() == ',') {
        ++c.pos;
      } else if (c.peek() != ']') {
        c.fail("expected ',' or ']' in array");
      }
    }
    return TomlValue{std::move(items)};
  }
  return scalar_from_bare(c, parse_bare(c));
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string TomlValue::text() const {
  if (const auto* s = std::get_if<std::string>(&data)) return *s;
  if (const auto* i = std::get_if<long long>(&data)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&data)) return *b ? "true" : "false";
  std::string out;
  for (const auto& item : std::get<std::vector<std::string>>(data)) {
    out += (out.empty() ? "" : ",") + item;
  }
  return out;
}

TomlTable parse_toml(std::string_view source) {
  TomlTable table;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    ++line_no;
    Cursor c{source.substr(start, end - start), 0, line_no};
    start = end + 1;
    if (c.at_end()) {
      if (end == source.size()) break;
      continue;
    }
    if (c.peek() == '[') c.fail("tables are not supported");
    const std::size_t key_start = c.pos;
    while (c.pos < c.text.size() &&
           (std::isalnum(static_cast<unsigned char>(c.text[c.pos])) || c.text[c.pos] == '_' ||
            c.text[c.pos] == '-')) {
      ++c.pos;
    }
    const std::string key(c.text.substr(key_start, c.pos - key_start));
    if (key.empty()) c.fail("expected a key");
    c.skip_ws();
    if (c.peek() != '=') c.fail("expected '=' after key \"" + key + "\"");
    ++c.pos;
    TomlValue value = parse_value(c);
    if (!c.at_end()) c.fail("unexpected text after value of \"" + key + "\"");
    if (!table.emplace(key, std::move(value)).second) c.fail("duplicate key \"" + key + "\"");
    if (end == source.size()) break;
  }
  return table;
}

TomlTable parse_toml_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read spec file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_toml(buffer.str());
}

std::string to_toml(const TomlTable& table) {
  std::string out;
  for (const auto& [key, value] : table) {
    out += key + " = ";
    if (const auto* items = std::get_if<std::vector<std::string>>(&value.data)) {
      out += "[";
      for (std::size_t i = 0; i < items->size(); ++i) out += (i ? ", " : "") + quote((*items)[i]);
      out += "]";
    } else if (value.is_string()) {
      out += quote(value.text());
    } else {
      out += value.text();
    }
    out += "\n";
  }
  return out;
}

}  // namespace cantorlab::cli
