#include "dioph/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dioph {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Strips a trailing comment, respecting double-quoted strings.
std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

// Parses one scalar token; returns (raw text, was-quoted).
std::pair<std::string, bool> parse_scalar(const std::string& tok, int lineno) {
  std::string t = trim(tok);
  if (t.empty())
    throw std::invalid_argument("config: empty value on line " +
                                std::to_string(lineno));
  if (t.front() == '"') {
    if (t.size() < 2 || t.back() != '"')
      throw std::invalid_argument("config: unterminated string on line " +
                                  std::to_string(lineno));
    return {t.substr(1, t.size() - 2), true};
  }
  return {t, false};
}

// Splits a bracketed list body on commas outside quotes.
std::vector<std::string> split_list(const std::string& body, int lineno) {
  std::vector<std::string> out;
  std::string cur;
  bool in_string = false;
  for (char c : body) {
    if (c == '"') in_string = !in_string;
    if (c == ',' && !in_string) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (in_string)
    throw std::invalid_argument("config: unterminated string on line " +
                                std::to_string(lineno));
  if (!trim(cur).empty() || !out.empty()) out.push_back(cur);
  // allow a trailing comma: drop a final empty element
  if (!out.empty() && trim(out.back()).empty()) out.pop_back();
  return out;
}

long to_long(const std::string& raw, const std::string& key) {
  try {
    size_t used = 0;
    long v = std::stol(raw, &used);
    if (used != raw.size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key '" + key +
                                "' is not an integer: " + raw);
  }
}

}  // namespace

Config Config::parse(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    size_t eq = body.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected 'key = value' on line " +
                                  std::to_string(lineno));
    std::string key = trim(body.substr(0, eq));
    std::string val = trim(body.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config: empty key on line " +
                                  std::to_string(lineno));
    if (cfg.values_.count(key))
      throw std::invalid_argument("config: duplicate key '" + key + "'");
    Value v;
    if (!val.empty() && val.front() == '[') {
      if (val.back() != ']')
        throw std::invalid_argument("config: unterminated list on line " +
                                    std::to_string(lineno));
      v.is_list = true;
      for (const auto& tok :
           split_list(val.substr(1, val.size() - 2), lineno)) {
        auto [raw, quoted] = parse_scalar(tok, lineno);
        v.items.push_back(raw);
        v.items_quoted.push_back(quoted);
      }
    } else {
      auto [raw, quoted] = parse_scalar(val, lineno);
      v.scalar = raw;
      v.quoted = quoted;
    }
    cfg.values_.emplace(std::move(key), std::move(v));
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

std::vector<std::string> Config::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : values_) out.push_back(k);
  return out;
}

const Config::Value& Config::require(const std::string& key,
                                     bool want_list) const {
  auto it = values_.find(key);
  if (it == values_.end())
    throw std::invalid_argument("config: missing key '" + key + "'");
  if (it->second.is_list != want_list)
    throw std::invalid_argument("config: key '" + key + "' is a " +
                                (it->second.is_list ? "list" : "scalar"));
  return it->second;
}

long Config::get_int(const std::string& key, long fallback) const {
  if (!has(key)) return fallback;
  return to_long(require(key, false).scalar, key);
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string& raw = require(key, false).scalar;
  if (raw == "true") return true;
  if (raw == "false") return false;
  throw std::invalid_argument("config: key '" + key +
                              "' is not a boolean: " + raw);
}

std::string Config::get_string(const std::string& key,
                               const std::string& fallback) const {
  if (!has(key)) return fallback;
  return require(key, false).scalar;
}

Rational Config::get_rational(const std::string& key,
                              const Rational& fallback) const {
  if (!has(key)) return fallback;
  return parse_rational(require(key, false).scalar);
}

std::vector<long> Config::get_int_list(const std::string& key) const {
  std::vector<long> out;
  for (const auto& raw : require(key, true).items)
    out.push_back(to_long(raw, key));
  return out;
}

std::vector<Rational> Config::get_rational_list(const std::string& key) const {
  std::vector<Rational> out;
  for (const auto& raw : require(key, true).items)
    out.push_back(parse_rational(raw));
  return out;
}

std::vector<std::string> Config::get_string_list(const std::string& key) const {
  return require(key, true).items;
}

}  // namespace dioph
