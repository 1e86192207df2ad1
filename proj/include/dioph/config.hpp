#pragma once

#include <map>
#include <string>
#include <vector>

#include "dioph/rational.hpp"

namespace dioph {

// Flat TOML-like experiment configs: `key = value` lines, `#` comments,
// values are quoted strings, bare scalars (integers, rationals, booleans),
// or one-level lists `[a, b, c]`. No tables, no nesting.
class Config {
 public:
  static Config parse(const std::string& text);
  static Config parse_file(const std::string& path);

  bool has(const std::string& key) const;
  std::vector<std::string> keys() const;  // sorted

  long get_int(const std::string& key, long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  Rational get_rational(const std::string& key, const Rational& fallback) const;
  std::vector<long> get_int_list(const std::string& key) const;
  std::vector<Rational> get_rational_list(const std::string& key) const;
  std::vector<std::string> get_string_list(const std::string& key) const;

 private:
  struct Value {
    bool is_list = false;
    bool quoted = false;               // scalar came from a quoted string
    std::string scalar;                // raw token when !is_list
    std::vector<std::string> items;    // raw tokens when is_list
    std::vector<bool> items_quoted;
  };

  const Value& require(const std::string& key, bool want_list) const;

  std::map<std::string, Value> values_;
};

}  // namespace dioph
