#pragma once

// Key-value configuration for the CLI.
//
//   # comment
//   cache_dir = /path/to/cache
//   jobs = 4
//   include_g2 = false
//   max_coeff.A2 = 2
//   max_coeff.A3 = 1
//
// CRYSTALS_CACHE_DIR overrides cache_dir.

#include "crystals/cartan.hpp"
#include "crystals/error.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace crystals {

inline constexpr const char* kCacheEnvVar = "CRYSTALS_CACHE_DIR";

struct Config {
  std::optional<std::filesystem::path> cache_dir;
  unsigned jobs = 1;
  bool include_g2 = false;
  std::map<std::string, long> max_coeff;  // by type name, e.g. "A2"

  /// Grid bound for a type: config entry, else the built-in default.
  long default_max_coeff(const CartanType& t) const {
    if (auto it = max_coeff.find(t.name()); it != max_coeff.end()) return it->second;
    if (t.family == Family::A && t.rank <= 2) return 2;
    if ((t.family == Family::B || t.family == Family::C) && t.rank == 2) return 2;
    return 1;
  }

  std::vector<CartanType> default_types() const {
    std::vector<CartanType> out;
    for (const char* name : {"A1", "A2", "B2", "C2", "A3"}) out.push_back(CartanType::parse(name));
    if (include_g2) out.push_back(CartanType::parse("G2"));
    return out;
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long v = std::stol(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError("config: '" + key + "' needs an integer, got '" + value + "'");
}

}  // namespace detail

inline Config parse_config(std::istream& in) {
  Config c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError("config line " + std::to_string(lineno) + ": expected key = value");
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));
    if (key == "cache_dir") {
      c.cache_dir = value;
    } else if (key == "jobs") {
      const long j = detail::parse_long(key, value);
      if (j < 1) throw InputError("config: jobs must be positive");
      c.jobs = static_cast<unsigned>(j);
    } else if (key == "include_g2") {
      if (value != "true" && value != "false") throw InputError("config: include_g2 must be true or false");
      c.include_g2 = value == "true";
    } else if (key.rfind("max_coeff.", 0) == 0) {
      const auto type = CartanType::parse(key.substr(10));
      const long m = detail::parse_long(key, value);
      if (m < 0) throw InputError("config: max_coeff must be non-negative");
      c.max_coeff[type.name()] = m;
    } else {
      throw InputError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return c;
}

inline Config load_config(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("cannot read config file " + p.string());
  return parse_config(in);
}

inline void apply_environment(Config& c) {
  if (const char* dir = std::getenv(kCacheEnvVar); dir != nullptr && *dir != '\0') c.cache_dir = dir;
}

}  // namespace crystals
