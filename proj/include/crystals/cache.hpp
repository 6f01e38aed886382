#pragma once

// On-disk crystal cache. Files live at <dir>/<h[0:2]>/<h>.json where h is the
// FNV-1a hash of "crystals/v<format>/<type>/<lambda>", so bumping the format
// version moves every entry. Regeneration is byte-identical, which
// `verify roundtrip` checks.

#include "crystals/library.hpp"
#include "crystals/serialize.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

namespace crystals {

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string cache_key(const CartanType& type, const Weight& lambda) {
  return "crystals/v" + std::to_string(kFormatVersion) + "/" + type.name() + "/" + lambda.str();
}

inline std::optional<std::string> read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline void write_file(const std::filesystem::path& p, const std::string& content) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  const auto tmp = p.string() + ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, p);
}

class CrystalCache {
 public:
  explicit CrystalCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path path_for(const CartanType& type, const Weight& lambda) const {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(cache_key(type, lambda))));
    return dir_ / std::string(hex, 2) / (std::string(hex) + ".json");
  }

  std::optional<std::string> read(const CartanType& type, const Weight& lambda) const { return read_file(path_for(type, lambda)); }

  void write(const CartanType& type, const Weight& lambda, const std::string& json) const { write_file(path_for(type, lambda), json); }

  /// Cached crystal if present (and parseable), otherwise generate and store.
  std::shared_ptr<const HighestWeightCrystal> load_or_generate(const std::shared_ptr<const RootDatum>& datum, const Weight& lambda) const {
    if (auto text = read(datum->type(), lambda)) {
      try {
        return std::make_shared<const HighestWeightCrystal>(crystal_from_json(datum, *text));
      } catch (const InputError&) {
        // stale or corrupt entry: regenerate below
      }
    }
    auto made = std::make_shared<const HighestWeightCrystal>(generate_crystal(datum, lambda));
    write(datum->type(), lambda, crystal_to_json(*made));
    return made;
  }

  CrystalLibrary::Loader loader(std::shared_ptr<const RootDatum> datum) const {
    return [cache = *this, datum = std::move(datum)](const Weight& lambda) { return cache.load_or_generate(datum, lambda); };
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace crystals
