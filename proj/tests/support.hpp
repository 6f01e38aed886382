#pragma once

#include "crystals/library.hpp"
#include "crystals/path_crystal.hpp"

#include <memory>
#include <string>

namespace testing_support {

inline std::shared_ptr<const crystals::RootDatum> datum(const std::string& type) {
  return std::make_shared<const crystals::RootDatum>(crystals::CartanType::parse(type));
}

inline std::shared_ptr<crystals::CrystalLibrary> library(const std::string& type) {
  return std::make_shared<crystals::CrystalLibrary>(datum(type));
}

inline crystals::Weight w(const crystals::RootDatum& d, const std::string& text) { return crystals::Weight::parse(text, d.rank()); }

}  // namespace testing_support
