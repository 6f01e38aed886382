#include "crystals/cache.hpp"
#include "crystals/config.hpp"
#include "crystals/serialize.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <unistd.h>

using namespace crystals;
using testing_support::datum;
using testing_support::w;

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("crystals-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Json, RoundTrip) {
  for (const char* t : {"A1", "A2", "B2", "G2", "A3"}) {
    const auto d = datum(t);
    for (const auto& lambda : dominant_box(d->rank(), 1)) {
      const auto b = generate_crystal(d, lambda);
      const auto text = crystal_to_json(b);
      const auto back = crystal_from_json(d, text);
      EXPECT_TRUE(back.graph == b.graph);
      EXPECT_EQ(back.keys, b.keys);
      EXPECT_EQ(crystal_to_json(back), text);
      EXPECT_EQ(text.back(), '\n');
      EXPECT_EQ(text.find('\r'), std::string::npos);
    }
  }
}

TEST(Json, Schema) {
  const auto a2 = datum("A2");
  const auto j = Json::parse(crystal_to_json(generate_crystal(a2, w(*a2, "1,0"))));
  EXPECT_EQ(j["format_version"], 1);
  EXPECT_EQ(j["type"], "A2");
  EXPECT_EQ(j["word"], Json::parse("[1,2,1]"));
  ASSERT_EQ(j["vertices"].size(), 3u);
  EXPECT_EQ(j["vertices"][0]["id"], "1,1,0");
  EXPECT_EQ(j["vertices"][0]["f"], Json::parse(R"(["0,1,0", null])"));
  EXPECT_EQ(j["vertices"][2]["f"], Json::parse("[null, null]"));
}

TEST(Json, RejectsBadInput) {
  const auto a2 = datum("A2");
  EXPECT_THROW(crystal_from_json(a2, "{"), InputError);
  EXPECT_THROW(crystal_from_json(a2, "{}"), InputError);
  const auto b = generate_crystal(a2, w(*a2, "1,0"));
  auto j = crystal_json(b);
  j["type"] = "B2";
  EXPECT_THROW(crystal_from_json(a2, j.dump()), InputError);
  j = crystal_json(b);
  std::swap(j["vertices"][1], j["vertices"][2]);
  EXPECT_ANY_THROW(crystal_from_json(a2, j.dump()));
  j = crystal_json(b);
  j["vertices"][0]["f"][0] = "7,7,7";
  EXPECT_THROW(crystal_from_json(a2, j.dump()), InputError);
  j = crystal_json(b);
  j["format_version"] = 99;
  EXPECT_THROW(crystal_from_json(a2, j.dump()), InputError);
}

TEST(Dot, Chain) {
  const auto a1 = datum("A1");
  const auto dot = crystal_to_dot(generate_crystal(a1, w(*a1, "2")));
  EXPECT_NE(dot.find("\"2\" -> \"1\" [label=\"1\"]"), std::string::npos);
  EXPECT_NE(dot.find("\"1\" -> \"0\" [label=\"1\"]"), std::string::npos);
  EXPECT_EQ(dot.rfind("}\n"), dot.size() - 2);
}

TEST(CommutorJson, PairsAreCanonicalIds) {
  const auto a1 = datum("A1");
  const auto b = generate_crystal(a1, w(*a1, "1"));
  const auto j = commutor_json(b, b, commutor_hk(b.graph, b.graph));
  ASSERT_EQ(j["pairs"].size(), 4u);
  EXPECT_EQ(j["method"], "hk");
  EXPECT_EQ(j["pairs"][0]["from"], Json::parse(R"(["1", "1"])"));
  EXPECT_EQ(j["pairs"][0]["to"], Json::parse(R"(["1", "1"])"));
  EXPECT_TRUE(commutor_diff_json(b, b, commutor_hk(b.graph, b.graph), commutor_hk(b.graph, b.graph)).empty());
}

TEST(Cache, HashAndLayout) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  const auto a2 = datum("A2");
  EXPECT_EQ(cache_key(a2->type(), w(*a2, "1,0")), "crystals/v1/A2/1,0");
  const CrystalCache cache("/x");
  const auto p = cache.path_for(a2->type(), w(*a2, "1,0"));
  EXPECT_EQ(p.extension(), ".json");
  EXPECT_EQ(p.parent_path().filename().string(), p.stem().string().substr(0, 2));
}

TEST(Cache, StoresAndRegeneratesIdentically) {
  const auto dir = scratch("cache");
  const auto b2 = datum("B2");
  const CrystalCache cache(dir);
  const Weight lambda = w(*b2, "1,1");
  EXPECT_FALSE(cache.read(b2->type(), lambda));
  const auto first = cache.load_or_generate(b2, lambda);
  const auto stored = cache.read(b2->type(), lambda);
  ASSERT_TRUE(stored);
  EXPECT_EQ(*stored, crystal_to_json(generate_crystal(b2, lambda)));
  const auto again = cache.load_or_generate(b2, lambda);
  EXPECT_TRUE(again->paths.empty());  // came from disk
  EXPECT_TRUE(again->graph == first->graph);
  // a corrupt entry is regenerated
  write_file(cache.path_for(b2->type(), lambda), "garbage");
  EXPECT_TRUE(cache.load_or_generate(b2, lambda)->graph == first->graph);
  EXPECT_EQ(*cache.read(b2->type(), lambda), *stored);
  fs::remove_all(dir);
}

TEST(Cache, LibraryLoader) {
  const auto dir = scratch("loader");
  const auto a2 = datum("A2");
  CrystalLibrary lib(a2);
  lib.set_loader(CrystalCache(dir).loader(a2));
  const auto b = lib.get(w(*a2, "1,1"));
  EXPECT_EQ(b->size(), 8u);
  EXPECT_TRUE(fs::exists(CrystalCache(dir).path_for(a2->type(), w(*a2, "1,1"))));
  fs::remove_all(dir);
}

TEST(Config, Parse) {
  std::istringstream in(
      "# grid settings\n"
      "cache_dir = /tmp/c  # trailing comment\n"
      "jobs=3\n"
      "include_g2 = true\n"
      "max_coeff.a2 = 4\n"
      "\n");
  const auto c = parse_config(in);
  EXPECT_EQ(c.cache_dir, fs::path("/tmp/c"));
  EXPECT_EQ(c.jobs, 3u);
  EXPECT_TRUE(c.include_g2);
  EXPECT_EQ(c.default_max_coeff(CartanType::parse("A2")), 4);
  EXPECT_EQ(c.default_max_coeff(CartanType::parse("B2")), 2);
  EXPECT_EQ(c.default_max_coeff(CartanType::parse("A3")), 1);
  EXPECT_EQ(c.default_types().size(), 6u);
}

TEST(Config, Errors) {
  for (const char* text : {"jobs = x\n", "jobs = 0\n", "bogus = 1\n", "no equals sign\n", "include_g2 = yes\n", "max_coeff.Q2 = 1\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(parse_config(in), InputError) << text;
  }
}

TEST(Config, EnvironmentOverride) {
  Config c;
  c.cache_dir = "/from/config";
  ::setenv(kCacheEnvVar, "/from/env", 1);
  apply_environment(c);
  EXPECT_EQ(c.cache_dir, fs::path("/from/env"));
  ::unsetenv(kCacheEnvVar);
}
