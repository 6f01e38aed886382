#include "crystals/string_data.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace crystals;
using testing_support::datum;
using testing_support::w;

TEST(DownwardData, Examples) {
  const auto a1 = datum("A1");
  const auto b = generate_crystal(a1, w(*a1, "2"));
  EXPECT_EQ(downward_data(b.graph, b.highest, ReducedWord::parse("1")).values, std::vector<long>{2});

  const auto a2 = datum("A2");
  const auto rho = generate_crystal(a2, a2->rho());
  EXPECT_EQ(downward_data(rho.graph, rho.highest, ReducedWord::parse("1,2,1")).values, (std::vector<long>{1, 2, 1}));
  for (const auto& word : a2->all_reduced_words()) {
    EXPECT_EQ(downward_data(rho.graph, rho.lowest, word).values, (std::vector<long>{0, 0, 0}));
  }
  EXPECT_THROW(downward_data(rho.graph, rho.highest, ReducedWord::parse("1,2")), InputError);
}

TEST(UpwardData, Examples) {
  const auto a1 = datum("A1");
  const auto b = generate_crystal(a1, w(*a1, "2"));
  EXPECT_EQ(upward_data(b.graph, b.graph.f(0, b.highest), ReducedWord::parse("1")).values, std::vector<long>{1});
  const auto a2 = datum("A2");
  const auto rho = generate_crystal(a2, a2->rho());
  EXPECT_EQ(upward_data(rho.graph, rho.lowest, ReducedWord::parse("1,2,1")).values, (std::vector<long>{1, 2, 1}));
  EXPECT_EQ(upward_data(rho.graph, rho.highest, ReducedWord::parse("2,1,2")).values, (std::vector<long>{0, 0, 0}));
}

TEST(DownwardData, InverseLookup) {
  const auto a2 = datum("A2");
  const auto b = generate_crystal(a2, w(*a2, "1,0"));
  const auto word = ReducedWord::parse("1,2,1");
  const auto comp = components(b.graph).components.front();
  const Vertex target = b.graph.f(1, b.graph.f(0, b.highest));
  // (1,1,0) is the data of b itself; its cascade walks f_1 then f_2 down to f_2 f_1 b.
  EXPECT_EQ(element_from_downward_data(b.graph, comp, StringData{word, {1, 1, 0}, StringDirection::downward}), b.highest);
  EXPECT_EQ(downward_cascade(b.graph, b.highest, word).end, target);
  EXPECT_EQ(element_from_downward_data(b.graph, comp, StringData{word, {0, 1, 0}, StringDirection::downward}), b.graph.f(0, b.highest));
  EXPECT_EQ(element_from_downward_data(b.graph, comp, StringData{word, {0, 0, 0}, StringDirection::downward}), target);
  EXPECT_EQ(target, b.lowest);
  DownwardIndex index(b.graph, word);
  for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) EXPECT_EQ(index.find(index.data(v)), v);
  EXPECT_EQ(index.find({5, 5, 5}), kNone);
}

TEST(DownwardData, InjectiveForEveryWord) {
  for (const char* t : {"A2", "B2", "G2", "A3"}) {
    const auto d = datum(t);
    for (const auto& lambda : dominant_box(d->rank(), 1)) {
      const auto b = generate_crystal(d, lambda);
      for (const auto& word : d->all_reduced_words()) {
        std::set<std::vector<long>> seen;
        for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) {
          const auto c = downward_cascade(b.graph, v, word);
          EXPECT_EQ(c.end, b.lowest);
          seen.insert(c.values);
        }
        EXPECT_EQ(seen.size(), b.size()) << t << " " << lambda.str() << " " << word.str();
      }
    }
  }
}

TEST(CanonicalIds, KeyedByLongestWord) {
  const auto b2 = datum("B2");
  const auto b = generate_crystal(b2, w(*b2, "1,1"));
  for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) {
    EXPECT_EQ(b.id(v), values_str(downward_data(b.graph, v, b2->longest_word()).values));
  }
}
