#include "crystals/character.hpp"
#include "crystals/tensor.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

using namespace crystals;
using testing_support::datum;
using testing_support::w;

namespace {

std::vector<std::size_t> component_sizes(const CrystalGraph& g) {
  std::vector<std::size_t> out;
  for (const auto& c : components(g).components) out.push_back(c.vertices.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Tensor, A1HandWalk) {
  const auto a1 = datum("A1");
  const auto b = generate_crystal(a1, w(*a1, "1"));
  const auto t = tensor(b.graph, b.graph);
  ASSERT_EQ(t.graph.size(), 4u);
  const Vertex b0 = b.highest, b1 = b.lowest;
  EXPECT_EQ(t.graph.f(0, t.vertex(b0, b0)), t.vertex(b1, b0));
  EXPECT_EQ(t.graph.f(0, t.vertex(b1, b0)), t.vertex(b1, b1));
  EXPECT_EQ(t.graph.f(0, t.vertex(b0, b1)), kNone);
  const auto hw = highest_weight_vertices(t.graph);
  ASSERT_EQ(hw.size(), 2u);
  EXPECT_EQ(t.graph.weight(hw[0]), w(*a1, "2"));
  EXPECT_EQ(t.graph.weight(hw[1]), w(*a1, "0"));
  EXPECT_EQ(component_sizes(t.graph), (std::vector<std::size_t>{1, 3}));
}

TEST(Tensor, A2Components) {
  const auto a2 = datum("A2");
  const auto l1 = generate_crystal(a2, w(*a2, "1,0"));
  const auto l2 = generate_crystal(a2, w(*a2, "0,1"));
  const auto t11 = tensor(l1.graph, l1.graph);
  EXPECT_EQ(component_sizes(t11.graph), (std::vector<std::size_t>{3, 6}));
  std::multiset<Weight> tops;
  for (const auto& c : components(t11.graph).components) tops.insert(c.highest_weight);
  EXPECT_EQ(tops, (std::multiset<Weight>{w(*a2, "2,0"), w(*a2, "0,1")}));

  const auto t12 = tensor(l1.graph, l2.graph);
  std::multiset<Weight> tops12;
  for (Vertex v : highest_weight_vertices(t12.graph)) tops12.insert(t12.graph.weight(v));
  EXPECT_EQ(tops12, (std::multiset<Weight>{w(*a2, "1,1"), w(*a2, "0,0")}));
}

TEST(Tensor, UnitObject) {
  const auto b2 = datum("B2");
  const auto one = generate_crystal(b2, w(*b2, "0,0"));
  const auto b = generate_crystal(b2, w(*b2, "1,1"));
  const auto t = tensor(one.graph, b.graph);
  EXPECT_TRUE(t.graph == b.graph);
  const auto u = tensor(b.graph, one.graph);
  EXPECT_TRUE(u.graph == b.graph);
}

TEST(Tensor, Associativity) {
  for (const char* type : {"A2", "B2", "G2"}) {
    const auto d = datum(type);
    const auto x = generate_crystal(d, d->fundamental_weight(0));
    const auto y = generate_crystal(d, d->fundamental_weight(1));
    const auto z = generate_crystal(d, d->rho());
    // (x (x) y) (x) z and x (x) (y (x) z) share the index (i*|Y| + j)*|Z| + k.
    const auto left = tensor(tensor(x.graph, y.graph).graph, z.graph);
    const auto right = tensor(x.graph, tensor(y.graph, z.graph).graph);
    EXPECT_TRUE(left.graph == right.graph) << type;
  }
}

TEST(Tensor, SeminormalAndNormal) {
  const auto c2 = datum("C2");
  const auto x = generate_crystal(c2, w(*c2, "1,1"));
  const auto y = generate_crystal(c2, w(*c2, "0,2"));
  const auto t = tensor(x.graph, y.graph);
  EXPECT_FALSE(seminormality_violation(t.graph));
  EXPECT_NO_THROW(components(t.graph));
}

TEST(HighestWeightPairs, Examples) {
  const auto a1 = datum("A1");
  const auto b1 = generate_crystal(a1, w(*a1, "1"));
  const auto b2 = generate_crystal(a1, w(*a1, "2"));
  const auto b0 = generate_crystal(a1, w(*a1, "0"));
  EXPECT_EQ(hw_pairs(b1, b1).size(), 2u);
  const auto pairs = hw_pairs(b1, b2);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(b2.id(pairs[0]), "2");
  EXPECT_EQ(b2.id(pairs[1]), "1");
  EXPECT_EQ(hw_pairs(b0, b2), std::vector<Vertex>{b2.highest});
  const auto t = tensor(b1.graph, b2.graph);
  EXPECT_NO_THROW(hw_pairs(b1, b2, &t));
}

TEST(HighestWeightPairs, CriterionMatchesKillTest) {
  for (const char* type : {"A2", "B2", "C2", "G2"}) {
    const auto d = datum(type);
    for (const auto& lambda : dominant_box(2, 1)) {
      for (const auto& mu : dominant_box(2, 1)) {
        const auto x = generate_crystal(d, lambda);
        const auto y = generate_crystal(d, mu);
        const auto t = tensor(x.graph, y.graph);
        EXPECT_NO_THROW(hw_pairs(x, y, &t)) << type;
      }
    }
  }
}

TEST(Concatenation, SameNumberingAsTensor) {
  for (const char* type : {"A2", "B2", "C2", "G2"}) {
    const auto d = datum(type);
    const auto x = generate_crystal(d, d->fundamental_weight(0));
    const auto y = generate_crystal(d, d->fundamental_weight(1));
    const auto t = tensor(x.graph, y.graph);
    const auto concat = concatenation_crystal(x, y);
    std::vector<Vertex> id(concat.size());
    for (std::size_t v = 0; v < id.size(); ++v) id[v] = static_cast<Vertex>(v);
    EXPECT_TRUE(is_isomorphism(concat, t.graph, id)) << type;
    // the opposite order is a different crystal structure on the same set
    const auto swapped = tensor(y.graph, x.graph);
    std::vector<Vertex> flip(concat.size());
    for (std::size_t a = 0; a < x.size(); ++a) {
      for (std::size_t b = 0; b < y.size(); ++b) flip[a * y.size() + b] = static_cast<Vertex>(b * x.size() + a);
    }
    EXPECT_FALSE(is_isomorphism(concat, swapped.graph, flip)) << type;
  }
}

TEST(Character, FreudenthalSmallCases) {
  const auto a2 = datum("A2");
  const auto adj = weight_multiplicities(*a2, w(*a2, "1,1"));
  EXPECT_EQ(adj.at(w(*a2, "0,0")), 2);
  EXPECT_EQ(adj.at(w(*a2, "1,1")), 1);
  EXPECT_EQ(adj.size(), 7u);
  const auto b2 = datum("B2");
  const auto vec = weight_multiplicities(*b2, w(*b2, "1,0"));
  EXPECT_EQ(vec.at(w(*b2, "0,0")), 1);
  EXPECT_EQ(vec.size(), 5u);
}

TEST(Character, BrauerKlimyk) {
  const auto a2 = datum("A2");
  const auto dec = tensor_decomposition(*a2, w(*a2, "1,0"), w(*a2, "0,1"));
  EXPECT_EQ(dec, (std::map<Weight, long>{{w(*a2, "1,1"), 1}, {w(*a2, "0,0"), 1}}));
  const auto adj2 = tensor_decomposition(*a2, w(*a2, "1,1"), w(*a2, "1,1"));
  EXPECT_EQ(adj2.at(w(*a2, "1,1")), 2);
  long total = 0;
  for (const auto& [nu, m] : adj2) total += m * static_cast<long>(a2->weyl_dim(nu));
  EXPECT_EQ(total, 64);
  const auto g2 = datum("G2");
  const auto gg = tensor_decomposition(*g2, w(*g2, "1,0"), w(*g2, "0,1"));
  long g_total = 0;
  for (const auto& [nu, m] : gg) g_total += m * static_cast<long>(g2->weyl_dim(nu));
  EXPECT_EQ(Integer(g_total), g2->weyl_dim(w(*g2, "1,0")) * g2->weyl_dim(w(*g2, "0,1")));
}
