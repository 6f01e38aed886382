#include "crystals/crystal_graph.hpp"
#include "crystals/ls_path.hpp"
#include "crystals/path_crystal.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace crystals;
using testing_support::datum;
using testing_support::w;

TEST(LSPath, StraightPaths) {
  const auto a1 = datum("A1");
  const auto p = LSPath::straight(w(*a1, "2"));
  ASSERT_EQ(p.segments().size(), 1u);
  EXPECT_EQ(p.integral_endpoint(), w(*a1, "2"));
  const auto zero = LSPath::straight(w(*a1, "0"));
  EXPECT_EQ(zero.integral_endpoint(), w(*a1, "0"));
  EXPECT_FALSE(root_f(*a1, 0, zero));
  EXPECT_THROW(LSPath::straight(w(*a1, "-1")), InputError);
}

TEST(LSPath, RootOperatorsA1) {
  const auto a1 = datum("A1");
  const auto p = LSPath::straight(w(*a1, "1"));
  const auto q = root_f(*a1, 0, p);
  ASSERT_TRUE(q);
  EXPECT_EQ(q->integral_endpoint(), w(*a1, "-1"));
  EXPECT_FALSE(root_f(*a1, 0, *q));
  EXPECT_EQ(root_e(*a1, 0, *q), p);
  EXPECT_FALSE(root_e(*a1, 0, p));
}

TEST(LSPath, RootOperatorsA2) {
  const auto a2 = datum("A2");
  const auto p = LSPath::straight(w(*a2, "1,0"));
  const auto q = root_f(*a2, 0, p);
  ASSERT_TRUE(q);
  const auto r = root_f(*a2, 1, *q);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->integral_endpoint(), w(*a2, "0,-1"));
  EXPECT_FALSE(root_f(*a2, 0, *r));
  EXPECT_FALSE(root_f(*a2, 1, *r));
}

TEST(LSPath, ERightInverseOfF) {
  for (const char* t : {"A2", "B2", "G2"}) {
    const auto d = datum(t);
    for (const auto& lambda : dominant_box(d->rank(), 1)) {
      const auto b = generate_crystal(d, lambda);
      for (const auto& p : b.paths) {
        for (std::size_t i = 0; i < d->rank(); ++i) {
          if (auto q = root_f(*d, i, p)) {
            EXPECT_EQ(root_e(*d, i, *q), p);
          }
          if (auto q = root_e(*d, i, p)) {
            EXPECT_EQ(root_f(*d, i, *q), p);
          }
          EXPECT_EQ(path_phi(p, i) - path_eps(p, i), p.integral_endpoint()[i]);
        }
      }
    }
  }
}

TEST(LSPath, RationalTurningPoints) {
  // B2 and G2 paths acquire non-half-integral breakpoints; endpoints stay integral.
  const auto g2 = datum("G2");
  const auto b = generate_crystal(g2, w(*g2, "1,1"));
  bool non_straight = false;
  for (const auto& p : b.paths) non_straight = non_straight || p.segments().size() > 1;
  EXPECT_TRUE(non_straight);
  EXPECT_EQ(Integer(b.size()), g2->weyl_dim(w(*g2, "1,1")));
}

TEST(CrystalGraph, EpsPhiOnChains) {
  const auto a1 = datum("A1");
  const auto b = generate_crystal(a1, w(*a1, "2"));
  ASSERT_EQ(b.size(), 3u);
  const Vertex mid = b.graph.f(0, b.highest);
  EXPECT_EQ(b.graph.eps(0, mid), 1);
  EXPECT_EQ(b.graph.phi(0, mid), 1);
  EXPECT_EQ(b.graph.eps_vec(b.highest), w(*a1, "0"));
  EXPECT_EQ(b.graph.phi_vec(b.highest), w(*a1, "2"));
  EXPECT_EQ(b.graph.phi_vec(b.lowest), w(*a1, "0"));
  EXPECT_EQ(b.graph.eps_vec(b.lowest), w(*a1, "2"));
}

TEST(CrystalGraph, A2FundamentalWalk) {
  const auto a2 = datum("A2");
  const auto b = generate_crystal(a2, w(*a2, "1,0"));
  ASSERT_EQ(b.size(), 3u);
  const Vertex f1 = b.graph.f(0, b.highest);
  ASSERT_NE(f1, kNone);
  EXPECT_EQ(b.graph.phi(1, f1), 1);
  EXPECT_EQ(b.graph.eps_vec(f1), w(*a2, "1,0"));
  EXPECT_EQ(b.graph.f(1, f1), b.lowest);
  EXPECT_EQ(b.graph.f(1, b.highest), kNone);
}

TEST(CrystalGraph, LowestVertexData) {
  for (const char* t : {"A2", "B2", "C2", "A3"}) {
    const auto d = datum(t);
    for (const auto& lambda : dominant_box(d->rank(), 1)) {
      const auto b = generate_crystal(d, lambda);
      EXPECT_EQ(b.graph.eps_vec(b.highest), d->zero_weight());
      EXPECT_EQ(b.graph.phi_vec(b.highest), lambda);
      EXPECT_EQ(b.graph.phi_vec(b.lowest), d->zero_weight());
      EXPECT_EQ(b.graph.eps_vec(b.lowest), -d->w0_act(lambda));
      EXPECT_TRUE(b.graph.is_lowest(b.lowest));
      EXPECT_EQ(b.graph.weight(b.lowest), d->w0_act(lambda));
    }
  }
}

TEST(CrystalGraph, RejectsBadEdges) {
  const auto a1 = datum("A1");
  // f not injective
  EXPECT_ANY_THROW(CrystalGraph(a1, {w(*a1, "1"), w(*a1, "1"), w(*a1, "-1")}, {{2, 2, kNone}}));
  // weight does not drop by alpha
  EXPECT_ANY_THROW(CrystalGraph(a1, {w(*a1, "1"), w(*a1, "0")}, {{1, kNone}}));
}

TEST(CrystalGraph, HighestWeightVertices) {
  const auto a2 = datum("A2");
  const auto b = generate_crystal(a2, w(*a2, "1,1"));
  EXPECT_EQ(highest_weight_vertices(b.graph), std::vector<Vertex>{b.highest});
  const auto dec = components(b.graph);
  ASSERT_EQ(dec.components.size(), 1u);
  EXPECT_EQ(dec.components[0].vertices.size(), 8u);
}

TEST(UniqueIso, IdentityAndErrors) {
  const auto a2 = datum("A2");
  const auto b = generate_crystal(a2, w(*a2, "1,1"));
  const auto id = unique_iso(b.graph, b.graph, {{b.highest, b.highest}});
  for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) EXPECT_EQ(id[static_cast<std::size_t>(v)], v);
  EXPECT_TRUE(is_isomorphism(b.graph, b.graph, id));
  EXPECT_THROW(unique_iso(b.graph, b.graph, {{b.highest, b.lowest}}), InvariantError);
  EXPECT_THROW(unique_iso(b.graph, b.graph, {}), InvariantError);
}

TEST(Generate, SizesAndCanonicalOrder) {
  const auto a1 = datum("A1");
  for (long m = 0; m <= 4; ++m) EXPECT_EQ(generate_crystal(a1, Weight({m})).size(), static_cast<std::size_t>(m + 1));
  const auto a2 = datum("A2");
  const auto rho = generate_crystal(a2, a2->rho());
  EXPECT_EQ(rho.size(), 8u);
  EXPECT_EQ(rho.paths[static_cast<std::size_t>(rho.lowest)].integral_endpoint(), w(*a2, "-1,-1"));
  EXPECT_EQ(rho.highest, 0);
  EXPECT_EQ(rho.lowest, 7);
  EXPECT_EQ(rho.id(rho.highest), "1,2,1");
  EXPECT_EQ(rho.id(rho.lowest), "0,0,0");
  EXPECT_EQ(rho.find("1,2,1"), rho.highest);
  EXPECT_THROW(rho.find("9,9,9"), InputError);
  EXPECT_THROW(rho.find("a"), InputError);
  const auto zero = generate_crystal(a2, w(*a2, "0,0"));
  EXPECT_EQ(zero.size(), 1u);
  EXPECT_THROW(generate_crystal(a2, w(*a2, "-1,0")), InputError);
}

TEST(Generate, Deterministic) {
  const auto b2 = datum("B2");
  const auto x = generate_crystal(b2, w(*b2, "2,1"));
  const auto y = generate_crystal(b2, w(*b2, "2,1"));
  EXPECT_TRUE(x.graph == y.graph);
  EXPECT_EQ(x.keys, y.keys);
}

TEST(Generate, BudgetExceeded) {
  const auto a3 = datum("A3");
  EXPECT_THROW(generate_crystal(a3, w(*a3, "2,2,2"), 100), InputError);
}
