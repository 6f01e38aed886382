#include "crystals/commutor.hpp"
#include "crystals/tensor.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace crystals;
using testing_support::datum;
using testing_support::w;

TEST(Schutzenberger, A1Chain) {
  const auto a1 = datum("A1");
  for (long m = 0; m <= 4; ++m) {
    const auto b = generate_crystal(a1, Weight({m}));
    const auto xi = schutzenberger(b.graph);
    for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) {
      EXPECT_EQ(b.graph.weight(xi[static_cast<std::size_t>(v)]), -b.graph.weight(v));
    }
  }
}

TEST(Schutzenberger, ExchangeProperty) {
  for (const char* t : {"A2", "A3", "B2", "C2", "G2"}) {
    const auto d = datum(t);
    for (const auto& lambda : dominant_box(d->rank(), 1)) {
      const auto b = generate_crystal(d, lambda);
      const auto xi = schutzenberger(b.graph);
      EXPECT_EQ(xi[static_cast<std::size_t>(b.highest)], b.lowest);
      for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) {
        const auto x = static_cast<std::size_t>(v);
        EXPECT_EQ(xi[static_cast<std::size_t>(xi[x])], v);
        EXPECT_EQ(b.graph.weight(xi[x]), d->w0_act(b.graph.weight(v)));
        for (std::size_t i = 0; i < d->rank(); ++i) {
          const Vertex fv = b.graph.f(i, v);
          const Vertex e = b.graph.e(d->theta(i), xi[x]);
          EXPECT_EQ(fv == kNone ? kNone : xi[static_cast<std::size_t>(fv)], e) << t;
        }
      }
    }
  }
}

TEST(Schutzenberger, A2Fundamental) {
  const auto a2 = datum("A2");
  const auto b = generate_crystal(a2, w(*a2, "1,0"));
  const auto xi = schutzenberger(b.graph);
  EXPECT_EQ(xi[0], b.lowest);
  EXPECT_EQ(b.graph.weight(xi[1]), a2->w0_act(b.graph.weight(1)));
}

TEST(CommutorHK, A1HighestWeightVerticesFixed) {
  const auto a1 = datum("A1");
  const auto b = generate_crystal(a1, w(*a1, "1"));
  const auto sigma = commutor_hk(b.graph, b.graph);
  const auto t = tensor(b.graph, b.graph);
  const Vertex b0 = b.highest, b1 = b.lowest;
  EXPECT_EQ(sigma(t.vertex(b0, b0)), t.vertex(b0, b0));
  EXPECT_EQ(sigma(t.vertex(b0, b1)), t.vertex(b0, b1));
  // not the naive flip a (x) b -> b (x) a
  EXPECT_NE(sigma(t.vertex(b0, b1)), t.vertex(b1, b0));
}

TEST(CommutorHK, A2ZeroWeightComponent) {
  const auto a2 = datum("A2");
  const auto x = generate_crystal(a2, w(*a2, "1,0"));
  const auto y = generate_crystal(a2, w(*a2, "0,1"));
  const auto source = tensor(x.graph, y.graph);
  const auto target = tensor(y.graph, x.graph);
  const auto sigma = commutor_hk(x.graph, y.graph);
  for (Vertex v : highest_weight_vertices(source.graph)) {
    if (!source.graph.weight(v).is_zero()) continue;
    const Vertex image = sigma(v);
    EXPECT_TRUE(target.graph.is_highest(image));
    EXPECT_TRUE(target.graph.weight(image).is_zero());
  }
  EXPECT_TRUE(is_isomorphism(source.graph, target.graph, sigma.map));
}

TEST(CommutorHK, TrivialFactorIsIdentity) {
  const auto b2 = datum("B2");
  const auto one = generate_crystal(b2, w(*b2, "0,0"));
  const auto x = generate_crystal(b2, w(*b2, "1,1"));
  const auto sigma = commutor_hk(one.graph, x.graph);
  EXPECT_TRUE(is_identity(sigma.map));
}

TEST(CommutorHK, Involutive) {
  for (const char* t : {"A2", "B2", "G2"}) {
    const auto d = datum(t);
    const auto x = generate_crystal(d, d->fundamental_weight(0));
    const auto y = generate_crystal(d, d->rho());
    EXPECT_TRUE(is_identity(compose(commutor_hk(y.graph, x.graph), commutor_hk(x.graph, y.graph)))) << t;
  }
}

TEST(Cactus, SmallTriples) {
  const auto a1 = datum("A1");
  const auto b1 = generate_crystal(a1, w(*a1, "1"));
  const auto rep = check_cactus(b1.graph, b1.graph, b1.graph);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.checked, 8u);

  const auto a2 = datum("A2");
  const auto l1 = generate_crystal(a2, w(*a2, "1,0"));
  const auto rep2 = check_cactus(l1.graph, l1.graph, l1.graph);
  EXPECT_TRUE(rep2.passed());
  EXPECT_EQ(rep2.checked, 27u);

  const auto zero = generate_crystal(a2, w(*a2, "0,0"));
  const auto rho = generate_crystal(a2, a2->rho());
  EXPECT_TRUE(check_cactus(zero.graph, rho.graph, l1.graph).passed());
  EXPECT_TRUE(check_cactus(rho.graph, l1.graph, rho.graph).passed());
}
