#pragma once

// Schutzenberger involution on normal crystals and the Henriques-Kamnitzer
// commutor
//
//   sigma_{B,C}(b (x) c) = xi_{C(x)B}(xi_C(c) (x) xi_B(b))
//                        = Flip o (xi_B (x) xi_C)(xi_{B(x)C}(b (x) c)).

#include "crystals/crystal_graph.hpp"
#include "crystals/error.hpp"
#include "crystals/tensor.hpp"

#include <deque>
#include <optional>
#include <string>
#include <vector>

namespace crystals {

enum class CommutorMethod { hk, star };

inline const char* to_string(CommutorMethod m) { return m == CommutorMethod::hk ? "hk" : "star"; }

/// Vertex bijection tensor(A, B) -> tensor(B, A), in TensorProduct numbering.
struct CommutorMap {
  std::size_t left_size = 0;   // |A|
  std::size_t right_size = 0;  // |B|
  std::vector<Vertex> map;
  CommutorMethod method = CommutorMethod::hk;

  Vertex operator()(Vertex v) const { return map[static_cast<std::size_t>(v)]; }
  friend bool operator==(const CommutorMap& a, const CommutorMap& b) {
    return a.left_size == b.left_size && a.right_size == b.right_size && a.map == b.map;
  }
};

/// xi on every component: highest <-> lowest, xi(f_i x) = e_theta(i)(xi x).
/// The result is checked edge by edge, on weights, and for involutivity.
inline std::vector<Vertex> schutzenberger(const CrystalGraph& g) {
  const RootDatum& d = g.datum();
  const auto dec = components(g);
  std::vector<Vertex> xi(g.size(), kNone);
  for (const auto& comp : dec.components) {
    xi[static_cast<std::size_t>(comp.highest)] = comp.lowest;
    std::deque<Vertex> queue{comp.highest};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < g.rank(); ++i) {
        const Vertex y = g.f(i, x);
        if (y == kNone) continue;
        const Vertex image = g.e(d.theta(i), xi[static_cast<std::size_t>(x)]);
        if (image == kNone) throw InvariantError("Schutzenberger propagation hit an undefined e_theta(i)");
        Vertex& slot = xi[static_cast<std::size_t>(y)];
        if (slot == kNone) {
          slot = image;
          queue.push_back(y);
        } else if (slot != image) {
          throw InvariantError("Schutzenberger propagation conflict at vertex " + std::to_string(y));
        }
      }
    }
  }
  for (Vertex x = 0; x < static_cast<Vertex>(g.size()); ++x) {
    const Vertex y = xi[static_cast<std::size_t>(x)];
    if (y == kNone) throw InvariantError("Schutzenberger map undefined at vertex " + std::to_string(x));
    if (xi[static_cast<std::size_t>(y)] != x) throw InvariantError("Schutzenberger map is not an involution");
    if (g.weight(y) != d.w0_act(g.weight(x))) throw InvariantError("Schutzenberger map does not act by w0 on weights");
    for (std::size_t i = 0; i < g.rank(); ++i) {
      const Vertex fx = g.f(i, x);
      const Vertex ey = g.e(d.theta(i), y);
      if ((fx == kNone ? kNone : xi[static_cast<std::size_t>(fx)]) != ey) {
        throw InvariantError("Schutzenberger map does not exchange f_i and e_theta(i)");
      }
    }
  }
  return xi;
}

/// sigma_{A,B}, computed from the first expression and checked against the second.
inline CommutorMap commutor_hk(const CrystalGraph& a, const CrystalGraph& b) {
  const auto ab = tensor(a, b);
  const auto ba = tensor(b, a);
  const auto xi_a = schutzenberger(a);
  const auto xi_b = schutzenberger(b);
  const auto xi_ab = schutzenberger(ab.graph);
  const auto xi_ba = schutzenberger(ba.graph);
  CommutorMap out;
  out.left_size = a.size();
  out.right_size = b.size();
  out.method = CommutorMethod::hk;
  out.map.resize(ab.graph.size());
  for (Vertex x = 0; x < static_cast<Vertex>(a.size()); ++x) {
    for (Vertex y = 0; y < static_cast<Vertex>(b.size()); ++y) {
      const Vertex src = ab.vertex(x, y);
      const Vertex first = xi_ba[static_cast<std::size_t>(ba.vertex(xi_b[static_cast<std::size_t>(y)], xi_a[static_cast<std::size_t>(x)]))];
      const Vertex mid = xi_ab[static_cast<std::size_t>(src)];
      const Vertex second = ba.vertex(xi_b[static_cast<std::size_t>(ab.right(mid))], xi_a[static_cast<std::size_t>(ab.left(mid))]);
      if (first != second) throw InvariantError("the two expressions for the commutor disagree");
      out.map[static_cast<std::size_t>(src)] = first;
    }
  }
  if (!is_isomorphism(ab.graph, ba.graph, out.map)) throw InvariantError("commutor is not a crystal isomorphism");
  return out;
}

/// g o f for f: A(x)B -> B(x)A and g: B(x)A -> A(x)B.
inline std::vector<Vertex> compose(const CommutorMap& g, const CommutorMap& f) {
  std::vector<Vertex> out(f.map.size());
  for (std::size_t v = 0; v < f.map.size(); ++v) out[v] = g(f(static_cast<Vertex>(v)));
  return out;
}

inline bool is_identity(const std::vector<Vertex>& map) {
  for (std::size_t v = 0; v < map.size(); ++v) {
    if (map[v] != static_cast<Vertex>(v)) return false;
  }
  return true;
}

struct CactusReport {
  std::size_t checked = 0;
  std::optional<std::string> discrepancy;
  bool passed() const { return !discrepancy; }
};

/// sigma_{A,C(x)B} o (1 (x) sigma_{B,C}) versus sigma_{B(x)A,C} o (sigma_{A,B} (x) 1),
/// both landing in C(x)B(x)A, on every vertex a (x) b (x) c.
inline CactusReport check_cactus(const CrystalGraph& a, const CrystalGraph& b, const CrystalGraph& c) {
  const auto cb = tensor(c, b);
  const auto ba = tensor(b, a);
  const auto sigma_bc = commutor_hk(b, c);
  const auto sigma_ab = commutor_hk(a, b);
  const auto sigma_a_cb = commutor_hk(a, cb.graph);
  const auto sigma_ba_c = commutor_hk(ba.graph, c);
  const std::size_t na = a.size(), nb = b.size(), nc = c.size();
  CactusReport report;
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t y = 0; y < nb; ++y) {
      for (std::size_t z = 0; z < nc; ++z) {
        ++report.checked;
        // Left composite: a (x) (b (x) c) -> a (x) (c (x) b) -> (c (x) b) (x) a.
        const auto cb_v = static_cast<std::size_t>(sigma_bc(static_cast<Vertex>(y * nc + z)));
        const auto l = static_cast<std::size_t>(sigma_a_cb(static_cast<Vertex>(x * cb.graph.size() + cb_v)));
        const std::size_t l_cb = l / na, l_a = l % na;
        const std::size_t l_c = l_cb / nb, l_b = l_cb % nb;
        // Right composite: (a (x) b) (x) c -> (b (x) a) (x) c -> c (x) (b (x) a).
        const auto ba_v = static_cast<std::size_t>(sigma_ab(static_cast<Vertex>(x * nb + y)));
        const auto r = static_cast<std::size_t>(sigma_ba_c(static_cast<Vertex>(ba_v * nc + z)));
        const std::size_t r_c = r / ba.graph.size(), r_ba = r % ba.graph.size();
        const std::size_t r_b = r_ba / na, r_a = r_ba % na;
        if (l_c != r_c || l_b != r_b || l_a != r_a) {
          report.discrepancy = "at (" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + "): left gives (" +
                               std::to_string(l_c) + "," + std::to_string(l_b) + "," + std::to_string(l_a) + "), right gives (" +
                               std::to_string(r_c) + "," + std::to_string(r_b) + "," + std::to_string(r_a) + ")";
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace crystals
