#pragma once

// Finite crystal graphs with opaque integer vertex ids. Models (LS paths,
// tensor pairs, string data) keep their own side tables keyed by vertex id.

#include "crystals/cartan.hpp"
#include "crystals/error.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crystals {

using Vertex = std::int32_t;
inline constexpr Vertex kNone = -1;

class CrystalGraph {
 public:
  CrystalGraph() = default;

  /// f[i][b] is the target of f_i at b, or kNone. The e maps are derived.
  CrystalGraph(std::shared_ptr<const RootDatum> datum, std::vector<Weight> weights, std::vector<std::vector<Vertex>> f)
      : datum_(std::move(datum)), wt_(std::move(weights)), f_(std::move(f)) {
    const std::size_t n = wt_.size();
    const std::size_t r = datum_->rank();
    if (f_.size() != r) throw InvariantError("crystal graph needs one f-table per node");
    e_.assign(r, std::vector<Vertex>(n, kNone));
    for (std::size_t i = 0; i < r; ++i) {
      if (f_[i].size() != n) throw InvariantError("f-table size mismatch");
      const Weight alpha = datum_->simple_root(i);
      for (std::size_t b = 0; b < n; ++b) {
        const Vertex t = f_[i][b];
        if (t == kNone) continue;
        if (t < 0 || static_cast<std::size_t>(t) >= n) throw InvariantError("f-target out of range");
        if (e_[i][t] != kNone) throw InvariantError("f_" + std::to_string(i + 1) + " is not injective");
        if (wt_[t] != wt_[b] - alpha) throw InvariantError("f_" + std::to_string(i + 1) + " does not lower the weight by alpha");
        e_[i][t] = static_cast<Vertex>(b);
      }
    }
    build_string_tables();
  }

  std::size_t size() const { return wt_.size(); }
  std::size_t rank() const { return datum_->rank(); }
  const RootDatum& datum() const { return *datum_; }
  const std::shared_ptr<const RootDatum>& datum_ptr() const { return datum_; }

  Vertex f(std::size_t i, Vertex b) const { return f_[i][static_cast<std::size_t>(b)]; }
  Vertex e(std::size_t i, Vertex b) const { return e_[i][static_cast<std::size_t>(b)]; }
  const Weight& weight(Vertex b) const { return wt_[static_cast<std::size_t>(b)]; }
  const std::vector<Weight>& weights() const { return wt_; }
  const std::vector<std::vector<Vertex>>& f_table() const { return f_; }

  int eps(std::size_t i, Vertex b) const { return eps_[i][static_cast<std::size_t>(b)]; }
  int phi(std::size_t i, Vertex b) const { return phi_[i][static_cast<std::size_t>(b)]; }

  Weight eps_vec(Vertex b) const {
    Weight w(rank());
    for (std::size_t i = 0; i < rank(); ++i) w[i] = eps(i, b);
    return w;
  }
  Weight phi_vec(Vertex b) const {
    Weight w(rank());
    for (std::size_t i = 0; i < rank(); ++i) w[i] = phi(i, b);
    return w;
  }

  Vertex f_power(std::size_t i, Vertex b, int n) const {
    for (int k = 0; k < n && b != kNone; ++k) b = f(i, b);
    return b;
  }
  Vertex e_power(std::size_t i, Vertex b, int n) const {
    for (int k = 0; k < n && b != kNone; ++k) b = e(i, b);
    return b;
  }

  bool is_highest(Vertex b) const {
    for (std::size_t i = 0; i < rank(); ++i) {
      if (e(i, b) != kNone) return false;
    }
    return true;
  }
  bool is_lowest(Vertex b) const {
    for (std::size_t i = 0; i < rank(); ++i) {
      if (f(i, b) != kNone) return false;
    }
    return true;
  }

  friend bool operator==(const CrystalGraph& a, const CrystalGraph& b) {
    return a.datum_->type() == b.datum_->type() && a.wt_ == b.wt_ && a.f_ == b.f_;
  }

 private:
  void build_string_tables() {
    const std::size_t n = size();
    eps_.assign(rank(), std::vector<int>(n, -1));
    phi_.assign(rank(), std::vector<int>(n, -1));
    for (std::size_t i = 0; i < rank(); ++i) {
      for (std::size_t head = 0; head < n; ++head) {
        if (e_[i][head] != kNone) continue;
        std::vector<Vertex> chain;
        for (Vertex b = static_cast<Vertex>(head); b != kNone; b = f_[i][static_cast<std::size_t>(b)]) chain.push_back(b);
        const int len = static_cast<int>(chain.size());
        for (int k = 0; k < len; ++k) {
          eps_[i][static_cast<std::size_t>(chain[k])] = k;
          phi_[i][static_cast<std::size_t>(chain[k])] = len - 1 - k;
        }
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (eps_[i][b] < 0) throw InvariantError("infinite " + std::to_string(i + 1) + "-string (cycle)");
      }
    }
  }

  std::shared_ptr<const RootDatum> datum_;
  std::vector<Weight> wt_;
  std::vector<std::vector<Vertex>> f_;
  std::vector<std::vector<Vertex>> e_;
  std::vector<std::vector<int>> eps_;
  std::vector<std::vector<int>> phi_;
};

/// First failure of phi_i(b) - eps_i(b) = <alpha_i^vee, wt(b)>, if any.
inline std::optional<std::string> seminormality_violation(const CrystalGraph& g) {
  for (Vertex b = 0; b < static_cast<Vertex>(g.size()); ++b) {
    for (std::size_t i = 0; i < g.rank(); ++i) {
      if (g.phi(i, b) - g.eps(i, b) != g.weight(b)[i]) {
        return "vertex " + std::to_string(b) + ", node " + std::to_string(i + 1) + ": phi - eps = " +
               std::to_string(g.phi(i, b) - g.eps(i, b)) + " but weight is " + g.weight(b).str();
      }
    }
  }
  return std::nullopt;
}

inline std::vector<Vertex> highest_weight_vertices(const CrystalGraph& g) {
  std::vector<Vertex> out;
  for (Vertex b = 0; b < static_cast<Vertex>(g.size()); ++b) {
    if (g.is_highest(b)) out.push_back(b);
  }
  return out;
}

struct Component {
  Vertex highest = kNone;
  Vertex lowest = kNone;
  Weight highest_weight;
  std::vector<Vertex> vertices;  // sorted
};

struct HWDecomposition {
  std::vector<Component> components;  // ordered by highest vertex id
  std::vector<std::size_t> component_of;

  const Component& containing(Vertex b) const { return components[component_of[static_cast<std::size_t>(b)]]; }
};

/// Weakly connected components, each with its unique highest and lowest vertex.
inline HWDecomposition components(const CrystalGraph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, unset);
  std::vector<std::vector<Vertex>> members;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] != unset) continue;
    const std::size_t id = members.size();
    members.emplace_back();
    std::vector<Vertex> stack{static_cast<Vertex>(start)};
    comp[start] = id;
    while (!stack.empty()) {
      const Vertex b = stack.back();
      stack.pop_back();
      members[id].push_back(b);
      for (std::size_t i = 0; i < g.rank(); ++i) {
        for (Vertex nb : {g.f(i, b), g.e(i, b)}) {
          if (nb != kNone && comp[static_cast<std::size_t>(nb)] == unset) {
            comp[static_cast<std::size_t>(nb)] = id;
            stack.push_back(nb);
          }
        }
      }
    }
  }
  std::vector<Component> raw;
  for (auto& m : members) {
    std::sort(m.begin(), m.end());
    Component c;
    int highs = 0;
    int lows = 0;
    for (Vertex b : m) {
      if (g.is_highest(b)) {
        c.highest = b;
        ++highs;
      }
      if (g.is_lowest(b)) {
        c.lowest = b;
        ++lows;
      }
    }
    if (highs != 1 || lows != 1) {
      throw InvariantError("component containing vertex " + std::to_string(m.front()) + " has " + std::to_string(highs) +
                           " highest and " + std::to_string(lows) + " lowest vertices");
    }
    c.highest_weight = g.weight(c.highest);
    c.vertices = std::move(m);
    raw.push_back(std::move(c));
  }
  std::sort(raw.begin(), raw.end(), [](const Component& a, const Component& b) { return a.highest < b.highest; });
  HWDecomposition out;
  out.component_of.assign(n, 0);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    for (Vertex b : raw[k].vertices) out.component_of[static_cast<std::size_t>(b)] = k;
  }
  out.components = std::move(raw);
  return out;
}

/// Extends a pairing of highest-weight vertices to the unique edge- and
/// weight-preserving map on their components, by parallel traversal.
/// Vertices outside the paired components map to kNone.
inline std::vector<Vertex> extend_isomorphism(const CrystalGraph& a, const CrystalGraph& b,
                                              const std::vector<std::pair<Vertex, Vertex>>& pairing) {
  if (a.datum().type() != b.datum().type()) throw InvariantError("isomorphism between crystals of different types");
  std::vector<Vertex> map(a.size(), kNone);
  std::vector<Vertex> inverse(b.size(), kNone);
  std::deque<std::pair<Vertex, Vertex>> queue;
  auto assign = [&](Vertex x, Vertex y) {
    if (a.weight(x) != b.weight(y)) {
      throw InvariantError("weight mismatch: " + a.weight(x).str() + " vs " + b.weight(y).str());
    }
    Vertex& fwd = map[static_cast<std::size_t>(x)];
    Vertex& back = inverse[static_cast<std::size_t>(y)];
    if (fwd == kNone && back == kNone) {
      fwd = y;
      back = x;
      queue.emplace_back(x, y);
    } else if (fwd != y || back != x) {
      throw InvariantError("structural mismatch while extending isomorphism at vertex " + std::to_string(x));
    }
  };
  for (const auto& [x, y] : pairing) {
    if (!a.is_highest(x) || !b.is_highest(y)) throw InvariantError("pairing must match highest-weight vertices");
    assign(x, y);
  }
  while (!queue.empty()) {
    const auto [x, y] = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < a.rank(); ++i) {
      const Vertex fx = a.f(i, x), fy = b.f(i, y);
      const Vertex ex = a.e(i, x), ey = b.e(i, y);
      if ((fx == kNone) != (fy == kNone) || (ex == kNone) != (ey == kNone)) {
        throw InvariantError("structural mismatch: node " + std::to_string(i + 1) + " edges differ at vertex " + std::to_string(x));
      }
      if (fx != kNone) assign(fx, fy);
      if (ex != kNone) assign(ex, ey);
    }
  }
  return map;
}

/// The unique crystal isomorphism a -> b determined by the highest-weight pairing.
inline std::vector<Vertex> unique_iso(const CrystalGraph& a, const CrystalGraph& b,
                                      const std::vector<std::pair<Vertex, Vertex>>& pairing) {
  if (a.size() != b.size()) throw InvariantError("crystals have different sizes");
  auto map = extend_isomorphism(a, b, pairing);
  if (std::find(map.begin(), map.end(), kNone) != map.end()) {
    throw InvariantError("pairing does not cover every component");
  }
  return map;
}

/// Checks that map is a bijection commuting with every e_i, f_i and preserving weights.
inline bool is_isomorphism(const CrystalGraph& a, const CrystalGraph& b, const std::vector<Vertex>& map) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (Vertex x = 0; x < static_cast<Vertex>(a.size()); ++x) {
    const Vertex y = map[static_cast<std::size_t>(x)];
    if (y < 0 || static_cast<std::size_t>(y) >= b.size() || hit[static_cast<std::size_t>(y)]) return false;
    hit[static_cast<std::size_t>(y)] = true;
    if (a.weight(x) != b.weight(y)) return false;
    for (std::size_t i = 0; i < a.rank(); ++i) {
      const Vertex fx = a.f(i, x);
      const Vertex fy = b.f(i, y);
      if (fx == kNone ? fy != kNone : fy != map[static_cast<std::size_t>(fx)]) return false;
      const Vertex ex = a.e(i, x);
      const Vertex ey = b.e(i, y);
      if (ex == kNone ? ey != kNone : ey != map[static_cast<std::size_t>(ex)]) return false;
    }
  }
  return true;
}

}  // namespace crystals
