#pragma once

// B_lambda generated from the straight LS path, with canonical vertex ids.
//
// Canonical labeling: every vertex is keyed by its downward data for the
// lexicographically least reduced word of w0. Vertices are numbered by
// (depth below the highest weight, key), so vertex 0 is b_lambda and the last
// vertex is the lowest one.

#include "crystals/cartan.hpp"
#include "crystals/crystal_graph.hpp"
#include "crystals/error.hpp"
#include "crystals/ls_path.hpp"
#include "crystals/string_data.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace crystals {

inline constexpr std::size_t kDefaultVertexBudget = 200000;

struct HighestWeightCrystal {
  Weight highest_weight;
  CrystalGraph graph;
  std::vector<std::vector<long>> keys;  // canonical downward data per vertex
  std::vector<LSPath> paths;            // empty when the crystal was loaded from disk
  Vertex highest = 0;
  Vertex lowest = 0;

  const RootDatum& datum() const { return graph.datum(); }
  std::size_t size() const { return graph.size(); }
  std::string id(Vertex b) const { return values_str(keys[static_cast<std::size_t>(b)]); }

  Vertex find(const std::vector<long>& key) const {
    const auto it = std::lower_bound(order_.begin(), order_.end(), key,
                                     [&](Vertex v, const std::vector<long>& k) { return keys[static_cast<std::size_t>(v)] < k; });
    if (it == order_.end() || keys[static_cast<std::size_t>(*it)] != key) return kNone;
    return *it;
  }
  Vertex find(const std::string& id) const {
    std::vector<long> key;
    try {
      if (!id.empty()) key = Weight::parse(id, static_cast<std::size_t>(std::count(id.begin(), id.end(), ',') + 1)).coefficients();
    } catch (const InputError&) {
      throw InputError("bad vertex id '" + id + "'");
    }
    const Vertex b = find(key);
    if (b == kNone) throw InputError("no vertex with id '" + id + "' in B_(" + highest_weight.str() + ")");
    return b;
  }

  // Call after keys are final.
  void index() {
    order_.resize(keys.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(),
              [&](Vertex a, Vertex b) { return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)]; });
  }

 private:
  std::vector<Vertex> order_;
};

/// Renumbers an irreducible crystal canonically. paths may be empty.
inline HighestWeightCrystal canonicalize(const Weight& lambda, const CrystalGraph& g, std::vector<LSPath> paths = {}) {
  const RootDatum& d = g.datum();
  const auto n = static_cast<Vertex>(g.size());
  std::vector<std::vector<long>> raw_keys(g.size());
  std::vector<long> depth(g.size());
  for (Vertex b = 0; b < n; ++b) {
    raw_keys[static_cast<std::size_t>(b)] = downward_cascade(g, b, d.longest_word()).values;
    const auto c = d.to_root_coordinates(lambda - g.weight(b));
    Rational s = 0;
    for (const auto& x : c) s += x;
    depth[static_cast<std::size_t>(b)] = to_long(s);
  }
  std::vector<Vertex> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    return std::tie(depth[ua], raw_keys[ua]) < std::tie(depth[ub], raw_keys[ub]);
  });
  std::vector<Vertex> rename(g.size());
  for (std::size_t k = 0; k < order.size(); ++k) rename[static_cast<std::size_t>(order[k])] = static_cast<Vertex>(k);

  std::vector<Weight> weights(g.size());
  std::vector<std::vector<Vertex>> f(g.rank(), std::vector<Vertex>(g.size(), kNone));
  HighestWeightCrystal out;
  out.keys.resize(g.size());
  for (Vertex b = 0; b < n; ++b) {
    const auto nb = static_cast<std::size_t>(rename[static_cast<std::size_t>(b)]);
    weights[nb] = g.weight(b);
    out.keys[nb] = raw_keys[static_cast<std::size_t>(b)];
    for (std::size_t i = 0; i < g.rank(); ++i) {
      const Vertex t = g.f(i, b);
      f[i][nb] = t == kNone ? kNone : rename[static_cast<std::size_t>(t)];
    }
  }
  if (!paths.empty()) {
    out.paths.resize(paths.size());
    for (Vertex b = 0; b < n; ++b) out.paths[static_cast<std::size_t>(rename[static_cast<std::size_t>(b)])] = std::move(paths[static_cast<std::size_t>(b)]);
  }
  out.highest_weight = lambda;
  out.graph = CrystalGraph(g.datum_ptr(), std::move(weights), std::move(f));
  const auto hw = highest_weight_vertices(out.graph);
  if (hw.size() != 1 || hw.front() != 0 || out.graph.weight(0) != lambda) {
    throw InvariantError("crystal of highest weight " + lambda.str() + " is not irreducible");
  }
  out.highest = 0;
  out.lowest = n - 1;
  if (!out.graph.is_lowest(out.lowest)) throw InvariantError("last canonical vertex is not the lowest one");
  out.index();
  return out;
}

/// BFS closure of the straight path under the root operators f_i.
inline HighestWeightCrystal generate_crystal(std::shared_ptr<const RootDatum> datum, const Weight& lambda,
                                             std::size_t budget = kDefaultVertexBudget) {
  if (lambda.size() != datum->rank()) throw InputError("weight " + lambda.str() + " has the wrong rank");
  if (!lambda.is_dominant()) throw InputError("B_lambda needs a dominant weight, got " + lambda.str());
  if (datum->weyl_dim(lambda) > Integer(budget)) {
    throw InputError("B_(" + lambda.str() + ") has " + datum->weyl_dim(lambda).str() + " vertices, over the budget of " + std::to_string(budget));
  }
  std::map<LSPath, Vertex> ids;
  std::vector<LSPath> paths;
  std::vector<std::vector<Vertex>> f(datum->rank());
  std::deque<Vertex> queue;
  auto intern = [&](LSPath p) {
    const auto [it, inserted] = ids.emplace(std::move(p), static_cast<Vertex>(paths.size()));
    if (inserted) {
      if (paths.size() >= budget) throw InvariantError("crystal generation exceeded the vertex budget");
      paths.push_back(it->first);
      for (auto& row : f) row.push_back(kNone);
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern(LSPath::straight(lambda));
  while (!queue.empty()) {
    const Vertex b = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < datum->rank(); ++i) {
      auto next = root_f(*datum, i, paths[static_cast<std::size_t>(b)]);
      if (next) {
        const Vertex t = intern(std::move(*next));
        f[i][static_cast<std::size_t>(b)] = t;
      }
    }
  }
  std::vector<Weight> weights;
  weights.reserve(paths.size());
  for (const auto& p : paths) weights.push_back(p.integral_endpoint());
  CrystalGraph g(datum, std::move(weights), std::move(f));
  return canonicalize(lambda, g, std::move(paths));
}

}  // namespace crystals
