#pragma once

// Tensor products of crystals.
//
//   e_i(a (x) b) = e_i(a) (x) b   if phi_i(a) >= eps_i(b),  a (x) e_i(b) otherwise
//   f_i(a (x) b) = f_i(a) (x) b   if phi_i(a) >  eps_i(b),  a (x) f_i(b) otherwise
//
// With this rule b_lambda (x) c is highest weight in B_lambda (x) B_mu iff eps(c) <= lambda.

#include "crystals/crystal_graph.hpp"
#include "crystals/error.hpp"
#include "crystals/ls_path.hpp"
#include "crystals/path_crystal.hpp"

#include <map>
#include <utility>
#include <vector>

namespace crystals {

struct TensorProduct {
  CrystalGraph graph;
  std::size_t left_size = 0;
  std::size_t right_size = 0;

  Vertex vertex(Vertex a, Vertex b) const {
    return static_cast<Vertex>(static_cast<std::size_t>(a) * right_size + static_cast<std::size_t>(b));
  }
  Vertex left(Vertex v) const { return static_cast<Vertex>(static_cast<std::size_t>(v) / right_size); }
  Vertex right(Vertex v) const { return static_cast<Vertex>(static_cast<std::size_t>(v) % right_size); }
};

inline TensorProduct tensor(const CrystalGraph& a, const CrystalGraph& b) {
  if (a.datum().type() != b.datum().type()) throw InvariantError("tensor product of crystals of different types");
  TensorProduct t;
  t.left_size = a.size();
  t.right_size = b.size();
  const std::size_t n = a.size() * b.size();
  std::vector<Weight> weights;
  weights.reserve(n);
  std::vector<std::vector<Vertex>> f(a.rank(), std::vector<Vertex>(n, kNone));
  for (Vertex x = 0; x < static_cast<Vertex>(a.size()); ++x) {
    for (Vertex y = 0; y < static_cast<Vertex>(b.size()); ++y) {
      const Vertex v = t.vertex(x, y);
      weights.push_back(a.weight(x) + b.weight(y));
      for (std::size_t i = 0; i < a.rank(); ++i) {
        if (a.phi(i, x) > b.eps(i, y)) {
          const Vertex fx = a.f(i, x);
          f[i][static_cast<std::size_t>(v)] = fx == kNone ? kNone : t.vertex(fx, y);
        } else {
          const Vertex fy = b.f(i, y);
          f[i][static_cast<std::size_t>(v)] = fy == kNone ? kNone : t.vertex(x, fy);
        }
      }
    }
  }
  t.graph = CrystalGraph(a.datum_ptr(), std::move(weights), std::move(f));
  return t;
}

/// Vertices c of B_mu with b_lambda (x) c highest weight, by the criterion
/// eps(c) <= lambda. Cross-checked against the highest-weight vertices of the
/// materialized tensor product when `product` is given.
inline std::vector<Vertex> hw_pairs(const HighestWeightCrystal& lambda, const HighestWeightCrystal& mu,
                                    const TensorProduct* product = nullptr) {
  std::vector<Vertex> out;
  for (Vertex c = 0; c < static_cast<Vertex>(mu.size()); ++c) {
    if (coefficientwise_le(mu.graph.eps_vec(c), lambda.highest_weight)) out.push_back(c);
  }
  if (product != nullptr) {
    std::vector<Vertex> expected;
    for (Vertex c : out) expected.push_back(product->vertex(lambda.highest, c));
    if (highest_weight_vertices(product->graph) != expected) {
      throw InvariantError("highest-weight criterion eps(c) <= lambda disagrees with e_i-kill test for B_(" +
                           lambda.highest_weight.str() + ") (x) B_(" + mu.highest_weight.str() + ")");
    }
  }
  return out;
}

/// The concatenation model: vertex a (x) b is the path a * b (a first).
/// Same vertex numbering as tensor(a.graph, b.graph).
inline CrystalGraph concatenation_crystal(const HighestWeightCrystal& a, const HighestWeightCrystal& b) {
  if (a.paths.empty() || b.paths.empty()) throw InputError("concatenation model needs crystals generated from paths");
  const RootDatum& d = a.datum();
  std::map<LSPath, Vertex> index;
  std::vector<Weight> weights;
  for (Vertex x = 0; x < static_cast<Vertex>(a.size()); ++x) {
    for (Vertex y = 0; y < static_cast<Vertex>(b.size()); ++y) {
      auto p = a.paths[static_cast<std::size_t>(x)].concatenate(b.paths[static_cast<std::size_t>(y)]);
      weights.push_back(p.integral_endpoint());
      index.emplace(std::move(p), static_cast<Vertex>(weights.size() - 1));
    }
  }
  if (index.size() != weights.size()) throw InvariantError("concatenation is not injective on pairs");
  std::vector<std::vector<Vertex>> f(d.rank(), std::vector<Vertex>(weights.size(), kNone));
  for (const auto& [path, v] : index) {
    for (std::size_t i = 0; i < d.rank(); ++i) {
      auto next = root_f(d, i, path);
      if (!next) continue;
      const auto it = index.find(*next);
      if (it == index.end()) throw InvariantError("root operator leaves the set of concatenated paths");
      f[i][static_cast<std::size_t>(v)] = it->second;
    }
  }
  return CrystalGraph(a.graph.datum_ptr(), std::move(weights), std::move(f));
}

}  // namespace crystals
