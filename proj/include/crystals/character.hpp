#pragma once

// Character-theoretic oracles that never look at a crystal graph:
// Freudenthal's multiplicity formula and the Brauer-Klimyk rule.

#include "crystals/cartan.hpp"
#include "crystals/error.hpp"

#include <map>
#include <utility>
#include <vector>

namespace crystals {

/// Dominant W-conjugate of w.
inline Weight dominant_conjugate(const RootDatum& d, Weight w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < d.rank(); ++i) {
      if (w[i] < 0) {
        w = d.reflect(i, w);
        changed = true;
      }
    }
  }
  return w;
}

namespace detail {

// (x, alpha) for x in the weight basis and alpha in simple-root coordinates,
// normalized so that (Lambda_i, alpha_j) = d_j delta_ij.
inline long form(const RootDatum& d, const Weight& x, const std::vector<long>& alpha) {
  long s = 0;
  for (std::size_t j = 0; j < d.rank(); ++j) s += alpha[j] * d.symmetrizer()[j] * x[j];
  return s;
}

// Simple-root coordinates of lambda - beta if it lies in Q_+, else empty.
inline std::vector<long> depth_vector(const RootDatum& d, const Weight& lambda, const Weight& beta) {
  const auto c = d.to_root_coordinates(lambda - beta);
  std::vector<long> out;
  for (const auto& x : c) {
    if (!is_integral(x) || x < 0) return {};
    out.push_back(to_long(x));
  }
  return out;
}

}  // namespace detail

/// Weight multiplicities of V(lambda) by Freudenthal's formula.
inline std::map<Weight, long> weight_multiplicities(const RootDatum& d, const Weight& lambda) {
  if (!lambda.is_dominant()) throw InputError("weight_multiplicities needs a dominant weight");
  const Weight two_rho = 2 * d.rho();
  std::map<Weight, long> mult;
  std::map<long, std::vector<Weight>> layers;  // by depth below lambda
  layers[0].push_back(lambda);
  std::set<Weight> seen{lambda};
  for (long depth = 0; layers.count(depth); ++depth) {
    for (const Weight& beta : layers[depth]) {
      long m = 1;
      if (depth > 0) {
        const auto k = detail::depth_vector(d, lambda, beta);
        long denominator = 0;
        for (std::size_t j = 0; j < d.rank(); ++j) denominator += k[j] * d.symmetrizer()[j] * (lambda[j] + beta[j] + two_rho[j]);
        long numerator = 0;
        for (const auto& alpha : d.positive_roots()) {
          const Weight a = d.from_root_coordinates(alpha);
          for (Weight up = beta + a;; up += a) {
            const auto it = mult.find(up);
            if (it == mult.end()) break;
            numerator += 2 * detail::form(d, up, alpha) * it->second;
          }
        }
        if (denominator <= 0 || numerator % denominator != 0) throw InvariantError("Freudenthal recursion failed");
        m = numerator / denominator;
      }
      mult[beta] = m;
      for (std::size_t i = 0; i < d.rank(); ++i) {
        const Weight next = beta - d.simple_root(i);
        if (seen.count(next)) continue;
        if (detail::depth_vector(d, lambda, dominant_conjugate(d, next)).empty()) continue;
        seen.insert(next);
        layers[depth + 1].push_back(next);
      }
    }
  }
  return mult;
}

/// Multiplicities of irreducible summands of V(lambda) (x) V(mu) by Brauer-Klimyk.
inline std::map<Weight, long> tensor_decomposition(const RootDatum& d, const Weight& lambda, const Weight& mu) {
  std::map<Weight, long> out;
  const Weight rho = d.rho();
  for (const auto& [beta, m] : weight_multiplicities(d, mu)) {
    Weight g = lambda + beta + rho;
    long sign = 1;
    bool singular = false;
    for (bool changed = true; changed && !singular;) {
      changed = false;
      for (std::size_t i = 0; i < d.rank(); ++i) {
        if (g[i] == 0) {
          singular = true;
          break;
        }
        if (g[i] < 0) {
          g = d.reflect(i, g);
          sign = -sign;
          changed = true;
        }
      }
    }
    if (singular) continue;
    out[g - rho] += sign * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0) throw InvariantError("negative Brauer-Klimyk multiplicity");
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace crystals
