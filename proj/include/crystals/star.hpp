#pragma once

// Kashiwara's involution * on B_infinity, evaluated on representatives that
// live in some B_mu, and the commutor it defines:
//
//   sigma(b_lambda (x) c) = b_mu (x) *c   for every highest-weight b_lambda (x) c.
//
// B_infinity is never built. An element is a vertex of an explicit carrier
// B_mu; iota maps B_mu into B_{mu+gamma}.
//
// * is computed by two independent routes:
//   formula: downward data of *c in B_lambda for the word theta(i^rev) is
//            q_{m-k+1} = <w_{k-1} alpha_{i_k}^vee, nu> - p_k, nu = lambda + wt(c),
//            where p is the downward data of c for i.
//   bz:      string data of c for all reduced words assemble into a BZ datum M
//            on chamber coweights (M(Lambda_j^vee) = 0, M(w_k Lambda_{i_k}^vee) =
//            M(w_{k-1} Lambda_{i_k}^vee) - p_k). Negation gives N(delta) =
//            M(-delta) + <delta, nu>, and the downward data of *c for any word j
//            is read off as N(w_{k-1} Lambda_{j_k}^vee) - N(w_k Lambda_{j_k}^vee).

#include "crystals/cartan.hpp"
#include "crystals/commutor.hpp"
#include "crystals/error.hpp"
#include "crystals/library.hpp"
#include "crystals/string_data.hpp"
#include "crystals/tensor.hpp"

#include <map>
#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crystals {

struct EmbeddedElement {
  Weight carrier;  // the element is a vertex of B_carrier
  Vertex vertex = kNone;

  friend bool operator==(const EmbeddedElement&, const EmbeddedElement&) = default;
};

/// iota_lambda^{lambda+gamma}(b).
inline Vertex embed(const CrystalLibrary& lib, const Weight& lambda, Vertex b, const Weight& gamma) {
  return (*lib.embedding(lambda, gamma))[static_cast<std::size_t>(b)];
}

inline Weight eps_embedded(const CrystalLibrary& lib, const EmbeddedElement& x) {
  return lib.get(x.carrier)->graph.eps_vec(x.vertex);
}

/// tau(x) = min{lambda : x in iota(B_lambda)}, by brute-force membership over
/// every dominant lambda <= carrier. The member set must be the up-set of its minimum.
inline Weight tau(const CrystalLibrary& lib, const EmbeddedElement& x) {
  const Weight& mu = x.carrier;
  const auto candidates = weight_box(lib.datum().zero_weight(), mu);
  std::vector<Weight> members;
  for (const auto& lambda : candidates) {
    const auto& image = *lib.embedding(lambda, mu - lambda);
    if (std::find(image.begin(), image.end(), x.vertex) != image.end()) members.push_back(lambda);
  }
  std::optional<Weight> least;
  for (const auto& m : members) {
    if (std::all_of(members.begin(), members.end(), [&](const Weight& o) { return coefficientwise_le(m, o); })) least = m;
  }
  if (!least) throw InvariantError("membership set of vertex " + std::to_string(x.vertex) + " in B_(" + mu.str() + ") has no least element");
  for (const auto& lambda : candidates) {
    const bool above = coefficientwise_le(*least, lambda);
    const bool member = std::find(members.begin(), members.end(), lambda) != members.end();
    if (above != member) throw InvariantError("membership set of vertex " + std::to_string(x.vertex) + " is not upward closed");
  }
  return *least;
}

/// Integer function on chamber coweights w . Lambda_i^vee.
struct BZDatum {
  Weight carrier;
  Weight weight;
  std::map<Coweight, long> values;

  long operator()(const Coweight& gamma) const {
    const auto it = values.find(gamma);
    if (it == values.end()) throw InvariantError("BZ datum has no value at coweight " + gamma.str());
    return it->second;
  }
};

/// Assembles M from the downward data of x for every reduced word of w0,
/// failing loudly if two words assign different values to one chamber coweight.
inline BZDatum bz_from_string(const CrystalLibrary& lib, const EmbeddedElement& x) {
  const RootDatum& d = lib.datum();
  const auto carrier = lib.get(x.carrier);
  BZDatum out;
  out.carrier = x.carrier;
  out.weight = carrier->graph.weight(x.vertex);
  for (std::size_t j = 0; j < d.rank(); ++j) out.values[d.fundamental_coweight(j)] = 0;
  for (const auto& word : d.all_reduced_words()) {
    const auto p = downward_cascade(carrier->graph, x.vertex, word).values;
    std::map<Coweight, long> local;
    for (std::size_t j = 0; j < d.rank(); ++j) local[d.fundamental_coweight(j)] = 0;
    for (std::size_t k = 0; k < word.size(); ++k) {
      const auto i = static_cast<std::size_t>(word[k]);
      const Coweight before = d.act(word.prefix(k), d.fundamental_coweight(i));
      const Coweight after = d.act(word.prefix(k + 1), d.fundamental_coweight(i));
      const auto it = local.find(before);
      if (it == local.end()) throw InvariantError("BZ recursion reached an unseeded chamber coweight");
      local[after] = it->second - p[k];
    }
    for (const auto& [gamma, value] : local) {
      const auto [it, inserted] = out.values.emplace(gamma, value);
      if (!inserted && it->second != value) {
        throw InvariantError("BZ datum cross-word inconsistency at coweight " + gamma.str() + " (word " + word.str() +
                             " gives " + std::to_string(value) + ", earlier words gave " + std::to_string(it->second) + ")");
      }
    }
  }
  return out;
}

namespace detail {

inline void require_admissible(const CrystalLibrary& lib, const EmbeddedElement& c, const Weight& lambda) {
  if (!lambda.is_dominant()) throw InputError("star context weight must be dominant, got " + lambda.str());
  if (!coefficientwise_le(eps_embedded(lib, c), lambda)) {
    throw InputError("star needs eps(c) <= lambda; eps(c) = " + eps_embedded(lib, c).str() + ", lambda = " + lambda.str());
  }
}

inline Vertex reconstruct(const CrystalLibrary& lib, const Weight& lambda, const ReducedWord& word, const std::vector<long>& q) {
  for (long v : q) {
    if (v < 0) throw InvariantError("negative downward datum " + values_str(q) + " for *c");
  }
  const Vertex v = lib.downward_index(lambda, word)->find(q);
  if (v == kNone) throw InvariantError("downward data " + values_str(q) + " for word " + word.str() + " not attained in B_(" + lambda.str() + ")");
  return v;
}

}  // namespace detail

/// *c as an element of B_lambda, from the string-data identity for one word.
inline Vertex star_formula(const CrystalLibrary& lib, const EmbeddedElement& c, const Weight& lambda, const ReducedWord& word) {
  const RootDatum& d = lib.datum();
  d.require_longest(word);
  detail::require_admissible(lib, c, lambda);
  const auto carrier = lib.get(c.carrier);
  const auto p = downward_cascade(carrier->graph, c.vertex, word).values;
  const Weight nu = lambda + carrier->graph.weight(c.vertex);
  const std::size_t m = word.size();
  std::vector<long> q(m);
  for (std::size_t k = 0; k < m; ++k) {
    q[m - 1 - k] = d.coroot_pairing(word.prefix(k), static_cast<std::size_t>(word[k]), nu) - p[k];
  }
  return detail::reconstruct(lib, lambda, d.theta_reverse(word), q);
}

/// *c as an element of B_lambda, by negating the BZ datum. Checks that every
/// reduced word yields the same element.
inline Vertex star_bz(const CrystalLibrary& lib, const EmbeddedElement& c, const Weight& lambda) {
  const RootDatum& d = lib.datum();
  detail::require_admissible(lib, c, lambda);
  const BZDatum m = bz_from_string(lib, c);
  const Weight nu = lambda + m.weight;
  auto negated = [&](const Coweight& delta) { return Rational(m(-delta)) + d.pair(delta, nu); };
  Vertex result = kNone;
  for (const auto& word : d.all_reduced_words()) {
    std::vector<long> q(word.size());
    for (std::size_t k = 0; k < word.size(); ++k) {
      const auto j = static_cast<std::size_t>(word[k]);
      q[k] = to_long(negated(d.act(word.prefix(k), d.fundamental_coweight(j))) - negated(d.act(word.prefix(k + 1), d.fundamental_coweight(j))));
    }
    const Vertex v = detail::reconstruct(lib, lambda, word, q);
    if (result != kNone && v != result) throw InvariantError("*c depends on the reduced word (" + word.str() + ")");
    result = v;
  }
  return result;
}

enum class StarRoute { bz, formula };

inline Vertex star(const CrystalLibrary& lib, const EmbeddedElement& c, const Weight& lambda, StarRoute route = StarRoute::bz) {
  if (route == StarRoute::formula) return star_formula(lib, c, lambda, lib.datum().longest_word());
  return star_bz(lib, c, lambda);
}

/// The isomorphism B_lambda (x) B_mu -> B_mu (x) B_lambda sending each
/// b_lambda (x) c to b_mu (x) *c.
inline CommutorMap commutor_star(const CrystalLibrary& lib, const Weight& lambda, const Weight& mu, StarRoute route = StarRoute::bz) {
  const auto bl = lib.get(lambda);
  const auto bm = lib.get(mu);
  const auto source = tensor(bl->graph, bm->graph);
  const auto target = tensor(bm->graph, bl->graph);
  std::vector<std::pair<Vertex, Vertex>> pairing;
  for (Vertex c : hw_pairs(*bl, *bm, &source)) {
    const Vertex s = star(lib, EmbeddedElement{mu, c}, lambda, route);
    if (!coefficientwise_le(bl->graph.eps_vec(s), mu)) {
      throw InvariantError("b_mu (x) *c is not highest weight: eps(*c) = " + bl->graph.eps_vec(s).str() + " exceeds mu = " + mu.str());
    }
    pairing.emplace_back(source.vertex(bl->highest, c), target.vertex(bm->highest, s));
  }
  CommutorMap out;
  out.left_size = bl->size();
  out.right_size = bm->size();
  out.method = CommutorMethod::star;
  out.map = unique_iso(source.graph, target.graph, pairing);
  return out;
}

}  // namespace crystals
