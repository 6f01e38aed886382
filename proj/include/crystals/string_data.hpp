#pragma once

// Downward and upward Kashiwara (string) data with respect to reduced words of w0.

#include "crystals/cartan.hpp"
#include "crystals/crystal_graph.hpp"
#include "crystals/error.hpp"

#include <map>
#include <string>
#include <vector>

namespace crystals {

enum class StringDirection { downward, upward };

struct StringData {
  ReducedWord word;
  std::vector<long> values;
  StringDirection direction = StringDirection::downward;

  friend bool operator==(const StringData&, const StringData&) = default;
};

/// The cascade b -> f_{i_1}^{p_1} b -> ... (or the e-version).
/// steps[k] is the vertex before letter k is applied; end is the final vertex.
struct Cascade {
  std::vector<long> values;
  std::vector<Vertex> steps;
  Vertex end = kNone;
};

inline Cascade downward_cascade(const CrystalGraph& g, Vertex b, const ReducedWord& word) {
  Cascade c;
  c.values.reserve(word.size());
  for (int letter : word.letters) {
    const auto i = static_cast<std::size_t>(letter);
    c.steps.push_back(b);
    const int p = g.phi(i, b);
    c.values.push_back(p);
    b = g.f_power(i, b, p);
  }
  c.end = b;
  return c;
}

inline Cascade upward_cascade(const CrystalGraph& g, Vertex b, const ReducedWord& word) {
  Cascade c;
  c.values.reserve(word.size());
  for (int letter : word.letters) {
    const auto i = static_cast<std::size_t>(letter);
    c.steps.push_back(b);
    const int q = g.eps(i, b);
    c.values.push_back(q);
    b = g.e_power(i, b, q);
  }
  c.end = b;
  return c;
}

inline StringData downward_data(const CrystalGraph& g, Vertex b, const ReducedWord& word) {
  g.datum().require_longest(word);
  return StringData{word, downward_cascade(g, b, word).values, StringDirection::downward};
}

inline StringData upward_data(const CrystalGraph& g, Vertex b, const ReducedWord& word) {
  g.datum().require_longest(word);
  return StringData{word, upward_cascade(g, b, word).values, StringDirection::upward};
}

/// The unique vertex of the component whose downward data is s (exhaustive search).
inline Vertex element_from_downward_data(const CrystalGraph& g, const Component& component, const StringData& s) {
  if (s.direction != StringDirection::downward) throw InputError("element_from_downward_data needs downward data");
  g.datum().require_longest(s.word);
  Vertex found = kNone;
  for (Vertex b : component.vertices) {
    if (downward_cascade(g, b, s.word).values == s.values) {
      if (found != kNone) throw InvariantError("downward data is not injective on this component");
      found = b;
    }
  }
  if (found == kNone) throw InvariantError("no vertex with downward data attained in this component");
  return found;
}

/// Downward data of every vertex of an irreducible crystal for one word,
/// indexed both ways. Used by sweeps that reconstruct many elements.
class DownwardIndex {
 public:
  DownwardIndex(const CrystalGraph& g, const ReducedWord& word) : word_(word) {
    g.datum().require_longest(word);
    data_.reserve(g.size());
    for (Vertex b = 0; b < static_cast<Vertex>(g.size()); ++b) {
      data_.push_back(downward_cascade(g, b, word).values);
      if (!lookup_.emplace(data_.back(), b).second) {
        throw InvariantError("downward data for word " + word.str() + " is not injective");
      }
    }
  }

  const ReducedWord& word() const { return word_; }
  const std::vector<long>& data(Vertex b) const { return data_[static_cast<std::size_t>(b)]; }

  /// kNone if the data is not attained.
  Vertex find(const std::vector<long>& values) const {
    const auto it = lookup_.find(values);
    return it == lookup_.end() ? kNone : it->second;
  }

 private:
  ReducedWord word_;
  std::vector<std::vector<long>> data_;
  std::map<std::vector<long>, Vertex> lookup_;
};

inline std::string values_str(const std::vector<long>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s;
}

}  // namespace crystals
