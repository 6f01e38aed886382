#pragma once

// JSON and DOT forms of crystals and commutors. Output is deterministic:
// vertices in canonical order, keys in a fixed order, LF line endings.
//
// Crystal JSON (format_version 1):
//   {
//     "format_version": 1,
//     "type": "A2",
//     "highest_weight": [1, 1],
//     "word": [1, 2, 1],                  // word used for canonical ids, 1-based
//     "vertices": [
//       {"id": "1,2,1", "weight": [1, 1], "f": ["0,2,1", null]},   // f[i] = id of f_{i+1}(b) or null
//       ...
//     ]
//   }

#include "crystals/cartan.hpp"
#include "crystals/commutor.hpp"
#include "crystals/error.hpp"
#include "crystals/path_crystal.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace crystals {

inline constexpr int kFormatVersion = 1;

using Json = nlohmann::ordered_json;

namespace detail {

inline Json to_json_array(const std::vector<long>& v) {
  Json a = Json::array();
  for (long x : v) a.push_back(x);
  return a;
}

inline std::vector<long> from_json_array(const Json& a) {
  if (!a.is_array()) throw InputError("expected a JSON array");
  std::vector<long> v;
  for (const auto& x : a) {
    if (!x.is_number_integer()) throw InputError("expected integers in JSON array");
    v.push_back(x.get<long>());
  }
  return v;
}

}  // namespace detail

inline Json crystal_json(const HighestWeightCrystal& b) {
  const RootDatum& d = b.datum();
  Json j;
  j["format_version"] = kFormatVersion;
  j["type"] = d.type().name();
  j["highest_weight"] = detail::to_json_array(b.highest_weight.coefficients());
  std::vector<long> word;
  for (int letter : d.longest_word().letters) word.push_back(letter + 1);
  j["word"] = detail::to_json_array(word);
  Json vertices = Json::array();
  for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) {
    Json entry;
    entry["id"] = b.id(v);
    entry["weight"] = detail::to_json_array(b.graph.weight(v).coefficients());
    Json f = Json::array();
    for (std::size_t i = 0; i < d.rank(); ++i) {
      const Vertex t = b.graph.f(i, v);
      f.push_back(t == kNone ? Json(nullptr) : Json(b.id(t)));
    }
    entry["f"] = std::move(f);
    vertices.push_back(std::move(entry));
  }
  j["vertices"] = std::move(vertices);
  return j;
}

inline std::string crystal_to_json(const HighestWeightCrystal& b) { return crystal_json(b).dump(1) + "\n"; }

/// Parses the crystal JSON and checks that ids and order are canonical.
inline HighestWeightCrystal crystal_from_json(std::shared_ptr<const RootDatum> datum, std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed crystal JSON: ") + e.what());
  }
  try {
    if (j.at("format_version").get<int>() != kFormatVersion) throw InputError("unsupported crystal format version");
    if (CartanType::parse(j.at("type").get<std::string>()) != datum->type()) throw InputError("crystal JSON is for a different Cartan type");
    const Weight lambda(detail::from_json_array(j.at("highest_weight")));
    if (lambda.size() != datum->rank()) throw InputError("highest weight has the wrong rank");
    const auto& vs = j.at("vertices");
    std::map<std::string, Vertex> ids;
    for (const auto& v : vs) {
      if (!ids.emplace(v.at("id").get<std::string>(), static_cast<Vertex>(ids.size())).second) throw InputError("duplicate vertex id in crystal JSON");
    }
    std::vector<Weight> weights;
    std::vector<std::vector<Vertex>> f(datum->rank(), std::vector<Vertex>(vs.size(), kNone));
    for (std::size_t b = 0; b < vs.size(); ++b) {
      weights.emplace_back(detail::from_json_array(vs[b].at("weight")));
      const auto& targets = vs[b].at("f");
      if (targets.size() != datum->rank()) throw InputError("vertex f-list has the wrong length");
      for (std::size_t i = 0; i < datum->rank(); ++i) {
        if (targets[i].is_null()) continue;
        const auto it = ids.find(targets[i].get<std::string>());
        if (it == ids.end()) throw InputError("f-target refers to an unknown vertex id");
        f[i][b] = it->second;
      }
    }
    CrystalGraph g(datum, std::move(weights), std::move(f));
    auto out = canonicalize(lambda, g);
    if (!(out.graph == g)) throw InputError("crystal JSON vertices are not in canonical order");
    for (std::size_t b = 0; b < vs.size(); ++b) {
      if (out.id(static_cast<Vertex>(b)) != vs[b].at("id").get<std::string>()) throw InputError("crystal JSON ids are not canonical");
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad crystal JSON: ") + e.what());
  }
}

inline std::string crystal_to_dot(const HighestWeightCrystal& b) {
  const RootDatum& d = b.datum();
  std::string s = "digraph crystal {\n";
  s += "  label=\"" + d.type().name() + " B(" + b.highest_weight.str() + ")\";\n";
  for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) {
    s += "  \"" + b.id(v) + "\" [label=\"" + b.id(v) + "\\nwt " + b.graph.weight(v).str() + "\"];\n";
  }
  for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) {
    for (std::size_t i = 0; i < d.rank(); ++i) {
      const Vertex t = b.graph.f(i, v);
      if (t != kNone) s += "  \"" + b.id(v) + "\" -> \"" + b.id(t) + "\" [label=\"" + std::to_string(i + 1) + "\"];\n";
    }
  }
  s += "}\n";
  return s;
}

/// Tensor vertex a (x) b as the ordered pair of canonical ids.
inline Json tensor_vertex_json(const HighestWeightCrystal& left, Vertex a, const HighestWeightCrystal& right, Vertex b) {
  return Json::array({left.id(a), right.id(b)});
}

/// {"type", "lambda", "mu", "method", "pairs": [{"from": [id_a, id_b], "to": [id_b', id_a']}, ...]}
inline Json commutor_json(const HighestWeightCrystal& lambda, const HighestWeightCrystal& mu, const CommutorMap& sigma) {
  Json j;
  j["type"] = lambda.datum().type().name();
  j["lambda"] = detail::to_json_array(lambda.highest_weight.coefficients());
  j["mu"] = detail::to_json_array(mu.highest_weight.coefficients());
  j["method"] = to_string(sigma.method);
  Json pairs = Json::array();
  for (Vertex a = 0; a < static_cast<Vertex>(lambda.size()); ++a) {
    for (Vertex b = 0; b < static_cast<Vertex>(mu.size()); ++b) {
      const auto image = static_cast<std::size_t>(sigma(static_cast<Vertex>(static_cast<std::size_t>(a) * mu.size() + static_cast<std::size_t>(b))));
      Json entry;
      entry["from"] = tensor_vertex_json(lambda, a, mu, b);
      entry["to"] = tensor_vertex_json(mu, static_cast<Vertex>(image / lambda.size()), lambda, static_cast<Vertex>(image % lambda.size()));
      pairs.push_back(std::move(entry));
    }
  }
  j["pairs"] = std::move(pairs);
  return j;
}

/// Entries where two commutors of the same pair disagree.
inline Json commutor_diff_json(const HighestWeightCrystal& lambda, const HighestWeightCrystal& mu, const CommutorMap& x, const CommutorMap& y) {
  Json diff = Json::array();
  for (std::size_t v = 0; v < x.map.size(); ++v) {
    if (x.map[v] == y.map[v]) continue;
    const auto a = static_cast<Vertex>(v / mu.size());
    const auto b = static_cast<Vertex>(v % mu.size());
    auto side = [&](const CommutorMap& s) {
      const auto image = static_cast<std::size_t>(s.map[v]);
      return tensor_vertex_json(mu, static_cast<Vertex>(image / lambda.size()), lambda, static_cast<Vertex>(image % lambda.size()));
    };
    Json entry;
    entry["from"] = tensor_vertex_json(lambda, a, mu, b);
    entry[to_string(x.method)] = side(x);
    entry[to_string(y.method)] = side(y);
    diff.push_back(std::move(entry));
  }
  return diff;
}

}  // namespace crystals
