#pragma once

// Exhaustive verification suites over weight grids.
//
// A suite expands into independent cases (one per weight, pair or triple);
// cases run on a small thread pool and their results are merged in case
// order, so a report depends only on the grid. Each failing report carries
// the first counterexample in case order.

#include "crystals/cache.hpp"
#include "crystals/cartan.hpp"
#include "crystals/character.hpp"
#include "crystals/config.hpp"
#include "crystals/commutor.hpp"
#include "crystals/library.hpp"
#include "crystals/serialize.hpp"
#include "crystals/star.hpp"
#include "crystals/string_data.hpp"
#include "crystals/tensor.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace crystals {

struct VerificationReport {
  std::string suite;
  std::string grid;
  std::size_t cases = 0;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::optional<Json> counterexample;
  double seconds = 0;

  bool ok() const { return !counterexample && checked == passed; }

  Json to_json() const {
    Json j;
    j["suite"] = suite;
    j["grid"] = grid;
    j["cases"] = cases;
    j["checked"] = checked;
    j["passed"] = passed;
    j["status"] = ok() ? "pass" : "fail";
    j["counterexample"] = counterexample ? *counterexample : Json(nullptr);
    j["seconds"] = seconds;
    return j;
  }
};

struct VerifyOptions {
  std::optional<long> max_coeff;  // per-type default when unset
  unsigned jobs = 1;
  std::optional<std::filesystem::path> scratch_dir;  // for the cache round trip
  Config config;
};

/// Outcome of one grid case.
class CaseResult {
 public:
  template <class Describe>
  bool check(bool ok, Describe&& describe) {
    ++checked_;
    if (ok) {
      ++passed_;
    } else if (!counterexample_) {
      counterexample_ = describe();
    }
    return ok;
  }
  /// Records n checks that passed without individual descriptions.
  void tally(std::size_t n) {
    checked_ += n;
    passed_ += n;
  }
  void fail(Json what) {
    ++checked_;
    if (!counterexample_) counterexample_ = std::move(what);
  }

  std::size_t checked() const { return checked_; }
  std::size_t passed() const { return passed_; }
  const std::optional<Json>& counterexample() const { return counterexample_; }

 private:
  std::size_t checked_ = 0;
  std::size_t passed_ = 0;
  std::optional<Json> counterexample_;
};

using Case = std::function<void(CaseResult&)>;

namespace detail {

inline Json weight_json(const Weight& w) { return to_json_array(w.coefficients()); }

inline std::vector<CaseResult> run_cases(const std::vector<std::pair<Json, Case>>& cases, unsigned jobs) {
  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < cases.size(); k = next++) {
      try {
        cases[k].second(results[k]);
      } catch (const std::exception& e) {
        Json what;
        what["case"] = cases[k].first;
        what["error"] = e.what();
        results[k].fail(std::move(what));
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cases.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

// Counterexample record with the case inputs attached.
inline Json with_case(const Json& input, Json detail) {
  Json j;
  j["case"] = input;
  j["detail"] = std::move(detail);
  return j;
}

}  // namespace detail

/// Suite names accepted by run_suite.
inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem1", "cactus",    "involution", "lemma41",    "lemma42", "lemma43",
                                              "lemma44",  "star-props", "tensor-char", "dims", "roundtrip"};
  return names;
}

namespace suites {

using CaseList = std::vector<std::pair<Json, Case>>;
using Lib = std::shared_ptr<CrystalLibrary>;

inline CaseList dims(const Lib& lib, const std::vector<Weight>& grid) {
  CaseList out;
  for (const auto& lambda : grid) {
    Json input;
    input["lambda"] = detail::weight_json(lambda);
    out.emplace_back(input, [lib, lambda, input](CaseResult& r) {
      const RootDatum& d = lib->datum();
      const auto b = lib->get(lambda);
      const auto dim = d.weyl_dim(lambda);
      r.check(Integer(b->size()) == dim, [&] {
        return detail::with_case(input, {{"vertices", b->size()}, {"weyl_dim", dim.str()}});
      });
      const auto bad = seminormality_violation(b->graph);
      r.check(!bad, [&] { return detail::with_case(input, {{"seminormality", *bad}}); });
      r.check(highest_weight_vertices(b->graph) == std::vector<Vertex>{b->highest} && b->graph.weight(b->highest) == lambda,
              [&] { return detail::with_case(input, "highest-weight vertex is not unique"); });
      r.check(b->graph.weight(b->lowest) == d.w0_act(lambda), [&] {
        return detail::with_case(input, {{"lowest_weight", detail::weight_json(b->graph.weight(b->lowest))}});
      });
      for (Vertex v = 0; v < static_cast<Vertex>(b->paths.size()); ++v) {
        r.check(b->paths[static_cast<std::size_t>(v)].integral_endpoint() == b->graph.weight(v), [&] {
          return detail::with_case(input, {{"vertex", b->id(v)}, {"path", b->paths[static_cast<std::size_t>(v)].str()}});
        });
      }
      std::map<Weight, long> counted;
      for (const auto& w : b->graph.weights()) ++counted[w];
      r.check(counted == weight_multiplicities(d, lambda), [&] { return detail::with_case(input, "weight multiplicities differ from Freudenthal"); });
    });
  }
  return out;
}

inline CaseList tensor_char(const Lib& lib, const std::vector<Weight>& grid) {
  CaseList out;
  for (const auto& lambda : grid) {
    for (const auto& mu : grid) {
      Json input;
      input["lambda"] = detail::weight_json(lambda);
      input["mu"] = detail::weight_json(mu);
      out.emplace_back(input, [lib, lambda, mu, input](CaseResult& r) {
        const RootDatum& d = lib->datum();
        const auto bl = lib->get(lambda);
        const auto bm = lib->get(mu);
        const auto t = tensor(bl->graph, bm->graph);
        const auto bad = seminormality_violation(t.graph);
        r.check(!bad, [&] { return detail::with_case(input, {{"seminormality", *bad}}); });
        std::map<Weight, long> from_crystal;
        for (const auto& comp : components(t.graph).components) ++from_crystal[comp.highest_weight];
        const auto oracle = tensor_decomposition(d, lambda, mu);
        r.check(from_crystal == oracle, [&] {
          Json a = Json::array(), b = Json::array();
          for (const auto& [w, m] : from_crystal) a.push_back({detail::weight_json(w), m});
          for (const auto& [w, m] : oracle) b.push_back({detail::weight_json(w), m});
          return detail::with_case(input, {{"crystal", a}, {"brauer_klimyk", b}});
        });
        // eps(c) <= lambda against the e_i-kill test (hw_pairs throws on disagreement).
        std::map<Weight, long> by_criterion;
        for (Vertex c : hw_pairs(*bl, *bm, &t)) ++by_criterion[lambda + bm->graph.weight(c)];
        r.check(by_criterion == from_crystal, [&] { return detail::with_case(input, "criterion multiplicities differ"); });
        if (!bl->paths.empty() && !bm->paths.empty()) {
          const auto concat = concatenation_crystal(*bl, *bm);
          std::vector<Vertex> id(concat.size());
          for (std::size_t v = 0; v < id.size(); ++v) id[v] = static_cast<Vertex>(v);
          r.check(is_isomorphism(concat, t.graph, id), [&] { return detail::with_case(input, "path concatenation model differs from the tensor rule"); });
        }
      });
    }
  }
  return out;
}

inline CaseList lemma41(const Lib& lib, const std::vector<Weight>& grid) {
  CaseList out;
  for (const auto& lambda : grid) {
    Json input;
    input["lambda"] = detail::weight_json(lambda);
    out.emplace_back(input, [lib, lambda, input](CaseResult& r) {
      const auto b = lib->get(lambda);
      for (const auto& word : lib->datum().all_reduced_words()) {
        std::set<std::vector<long>> seen;
        for (Vertex v = 0; v < static_cast<Vertex>(b->size()); ++v) {
          const auto c = downward_cascade(b->graph, v, word);
          r.check(c.end == b->lowest, [&] { return detail::with_case(input, {{"word", word.str()}, {"vertex", b->id(v)}, {"cascade_end", b->id(c.end)}}); });
          r.check(seen.insert(c.values).second, [&] {
            return detail::with_case(input, {{"word", word.str()}, {"repeated_data", values_str(c.values)}});
          });
        }
      }
    });
  }
  return out;
}

inline CaseList lemma42(const Lib& lib, const std::vector<Weight>& grid) {
  CaseList out;
  for (const auto& lambda : grid) {
    Json input;
    input["lambda"] = detail::weight_json(lambda);
    out.emplace_back(input, [lib, lambda, input](CaseResult& r) {
      const RootDatum& d = lib->datum();
      const auto b = lib->get(lambda);
      for (const auto& word : d.all_reduced_words()) {
        const auto c = downward_cascade(b->graph, b->highest, word);
        std::vector<long> formula;
        for (std::size_t k = 0; k < word.size(); ++k) formula.push_back(d.coroot_pairing(word.prefix(k), static_cast<std::size_t>(word[k]), lambda));
        r.check(c.values == formula, [&] {
          return detail::with_case(input, {{"word", word.str()}, {"data", values_str(c.values)}, {"formula", values_str(formula)}});
        });
        for (std::size_t k = 0; k < word.size(); ++k) {
          const int e = b->graph.eps(static_cast<std::size_t>(word[k]), c.steps[k]);
          r.check(e == 0, [&] { return detail::with_case(input, {{"word", word.str()}, {"step", k + 1}, {"eps", e}}); });
        }
      }
    });
  }
  return out;
}

inline CaseList lemma43(const Lib& lib, const std::vector<Weight>& grid) {
  CaseList out;
  for (const auto& lambda : grid) {
    for (const auto& mu : grid) {
      Json input;
      input["lambda"] = detail::weight_json(lambda);
      input["mu"] = detail::weight_json(mu);
      out.emplace_back(input, [lib, lambda, mu, input](CaseResult& r) {
        const RootDatum& d = lib->datum();
        const auto bl = lib->get(lambda);
        const auto bm = lib->get(mu);
        const auto t = tensor(bl->graph, bm->graph);
        const auto dec = components(t.graph);
        for (Vertex c : hw_pairs(*bl, *bm, &t)) {
          const Vertex low = dec.containing(t.vertex(bl->highest, c)).lowest;
          r.check(t.right(low) == bm->lowest, [&] { return detail::with_case(input, {{"c", bm->id(c)}, {"lowest_right_factor", bm->id(t.right(low))}}); });
          const Vertex b = t.left(low);
          const Weight nu = lambda + bm->graph.weight(c);
          for (const auto& word : d.all_reduced_words()) {
            const auto p = downward_cascade(bm->graph, c, word).values;
            const auto q = upward_cascade(bl->graph, b, word.reversed()).values;
            const std::size_t m = word.size();
            for (std::size_t k = 0; k < m; ++k) {
              const long rhs = d.coroot_pairing(word.prefix(k), static_cast<std::size_t>(word[k]), nu);
              r.check(p[k] + q[m - 1 - k] == rhs, [&] {
                return detail::with_case(input, {{"c", bm->id(c)}, {"b", bl->id(b)}, {"word", word.str()}, {"k", k + 1},
                                                 {"p", values_str(p)}, {"q", values_str(q)}, {"expected", rhs}});
              });
            }
          }
        }
      });
    }
  }
  return out;
}

inline CaseList lemma44(const Lib& lib, const std::vector<Weight>& grid) {
  CaseList out;
  for (const auto& lambda : grid) {
    for (const auto& mu : grid) {
      Json input;
      input["lambda"] = detail::weight_json(lambda);
      input["mu"] = detail::weight_json(mu);
      out.emplace_back(input, [lib, lambda, mu, input](CaseResult& r) {
        const RootDatum& d = lib->datum();
        const auto bl = lib->get(lambda);
        const auto bm = lib->get(mu);
        for (Vertex c : hw_pairs(*bl, *bm)) {
          const EmbeddedElement x{mu, c};
          const Vertex s = star_bz(*lib, x, lambda);  // throws on cross-word inconsistency or word dependence
          const Weight nu = lambda + bm->graph.weight(c);
          for (const auto& word : d.all_reduced_words()) {
            const Vertex sf = star_formula(*lib, x, lambda, word);
            r.check(sf == s, [&] { return detail::with_case(input, {{"c", bm->id(c)}, {"word", word.str()}, {"star_bz", bl->id(s)}, {"star_formula", bl->id(sf)}}); });
            const auto p = downward_cascade(bm->graph, c, word).values;
            const auto q = downward_cascade(bl->graph, s, d.theta_reverse(word)).values;
            const std::size_t m = word.size();
            for (std::size_t k = 0; k < m; ++k) {
              const long rhs = d.coroot_pairing(word.prefix(k), static_cast<std::size_t>(word[k]), nu);
              r.check(p[k] + q[m - 1 - k] == rhs, [&] {
                return detail::with_case(input, {{"c", bm->id(c)}, {"word", word.str()}, {"k", k + 1}, {"p", values_str(p)}, {"q", values_str(q)}, {"expected", rhs}});
              });
            }
          }
        }
      });
    }
  }
  return out;
}

inline CaseList star_props(const Lib& lib, const std::vector<Weight>& grid) {
  CaseList out;
  for (const auto& mu : grid) {
    for (const auto& lambda : grid) {
      Json input;
      input["mu"] = detail::weight_json(mu);
      input["lambda"] = detail::weight_json(lambda);
      out.emplace_back(input, [lib, lambda, mu, input](CaseResult& r) {
        const RootDatum& d = lib->datum();
        const auto bl = lib->get(lambda);
        const auto bm = lib->get(mu);
        for (Vertex c = 0; c < static_cast<Vertex>(bm->size()); ++c) {
          if (!coefficientwise_le(bm->graph.eps_vec(c), lambda)) continue;
          const EmbeddedElement x{mu, c};
          const Vertex s = star_bz(*lib, x, lambda);
          const EmbeddedElement sx{lambda, s};
          auto where = [&](Json extra) {
            extra["c"] = bm->id(c);
            extra["star_c"] = bl->id(s);
            return detail::with_case(input, std::move(extra));
          };
          // weights in B_infinity: wt(b) - lambda for b in B_lambda
          r.check(bl->graph.weight(s) - lambda == bm->graph.weight(c) - mu, [&] { return where({{"check", "weight"}}); });
          const Weight tau_s = tau(*lib, sx);
          const Weight eps_c = eps_embedded(*lib, x);
          r.check(tau_s == eps_c, [&] { return where({{"check", "tau(*c) = eps(c)"}, {"tau_star", detail::weight_json(tau_s)}, {"eps", detail::weight_json(eps_c)}}); });
          const Weight eps_s = eps_embedded(*lib, sx);
          const Weight tau_c = tau(*lib, x);
          r.check(eps_s == tau_c, [&] { return where({{"check", "eps(*c) = tau(c)"}, {"eps_star", detail::weight_json(eps_s)}, {"tau", detail::weight_json(tau_c)}}); });
          for (std::size_t i = 0; i < d.rank(); ++i) {
            const Weight gamma = d.fundamental_weight(i);
            const Vertex lifted = embed(*lib, mu, c, gamma);
            const Vertex s2 = star_bz(*lib, EmbeddedElement{mu + gamma, lifted}, lambda);
            r.check(s2 == s, [&] { return where({{"check", "embedding coherence"}, {"gamma", detail::weight_json(gamma)}, {"star_of_lift", bl->id(s2)}}); });
          }
        }
      });
    }
  }
  return out;
}

inline CaseList involution(const Lib& lib, const std::vector<Weight>& grid) {
  CaseList out;
  for (const auto& lambda : grid) {
    for (const auto& mu : grid) {
      Json input;
      input["lambda"] = detail::weight_json(lambda);
      input["mu"] = detail::weight_json(mu);
      out.emplace_back(input, [lib, lambda, mu, input](CaseResult& r) {
        const auto bl = lib->get(lambda);
        const auto bm = lib->get(mu);
        r.check(is_identity(compose(commutor_hk(bm->graph, bl->graph), commutor_hk(bl->graph, bm->graph))),
                [&] { return detail::with_case(input, "hk: sigma_{B,A} o sigma_{A,B} is not the identity"); });
        r.check(is_identity(compose(commutor_star(*lib, mu, lambda), commutor_star(*lib, lambda, mu))),
                [&] { return detail::with_case(input, "star: sigma_{B,A} o sigma_{A,B} is not the identity"); });
        for (Vertex c = 0; c < static_cast<Vertex>(bm->size()); ++c) {
          if (!coefficientwise_le(bm->graph.eps_vec(c), lambda)) continue;
          const Vertex s = star_bz(*lib, EmbeddedElement{mu, c}, lambda);
          const Vertex back = star_bz(*lib, EmbeddedElement{lambda, s}, mu);
          r.check(back == c, [&] { return detail::with_case(input, {{"c", bm->id(c)}, {"star_c", bl->id(s)}, {"star_star_c", bm->id(back)}}); });
        }
      });
    }
  }
  return out;
}

inline CaseList theorem1(const Lib& lib, const std::vector<Weight>& grid) {
  CaseList out;
  for (const auto& lambda : grid) {
    for (const auto& mu : grid) {
      Json input;
      input["lambda"] = detail::weight_json(lambda);
      input["mu"] = detail::weight_json(mu);
      out.emplace_back(input, [lib, lambda, mu, input](CaseResult& r) {
        const auto bl = lib->get(lambda);
        const auto bm = lib->get(mu);
        const auto hk = commutor_hk(bl->graph, bm->graph);
        for (StarRoute route : {StarRoute::bz, StarRoute::formula}) {
          const auto st = commutor_star(*lib, lambda, mu, route);
          r.check(st == hk, [&] {
            Json diff = commutor_diff_json(*bl, *bm, hk, st);
            return detail::with_case(input, {{"route", route == StarRoute::bz ? "bz" : "formula"}, {"diff", diff}});
          });
        }
      });
    }
  }
  return out;
}

inline CaseList cactus(const Lib& lib, const std::vector<Weight>& grid) {
  CaseList out;
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      for (const auto& c : grid) {
        Json input;
        input["A"] = detail::weight_json(a);
        input["B"] = detail::weight_json(b);
        input["C"] = detail::weight_json(c);
        out.emplace_back(input, [lib, a, b, c, input](CaseResult& r) {
          const auto rep = check_cactus(lib->get(a)->graph, lib->get(b)->graph, lib->get(c)->graph);
          // one check per vertex of A (x) B (x) C; a failure stops at the first bad vertex
          if (rep.passed()) {
            r.tally(rep.checked);
          } else {
            r.tally(rep.checked - 1);
            r.check(false, [&] { return detail::with_case(input, *rep.discrepancy); });
          }
        });
      }
    }
  }
  return out;
}

inline CaseList roundtrip(const Lib& lib, const std::vector<Weight>& grid, const std::filesystem::path& scratch) {
  CaseList out;
  for (const auto& lambda : grid) {
    Json input;
    input["lambda"] = detail::weight_json(lambda);
    out.emplace_back(input, [lib, lambda, input, scratch](CaseResult& r) {
      const auto& datum = lib->datum_ptr();
      const auto fresh = generate_crystal(datum, lambda);
      const std::string json = crystal_to_json(fresh);
      const auto parsed = crystal_from_json(datum, json);
      r.check(parsed.graph == fresh.graph && parsed.keys == fresh.keys, [&] { return detail::with_case(input, "parse(emit(B)) differs from B"); });
      r.check(crystal_to_json(parsed) == json, [&] { return detail::with_case(input, "re-emitted JSON differs"); });
      // Two consecutive cache runs: the first stores, the second regenerates and compares bytes.
      const CrystalCache cache(scratch);
      const auto first = cache.load_or_generate(datum, lambda);
      const auto stored = cache.read(datum->type(), lambda);
      const auto again = crystal_to_json(generate_crystal(datum, lambda));
      r.check(stored && *stored == again, [&] { return detail::with_case(input, "cached crystal is not byte-identical to a regeneration"); });
      const auto reloaded = cache.load_or_generate(datum, lambda);
      r.check(reloaded->graph == first->graph && reloaded->keys == first->keys, [&] { return detail::with_case(input, "cache reload differs"); });
      r.check(crystal_to_dot(fresh) == crystal_to_dot(parsed), [&] { return detail::with_case(input, "DOT output differs after round trip"); });
    });
  }
  return out;
}

}  // namespace suites

/// Weights for the cactus suite: fundamental weights by default, the full box when a bound is given.
inline std::vector<Weight> cactus_grid(const RootDatum& d, std::optional<long> max_coeff) {
  if (max_coeff) return dominant_box(d.rank(), *max_coeff);
  std::vector<Weight> out;
  for (std::size_t i = 0; i < d.rank(); ++i) out.push_back(d.fundamental_weight(i));
  return out;
}

inline VerificationReport run_suite(const std::string& suite, const CartanType& type, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  auto datum = std::make_shared<const RootDatum>(type);
  auto lib = std::make_shared<CrystalLibrary>(datum);
  const long bound = options.max_coeff.value_or(options.config.default_max_coeff(type));
  const auto grid = dominant_box(datum->rank(), bound);

  VerificationReport report;
  report.suite = suite;
  report.grid = type.name() + ", coefficients <= " + std::to_string(bound) + " (" + std::to_string(grid.size()) + " weights)";

  suites::CaseList cases;
  std::optional<std::filesystem::path> scratch;
  if (suite == "dims") {
    cases = suites::dims(lib, grid);
  } else if (suite == "tensor-char") {
    cases = suites::tensor_char(lib, grid);
  } else if (suite == "lemma41") {
    cases = suites::lemma41(lib, grid);
  } else if (suite == "lemma42") {
    cases = suites::lemma42(lib, grid);
  } else if (suite == "lemma43") {
    cases = suites::lemma43(lib, grid);
  } else if (suite == "lemma44") {
    cases = suites::lemma44(lib, grid);
  } else if (suite == "star-props") {
    cases = suites::star_props(lib, grid);
  } else if (suite == "involution") {
    cases = suites::involution(lib, grid);
  } else if (suite == "theorem1") {
    cases = suites::theorem1(lib, grid);
  } else if (suite == "cactus") {
    const auto weights = cactus_grid(*datum, options.max_coeff);
    report.grid = type.name() + ", " + (options.max_coeff ? "coefficients <= " + std::to_string(*options.max_coeff) : std::string("fundamental weights")) +
                  " (" + std::to_string(weights.size() * weights.size() * weights.size()) + " triples)";
    cases = suites::cactus(lib, weights);
  } else if (suite == "roundtrip") {
    scratch = options.scratch_dir.value_or(std::filesystem::temp_directory_path() /
                                           ("crystals-roundtrip-" + std::to_string(fnv1a64(type.name() + std::to_string(reinterpret_cast<std::uintptr_t>(&report))))));
    std::filesystem::remove_all(*scratch);
    cases = suites::roundtrip(lib, grid, *scratch);
  } else {
    throw InputError("unknown suite '" + suite + "'");
  }

  report.cases = cases.size();
  for (const auto& r : detail::run_cases(cases, options.jobs)) {
    report.checked += r.checked();
    report.passed += r.passed();
    if (!report.counterexample && r.counterexample()) report.counterexample = *r.counterexample();
  }
  if (scratch && !options.scratch_dir) std::filesystem::remove_all(*scratch);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace crystals
