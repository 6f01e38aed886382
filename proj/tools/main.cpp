// crystals: generate crystals, compute commutors and run verification suites.
//
// Exit codes: 0 success, 1 verification failure or commutor mismatch, 2 bad input.

#include "crystals/cache.hpp"
#include "crystals/config.hpp"
#include "crystals/serialize.hpp"
#include "crystals/star.hpp"
#include "crystals/string_data.hpp"
#include "crystals/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace crystals;

namespace {

struct Globals {
  std::string config_path;
  std::string cache_dir;
  bool no_cache = false;
};

Config load(const Globals& g) {
  Config c = g.config_path.empty() ? Config{} : load_config(g.config_path);
  apply_environment(c);
  if (!g.cache_dir.empty()) c.cache_dir = g.cache_dir;
  if (g.no_cache) c.cache_dir.reset();
  return c;
}

std::shared_ptr<CrystalLibrary> library(const std::string& type, const Config& config) {
  auto datum = std::make_shared<const RootDatum>(CartanType::parse(type));
  auto lib = std::make_shared<CrystalLibrary>(datum);
  if (config.cache_dir) lib->set_loader(CrystalCache(*config.cache_dir).loader(datum));
  return lib;
}

Weight dominant(const RootDatum& d, const std::string& text) {
  Weight w = Weight::parse(text, d.rank());
  if (!w.is_dominant()) throw InputError("weight " + w.str() + " is not dominant");
  return w;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

std::vector<CartanType> parse_types(const std::string& list) {
  std::vector<CartanType> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(CartanType::parse(item));
  if (out.empty()) throw InputError("empty type list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystals of highest-weight modules and the crystal commutor"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--config", globals.config_path, "key = value config file");
  app.add_option("--cache-dir", globals.cache_dir, "crystal cache directory (overrides config and environment)");
  app.add_flag("--no-cache", globals.no_cache, "do not read or write the crystal cache");

  std::string type, lambda_s, mu_s, id, out, word_s, method = "both", route = "bz", format = "json", direction = "down";
  bool json_flag = false, dot_flag = false, all_words = false, include_g2 = false;

  auto* gen = app.add_subcommand("gen", "Print B_lambda with canonical vertex ids");
  gen->add_option("type", type)->required();
  gen->add_option("lambda", lambda_s, "dominant weight, e.g. 1,0")->required();
  gen->add_flag("--json", json_flag, "JSON output (default)");
  gen->add_flag("--dot", dot_flag, "Graphviz DOT output");
  gen->add_option("--out,-o", out, "output file");

  auto* com = app.add_subcommand("commutor", "Commutor B_lambda (x) B_mu -> B_mu (x) B_lambda");
  com->add_option("type", type)->required();
  com->add_option("lambda", lambda_s)->required();
  com->add_option("mu", mu_s)->required();
  com->add_option("--method", method, "hk, star or both")->check(CLI::IsMember({"hk", "star", "both"}));
  com->add_option("--route", route, "star route: bz or formula")->check(CLI::IsMember({"bz", "formula"}));
  com->add_option("--out,-o", out, "output file");

  auto* sd = app.add_subcommand("stringdata", "Kashiwara data of every vertex of B_lambda");
  sd->add_option("type", type)->required();
  sd->add_option("lambda", lambda_s)->required();
  sd->add_option("--word", word_s, "reduced word for w0, 1-based, e.g. 1,2,1");
  sd->add_flag("--all-words", all_words, "every reduced word for w0");
  sd->add_option("--direction", direction, "down or up")->check(CLI::IsMember({"down", "up"}));

  auto* st = app.add_subcommand("star", "Kashiwara involution: id of *c in B_lambda for c in B_mu");
  st->add_option("type", type)->required();
  st->add_option("mu", mu_s)->required();
  st->add_option("id", id, "canonical id of c in B_mu")->required();
  st->add_option("lambda", lambda_s)->required();
  st->add_option("--route", route, "bz or formula")->check(CLI::IsMember({"bz", "formula"}));

  std::string suite, types;
  std::optional<long> max_coeff;
  std::optional<unsigned> jobs;
  auto* ver = app.add_subcommand("verify", "Run a verification suite (or 'all') over a weight grid");
  ver->add_option("suite", suite)->required();
  ver->add_option("types", types, "comma-separated Cartan types (default A1,A2,B2,C2,A3)");
  ver->add_option("--max-coeff", max_coeff, "bound on each fundamental coefficient");
  ver->add_option("--jobs,-j", jobs, "worker threads");
  ver->add_flag("--include-g2", include_g2, "add G2 to the default type list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Config config = load(globals);

    if (gen->parsed()) {
      if (json_flag && dot_flag) throw InputError("choose one of --json and --dot");
      auto lib = library(type, config);
      const auto b = lib->get(dominant(lib->datum(), lambda_s));
      emit(dot_flag ? crystal_to_dot(*b) : crystal_to_json(*b), out);
      return 0;
    }

    if (com->parsed()) {
      auto lib = library(type, config);
      const Weight lambda = dominant(lib->datum(), lambda_s);
      const Weight mu = dominant(lib->datum(), mu_s);
      const auto bl = lib->get(lambda);
      const auto bm = lib->get(mu);
      const StarRoute r = route == "formula" ? StarRoute::formula : StarRoute::bz;
      if (method == "hk") {
        emit(commutor_json(*bl, *bm, commutor_hk(bl->graph, bm->graph)).dump(1) + "\n", out);
        return 0;
      }
      if (method == "star") {
        emit(commutor_json(*bl, *bm, commutor_star(*lib, lambda, mu, r)).dump(1) + "\n", out);
        return 0;
      }
      const auto hk = commutor_hk(bl->graph, bm->graph);
      const auto st_map = commutor_star(*lib, lambda, mu, r);
      Json diff;
      diff["type"] = lib->datum().type().name();
      diff["lambda"] = detail::to_json_array(lambda.coefficients());
      diff["mu"] = detail::to_json_array(mu.coefficients());
      diff["vertices"] = hk.map.size();
      diff["diff"] = commutor_diff_json(*bl, *bm, hk, st_map);
      emit(diff.dump(1) + "\n", out);
      return diff["diff"].empty() ? 0 : 1;
    }

    if (sd->parsed()) {
      auto lib = library(type, config);
      const RootDatum& d = lib->datum();
      const auto b = lib->get(dominant(d, lambda_s));
      std::vector<ReducedWord> words;
      if (all_words) {
        if (!word_s.empty()) throw InputError("--word and --all-words are exclusive");
        words = d.all_reduced_words();
      } else {
        words.push_back(word_s.empty() ? d.longest_word() : ReducedWord::parse(word_s));
      }
      for (const auto& w : words) {
        d.require_longest(w);
        for (Vertex v = 0; v < static_cast<Vertex>(b->size()); ++v) {
          const auto s = direction == "up" ? upward_data(b->graph, v, w) : downward_data(b->graph, v, w);
          Json row;
          row["id"] = b->id(v);
          row["word"] = w.str();
          row["direction"] = direction;
          row["values"] = detail::to_json_array(s.values);
          std::cout << row.dump() << "\n";
        }
      }
      return 0;
    }

    if (st->parsed()) {
      auto lib = library(type, config);
      const Weight mu = dominant(lib->datum(), mu_s);
      const Weight lambda = dominant(lib->datum(), lambda_s);
      const Vertex c = lib->get(mu)->find(id);
      const Vertex s = star(*lib, EmbeddedElement{mu, c}, lambda, route == "formula" ? StarRoute::formula : StarRoute::bz);
      std::cout << lib->get(lambda)->id(s) << "\n";
      return 0;
    }

    if (ver->parsed()) {
      Config c = config;
      if (include_g2) c.include_g2 = true;
      const auto type_list = types.empty() ? c.default_types() : parse_types(types);
      if (max_coeff && *max_coeff < 0) throw InputError("--max-coeff must be non-negative");
      if (jobs && *jobs == 0) throw InputError("--jobs must be positive");
      std::vector<std::string> suite_list;
      if (suite == "all") {
        suite_list = suite_names();
      } else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) {
        suite_list.push_back(suite);
      } else {
        throw InputError("unknown suite '" + suite + "'");
      }
      VerifyOptions options;
      options.max_coeff = max_coeff;
      options.jobs = jobs.value_or(c.jobs);
      options.config = c;
      bool ok = true;
      for (const auto& s : suite_list) {
        for (const auto& t : type_list) {
          const auto report = run_suite(s, t, options);
          std::cout << report.to_json().dump() << "\n" << std::flush;
          std::cerr << (report.ok() ? "PASS " : "FAIL ") << s << " " << report.grid << ": " << report.passed << "/" << report.checked << "\n";
          ok = ok && report.ok();
        }
      }
      return ok ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
