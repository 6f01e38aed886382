#pragma once

// Shared, thread-safe store of the irreducible crystals B_lambda of one root
// datum, the directed-system embeddings between them, and per-word downward
// indices. Everything handed out is immutable.

#include "crystals/cartan.hpp"
#include "crystals/path_crystal.hpp"
#include "crystals/string_data.hpp"
#include "crystals/tensor.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace crystals {

class CrystalLibrary {
 public:
  /// Optional source of crystals (e.g. an on-disk cache). Returning nullptr means "generate".
  using Loader = std::function<std::shared_ptr<const HighestWeightCrystal>(const Weight&)>;

  explicit CrystalLibrary(std::shared_ptr<const RootDatum> datum, std::size_t budget = kDefaultVertexBudget)
      : datum_(std::move(datum)), budget_(budget) {}

  void set_loader(Loader loader) { loader_ = std::move(loader); }

  const RootDatum& datum() const { return *datum_; }
  const std::shared_ptr<const RootDatum>& datum_ptr() const { return datum_; }

  std::shared_ptr<const HighestWeightCrystal> get(const Weight& lambda) const {
    {
      std::lock_guard lock(mutex_);
      if (auto it = crystals_.find(lambda); it != crystals_.end()) return it->second;
    }
    std::shared_ptr<const HighestWeightCrystal> made;
    if (loader_) made = loader_(lambda);
    if (!made) made = std::make_shared<const HighestWeightCrystal>(generate_crystal(datum_, lambda, budget_));
    std::lock_guard lock(mutex_);
    return crystals_.emplace(lambda, std::move(made)).first->second;
  }

  /// iota_lambda^{lambda+gamma}, indexed by vertices of B_lambda.
  std::shared_ptr<const std::vector<Vertex>> embedding(const Weight& lambda, const Weight& gamma) const {
    const auto key = std::make_pair(lambda, gamma);
    {
      std::lock_guard lock(mutex_);
      if (auto it = embeddings_.find(key); it != embeddings_.end()) return it->second;
    }
    auto made = std::make_shared<const std::vector<Vertex>>(compute_embedding(lambda, gamma));
    std::lock_guard lock(mutex_);
    return embeddings_.emplace(key, std::move(made)).first->second;
  }

  std::shared_ptr<const DownwardIndex> downward_index(const Weight& lambda, const ReducedWord& word) const {
    const auto key = std::make_pair(lambda, word);
    {
      std::lock_guard lock(mutex_);
      if (auto it = indices_.find(key); it != indices_.end()) return it->second;
    }
    auto made = std::make_shared<const DownwardIndex>(get(lambda)->graph, word);
    std::lock_guard lock(mutex_);
    return indices_.emplace(key, std::move(made)).first->second;
  }

 private:
  // Identifies B_{lambda+gamma} with the component of b_lambda (x) b_gamma in
  // B_lambda (x) B_gamma and pulls back the elements b (x) b_gamma.
  std::vector<Vertex> compute_embedding(const Weight& lambda, const Weight& gamma) const {
    if (!gamma.is_dominant()) throw InputError("embedding needs a dominant shift, got " + gamma.str());
    const auto source = get(lambda);
    if (gamma.is_zero()) {
      std::vector<Vertex> id(source->size());
      for (std::size_t b = 0; b < id.size(); ++b) id[b] = static_cast<Vertex>(b);
      return id;
    }
    const auto shift = get(gamma);
    const auto target = get(lambda + gamma);
    const auto product = tensor(source->graph, shift->graph);
    const auto iso = extend_isomorphism(target->graph, product.graph, {{target->highest, product.vertex(source->highest, shift->highest)}});
    std::vector<Vertex> preimage(product.graph.size(), kNone);
    for (std::size_t x = 0; x < iso.size(); ++x) {
      if (iso[x] != kNone) preimage[static_cast<std::size_t>(iso[x])] = static_cast<Vertex>(x);
    }
    std::vector<Vertex> out(source->size());
    for (Vertex b = 0; b < static_cast<Vertex>(source->size()); ++b) {
      const Vertex image = preimage[static_cast<std::size_t>(product.vertex(b, shift->highest))];
      if (image == kNone) {
        throw InvariantError("b (x) b_gamma lies outside the top component of B_(" + lambda.str() + ") (x) B_(" + gamma.str() + ")");
      }
      out[static_cast<std::size_t>(b)] = image;
    }
    return out;
  }

  std::shared_ptr<const RootDatum> datum_;
  std::size_t budget_;
  Loader loader_;
  mutable std::mutex mutex_;
  mutable std::map<Weight, std::shared_ptr<const HighestWeightCrystal>> crystals_;
  mutable std::map<std::pair<Weight, Weight>, std::shared_ptr<const std::vector<Vertex>>> embeddings_;
  mutable std::map<std::pair<Weight, ReducedWord>, std::shared_ptr<const DownwardIndex>> indices_;
};

}  // namespace crystals
