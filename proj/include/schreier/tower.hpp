#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "schreier/labeled_graph.hpp"
#include "schreier/word.hpp"

namespace schreier {

// Level-by-level description of a tower in the tower numbering: vertex x of
// level k+1 lies over x mod |V(level k)|, and every basepoint is 0.
class LevelModel {
 public:
  virtual ~LevelModel() = default;

  virtual const Alphabet& alphabet() const = 0;
  // Deepest addressable level.
  virtual std::size_t depth() const = 0;
  virtual std::uint64_t base_size() const { return 1; }
  // Degree of the covering level k+1 -> level k.
  virtual std::uint32_t degree(std::size_t k) const = 0;
  virtual std::uint64_t step(std::size_t k, Letter g, std::uint64_t x) const = 0;
  // Default builds the level by enumerating step(); previous may be null.
  virtual LabeledGraph materialize(std::size_t k, const LabeledGraph* previous) const;
  // Levels the model already holds as graphs.
  virtual std::shared_ptr<const LabeledGraph> stored(std::size_t /*k*/) const { return nullptr; }
};

struct TowerLimits {
  // Levels up to this are materialized at construction.
  std::size_t eager_levels = 0;
  // Deeper levels are materialized on first use only when at most this big;
  // bigger ones are navigated through the model.
  std::uint64_t lazy_vertex_cap = 2'000'000;
  // Explicit level() requests above this throw BudgetExhausted.
  std::uint64_t max_materialized_vertices = 20'000'000;
};

class LevelView;

// Immutable, cheaply copyable handle on a shared tower.
class Tower {
 public:
  Tower(std::string name, nlohmann::json params, std::shared_ptr<const LevelModel> model,
        TowerLimits limits = {});

  // Builds a tower from explicit levels and bonding maps (bonding[k]: level
  // k+1 -> level k), renumbering every level into the tower numbering.
  // Throws InvalidInput unless every bonding map is a covering with basepoint coherence.
  static Tower from_levels(std::string name, nlohmann::json params, std::vector<LabeledGraph> levels,
                           const std::vector<std::vector<Vertex>>& bonding);

  const std::string& name() const;
  const nlohmann::json& params() const;
  const Alphabet& alphabet() const;
  const LevelModel& model() const;
  std::shared_ptr<const LevelModel> shared_model() const;
  const TowerLimits& limits() const;
  std::size_t depth() const;
  std::uint64_t vertex_count(std::size_t k) const;
  std::uint32_t degree(std::size_t k) const;
  std::vector<std::uint32_t> degrees() const;

  std::uint64_t step(std::size_t k, Letter g, std::uint64_t x) const;
  std::uint64_t trace(std::size_t k, std::uint64_t x, const Word& w) const;
  // Image of x (level k+1) at level k.
  std::uint64_t project(std::size_t k, std::uint64_t x) const { return x % vertex_count(k); }
  std::vector<std::uint64_t> fiber(std::size_t k, std::uint64_t v) const;

  // Materializes on demand; throws BudgetExhausted above the vertex cap.
  std::shared_ptr<const LabeledGraph> level(std::size_t k) const;
  bool materialized(std::size_t k) const;
  std::vector<Vertex> bonding(std::size_t k) const;

  LevelView view(std::size_t k) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// Stepping at one level, either through a materialized graph or the model.
class LevelView {
 public:
  LevelView(std::shared_ptr<const LabeledGraph> graph, const LevelModel* model, std::size_t level)
      : graph_(std::move(graph)), model_(model), level_(level) {}

  std::uint64_t step(Letter g, std::uint64_t x) const {
    return graph_ ? graph_->step(g, static_cast<Vertex>(x)) : model_->step(level_, g, x);
  }
  std::size_t level() const { return level_; }
  bool materialized() const { return graph_ != nullptr; }

 private:
  std::shared_ptr<const LabeledGraph> graph_;
  const LevelModel* model_;
  std::size_t level_;
};

}  // namespace schreier
