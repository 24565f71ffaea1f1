#include "schreier/tower.hpp"

#include <algorithm>
#include <mutex>

#include "schreier/errors.hpp"

namespace schreier {

LabeledGraph LevelModel::materialize(std::size_t k, const LabeledGraph* /*previous*/) const {
  std::uint64_t n = base_size();
  for (std::size_t i = 0; i < k; ++i) n *= degree(i);
  if (n >= kNoVertex) throw BudgetExhausted("level too large to materialize", n, n);
  LabeledGraph g(alphabet(), static_cast<Vertex>(n), 0);
  for (std::uint32_t label = 0; label < alphabet().size(); ++label)
    for (std::uint64_t x = 0; x < n; ++x)
      g.set_edge(static_cast<Vertex>(x), label, static_cast<Vertex>(step(k, Letter{label, false}, x)));
  return g;
}

namespace {

class ExplicitModel : public LevelModel {
 public:
  explicit ExplicitModel(std::vector<std::shared_ptr<const LabeledGraph>> levels) : levels_(std::move(levels)) {}

  const Alphabet& alphabet() const override { return levels_.front()->alphabet(); }
  std::size_t depth() const override { return levels_.size() - 1; }
  std::uint64_t base_size() const override { return levels_.front()->vertex_count(); }
  std::uint32_t degree(std::size_t k) const override {
    return levels_.at(k + 1)->vertex_count() / levels_.at(k)->vertex_count();
  }
  std::uint64_t step(std::size_t k, Letter g, std::uint64_t x) const override {
    return levels_.at(k)->step(g, static_cast<Vertex>(x));
  }
  LabeledGraph materialize(std::size_t k, const LabeledGraph*) const override { return *levels_.at(k); }
  std::shared_ptr<const LabeledGraph> stored(std::size_t k) const override { return levels_.at(k); }

 private:
  std::vector<std::shared_ptr<const LabeledGraph>> levels_;
};

std::vector<Vertex> bfs_order(const LabeledGraph& g) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> order{g.basepoint()};
  seen[g.basepoint()] = 1;
  const auto letters = g.alphabet().letters();
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Letter l : letters) {
      Vertex y = g.step(l, order[head]);
      if (!seen[y]) {
        seen[y] = 1;
        order.push_back(y);
      }
    }
  return order;
}

LabeledGraph renumber(const LabeledGraph& g, const std::vector<Vertex>& perm) {
  LabeledGraph out(g.alphabet(), g.vertex_count(), perm[g.basepoint()]);
  for (std::uint32_t label = 0; label < g.alphabet().size(); ++label) {
    auto f = g.forward(label);
    for (Vertex x = 0; x < g.vertex_count(); ++x) out.set_edge(perm[x], label, perm[f[x]]);
  }
  return out;
}

}  // namespace

struct Tower::State {
  std::string name;
  nlohmann::json params;
  std::shared_ptr<const LevelModel> model;
  TowerLimits limits;
  std::vector<std::uint64_t> sizes;
  mutable std::mutex mutex;
  mutable std::vector<std::shared_ptr<const LabeledGraph>> cache;

  std::shared_ptr<const LabeledGraph> materialize_locked(std::size_t k) const {
    if (cache[k]) return cache[k];
    if (auto s = model->stored(k)) return cache[k] = s;
    if (sizes[k] > limits.max_materialized_vertices || sizes[k] >= kNoVertex)
      throw BudgetExhausted("level " + std::to_string(k) + " has " + std::to_string(sizes[k]) +
                                " vertices, above the materialization cap",
                            k ? sizes[k - 1] : 0, sizes[k]);
    std::shared_ptr<const LabeledGraph> prev;
    if (k > 0 && sizes[k - 1] <= limits.max_materialized_vertices) prev = materialize_locked(k - 1);
    cache[k] = std::make_shared<const LabeledGraph>(model->materialize(k, prev.get()));
    return cache[k];
  }
};

Tower::Tower(std::string name, nlohmann::json params, std::shared_ptr<const LevelModel> model, TowerLimits limits)
    : state_(std::make_shared<State>()) {
  state_->name = std::move(name);
  state_->params = std::move(params);
  state_->model = std::move(model);
  state_->limits = limits;
  const std::size_t depth = state_->model->depth();
  state_->sizes.resize(depth + 1);
  state_->sizes[0] = state_->model->base_size();
  for (std::size_t k = 0; k < depth; ++k) state_->sizes[k + 1] = state_->sizes[k] * state_->model->degree(k);
  state_->cache.resize(depth + 1);
  if (limits.eager_levels > depth)
    throw BudgetExhausted("level budget exceeded: " + std::to_string(limits.eager_levels) + " > depth " +
                              std::to_string(depth),
                          0, 0);
  std::lock_guard lock(state_->mutex);
  for (std::size_t k = 0; k <= limits.eager_levels; ++k) state_->materialize_locked(k);
}

Tower Tower::from_levels(std::string name, nlohmann::json params, std::vector<LabeledGraph> levels,
                         const std::vector<std::vector<Vertex>>& bonding) {
  if (levels.empty()) throw InvalidInput("tower needs at least one level");
  if (bonding.size() + 1 != levels.size()) throw InvalidInput("need one bonding map per level step");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (!levels[k].complete()) throw IncompleteGraph("level " + std::to_string(k) + " is not complete");
    if (!levels[k].connected()) throw DisconnectedInput("level " + std::to_string(k) + " is not connected");
    if (k == 0) continue;
    auto check = is_covering(levels[k], levels[k - 1], bonding[k - 1]);
    if (!check) throw InvalidInput("bonding map " + std::to_string(k) + " -> " + std::to_string(k - 1) +
                                   " is not a covering: " + check.reason);
    if (bonding[k - 1][levels[k].basepoint()] != levels[k - 1].basepoint())
      throw InvalidInput("bonding map " + std::to_string(k) + " does not preserve basepoints");
  }
  std::vector<std::shared_ptr<const LabeledGraph>> out;
  std::vector<Vertex> prev_perm;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const LabeledGraph& g = levels[k];
    std::vector<Vertex> perm(g.vertex_count());
    // Levels already in the tower numbering keep their ids.
    bool keep = g.basepoint() == 0 && (k == 0 || std::is_sorted(prev_perm.begin(), prev_perm.end()));
    for (Vertex x = 0; keep && k > 0 && x < g.vertex_count(); ++x)
      keep = bonding[k - 1][x] == x % levels[k - 1].vertex_count();
    auto order = bfs_order(g);
    if (keep) {
      for (Vertex x = 0; x < g.vertex_count(); ++x) perm[x] = x;
    } else if (k == 0) {
      for (Vertex i = 0; i < order.size(); ++i) perm[order[i]] = i;
    } else {
      const Vertex n = levels[k - 1].vertex_count();
      std::vector<Vertex> next_sheet(n, 0);
      for (Vertex w : order) {
        Vertex lower = prev_perm[bonding[k - 1][w]];
        perm[w] = next_sheet[lower]++ * n + lower;
      }
    }
    out.push_back(std::make_shared<const LabeledGraph>(renumber(g, perm)));
    prev_perm = std::move(perm);
  }
  auto model = std::make_shared<const ExplicitModel>(std::move(out));
  TowerLimits limits;
  limits.eager_levels = model->depth();
  return Tower(std::move(name), std::move(params), std::move(model), limits);
}

const std::string& Tower::name() const { return state_->name; }
const nlohmann::json& Tower::params() const { return state_->params; }
const Alphabet& Tower::alphabet() const { return state_->model->alphabet(); }
const LevelModel& Tower::model() const { return *state_->model; }
std::shared_ptr<const LevelModel> Tower::shared_model() const { return state_->model; }
const TowerLimits& Tower::limits() const { return state_->limits; }
std::size_t Tower::depth() const { return state_->model->depth(); }

std::uint64_t Tower::vertex_count(std::size_t k) const {
  if (k >= state_->sizes.size()) throw BudgetExhausted("level " + std::to_string(k) + " beyond tower depth", 0, 0);
  return state_->sizes[k];
}

std::uint32_t Tower::degree(std::size_t k) const {
  if (k >= depth()) throw BudgetExhausted("level " + std::to_string(k + 1) + " beyond tower depth", 0, 0);
  return state_->model->degree(k);
}

std::vector<std::uint32_t> Tower::degrees() const {
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < depth(); ++k) out.push_back(degree(k));
  return out;
}

std::uint64_t Tower::step(std::size_t k, Letter g, std::uint64_t x) const { return view(k).step(g, x); }

std::uint64_t Tower::trace(std::size_t k, std::uint64_t x, const Word& w) const {
  LevelView v = view(k);
  for (Letter g : w.letters()) x = v.step(g, x);
  return x;
}

std::vector<std::uint64_t> Tower::fiber(std::size_t k, std::uint64_t v) const {
  const std::uint64_t n = vertex_count(k);
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < degree(k); ++s) out.push_back(s * n + v);
  return out;
}

std::shared_ptr<const LabeledGraph> Tower::level(std::size_t k) const {
  vertex_count(k);
  std::lock_guard lock(state_->mutex);
  return state_->materialize_locked(k);
}

bool Tower::materialized(std::size_t k) const {
  std::lock_guard lock(state_->mutex);
  return k < state_->cache.size() && state_->cache[k] != nullptr;
}

std::vector<Vertex> Tower::bonding(std::size_t k) const {
  const std::uint64_t n = vertex_count(k), m = vertex_count(k + 1);
  if (m >= kNoVertex) throw BudgetExhausted("bonding map too large", n, m);
  std::vector<Vertex> out(m);
  for (std::uint64_t x = 0; x < m; ++x) out[x] = static_cast<Vertex>(x % n);
  return out;
}

LevelView Tower::view(std::size_t k) const {
  const std::uint64_t n = vertex_count(k);
  std::lock_guard lock(state_->mutex);
  if (!state_->cache[k] && (n <= state_->limits.lazy_vertex_cap || state_->model->stored(k)))
    state_->materialize_locked(k);
  return LevelView(state_->cache[k], state_->model.get(), k);
}

}  // namespace schreier
