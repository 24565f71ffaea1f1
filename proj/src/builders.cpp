#include "schreier/builders.hpp"

#include <limits>

#include "schreier/errors.hpp"
#include "schreier/subgroups.hpp"

namespace schreier {

namespace {

constexpr std::size_t kMaxDepth = 40;

// Number of levels of a constant-degree tower whose vertex ids fit in 63 bits.
std::size_t depth_for_degree(std::uint64_t degree) {
  std::uint64_t n = 1;
  std::size_t depth = 0;
  while (depth < kMaxDepth && n <= (std::numeric_limits<std::uint64_t>::max() >> 1) / degree) {
    n *= degree;
    ++depth;
  }
  return depth;
}

ChainLevel schori_level() {
  return ChainLevel{3, {cycle_permutation(3, {0, 1}), cycle_permutation(3, {0, 2})}};
}

ChainLevel five_fold_level() {
  return ChainLevel{5, {cycle_permutation(5, {0, 1, 2}), cycle_permutation(5, {0, 3, 4})}};
}

TowerLimits tower_limits(std::size_t K, const BuildLimits& limits) {
  if (K > limits.max_eager_levels)
    throw BudgetExhausted("level budget exceeded: K = " + std::to_string(K) + " > " +
                              std::to_string(limits.max_eager_levels),
                          0, 0);
  TowerLimits t;
  t.eager_levels = K;
  t.lazy_vertex_cap = limits.lazy_vertex_cap;
  return t;
}

Tower chain_tower(std::string name, nlohmann::json params, Alphabet alphabet, std::vector<ChainLevel> levels,
                  std::size_t K, const BuildLimits& limits) {
  auto model = std::make_shared<const VoltageChainModel>(std::move(alphabet), std::move(levels));
  return Tower(std::move(name), std::move(params), std::move(model), tower_limits(K, limits));
}

class TorusModel : public LevelModel {
 public:
  explicit TorusModel(std::size_t depth) : alphabet_({"a", "b"}), depth_(depth) {}

  const Alphabet& alphabet() const override { return alphabet_; }
  std::size_t depth() const override { return depth_; }
  std::uint32_t degree(std::size_t) const override { return 4; }

  // Digit t (base 4) of x holds bit t of both coordinates.
  std::uint64_t step(std::size_t k, Letter g, std::uint64_t x) const override {
    if (k == 0) return 0;
    std::uint64_t c[2] = {0, 0};
    for (std::size_t t = 0; t < k; ++t) {
      c[0] |= ((x >> (2 * t)) & 1u) << t;
      c[1] |= ((x >> (2 * t + 1)) & 1u) << t;
    }
    const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    c[g.label] = (g.inverse ? c[g.label] - 1 : c[g.label] + 1) & mask;
    std::uint64_t out = 0;
    for (std::size_t t = 0; t < k; ++t) {
      out |= ((c[0] >> t) & 1u) << (2 * t);
      out |= ((c[1] >> t) & 1u) << (2 * t + 1);
    }
    return out;
  }

 private:
  Alphabet alphabet_;
  std::size_t depth_;
};

class RtModel : public LevelModel {
 public:
  explicit RtModel(std::size_t depth) : alphabet_({"a", "b"}), depth_(depth) {}

  const Alphabet& alphabet() const override { return alphabet_; }
  std::size_t depth() const override { return depth_; }
  std::uint32_t degree(std::size_t) const override { return 2; }

  std::uint64_t step(std::size_t k, Letter g, std::uint64_t x) const override {
    const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    if (g.label == 1) return (0 - x) & mask;
    return (g.inverse ? x - 1 : x + 1) & mask;
  }

 private:
  Alphabet alphabet_;
  std::size_t depth_;
};

}  // namespace

VoltageChainModel::VoltageChainModel(Alphabet alphabet, std::vector<ChainLevel> levels)
    : alphabet_(std::move(alphabet)), levels_(std::move(levels)) {
  sizes_.push_back(1);
  for (auto& level : levels_) {
    if (level.degree == 0) throw InvalidInput("voltage chain: degree 0");
    level.cuts.resize(alphabet_.size());
    std::vector<Permutation> inverses;
    for (const auto& cut : level.cuts) {
      if (!cut.empty() && cut.size() != level.degree) throw InvalidInput("voltage chain: cut of wrong degree");
      inverses.push_back(cut.empty() ? cut : inverse_permutation(cut));
    }
    inverse_cuts_.push_back(std::move(inverses));
    if (sizes_.back() > (std::numeric_limits<std::uint64_t>::max() >> 1) / level.degree)
      throw InvalidInput("voltage chain: vertex count overflows");
    sizes_.push_back(sizes_.back() * level.degree);
  }
}

std::uint64_t VoltageChainModel::step(std::size_t k, Letter g, std::uint64_t x) const {
  std::uint64_t rest = x, out = 0;
  bool src_zero = true, dst_zero = true;
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint32_t d = levels_[j].degree;
    const std::uint64_t s = rest % d;
    rest /= d;
    const Permutation& cut = g.inverse ? inverse_cuts_[j][g.label] : levels_[j].cuts[g.label];
    const bool cross = g.inverse ? src_zero : dst_zero;
    const std::uint64_t t = (cross && !cut.empty()) ? cut[s] : s;
    src_zero = src_zero && s == 0;
    dst_zero = dst_zero && t == 0;
    out += t * sizes_[j];
  }
  return out;
}

VoltageAssignment VoltageChainModel::assignment(std::size_t k, const LabeledGraph& level_k) const {
  const ChainLevel& level = levels_.at(k);
  VoltageAssignment va(level.degree);
  for (std::uint32_t label = 0; label < alphabet_.size(); ++label) {
    if (level.cuts[label].empty()) continue;
    Vertex u = level_k.step(Letter{label, true}, level_k.basepoint());
    va.set(u, Letter{label, false}, level.cuts[label]);
  }
  return va;
}

LabeledGraph VoltageChainModel::materialize(std::size_t k, const LabeledGraph* previous) const {
  if (k == 0) return make_action_graph(alphabet_, std::vector<std::vector<Vertex>>(alphabet_.size(), {0}), 0);
  if (previous) return voltage_cover(*previous, assignment(k - 1, *previous)).graph;
  return LevelModel::materialize(k, nullptr);
}

DecoratedModel::DecoratedModel(std::shared_ptr<const LevelModel> inner, const std::vector<std::string>& extra)
    : inner_(std::move(inner)),
      alphabet_(inner_->alphabet().extended(extra)),
      inner_labels_(static_cast<std::uint32_t>(inner_->alphabet().size())) {}

LabeledGraph DecoratedModel::materialize(std::size_t k, const LabeledGraph* previous) const {
  std::vector<std::string> extra(alphabet_.names().begin() + inner_labels_, alphabet_.names().end());
  if (previous) {
    LabeledGraph pruned = prune_loops(*previous, extra).graph;
    return decorate_with_loops(inner_->materialize(k, &pruned), extra);
  }
  return decorate_with_loops(inner_->materialize(k, nullptr), extra);
}

const VoltageChainModel* as_voltage_chain(const LevelModel& model) {
  if (auto* chain = dynamic_cast<const VoltageChainModel*>(&model)) return chain;
  if (auto* decorated = dynamic_cast<const DecoratedModel*>(&model)) return as_voltage_chain(decorated->inner());
  return nullptr;
}

Tower build_dyadic_tower(std::size_t K, const BuildLimits& limits) {
  std::vector<ChainLevel> levels(depth_for_degree(2), ChainLevel{2, {cycle_permutation(2, {0, 1})}});
  return chain_tower("dyadic", {{"K", K}}, Alphabet({"a"}), std::move(levels), K, limits);
}

Tower build_torus_tower(std::size_t K, const BuildLimits& limits) {
  return Tower("torus", {{"K", K}}, std::make_shared<const TorusModel>(std::min<std::size_t>(31, depth_for_degree(4))),
               tower_limits(K, limits));
}

Tower build_rt_tower(std::size_t K, const BuildLimits& limits) {
  return Tower("rt", {{"K", K}}, std::make_shared<const RtModel>(depth_for_degree(2)), tower_limits(K, limits));
}

Tower build_schori_tower(std::size_t K, SchoriMethod method, const BuildLimits& limits) {
  if (method == SchoriMethod::Voltage) {
    std::vector<ChainLevel> levels(depth_for_degree(3), schori_level());
    return chain_tower("schori", {{"K", K}, {"method", "voltage"}}, Alphabet({"a", "b"}), std::move(levels), K,
                       limits);
  }
  if (K > limits.max_fold_levels)
    throw BudgetExhausted("level budget exceeded: folding method supports K <= " +
                              std::to_string(limits.max_fold_levels),
                          0, 0);
  std::vector<LabeledGraph> levels;
  std::vector<std::vector<Vertex>> bonding;
  for (std::size_t k = 0; k <= K; ++k) {
    auto spec = schori_generator_sets(k);
    levels.push_back(stallings_fold(spec.generators(), spec.alphabet()));
    if (k == 0) continue;
    // Trace BFS-tree representatives of the cosets of level k down to level k-1.
    const LabeledGraph& hi = levels[k];
    const LabeledGraph& lo = levels[k - 1];
    std::vector<Vertex> map(hi.vertex_count(), kNoVertex);
    std::vector<Vertex> queue{hi.basepoint()};
    map[hi.basepoint()] = lo.basepoint();
    const auto letters = hi.alphabet().letters();
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Letter g : letters) {
        Vertex y = hi.step(g, queue[head]);
        if (map[y] != kNoVertex) continue;
        map[y] = lo.step(g, map[queue[head]]);
        queue.push_back(y);
      }
    bonding.push_back(std::move(map));
  }
  return Tower::from_levels("schori", {{"K", K}, {"method", "folding"}}, std::move(levels), bonding);
}

Tower build_generalized_schori_tower(std::uint32_t n, GeneralizedVariant variant, std::size_t K,
                                     const BuildLimits& limits) {
  if (n < 1) throw InvalidInput("generalized tower needs n >= 1");
  const std::uint32_t handles = variant == GeneralizedVariant::FourN ? 2 * n : 2 * n + 1;
  std::vector<std::string> names;
  ChainLevel level{handles + 1, {}};
  for (std::uint32_t j = 1; j <= handles; ++j) {
    names.push_back("h" + std::to_string(j));
    level.cuts.push_back(cycle_permutation(handles + 1, {0, j}));
  }
  std::vector<ChainLevel> levels(depth_for_degree(handles + 1), level);
  nlohmann::json params{{"K", K}, {"n", n}, {"variant", variant == GeneralizedVariant::FourN ? "4n" : "4n+2"}};
  return chain_tower("generalized", std::move(params), Alphabet(std::move(names)), std::move(levels), K, limits);
}

Tower build_mixed_tower(const std::vector<std::uint32_t>& degrees, std::size_t K, const BuildLimits& limits) {
  if (K > degrees.size())
    throw BudgetExhausted("level budget exceeded: K larger than the degree sequence", 0, 0);
  std::vector<ChainLevel> levels;
  for (std::uint32_t d : degrees) {
    if (d == 3) levels.push_back(schori_level());
    else if (d == 5) levels.push_back(five_fold_level());
    else throw InvalidInput("mixed tower: degree " + std::to_string(d) + " is not 3 or 5");
  }
  return chain_tower("mixed", {{"K", K}, {"degrees", degrees}}, Alphabet({"a", "b"}), std::move(levels), K, limits);
}

std::vector<std::uint32_t> default_mixed_degrees(std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::size_t threes = 2; out.size() < count; ++threes) {
    out.push_back(5);
    for (std::size_t i = 0; i < threes && out.size() < count; ++i) out.push_back(3);
  }
  return out;
}

Tower decorate_tower(const Tower& tower, const std::vector<std::string>& labels) {
  nlohmann::json params = tower.params();
  params["decorate"] = labels;
  TowerLimits limits = tower.limits();
  limits.eager_levels = 0;
  return Tower(tower.name(), std::move(params), std::make_shared<const DecoratedModel>(tower.shared_model(), labels),
               limits);
}

}  // namespace schreier
