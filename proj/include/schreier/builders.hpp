#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schreier/tower.hpp"
#include "schreier/voltage.hpp"

namespace schreier {

// One covering step of a voltage chain over a one-vertex rose: each label g
// carries cuts[g] (empty = identity) on the g-dart entering the basepoint.
struct ChainLevel {
  std::uint32_t degree = 1;
  std::vector<Permutation> cuts;
};

class VoltageChainModel : public LevelModel {
 public:
  VoltageChainModel(Alphabet alphabet, std::vector<ChainLevel> levels);

  const Alphabet& alphabet() const override { return alphabet_; }
  std::size_t depth() const override { return levels_.size(); }
  std::uint32_t degree(std::size_t k) const override { return levels_.at(k).degree; }
  std::uint64_t step(std::size_t k, Letter g, std::uint64_t x) const override;
  LabeledGraph materialize(std::size_t k, const LabeledGraph* previous) const override;

  const ChainLevel& chain_level(std::size_t k) const { return levels_.at(k); }
  std::uint64_t size(std::size_t k) const { return sizes_.at(k); }
  // The voltage that lifts level k to level k+1.
  VoltageAssignment assignment(std::size_t k, const LabeledGraph& level_k) const;

 private:
  Alphabet alphabet_;
  std::vector<ChainLevel> levels_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::vector<Permutation>> inverse_cuts_;
};

// Adds loop labels (identity permutations) to every level of an inner model.
class DecoratedModel : public LevelModel {
 public:
  DecoratedModel(std::shared_ptr<const LevelModel> inner, const std::vector<std::string>& extra);

  const Alphabet& alphabet() const override { return alphabet_; }
  std::size_t depth() const override { return inner_->depth(); }
  std::uint64_t base_size() const override { return inner_->base_size(); }
  std::uint32_t degree(std::size_t k) const override { return inner_->degree(k); }
  std::uint64_t step(std::size_t k, Letter g, std::uint64_t x) const override {
    return g.label < inner_labels_ ? inner_->step(k, g, x) : x;
  }
  LabeledGraph materialize(std::size_t k, const LabeledGraph* previous) const override;

  const LevelModel& inner() const { return *inner_; }

 private:
  std::shared_ptr<const LevelModel> inner_;
  Alphabet alphabet_;
  std::uint32_t inner_labels_;
};

// The voltage chain behind a model, looking through loop decorations.
const VoltageChainModel* as_voltage_chain(const LevelModel& model);

enum class SchoriMethod { Folding, Voltage };
enum class GeneralizedVariant { FourN, FourNPlusTwo };

struct BuildLimits {
  // Largest K accepted for eager materialization.
  std::size_t max_eager_levels = 12;
  // Largest K accepted by the folding method.
  std::size_t max_fold_levels = 9;
  std::uint64_t lazy_vertex_cap = 2'000'000;
};

// K is the number of eagerly built levels above level 0. Voltage-type and
// closed-form towers stay addressable to the depth where vertex ids fit in
// 63 bits (at most 40 levels); deeper levels are built lazily.
Tower build_dyadic_tower(std::size_t K, const BuildLimits& limits = {});
Tower build_torus_tower(std::size_t K, const BuildLimits& limits = {});
Tower build_rt_tower(std::size_t K, const BuildLimits& limits = {});
Tower build_schori_tower(std::size_t K, SchoriMethod method = SchoriMethod::Voltage,
                         const BuildLimits& limits = {});
Tower build_generalized_schori_tower(std::uint32_t n, GeneralizedVariant variant, std::size_t K,
                                     const BuildLimits& limits = {});
// Depth equals the length of the degree sequence; K <= length.
Tower build_mixed_tower(const std::vector<std::uint32_t>& degrees, std::size_t K, const BuildLimits& limits = {});

// 5 3 3 5 3 3 3 5 3 3 3 3 5 ...
std::vector<std::uint32_t> default_mixed_degrees(std::size_t count);

Tower decorate_tower(const Tower& tower, const std::vector<std::string>& labels);

}  // namespace schreier
