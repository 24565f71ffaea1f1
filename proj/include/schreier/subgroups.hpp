#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "schreier/labeled_graph.hpp"
#include "schreier/word.hpp"

namespace schreier {

enum class ChainVariant { Simplified, Full };

// Generator sets of the Schori chain at one level. Simplified words use the
// alphabet {a, b}; the full variant uses {a, b, alpha, beta}.
struct SubgroupChainSpec {
  std::size_t level = 0;
  ChainVariant variant = ChainVariant::Simplified;
  std::set<Word> ab, ba, a, b;

  Alphabet alphabet() const;
  // a^{2^k}, b^{2^k}, S_kab, S_kba (plus alpha, beta in the full variant).
  std::vector<Word> generators() const;
};

SubgroupChainSpec schori_generator_sets(std::size_t k, ChainVariant variant = ChainVariant::Simplified);

// Folded core graph of the subgroup generated by gens, based at the subgroup
// coset. Vertices are numbered in BFS order from the basepoint.
LabeledGraph stallings_fold(const std::vector<Word>& gens, const Alphabet& alphabet);

// Throws IncompleteGraph ("infinite index") when g is not complete.
std::uint64_t coset_count(const LabeledGraph& g);

// Throws IncompleteGraph when the lift leaves the graph.
Vertex trace_word(const LabeledGraph& g, Vertex start, const Word& w);

}  // namespace schreier
