#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "schreier/labeled_graph.hpp"

namespace schreier {

using Permutation = std::vector<std::uint32_t>;

Permutation identity_permutation(std::uint32_t degree);
Permutation inverse_permutation(const Permutation& p);
// Cycle on the listed points, identity elsewhere.
Permutation cycle_permutation(std::uint32_t degree, const std::vector<std::uint32_t>& cycle);

// Permutation voltages on darts of a base graph. A dart is (vertex, letter):
// the edge leaving the vertex along the letter. Unset darts carry the identity.
class VoltageAssignment {
 public:
  explicit VoltageAssignment(std::uint32_t degree) : degree_(degree) {}

  std::uint32_t degree() const { return degree_; }
  // Throws InvalidInput if sigma is not a permutation of {0..degree-1}.
  void set(Vertex v, Letter g, Permutation sigma);
  const std::map<std::pair<Vertex, std::uint32_t>, Permutation>& darts() const { return darts_; }

 private:
  std::uint32_t degree_;
  std::map<std::pair<Vertex, std::uint32_t>, Permutation> darts_;  // key: (vertex, letter code)
};

struct Cover {
  LabeledGraph graph;
  std::vector<Vertex> bonding;
};

// Vertex (v, i) of the cover gets id i * |V(G)| + v, so the bonding map is
// reduction mod |V(G)| and the basepoint keeps its id.
Cover voltage_cover(const LabeledGraph& g, const VoltageAssignment& va);

}  // namespace schreier
