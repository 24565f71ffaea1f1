#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schreier/alphabet.hpp"

namespace schreier {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Finite graph whose edges are partial injections step_g, one per label.
// step_{g^-1} is stored explicitly as the inverse partial map.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(Alphabet alphabet, Vertex vertex_count, Vertex basepoint);

  const Alphabet& alphabet() const { return alphabet_; }
  Vertex vertex_count() const { return vertex_count_; }
  Vertex basepoint() const { return basepoint_; }
  bool complete() const { return defined_ == std::uint64_t{vertex_count_} * alphabet_.size(); }

  // kNoVertex when the edge is undefined.
  Vertex step(Letter g, Vertex v) const {
    return (g.inverse ? backward_[g.label] : forward_[g.label])[v];
  }

  std::span<const Vertex> forward(std::uint32_t label) const { return forward_.at(label); }
  std::span<const Vertex> backward(std::uint32_t label) const { return backward_.at(label); }

  // Adds u --label--> v. Throws InvalidInput if it conflicts with an existing edge.
  void set_edge(Vertex u, std::uint32_t label, Vertex v);

  bool connected() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  Alphabet alphabet_;
  Vertex vertex_count_ = 0;
  Vertex basepoint_ = 0;
  std::uint64_t defined_ = 0;
  std::vector<std::vector<Vertex>> forward_;
  std::vector<std::vector<Vertex>> backward_;
};

LabeledGraph make_action_graph(const Alphabet& alphabet, const std::vector<std::vector<Vertex>>& perms,
                               Vertex basepoint);

LabeledGraph decorate_with_loops(const LabeledGraph& g, const std::vector<std::string>& add);

struct PrunedGraph {
  LabeledGraph graph;
  // Retraction on vertices; always the identity, kept for callers that compose maps.
  std::vector<Vertex> retraction;
};

PrunedGraph prune_loops(const LabeledGraph& g, const std::vector<std::string>& drop);

struct CoveringCheck {
  bool covering = false;
  std::uint64_t fiber_size = 0;
  // First violated (vertex, letter) pair when equivariance fails.
  std::optional<Vertex> witness_vertex;
  std::optional<Letter> witness_letter;
  std::string reason;

  explicit operator bool() const { return covering; }
};

CoveringCheck is_covering(const LabeledGraph& hi, const LabeledGraph& lo, std::span<const Vertex> vmap);

// The basepoint-preserving label-equivariant bijection G1 -> G2, if any.
std::optional<std::vector<Vertex>> labeled_iso(const LabeledGraph& g1, const LabeledGraph& g2);

// Same graph with labels renamed positionally; the permutations are untouched.
LabeledGraph relabel(const LabeledGraph& g, const Alphabet& alphabet);

}  // namespace schreier
