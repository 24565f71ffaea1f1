#pragma once

#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schreier/labeled_graph.hpp"

namespace schreier {

struct BallSnapshot {
  std::uint64_t center = 0;
  std::uint32_t radius = 0;
  std::size_t level = 0;
  // BFS discovery order; letters are explored in alphabet order.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> members;

  std::size_t size() const { return members.size(); }
};

struct AnnulusCount {
  std::uint32_t count = 0;
  std::uint32_t touching = 0;

  friend bool operator==(const AnnulusCount&, const AnnulusCount&) = default;
};

namespace detail {

// Breadth-first ball on anything with step(Letter, uint64) and a letter list.
template <class View>
BallSnapshot bfs_ball(const View& view, const std::vector<Letter>& letters, std::uint64_t center,
                      std::uint32_t radius) {
  BallSnapshot out;
  out.center = center;
  out.radius = radius;
  std::unordered_map<std::uint64_t, std::uint32_t> seen;
  seen.emplace(center, 0);
  out.members.emplace_back(center, 0);
  for (std::size_t head = 0; head < out.members.size(); ++head) {
    auto [x, d] = out.members[head];
    if (d == radius) continue;
    for (Letter g : letters) {
      std::uint64_t y = view.step(g, x);
      if (seen.emplace(y, d + 1).second) out.members.emplace_back(y, d + 1);
    }
  }
  return out;
}

template <class View>
AnnulusCount annulus_in_ball(const View& view, const std::vector<Letter>& letters, const BallSnapshot& ball,
                             std::uint32_t r, std::uint32_t R) {
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<std::uint32_t> ring;
  for (std::uint32_t i = 0; i < ball.members.size(); ++i) {
    auto [x, d] = ball.members[i];
    if (d > r && d <= R) {
      index.emplace(x, static_cast<std::uint32_t>(ring.size()));
      ring.push_back(i);
    }
  }
  std::vector<std::uint32_t> parent(ring.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::uint32_t count = static_cast<std::uint32_t>(ring.size());
  for (std::uint32_t i = 0; i < ring.size(); ++i) {
    std::uint64_t x = ball.members[ring[i]].first;
    for (Letter g : letters) {
      auto it = index.find(view.step(g, x));
      if (it == index.end()) continue;
      std::uint32_t a = find(i), b = find(it->second);
      if (a != b) {
        parent[a] = b;
        --count;
      }
    }
  }
  std::vector<char> touches(ring.size(), 0);
  std::uint32_t touching = 0;
  for (std::uint32_t i = 0; i < ring.size(); ++i) {
    if (ball.members[ring[i]].second != R) continue;
    std::uint32_t root = find(i);
    if (!touches[root]) {
      touches[root] = 1;
      ++touching;
    }
  }
  return AnnulusCount{count, touching};
}

struct GraphView {
  const LabeledGraph* graph;
  std::uint64_t step(Letter g, std::uint64_t x) const { return graph->step(g, static_cast<Vertex>(x)); }
};

}  // namespace detail

BallSnapshot ball(const LabeledGraph& g, Vertex v, std::uint32_t r);

// Throws DisconnectedInput when v is unreachable from u.
std::uint32_t distance(const LabeledGraph& g, Vertex u, Vertex v);

// All BFS distances from v; unreachable vertices get UINT32_MAX.
std::vector<std::uint32_t> distances_from(const LabeledGraph& g, Vertex v);

AnnulusCount annulus_components(const LabeledGraph& g, Vertex v, std::uint32_t r, std::uint32_t R);

// Counts, within an already computed ball of radius >= R, the components of
// the shell r < d <= R and how many of them reach d = R.
AnnulusCount annulus_in_snapshot(const LabeledGraph& g, const BallSnapshot& ball, std::uint32_t r,
                                 std::uint32_t R);

}  // namespace schreier
