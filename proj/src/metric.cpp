#include "schreier/metric.hpp"

#include <limits>

#include "schreier/errors.hpp"

namespace schreier {

BallSnapshot ball(const LabeledGraph& g, Vertex v, std::uint32_t r) {
  if (v >= g.vertex_count()) throw InvalidInput("ball: vertex out of range");
  std::vector<std::uint32_t> dist(g.vertex_count(), std::numeric_limits<std::uint32_t>::max());
  BallSnapshot out;
  out.center = v;
  out.radius = r;
  dist[v] = 0;
  out.members.emplace_back(v, 0);
  const auto letters = g.alphabet().letters();
  for (std::size_t head = 0; head < out.members.size(); ++head) {
    auto [x, d] = out.members[head];
    if (d == r) continue;
    for (Letter l : letters) {
      Vertex y = g.step(l, static_cast<Vertex>(x));
      if (y == kNoVertex || dist[y] != std::numeric_limits<std::uint32_t>::max()) continue;
      dist[y] = d + 1;
      out.members.emplace_back(y, d + 1);
    }
  }
  return out;
}

std::vector<std::uint32_t> distances_from(const LabeledGraph& g, Vertex v) {
  if (v >= g.vertex_count()) throw InvalidInput("distance: vertex out of range");
  std::vector<std::uint32_t> dist(g.vertex_count(), std::numeric_limits<std::uint32_t>::max());
  std::vector<Vertex> queue{v};
  queue.reserve(g.vertex_count());
  dist[v] = 0;
  const auto letters = g.alphabet().letters();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Letter l : letters) {
      Vertex y = g.step(l, x);
      if (y == kNoVertex || dist[y] != std::numeric_limits<std::uint32_t>::max()) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

std::uint32_t distance(const LabeledGraph& g, Vertex u, Vertex v) {
  if (v >= g.vertex_count()) throw InvalidInput("distance: vertex out of range");
  if (u == v) return 0;
  auto d = distances_from(g, u)[v];
  if (d == std::numeric_limits<std::uint32_t>::max())
    throw DisconnectedInput("vertex " + std::to_string(v) + " is unreachable from " + std::to_string(u));
  return d;
}

AnnulusCount annulus_in_snapshot(const LabeledGraph& g, const BallSnapshot& b, std::uint32_t r,
                                 std::uint32_t R) {
  if (b.radius < R) throw InvalidInput("annulus: ball radius smaller than R");
  return detail::annulus_in_ball(detail::GraphView{&g}, g.alphabet().letters(), b, r, R);
}

AnnulusCount annulus_components(const LabeledGraph& g, Vertex v, std::uint32_t r, std::uint32_t R) {
  if (r >= R) throw InvalidInput("annulus: need r < R");
  return annulus_in_snapshot(g, ball(g, v, R), r, R);
}

}  // namespace schreier
