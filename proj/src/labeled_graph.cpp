#include "schreier/labeled_graph.hpp"

#include <algorithm>
#include <vector>

#include "schreier/errors.hpp"

namespace schreier {

LabeledGraph::LabeledGraph(Alphabet alphabet, Vertex vertex_count, Vertex basepoint)
    : alphabet_(std::move(alphabet)), vertex_count_(vertex_count), basepoint_(basepoint) {
  if (vertex_count == 0) throw InvalidInput("graph needs at least one vertex");
  if (basepoint >= vertex_count) throw InvalidInput("basepoint out of range");
  forward_.assign(alphabet_.size(), std::vector<Vertex>(vertex_count, kNoVertex));
  backward_.assign(alphabet_.size(), std::vector<Vertex>(vertex_count, kNoVertex));
}

void LabeledGraph::set_edge(Vertex u, std::uint32_t label, Vertex v) {
  if (u >= vertex_count_ || v >= vertex_count_ || label >= alphabet_.size())
    throw InvalidInput("edge out of range");
  Vertex& f = forward_[label][u];
  Vertex& b = backward_[label][v];
  if (f == v && b == u) return;
  if (f != kNoVertex || b != kNoVertex)
    throw InvalidInput("label '" + alphabet_.name(label) + "' is not injective at vertex " + std::to_string(u));
  f = v;
  b = u;
  ++defined_;
}

bool LabeledGraph::connected() const {
  std::vector<char> seen(vertex_count_, 0);
  std::vector<Vertex> stack{basepoint_};
  seen[basepoint_] = 1;
  Vertex count = 1;
  const auto letters = alphabet_.letters();
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Letter g : letters) {
      Vertex y = step(g, x);
      if (y != kNoVertex && !seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == vertex_count_;
}

LabeledGraph make_action_graph(const Alphabet& alphabet, const std::vector<std::vector<Vertex>>& perms,
                               Vertex basepoint) {
  if (perms.size() != alphabet.size()) throw InvalidInput("one permutation per label required");
  if (perms.empty()) throw InvalidInput("empty alphabet");
  const auto n = static_cast<Vertex>(perms.front().size());
  LabeledGraph g(alphabet, n, basepoint);
  for (std::uint32_t label = 0; label < perms.size(); ++label) {
    const auto& p = perms[label];
    std::vector<char> hit(n, 0);
    bool ok = p.size() == n;
    for (Vertex x = 0; ok && x < n; ++x) {
      if (p[x] >= n || hit[p[x]]) ok = false;
      else hit[p[x]] = 1;
    }
    if (!ok) throw InvalidInput("map for label '" + alphabet.name(label) + "' is not a bijection");
    for (Vertex x = 0; x < n; ++x) g.set_edge(x, label, p[x]);
  }
  return g;
}

LabeledGraph decorate_with_loops(const LabeledGraph& g, const std::vector<std::string>& add) {
  LabeledGraph out(g.alphabet().extended(add), g.vertex_count(), g.basepoint());
  for (std::uint32_t label = 0; label < g.alphabet().size(); ++label) {
    auto f = g.forward(label);
    for (Vertex x = 0; x < g.vertex_count(); ++x)
      if (f[x] != kNoVertex) out.set_edge(x, label, f[x]);
  }
  for (std::uint32_t label = static_cast<std::uint32_t>(g.alphabet().size()); label < out.alphabet().size(); ++label)
    for (Vertex x = 0; x < g.vertex_count(); ++x) out.set_edge(x, label, x);
  return out;
}

PrunedGraph prune_loops(const LabeledGraph& g, const std::vector<std::string>& drop) {
  Alphabet reduced = g.alphabet().without(drop);
  for (const auto& name : drop) {
    auto f = g.forward(g.alphabet().index(name));
    for (Vertex x = 0; x < g.vertex_count(); ++x)
      if (f[x] != x)
        throw InvalidInput("label '" + name + "' has a non-loop edge at vertex " + std::to_string(x));
  }
  PrunedGraph out{LabeledGraph(reduced, g.vertex_count(), g.basepoint()), {}};
  for (std::uint32_t label = 0; label < reduced.size(); ++label) {
    auto f = g.forward(g.alphabet().index(reduced.name(label)));
    for (Vertex x = 0; x < g.vertex_count(); ++x)
      if (f[x] != kNoVertex) out.graph.set_edge(x, label, f[x]);
  }
  out.retraction.resize(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) out.retraction[x] = x;
  return out;
}

CoveringCheck is_covering(const LabeledGraph& hi, const LabeledGraph& lo, std::span<const Vertex> vmap) {
  CoveringCheck out;
  if (hi.alphabet() != lo.alphabet()) {
    out.reason = "alphabets differ";
    return out;
  }
  if (vmap.size() != hi.vertex_count()) {
    out.reason = "vertex map is not total";
    return out;
  }
  for (Vertex x = 0; x < hi.vertex_count(); ++x) {
    if (vmap[x] >= lo.vertex_count()) {
      out.reason = "vertex map leaves the target";
      out.witness_vertex = x;
      return out;
    }
  }
  const auto letters = hi.alphabet().letters();
  for (Vertex x = 0; x < hi.vertex_count(); ++x) {
    for (Letter g : letters) {
      Vertex y = hi.step(g, x);
      Vertex expected = lo.step(g, vmap[x]);
      Vertex got = y == kNoVertex ? kNoVertex : vmap[y];
      if (got != expected) {
        out.reason = "not label-equivariant";
        out.witness_vertex = x;
        out.witness_letter = g;
        return out;
      }
    }
  }
  std::vector<std::uint64_t> fiber(lo.vertex_count(), 0);
  for (Vertex x = 0; x < hi.vertex_count(); ++x) ++fiber[vmap[x]];
  auto [mn, mx] = std::minmax_element(fiber.begin(), fiber.end());
  if (*mn == 0) {
    out.reason = "not surjective";
    out.witness_vertex = static_cast<Vertex>(mn - fiber.begin());
    return out;
  }
  if (*mn != *mx) {
    out.reason = "fiber sizes differ";
    out.witness_vertex = static_cast<Vertex>(mn - fiber.begin());
    return out;
  }
  out.covering = true;
  out.fiber_size = *mn;
  return out;
}

std::optional<std::vector<Vertex>> labeled_iso(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (g1.alphabet() != g2.alphabet() || g1.vertex_count() != g2.vertex_count()) return std::nullopt;
  const Vertex n = g1.vertex_count();
  std::vector<Vertex> map(n, kNoVertex), back(n, kNoVertex);
  map[g1.basepoint()] = g2.basepoint();
  back[g2.basepoint()] = g1.basepoint();
  std::vector<Vertex> queue{g1.basepoint()};
  const auto letters = g1.alphabet().letters();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Letter g : letters) {
      Vertex y1 = g1.step(g, x);
      Vertex y2 = g2.step(g, map[x]);
      if ((y1 == kNoVertex) != (y2 == kNoVertex)) return std::nullopt;
      if (y1 == kNoVertex) continue;
      if (map[y1] == kNoVertex) {
        if (back[y2] != kNoVertex) return std::nullopt;
        map[y1] = y2;
        back[y2] = y1;
        queue.push_back(y1);
      } else if (map[y1] != y2) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != n) return std::nullopt;
  return map;
}

LabeledGraph relabel(const LabeledGraph& g, const Alphabet& alphabet) {
  if (alphabet.size() != g.alphabet().size()) throw InvalidInput("relabel: alphabet sizes differ");
  LabeledGraph out(alphabet, g.vertex_count(), g.basepoint());
  for (std::uint32_t label = 0; label < alphabet.size(); ++label) {
    auto f = g.forward(label);
    for (Vertex x = 0; x < g.vertex_count(); ++x)
      if (f[x] != kNoVertex) out.set_edge(x, label, f[x]);
  }
  return out;
}

}  // namespace schreier
