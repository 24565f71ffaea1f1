#include "schreier/voltage.hpp"

#include <string>

#include "schreier/errors.hpp"

namespace schreier {

Permutation identity_permutation(std::uint32_t degree) {
  Permutation p(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p[i] = i;
  return p;
}

Permutation inverse_permutation(const Permutation& p) {
  Permutation q(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

Permutation cycle_permutation(std::uint32_t degree, const std::vector<std::uint32_t>& cycle) {
  Permutation p = identity_permutation(degree);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i] >= degree) throw InvalidInput("cycle point out of range");
    p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return p;
}

void VoltageAssignment::set(Vertex v, Letter g, Permutation sigma) {
  std::vector<char> hit(degree_, 0);
  bool ok = sigma.size() == degree_;
  for (std::uint32_t i = 0; ok && i < degree_; ++i) {
    if (sigma[i] >= degree_ || hit[sigma[i]]) ok = false;
    else hit[sigma[i]] = 1;
  }
  if (!ok) throw InvalidInput("voltage is not a permutation of the sheets");
  darts_[{v, g.code()}] = std::move(sigma);
}

Cover voltage_cover(const LabeledGraph& g, const VoltageAssignment& va) {
  if (!g.complete()) throw IncompleteGraph("voltage_cover: base graph is not complete");
  const std::uint32_t d = va.degree();
  const std::uint64_t n = g.vertex_count();
  if (n * d > kNoVertex - 1) throw BudgetExhausted("voltage_cover: cover exceeds 32-bit vertex ids", n, n * d);

  // Normalize to forward darts.
  std::map<std::pair<Vertex, std::uint32_t>, Permutation> forward;
  for (const auto& [key, sigma] : va.darts()) {
    auto [v, code] = key;
    if (v >= n) throw InvalidInput("voltage on a dart outside the base graph");
    Letter l = Letter::from_code(code);
    if (l.label >= g.alphabet().size()) throw InvalidInput("voltage on an unknown label");
    std::pair<Vertex, std::uint32_t> fkey;
    Permutation fsigma;
    if (l.inverse) {
      fkey = {g.step(l, v), l.label};
      fsigma = inverse_permutation(sigma);
    } else {
      fkey = {v, l.label};
      fsigma = sigma;
    }
    auto [it, fresh] = forward.emplace(fkey, fsigma);
    if (!fresh && it->second != fsigma)
      throw InvalidInput("inconsistent reverse-dart voltage at vertex " + std::to_string(fkey.first) + " label '" +
                         g.alphabet().name(fkey.second) + "'");
  }

  Cover out{LabeledGraph(g.alphabet(), static_cast<Vertex>(n * d), g.basepoint()), {}};
  const Permutation id = identity_permutation(d);
  for (std::uint32_t label = 0; label < g.alphabet().size(); ++label) {
    auto f = g.forward(label);
    for (Vertex v = 0; v < n; ++v) {
      auto it = forward.find({v, label});
      const Permutation& sigma = it == forward.end() ? id : it->second;
      for (std::uint32_t i = 0; i < d; ++i)
        out.graph.set_edge(static_cast<Vertex>(i * n + v), label, static_cast<Vertex>(sigma[i] * n + f[v]));
    }
  }
  out.bonding.resize(n * d);
  for (std::uint64_t x = 0; x < n * d; ++x) out.bonding[x] = static_cast<Vertex>(x % n);
  return out;
}

}  // namespace schreier
