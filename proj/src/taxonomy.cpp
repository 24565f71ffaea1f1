#include "schreier/taxonomy.hpp"

#include <cctype>

#include "schreier/builders.hpp"
#include "schreier/errors.hpp"

namespace schreier {

namespace {

std::string upper_first(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

// Label whose cut moves sheet s at chain level j.
std::uint32_t moving_label(const VoltageChainModel& chain, std::size_t j, std::uint64_t s) {
  const ChainLevel& level = chain.chain_level(j);
  for (std::uint32_t label = 0; label < level.cuts.size(); ++label)
    if (!level.cuts[label].empty() && level.cuts[label][s] != s) return label;
  throw Error("taxonomy: sheet " + std::to_string(s) + " at level " + std::to_string(j + 1) +
              " is not moved by any cut");
}

// Position of s on the orbit of 0 under the cut (-1 if absent) and the orbit length.
std::pair<int, std::uint32_t> orbit_position(const Permutation& cut, std::uint64_t s) {
  if (cut.empty()) return {s == 0 ? 0 : -1, 1};
  int pos = -1;
  std::uint32_t len = 0;
  std::uint64_t x = 0;
  do {
    if (x == s) pos = static_cast<int>(len);
    x = cut[x];
    ++len;
  } while (x != 0);
  return {pos, len};
}

// Label of the piece of level k minus its basepoint that contains v != 0:
// decided by the most significant nonzero sheet digit.
std::uint32_t side_label(const VoltageChainModel& chain, std::size_t k, std::uint64_t v) {
  std::uint64_t rest = v;
  std::size_t top = 0;
  std::uint64_t top_sheet = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint32_t d = chain.degree(j);
    if (rest % d != 0) {
      top = j;
      top_sheet = rest % d;
    }
    rest /= d;
  }
  return moving_label(chain, top, top_sheet);
}

Tag classify_structural(const VoltageChainModel& chain, std::size_t k, std::uint64_t v_k, std::uint64_t v_k1) {
  const std::uint64_t s = v_k1 / chain.size(k);
  const std::uint32_t side = side_label(chain, k, v_k);
  auto [pos, len] = orbit_position(chain.chain_level(k).cuts[side], s);
  if (pos >= 0) return Tag{Tag::Kind::Line, side, static_cast<std::uint32_t>(pos) + 1, len};
  const std::uint32_t hang = moving_label(chain, k, s);
  auto [tpos, tlen] = orbit_position(chain.chain_level(k).cuts[hang], s);
  return Tag{Tag::Kind::Transverse, hang, static_cast<std::uint32_t>(tpos), tlen - 1};
}

}  // namespace

std::string Tag::name(const Alphabet& alphabet) const {
  switch (kind) {
    case Kind::AtBase: return "AtBase";
    case Kind::Line: {
      std::string base = upper_first(alphabet.name(label));
      if (of == 2) return base + (index == 1 ? "plus" : "minus");
      return base + std::to_string(index);
    }
    case Kind::Transverse: {
      std::string base = "T" + upper_first(alphabet.name(label));
      return of == 1 ? base : base + std::to_string(index);
    }
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Special: return "special";
    case Verdict::Dyadic: return "dyadic";
    case Verdict::FlipFlopping: return "flipflopping";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

Tag classify_level_by_components(const Tower& tower, std::size_t k, std::uint64_t v_k, std::uint64_t v_k1) {
  const std::uint64_t n = tower.vertex_count(k);
  if (v_k1 % n != v_k) throw InvalidInput("classify_level: vertices are not coherent");
  if (v_k == 0) return Tag{};
  auto graph = tower.level(k + 1);
  const LabeledGraph& g = *graph;
  auto deleted = [&](std::uint64_t x) { return x % n == 0; };
  std::vector<char> in(g.vertex_count(), 0);
  std::vector<Vertex> stack{static_cast<Vertex>(v_k1)};
  in[v_k1] = 1;
  const auto letters = g.alphabet().letters();
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Letter l : letters) {
      Vertex y = g.step(l, x);
      if (!in[y] && !deleted(y)) {
        in[y] = 1;
        stack.push_back(y);
      }
    }
  }
  // Line pieces: runs of the label cycle through the basepoint between deleted vertices.
  for (std::uint32_t label = 0; label < g.alphabet().size(); ++label) {
    const Letter c{label, false};
    std::uint32_t run = 1, found = 0, runs = 1;
    for (Vertex x = g.step(c, 0); x != 0; x = g.step(c, x)) {
      if (deleted(x)) {
        ++run;
        ++runs;
      } else if (in[x] && !found) {
        found = run;
      }
    }
    if (found) return Tag{Tag::Kind::Line, label, found, runs};
  }
  // Transverse pieces: attached to a deleted vertex c^{j m} other than the basepoint.
  for (std::uint32_t label = 0; label < g.alphabet().size(); ++label) {
    const Letter c{label, false};
    std::uint32_t index = 0, hits = 0, found = 0;
    for (Vertex x = g.step(c, 0); x != 0; x = g.step(c, x)) {
      if (!deleted(x)) continue;
      ++index;
      ++hits;
      for (Letter l : letters)
        if (in[g.step(l, x)] && !found) found = index;
    }
    if (found) return Tag{Tag::Kind::Transverse, label, found, hits};
  }
  throw Error("classify_level: component touches no preimage of the basepoint");
}

Tag classify_level(const Tower& tower, std::size_t k, std::uint64_t v_k, std::uint64_t v_k1) {
  const std::uint64_t n = tower.vertex_count(k);
  if (v_k1 % n != v_k || v_k1 >= tower.vertex_count(k + 1))
    throw InvalidInput("classify_level: vertices are not coherent");
  if (v_k == 0) return Tag{};
  if (const auto* chain = as_voltage_chain(tower.model())) return classify_structural(*chain, k, v_k, v_k1);
  return classify_level_by_components(tower, k, v_k, v_k1);
}

ClassificationTrace classify_fiber_point(FiberPoint& p, std::size_t budget) {
  if (budget < 4) throw InvalidInput("classify_fiber_point: budget must be at least 4");
  budget = std::min(budget, p.tower().depth());
  ClassificationTrace trace;
  trace.point = p.id();
  trace.budget = budget;
  for (std::size_t k = 0; k < budget; ++k) {
    Tag t = classify_level(p.tower(), k, p.vertex(k), p.vertex(k + 1));
    trace.tag_names.push_back(t.name(p.tower().alphabet()));
    trace.tags.push_back(t);
  }
  if (p.vertex(budget) == 0) {
    trace.verdict = Verdict::Special;
    return trace;
  }
  const std::size_t start = budget / 2, middle = (3 * budget) / 4;
  bool early = false, late = false;
  for (std::size_t level = start + 1; level <= budget; ++level) {
    if (trace.tags[level - 1].kind != Tag::Kind::Transverse) continue;
    (level <= middle ? early : late) = true;
  }
  if (!early && !late) trace.verdict = Verdict::Dyadic;
  else if (early && late) trace.verdict = Verdict::FlipFlopping;
  else trace.verdict = Verdict::Undetermined;
  return trace;
}

}  // namespace schreier
