#include "schreier/subgroups.hpp"

#include <limits>
#include <numeric>

#include "schreier/errors.hpp"

namespace schreier {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

std::set<Word> conjugates(const Word& u, const std::set<Word>& ws) {
  std::set<Word> out;
  for (const Word& w : ws) out.insert(conjugate(u, w));
  return out;
}

void absorb(std::set<Word>& into, const std::set<Word>& from) { into.insert(from.begin(), from.end()); }

// Union-find folding of a based graph given as a list of closed words.
class Folder {
 public:
  explicit Folder(std::uint32_t labels) : letters_(2 * labels) { new_vertex(); }

  void add_loop(const Word& w) {
    const auto& ls = w.letters();
    if (ls.empty()) return;
    std::size_t i = 0, j = ls.size();
    std::uint32_t u = 0, v = 0;
    while (i < j) {
      std::uint32_t t = target(u, ls[i].code());
      if (t == kNone) break;
      u = t;
      ++i;
    }
    while (j > i) {
      std::uint32_t t = target(v, ls[j - 1].inverted().code());
      if (t == kNone) break;
      v = t;
      --j;
    }
    if (i == j) {
      pending_.emplace_back(u, v);
    } else {
      for (std::size_t p = i; p < j; ++p) {
        std::uint32_t next = (p + 1 == j) ? v : new_vertex();
        connect(u, ls[p], next);
        u = next;
      }
    }
    drain();
  }

  LabeledGraph finish(const Alphabet& alphabet) {
    drain();
    std::vector<std::uint32_t> order(parent_.size(), kNone);
    std::vector<std::uint32_t> queue{find(0)};
    order[queue[0]] = 0;
    const auto letters = alphabet.letters();
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::uint32_t x = queue[head];
      for (Letter g : letters) {
        std::uint32_t y = target(x, g.code());
        if (y != kNone && order[y] == kNone) {
          order[y] = static_cast<std::uint32_t>(queue.size());
          queue.push_back(y);
        }
      }
    }
    LabeledGraph out(alphabet, static_cast<Vertex>(queue.size()), 0);
    for (std::uint32_t x : queue)
      for (std::uint32_t label = 0; label < alphabet.size(); ++label) {
        std::uint32_t y = target(x, 2 * label);
        if (y != kNone) out.set_edge(order[x], label, order[y]);
      }
    return out;
  }

 private:
  std::uint32_t new_vertex() {
    auto id = static_cast<std::uint32_t>(parent_.size());
    parent_.push_back(id);
    rank_.push_back(0);
    adj_.insert(adj_.end(), letters_, kNone);
    return id;
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  std::uint32_t target(std::uint32_t x, std::uint32_t code) {
    std::uint32_t t = adj_[std::size_t{find(x)} * letters_ + code];
    return t == kNone ? kNone : find(t);
  }

  void set_half(std::uint32_t u, std::uint32_t code, std::uint32_t v) {
    std::uint32_t& slot = adj_[std::size_t{find(u)} * letters_ + code];
    if (slot == kNone) slot = v;
    else pending_.emplace_back(slot, v);
  }

  void connect(std::uint32_t u, Letter g, std::uint32_t v) {
    set_half(u, g.code(), v);
    set_half(v, g.inverted().code(), u);
  }

  void drain() {
    while (!pending_.empty()) {
      auto [x, y] = pending_.back();
      pending_.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (rank_[x] < rank_[y]) std::swap(x, y);
      if (rank_[x] == rank_[y]) ++rank_[x];
      parent_[y] = x;
      for (std::uint32_t code = 0; code < letters_; ++code) {
        std::uint32_t t = adj_[std::size_t{y} * letters_ + code];
        if (t != kNone) set_half(x, code, t);
      }
    }
  }

  std::uint32_t letters_;
  std::vector<std::uint32_t> parent_, rank_, adj_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pending_;
};

}  // namespace

Alphabet SubgroupChainSpec::alphabet() const {
  if (variant == ChainVariant::Full) return Alphabet({"a", "b", "alpha", "beta"});
  return Alphabet({"a", "b"});
}

std::vector<Word> SubgroupChainSpec::generators() const {
  const std::uint64_t m = std::uint64_t{1} << level;
  std::set<Word> all{power(Letter{0, false}, m), power(Letter{1, false}, m)};
  if (variant == ChainVariant::Full) {
    all.insert(power(Letter{2, false}, 1));
    all.insert(power(Letter{3, false}, 1));
  }
  absorb(all, ab);
  absorb(all, ba);
  return {all.begin(), all.end()};
}

SubgroupChainSpec schori_generator_sets(std::size_t k, ChainVariant variant) {
  if (k > 62) throw InvalidInput("schori_generator_sets: level too large");
  const Letter a{0, false}, b{1, false};
  SubgroupChainSpec s;
  s.variant = variant;
  s.a = {power(a, 1)};
  s.b = {power(b, 1)};
  if (variant == ChainVariant::Full) {
    s.a.insert(power(Letter{2, false}, 1));
    s.b.insert(power(Letter{3, false}, 1));
  }
  for (std::size_t level = 1; level <= k; ++level) {
    const std::uint64_t half = std::uint64_t{1} << (level - 1);
    const Word A = power(a, half), B = power(b, half);
    std::set<Word> ab = s.ab, ba = s.ba;
    absorb(ab, conjugates(A, s.ab));
    absorb(ab, conjugates(A, s.b));
    absorb(ba, conjugates(B, s.ba));
    absorb(ba, conjugates(B, s.a));
    s.ab = std::move(ab);
    s.ba = std::move(ba);
    s.a = s.ab;
    s.a.insert(power(a, 2 * half));
    s.b = s.ba;
    s.b.insert(power(b, 2 * half));
    if (variant == ChainVariant::Full) {
      s.a.insert(power(Letter{2, false}, 1));
      s.b.insert(power(Letter{3, false}, 1));
    }
  }
  s.level = k;
  return s;
}

LabeledGraph stallings_fold(const std::vector<Word>& gens, const Alphabet& alphabet) {
  Folder folder(static_cast<std::uint32_t>(alphabet.size()));
  for (const Word& w : gens) {
    for (Letter g : w.letters())
      if (g.label >= alphabet.size()) throw InvalidInput("stallings_fold: letter outside the alphabet");
    folder.add_loop(w);
  }
  return folder.finish(alphabet);
}

std::uint64_t coset_count(const LabeledGraph& g) {
  if (!g.complete()) throw IncompleteGraph("infinite index: folded graph is not complete");
  return g.vertex_count();
}

Vertex trace_word(const LabeledGraph& g, Vertex start, const Word& w) {
  Vertex x = start;
  for (Letter l : w.letters()) {
    x = g.step(l, x);
    if (x == kNoVertex) throw IncompleteGraph("trace_word: lift leaves the graph");
  }
  return x;
}

}  // namespace schreier
