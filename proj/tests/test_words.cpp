#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "schreier/builders.hpp"
#include "schreier/errors.hpp"
#include "schreier/subgroups.hpp"
#include "schreier/voltage.hpp"
#include "schreier/word.hpp"

namespace schreier {
namespace {

const Alphabet kAB({"a", "b"});

Word w(const std::string& s) { return parse_word(s, kAB); }

std::set<Word> words(std::initializer_list<const char*> list) {
  std::set<Word> out;
  for (const char* s : list) out.insert(w(s));
  return out;
}

TEST(Reduce, Examples) {
  Letter a{0, false}, A{0, true}, b{1, false}, B{1, true};
  EXPECT_EQ(reduce({a, A, b}).letters(), (std::vector<Letter>{b}));
  EXPECT_TRUE(reduce({}).empty());
  EXPECT_EQ(reduce({a, b, B, a}).letters(), (std::vector<Letter>{a, a}));
  EXPECT_TRUE(reduce({a, b, B, A}).empty());
}

TEST(Reduce, ProductAndInverse) {
  Word u = w("abAB"), v = w("baBA");
  EXPECT_TRUE((u * u.inverse()).empty());
  EXPECT_EQ(u * v, reduce([&] {
              auto x = u.letters();
              x.insert(x.end(), v.letters().begin(), v.letters().end());
              return x;
            }()));
  EXPECT_EQ(conjugate(w("a"), w("b")), w("abA"));
  EXPECT_EQ(power(Letter{1, true}, 3), w("BBB"));
}

TEST(Reduce, RejectsForeignLabel) {
  EXPECT_THROW(reduce({Letter{2, false}}, kAB), InvalidInput);
}

TEST(Parse, RoundTrip) {
  for (const char* s : {"a", "aabAB", "bbbaBBB"}) EXPECT_EQ(format_word(w(s), kAB), s);
  EXPECT_EQ(format_word(Word{}, kAB), "1");
  EXPECT_TRUE(w("1").empty());
  EXPECT_EQ(w("aA"), Word{});
  EXPECT_THROW(w("abc"), InvalidInput);

  Alphabet h({"h1", "h2", "alpha"});
  Word x = parse_word("h1.h2^-1.alpha", h);
  EXPECT_EQ(x.size(), 3u);
  EXPECT_EQ(parse_word(format_word(x, h), h), x);
  EXPECT_THROW(parse_word("h3", h), InvalidInput);
}

TEST(Shortlex, ShorterFirst) {
  EXPECT_LT(w("b"), w("aa"));
  EXPECT_LT(w("a"), w("b"));
  EXPECT_LT(w(""), w("a"));
}

TEST(GeneratorSets, LevelZero) {
  SubgroupChainSpec s = schori_generator_sets(0);
  EXPECT_TRUE(s.ab.empty());
  EXPECT_TRUE(s.ba.empty());
  EXPECT_EQ(s.a, words({"a"}));
  EXPECT_EQ(s.b, words({"b"}));
}

TEST(GeneratorSets, LevelOne) {
  SubgroupChainSpec s = schori_generator_sets(1);
  EXPECT_EQ(s.ab, words({"abA"}));
  EXPECT_EQ(s.ba, words({"baB"}));
  EXPECT_EQ(s.a, words({"aa", "abA"}));
}

TEST(GeneratorSets, LevelTwo) {
  SubgroupChainSpec s = schori_generator_sets(2);
  EXPECT_EQ(s.ab, words({"abA", "aaabAAA", "aabbAA", "aabaBAA"}));
}

TEST(GeneratorSets, FullVariantAddsLoops) {
  SubgroupChainSpec s = schori_generator_sets(1, ChainVariant::Full);
  Alphabet full = s.alphabet();
  ASSERT_EQ(full.size(), 4u);
  std::set<Word> expected;
  for (const char* x : {"a.a", "b.b", "alpha", "beta", "a.b.a^-1", "a.beta.a^-1", "b.a.b^-1", "b.alpha.b^-1"})
    expected.insert(parse_word(x, full));
  std::vector<Word> gens = s.generators();
  EXPECT_EQ(std::set<Word>(gens.begin(), gens.end()), expected);
}

TEST(GeneratorSets, LengthBound) {
  for (std::size_t k = 0; k <= 7; ++k) {
    for (const Word& g : schori_generator_sets(k).generators()) {
      EXPECT_LE(g.size(), (std::size_t{2} << k) - 1) << k;
    }
  }
}

TEST(Fold, RoseAndInfiniteIndex) {
  LabeledGraph rose = stallings_fold({w("a"), w("b")}, kAB);
  EXPECT_EQ(rose.vertex_count(), 1u);
  EXPECT_TRUE(rose.complete());
  EXPECT_EQ(coset_count(rose), 1u);

  LabeledGraph line = stallings_fold({w("a")}, kAB);
  EXPECT_FALSE(line.complete());
  EXPECT_THROW(coset_count(line), IncompleteGraph);
}

TEST(Fold, ThreeVertexGraph) {
  LabeledGraph g = stallings_fold({w("aa"), w("bb"), w("abA"), w("baB")}, kAB);
  ASSERT_EQ(coset_count(g), 3u);
  Vertex va = trace_word(g, 0, w("a")), vb = trace_word(g, 0, w("b"));
  EXPECT_NE(va, vb);
  EXPECT_EQ(trace_word(g, va, w("a")), 0u);
  EXPECT_EQ(trace_word(g, va, w("b")), va);
  EXPECT_EQ(trace_word(g, vb, w("b")), 0u);
  EXPECT_EQ(trace_word(g, vb, w("a")), vb);
}

TEST(Fold, IndexIsPowerOfThree) {
  std::uint64_t expected = 1;
  for (std::size_t k = 0; k <= 7; ++k, expected *= 3) {
    SubgroupChainSpec s = schori_generator_sets(k);
    LabeledGraph g = stallings_fold(s.generators(), s.alphabet());
    EXPECT_EQ(coset_count(g), expected) << k;
    // A complete core graph of index n has rank n + 1; the generator list is a basis.
    EXPECT_EQ(s.generators().size(), expected + 1) << k;
  }
}

TEST(Fold, MembershipOfGenerators) {
  for (std::size_t k = 0; k <= 6; ++k) {
    SubgroupChainSpec s = schori_generator_sets(k);
    LabeledGraph g = stallings_fold(s.generators(), s.alphabet());
    for (const Word& x : s.generators()) EXPECT_EQ(trace_word(g, 0, x), 0u);
    std::uint64_t n = std::uint64_t{1} << k;
    EXPECT_EQ(trace_word(g, 0, power(Letter{0, false}, n)), 0u);
    if (k > 0) EXPECT_NE(trace_word(g, 0, power(Letter{0, false}, n / 2)), 0u);
    EXPECT_EQ(trace_word(g, 0, Word{}), 0u);
  }
}

TEST(Fold, ConfluentUnderShuffles) {
  std::mt19937_64 rng(1234);
  for (std::size_t k : {2u, 4u}) {
    SubgroupChainSpec s = schori_generator_sets(k);
    std::vector<Word> gens = s.generators();
    LabeledGraph ref = stallings_fold(gens, s.alphabet());
    for (int i = 0; i < 20; ++i) {
      std::shuffle(gens.begin(), gens.end(), rng);
      std::vector<Word> variant = gens;
      // Adding inverses and a product does not change the subgroup.
      variant.push_back(gens[0].inverse());
      variant.push_back(gens[1] * gens[2]);
      LabeledGraph g = stallings_fold(variant, s.alphabet());
      EXPECT_TRUE(labeled_iso(ref, g).has_value());
    }
  }
}

TEST(Fold, RejectsForeignLetters) {
  Word x = parse_word("c", Alphabet({"a", "b", "c"}));
  EXPECT_THROW(stallings_fold({x}, kAB), InvalidInput);
}

TEST(Trace, LeavesIncompleteGraph) {
  LabeledGraph line = stallings_fold({w("aa")}, kAB);
  EXPECT_THROW(trace_word(line, 0, w("b")), IncompleteGraph);
}

TEST(Voltage, IdentityGivesDisjointCopies) {
  LabeledGraph rose = make_action_graph(kAB, {{0}, {0}}, 0);
  Cover c = voltage_cover(rose, VoltageAssignment(3));
  EXPECT_EQ(c.graph.vertex_count(), 3u);
  EXPECT_FALSE(c.graph.connected());
}

TEST(Voltage, DoubleCoverOfTwoCycle) {
  Alphabet a({"a"});
  LabeledGraph two = make_action_graph(a, {{1, 0}}, 0);
  VoltageAssignment va(2);
  va.set(1, Letter{0, false}, cycle_permutation(2, {0, 1}));
  Cover c = voltage_cover(two, va);
  ASSERT_EQ(c.graph.vertex_count(), 4u);
  EXPECT_TRUE(c.graph.connected());
  Vertex x = 0;
  for (int i = 0; i < 4; ++i) x = c.graph.step(Letter{0, false}, x);
  EXPECT_EQ(x, 0u);
  EXPECT_NE(c.graph.step(Letter{0, false}, c.graph.step(Letter{0, false}, 0)), 0u);
  EXPECT_TRUE(is_covering(c.graph, two, c.bonding));
}

TEST(Voltage, SchoriPatternMatchesFold) {
  LabeledGraph rose = make_action_graph(kAB, {{0}, {0}}, 0);
  VoltageAssignment va(3);
  va.set(0, Letter{0, false}, cycle_permutation(3, {0, 1}));
  va.set(0, Letter{1, false}, cycle_permutation(3, {0, 2}));
  Cover c = voltage_cover(rose, va);
  SubgroupChainSpec s = schori_generator_sets(1);
  EXPECT_TRUE(labeled_iso(c.graph, stallings_fold(s.generators(), s.alphabet())).has_value());
}

TEST(Voltage, RejectsBadPermutation) {
  VoltageAssignment va(3);
  EXPECT_THROW(va.set(0, Letter{0, false}, {0, 0, 1}), InvalidInput);
  EXPECT_THROW(cycle_permutation(3, {0, 3}), InvalidInput);
}

TEST(Voltage, PermutationHelpers) {
  Permutation p = cycle_permutation(5, {0, 2, 4});
  EXPECT_EQ(p, (Permutation{2, 1, 4, 3, 0}));
  Permutation q = inverse_permutation(p);
  for (std::uint32_t i = 0; i < 5; ++i) EXPECT_EQ(q[p[i]], i);
  EXPECT_EQ(identity_permutation(3), (Permutation{0, 1, 2}));
}

TEST(Voltage, FoldingOracleUpToSeven) {
  Tower folded = build_schori_tower(7, SchoriMethod::Folding);
  Tower voltage = build_schori_tower(7, SchoriMethod::Voltage);
  for (std::size_t k = 0; k <= 7; ++k) {
    EXPECT_TRUE(labeled_iso(*folded.level(k), *voltage.level(k)).has_value()) << k;
  }
}

}  // namespace
}  // namespace schreier
