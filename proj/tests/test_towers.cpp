#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "schreier/builders.hpp"
#include "schreier/errors.hpp"
#include "schreier/metric.hpp"
#include "schreier/subgroups.hpp"

namespace schreier {
namespace {

const Letter kA{0, false}, kAi{0, true}, kB{1, false}, kBi{1, true};

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Vertex a^l of level k, by walking l steps from the basepoint.
std::uint64_t a_power(const Tower& t, std::size_t k, std::uint64_t l, Letter g = kA) {
  std::uint64_t x = 0;
  for (std::uint64_t i = 0; i < l; ++i) x = t.step(k, g, x);
  return x;
}

TEST(Dyadic, LevelZeroIsLoop) {
  Tower t = build_dyadic_tower(0);
  const LabeledGraph& g = *t.level(0);
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.step(kA, 0), 0u);
}

TEST(Dyadic, EightCycle) {
  Tower t = build_dyadic_tower(3);
  const LabeledGraph& g = *t.level(3);
  ASSERT_EQ(g.vertex_count(), 8u);
  std::set<Vertex> orbit;
  Vertex x = 0;
  for (int i = 0; i < 8; ++i) orbit.insert(x = g.step(kA, x));
  EXPECT_EQ(orbit.size(), 8u);
  std::vector<Vertex> bond = t.bonding(2);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(bond[v], v % 4);
  CoveringCheck c = is_covering(g, *t.level(2), bond);
  EXPECT_TRUE(c);
  EXPECT_EQ(c.fiber_size, 2u);
}

TEST(Torus, SizesAndCovering) {
  Tower t = build_torus_tower(4);
  EXPECT_EQ(t.vertex_count(1), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(t.vertex_count(k), ipow(4, k));
    EXPECT_TRUE(is_covering(*t.level(k + 1), *t.level(k), t.bonding(k)));
    // Both generators commute on a torus.
    const LabeledGraph& g = *t.level(k + 1);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      EXPECT_EQ(g.step(kA, g.step(kB, v)), g.step(kB, g.step(kA, v)));
  }
}

TEST(Schori, LevelOneIsFold) {
  Tower t = build_schori_tower(1);
  LabeledGraph f = stallings_fold({power(kA, 2), power(kB, 2), conjugate(power(kA, 1), power(kB, 1)),
                                   conjugate(power(kB, 1), power(kA, 1))},
                                  Alphabet({"a", "b"}));
  EXPECT_TRUE(labeled_iso(*t.level(1), f).has_value());
}

TEST(Schori, IndexAndCoverings) {
  Tower t = build_schori_tower(8);
  for (std::size_t k = 0; k <= 8; ++k) {
    EXPECT_EQ(t.level(k)->vertex_count(), ipow(3, k));
    EXPECT_TRUE(t.level(k)->connected());
    if (k < 8) {
      CoveringCheck c = is_covering(*t.level(k + 1), *t.level(k), t.bonding(k));
      EXPECT_TRUE(c) << c.reason;
      EXPECT_EQ(c.fiber_size, 3u);
    }
  }
}

TEST(Schori, PreimagesOfBase) {
  Tower t = build_schori_tower(7);
  for (std::size_t k = 0; k < 7; ++k) {
    std::uint64_t m = std::uint64_t{1} << k;
    std::set<std::uint64_t> expected{0, a_power(t, k + 1, m, kA), a_power(t, k + 1, m, kB)};
    std::vector<std::uint64_t> fib = t.fiber(k, 0);
    EXPECT_EQ(std::set<std::uint64_t>(fib.begin(), fib.end()), expected) << k;
    EXPECT_EQ(expected.size(), 3u);
  }
}

TEST(Schori, TraceOfPowers) {
  Tower t = build_schori_tower(6);
  for (std::size_t k = 1; k <= 6; ++k) {
    std::uint64_t m = std::uint64_t{1} << k;
    EXPECT_EQ(a_power(t, k, m), 0u);
    EXPECT_NE(a_power(t, k, m / 2), 0u);
    EXPECT_EQ(t.trace(k, 0, power(kB, m)), 0u);
  }
}

TEST(Schori, MetricLawOnTheACycle) {
  Tower t = build_schori_tower(8);
  for (std::size_t k = 1; k <= 8; ++k) {
    const LabeledGraph& g = *t.level(k);
    std::int64_t n = std::int64_t{1} << k;
    std::vector<Vertex> cyc(n);
    for (std::int64_t l = 0; l < n; ++l) cyc[l] = static_cast<Vertex>(a_power(t, k, l));
    for (std::int64_t l = 0; l < n; ++l) {
      auto d = distances_from(g, cyc[l]);
      for (std::int64_t m = 0; m < n; ++m) {
        std::int64_t diff = std::abs(m - l);
        EXPECT_EQ(d[cyc[m]], static_cast<std::uint32_t>(std::min(diff, n - diff)));
      }
    }
  }
}

TEST(Schori, BallOfHalfCycleCoversLevel) {
  // B(id_i, 2^k - 1) in a deep level i projects onto level k and is cut off by exactly 4 edges.
  Tower t = build_schori_tower(8);
  const LabeledGraph& deep = *t.level(8);
  for (std::size_t k = 1; k <= 5; ++k) {
    std::uint32_t R = (1u << k) - 1;
    BallSnapshot b = ball(deep, 0, R);
    std::set<std::uint64_t> inside, image;
    for (auto [x, d] : b.members) {
      inside.insert(x);
      image.insert(x % t.vertex_count(k));
    }
    EXPECT_EQ(image.size(), t.vertex_count(k)) << k;
    std::size_t boundary = 0;
    for (std::uint64_t x : inside)
      for (Letter l : deep.alphabet().letters()) boundary += !inside.count(deep.step(l, static_cast<Vertex>(x)));
    EXPECT_EQ(boundary, 4u) << k;
  }
}

TEST(Schori, VoltageViewAgreesWithGraph) {
  Tower t = build_schori_tower(9);
  std::mt19937_64 rng(2);
  for (std::size_t k : {3u, 6u, 9u}) {
    const LabeledGraph& g = *t.level(k);
    for (int i = 0; i < 200; ++i) {
      Vertex v = static_cast<Vertex>(rng() % g.vertex_count());
      for (Letter l : {kA, kAi, kB, kBi}) EXPECT_EQ(t.model().step(k, l, v), g.step(l, v));
    }
  }
}

TEST(Schori, BudgetLimits) {
  EXPECT_THROW(build_schori_tower(13), BudgetExhausted);
  EXPECT_THROW(build_schori_tower(10, SchoriMethod::Folding), BudgetExhausted);

  Tower t = build_schori_tower(2);
  Tower capped("capped", {}, t.shared_model(), TowerLimits{0, 10, 30});
  EXPECT_NO_THROW(capped.level(3));
  EXPECT_THROW(capped.level(4), BudgetExhausted);
  // Levels above the lazy cap are still navigable.
  EXPECT_FALSE(capped.view(5).materialized());
  EXPECT_EQ(capped.view(5).step(kA, 0), t.step(5, kA, 0));
}

TEST(Tower, FromLevelsRenumbers) {
  // Dyadic levels with a scrambled numbering on level 2.
  Alphabet a({"a"});
  LabeledGraph l0 = make_action_graph(a, {{0}}, 0);
  LabeledGraph l1 = make_action_graph(a, {{1, 0}}, 0);
  // 0 -> 2 -> 1 -> 3 -> 0
  LabeledGraph l2 = make_action_graph(a, {{2, 3, 1, 0}}, 0);
  std::vector<std::vector<Vertex>> bonding{{0, 0}, {0, 0, 1, 1}};
  Tower t = Tower::from_levels("x", {}, {l0, l1, l2}, bonding);
  EXPECT_TRUE(labeled_iso(*t.level(2), l2).has_value());
  EXPECT_TRUE(is_covering(*t.level(2), *t.level(1), t.bonding(1)));
  EXPECT_EQ(t.step(2, kA, t.step(2, kA, 0)) % 2, 0u);

  std::vector<std::vector<Vertex>> bad{{0, 0}, {0, 1, 0, 1}};
  EXPECT_THROW(Tower::from_levels("x", {}, {l0, l1, l2}, bad), InvalidInput);
}

TEST(Rt, ReflectionRelation) {
  Tower t = build_rt_tower(12);
  for (std::size_t k = 0; k <= 12; ++k) {
    const LabeledGraph& g = *t.level(k);
    EXPECT_EQ(g.vertex_count(), ipow(2, k));
    std::size_t fixed = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      EXPECT_EQ(g.step(kB, g.step(kA, g.step(kB, v))), g.step(kAi, v));
      fixed += g.step(kB, v) == v;
    }
    EXPECT_EQ(fixed, k == 0 ? 1u : 2u) << k;
    if (k) EXPECT_TRUE(is_covering(g, *t.level(k - 1), t.bonding(k - 1)));
  }
}

TEST(Generalized, NOneIsSchori) {
  Tower g = build_generalized_schori_tower(1, GeneralizedVariant::FourN, 3);
  Tower s = build_schori_tower(3);
  for (std::size_t k = 0; k <= 3; ++k) {
    LabeledGraph h = relabel(*g.level(k), Alphabet({"a", "b"}));
    EXPECT_TRUE(labeled_iso(h, *s.level(k)).has_value()) << k;
  }
}

TEST(Generalized, SizesAndPreimages) {
  for (auto [n, var, handles] : {std::tuple{2u, GeneralizedVariant::FourN, 4u},
                                 std::tuple{1u, GeneralizedVariant::FourNPlusTwo, 3u},
                                 std::tuple{2u, GeneralizedVariant::FourNPlusTwo, 5u}}) {
    Tower t = build_generalized_schori_tower(n, var, 3);
    ASSERT_EQ(t.alphabet().size(), handles);
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(t.vertex_count(k), ipow(handles + 1, k));
      EXPECT_TRUE(is_covering(*t.level(k + 1), *t.level(k), t.bonding(k)));
      std::uint64_t m = std::uint64_t{1} << k;
      std::set<std::uint64_t> expected{0};
      for (std::uint32_t h = 0; h < handles; ++h) expected.insert(a_power(t, k + 1, m, Letter{h, false}));
      std::vector<std::uint64_t> fib = t.fiber(k, 0);
      EXPECT_EQ(std::set<std::uint64_t>(fib.begin(), fib.end()), expected);
    }
  }
}

TEST(Mixed, DefaultSequence) {
  EXPECT_EQ(default_mixed_degrees(13), (std::vector<std::uint32_t>{5, 3, 3, 5, 3, 3, 3, 5, 3, 3, 3, 3, 5}));
}

TEST(Mixed, SizesAndFivefoldPreimages) {
  std::vector<std::uint32_t> deg = default_mixed_degrees(8);
  Tower t = build_mixed_tower(deg, 6);
  EXPECT_EQ(t.depth(), 8u);
  std::uint64_t size = 1;
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_EQ(t.vertex_count(k), size);
    EXPECT_TRUE(is_covering(*t.level(k + 1), *t.level(k), t.bonding(k)));
    // Length of the a-cycle through the base at level k.
    std::uint64_t m = 1;
    while (a_power(t, k, m) != 0) ++m;
    std::set<std::uint64_t> expected{0};
    for (std::uint64_t i = 1; i < deg[k] / 2 + 1; ++i) {
      expected.insert(a_power(t, k + 1, i * m, kA));
      expected.insert(a_power(t, k + 1, i * m, kB));
    }
    std::vector<std::uint64_t> fib = t.fiber(k, 0);
    EXPECT_EQ(std::set<std::uint64_t>(fib.begin(), fib.end()), expected) << k;
    size *= deg[k];
  }
}

TEST(Mixed, AllThreesIsSchori) {
  Tower m = build_mixed_tower(std::vector<std::uint32_t>(5, 3), 5);
  Tower s = build_schori_tower(5);
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_EQ(*m.level(k), *s.level(k));
}

TEST(Mixed, RejectsOtherDegrees) {
  EXPECT_THROW(build_mixed_tower({3, 4}, 1), InvalidInput);
  EXPECT_THROW(build_mixed_tower({3, 3}, 3), BudgetExhausted);
}

TEST(Decorated, PrunesBack) {
  Tower t = build_schori_tower(4);
  Tower d = decorate_tower(t, {"alpha", "beta"});
  EXPECT_EQ(d.alphabet().size(), 4u);
  for (std::size_t k = 0; k <= 4; ++k) {
    EXPECT_EQ(*d.level(k), decorate_with_loops(*t.level(k), {"alpha", "beta"}));
    EXPECT_EQ(prune_loops(*d.level(k), {"alpha", "beta"}).graph, *t.level(k));
  }
}

}  // namespace
}  // namespace schreier
