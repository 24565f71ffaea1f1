// One line per acceptance criterion: PASS/FAIL, number, name, wall time, detail.
// Exit status is the number of failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "schreier/builders.hpp"
#include "schreier/ends.hpp"
#include "schreier/errors.hpp"
#include "schreier/fiber.hpp"
#include "schreier/io.hpp"
#include "schreier/metric.hpp"
#include "schreier/sampler.hpp"
#include "schreier/subgroups.hpp"
#include "schreier/taxonomy.hpp"

using namespace schreier;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
};

std::string ends_of(const Tower& t, const std::string& policy) {
  FiberPoint p(t, make_policy(policy));
  try {
    return estimate_ends(p).verdict_text();
  } catch (const BudgetExhausted&) {
    return "unstable";
  }
}

std::uint64_t walk(const LabeledGraph& g, Letter l, std::uint64_t n) {
  Vertex x = g.basepoint();
  for (std::uint64_t i = 0; i < n; ++i) x = g.step(l, x);
  return x;
}

std::string run_binary(const std::string& args) {
  std::string cmd = std::string(SCHREIER_CLI) + " " + args + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf;
  while (pipe && fgets(buf.data(), buf.size(), pipe.get())) out += buf.data();
  return out;
}

const Letter kA{0, false}, kAi{0, true}, kB{1, false};

void index_law(Outcome& o) {
  Tower folded = build_schori_tower(7, SchoriMethod::Folding);
  Tower voltage = build_schori_tower(12);
  std::uint64_t expected = 1;
  for (std::size_t k = 0; k <= 12; ++k, expected *= 3) {
    if (k <= 7) {
      o.check(folded.level(k)->vertex_count() == expected, "folding k=" + std::to_string(k));
      SubgroupChainSpec s = schori_generator_sets(k);
      o.check(coset_count(stallings_fold(s.generators(), s.alphabet())) == expected, "coset_count k=" + std::to_string(k));
    }
    o.check(voltage.level(k)->vertex_count() == expected, "voltage k=" + std::to_string(k));
  }
  o.detail << " 3^k for k<=7 (folding) and k<=12 (voltage)";
}

void oracle_agreement(Outcome& o) {
  Tower folded = build_schori_tower(7, SchoriMethod::Folding);
  Tower voltage = build_schori_tower(7);
  for (std::size_t k = 0; k <= 7; ++k)
    o.check(labeled_iso(*folded.level(k), *voltage.level(k)).has_value(), "k=" + std::to_string(k));
  o.detail << " labeled_iso k=0..7";
}

void metric_law(Outcome& o) {
  Tower t = build_schori_tower(10);
  std::mt19937_64 rng(20240601);
  std::uint64_t pairs = 0;
  for (std::size_t k = 1; k <= 10; ++k) {
    const LabeledGraph& g = *t.level(k);
    const std::int64_t n = std::int64_t{1} << k;
    std::vector<Vertex> cyc(n);
    for (std::int64_t l = 0; l < n; ++l) cyc[l] = static_cast<Vertex>(walk(g, kA, l));
    std::vector<std::int64_t> sources;
    if (k < 10) {
      for (std::int64_t l = 0; l < n; ++l) sources.push_back(l);
    } else {
      for (int i = 0; i < 12; ++i) sources.push_back(static_cast<std::int64_t>(rng() % n));
    }
    for (std::int64_t l : sources) {
      auto d = distances_from(g, cyc[l]);
      for (std::int64_t m = 0; m < n; ++m) {
        std::int64_t diff = m > l ? m - l : l - m;
        if (d[cyc[m]] != static_cast<std::uint32_t>(std::min(diff, n - diff))) {
          o.check(false, "k=" + std::to_string(k) + " l=" + std::to_string(l) + " m=" + std::to_string(m));
          return;
        }
        ++pairs;
      }
    }
  }
  o.detail << " " << pairs << " pairs";
}

void schori_ends(Outcome& o) {
  Tower t = build_schori_tower(6);
  for (auto [policy, want] : {std::pair{"id", "4"}, {"dyadic:1:1", "2"}, {"q", "1"}, {"qprime", "1"}}) {
    std::string got = ends_of(t, policy);
    o.detail << " " << policy << "=" << got;
    o.check(got == want, std::string(policy) + " expected " + want);
  }
}

void generalized_ends(Outcome& o) {
  std::string a = ends_of(build_generalized_schori_tower(2, GeneralizedVariant::FourN, 0), "id");
  std::string b = ends_of(build_generalized_schori_tower(1, GeneralizedVariant::FourNPlusTwo, 0), "id");
  o.detail << " n=2 4n: " << a << ", n=1 4n+2: " << b;
  o.check(a == "8", "n=2 4n expected 8");
  o.check(b == "6", "n=1 4n+2 expected 6");
}

void rt(Outcome& o) {
  Tower t = build_rt_tower(12);
  for (std::size_t k = 0; k <= 12; ++k) {
    const LabeledGraph& g = *t.level(k);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.step(kB, g.step(kA, g.step(kB, v))) != g.step(kAi, v)) {
        o.check(false, "bab != a^-1 at k=" + std::to_string(k));
        break;
      }
  }
  std::string id = ends_of(t, "id");
  std::string one = ends_of(t, "word:a");
  std::string line = ends_of(t, "line:a");
  o.detail << " id=" << id << " l_k=1: " << one << " (non-integer point line:a=" << line << ")";
  o.check(id == "1", "id expected 1");
  o.check(one == "2", "l_k=1 expected 2");
}

void mixed(Outcome& o) {
  Tower t = build_mixed_tower(default_mixed_degrees(10), 0);
  std::string id = ends_of(t, "id"), line = ends_of(t, "line:a"), far = ends_of(t, "far");
  FiberPoint pl(t, make_policy("line:a")), pf(t, make_policy("far"));
  std::string cl = to_string(classify_fiber_point(pl, 10).verdict);
  std::string cf = to_string(classify_fiber_point(pf, 10).verdict);
  o.detail << " id=" << id << " line:a(" << cl << ")=" << line << " far(" << cf << ")=" << far;
  o.check(id == "4", "id expected 4");
  o.check(cl == "dyadic" && line == "2", "dyadic-type point expected 2");
  o.check(cf == "flipflopping" && far == "1", "flip-flopping-type point expected 1");
}

void constant_towers(Outcome& o) {
  std::map<std::string, int> dy, to;
  Tower d = build_dyadic_tower(0), t = build_torus_tower(0);
  for (int s = 1; s <= 20; ++s) {
    ++dy[ends_of(d, "random:" + std::to_string(s))];
    ++to[ends_of(t, "random:" + std::to_string(s))];
  }
  o.detail << " dyadic " << dy["2"] << "/20 two-ended, torus " << to["1"] << "/20 one-ended";
  o.check(dy["2"] == 20, "dyadic");
  o.check(to["1"] == 20, "torus");
}

void retraction(Outcome& o) {
  Tower t = build_schori_tower(6);
  Tower d = decorate_tower(t, {"alpha", "beta"});
  for (const char* s : {"id", "dyadic:1:1", "q", "qprime"}) {
    std::string a = ends_of(t, s), b = ends_of(d, s);
    o.detail << " " << s << "=" << a << "/" << b;
    o.check(a == b, s);
  }
}

void taxonomy(Outcome& o) {
  Tower t = build_schori_tower(0);
  for (auto [policy, want] : {std::pair{"id", "special"}, {"dyadic:1:1", "dyadic"}, {"q", "flipflopping"}}) {
    FiberPoint p(t, make_policy(policy));
    std::string got = to_string(classify_fiber_point(p, 20).verdict);
    o.detail << " " << policy << "=" << got;
    o.check(got == want, policy);
  }
}

void sampler(Outcome& o) {
  Tower t = build_schori_tower(6);
  SampleParams p;
  p.count = 1000;
  p.seed = 42;
  p.workers = 4;
  SampleReport a = sample_fiber_points(t, p);
  SampleReport b = sample_fiber_points(t, p);
  p.workers = 1;
  SampleReport c = sample_fiber_points(t, p);
  for (auto& [k, v] : a.ends_histogram) {
    o.detail << " " << k << ":" << v;
    o.check(k == "1" || k == "2" || k == "4" || k == "unstable", "unexpected verdict " + k);
  }
  o.check(a.ends_histogram == b.ends_histogram && a.class_histogram == b.class_histogram, "repeat run differs");
  o.check(a.ends_histogram == c.ends_histogram && a.class_histogram == c.class_histogram, "worker count changes result");
  o.check(report_to_json(a) == report_to_json(c), "per-sample records differ");
}

void determinism(Outcome& o) {
  std::vector<Tower> towers{build_schori_tower(7),
                            build_dyadic_tower(7),
                            build_torus_tower(7),
                            build_rt_tower(7),
                            build_generalized_schori_tower(1, GeneralizedVariant::FourNPlusTwo, 7),
                            build_mixed_tower(default_mixed_degrees(10), 6)};
  std::size_t graphs = 0;
  for (const Tower& t : towers)
    for (std::size_t k = 0; k <= 7 && k <= t.depth(); ++k) {
      if (!t.materialized(k)) continue;
      const LabeledGraph& g = *t.level(k);
      std::string text = export_graph(g, GraphFormat::Json);
      LabeledGraph back = parse_graph(text);
      o.check(back == g && export_graph(back, GraphFormat::Json) == text, t.name() + " k=" + std::to_string(k));
      ++graphs;
    }
  const std::vector<std::string> runs{"ends --tower schori --policy q --format json",
                                      "classify --tower mixed --policy far --budget 8",
                                      "sample --tower schori --n 50 --seed 42 --workers 4 --format json",
                                      "export --tower schori --level 3",
                                      "export --tower mixed --level 4 --format json"};
  for (const auto& args : runs) o.check(run_binary(args) == run_binary(args), "cli: " + args);
  o.detail << " " << graphs << " graphs round-tripped, " << runs.size() << " CLI commands repeated";
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double limit_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "index law", 60, index_law},
      {2, "oracle agreement", 30, oracle_agreement},
      {3, "metric law", 30, metric_law},
      {4, "Schori end counts", 120, schori_ends},
      {5, "generalized towers", 180, generalized_ends},
      {6, "Rogers-Tollefson", 30, rt},
      {7, "mixed 3/5 tower", 180, mixed},
      {8, "constant-answer towers", 60, constant_towers},
      {9, "retraction invariance", 0, retraction},
      {10, "taxonomy consistency", 0, taxonomy},
      {11, "sampler integrity", 600, sampler},
      {12, "determinism and round-trips", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.check(false, "time limit " + std::to_string(int(c.limit_s)) + " s");
    failed += !o.ok;
    std::printf("%s %2d %-28s %8.2f s %s\n", o.ok ? "PASS" : "FAIL", c.number, c.name, secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed;
}
