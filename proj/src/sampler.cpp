#include "schreier/sampler.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "schreier/builders.hpp"
#include "schreier/errors.hpp"
#include "schreier/taxonomy.hpp"

namespace schreier {

std::uint64_t sample_seed(std::uint64_t seed, std::size_t index) {
  const std::uint64_t i = index;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (std::uint64_t{out[1]} << 32) | out[0];
}

namespace {

bool has_taxonomy(const Tower& tower) {
  return as_voltage_chain(tower.model()) != nullptr || tower.model().stored(0) != nullptr;
}

SampleRecord run_sample(const Tower& tower, const SampleParams& params, std::size_t index) {
  SampleRecord rec;
  rec.index = index;
  rec.seed = sample_seed(params.seed, index);
  PolicySpec policy;
  policy.kind = PolicySpec::Kind::Random;
  policy.seed = rec.seed;
  FiberPoint point(tower, policy);
  const std::size_t budget = std::min(params.classify_budget, tower.depth());
  if (params.classify_budget > 0 && budget >= 4 && has_taxonomy(tower))
    rec.classification = to_string(classify_fiber_point(point, budget).verdict);
  else
    rec.classification = "n/a";
  try {
    rec.ends = estimate_ends(point, params.ends).verdict_text();
  } catch (const BudgetExhausted&) {
    rec.ends = "unstable";
    rec.budget_exhausted = true;
  }
  return rec;
}

}  // namespace

SampleReport sample_fiber_points(const Tower& tower, const SampleParams& params) {
  if (params.count < 1) throw ConfigError("sample count must be at least 1");
  params.ends.validate();
  SampleReport report;
  report.tower = tower.name();
  report.params = params;
  report.samples.resize(params.count);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= params.count) return;
      try {
        report.samples[i] = run_sample(tower, params, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = params.count;
        return;
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(params.workers, params.count));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& rec : report.samples) {
    ++report.ends_histogram[rec.ends];
    ++report.class_histogram[rec.classification];
  }
  return report;
}

}  // namespace schreier
