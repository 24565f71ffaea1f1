#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schreier/ends.hpp"
#include "schreier/tower.hpp"

namespace schreier {

struct SampleParams {
  std::size_t count = 100;
  std::uint64_t seed = 0;
  // Classification budget; 0 skips classification.
  std::size_t classify_budget = 12;
  EndsParams ends;
  std::size_t workers = 1;
};

struct SampleRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string classification;  // verdict name, or "n/a" when the tower has no taxonomy
  std::string ends;            // "1", "2", ..., "unstable"
  bool budget_exhausted = false;
};

struct SampleReport {
  std::string tower;
  SampleParams params;
  std::vector<SampleRecord> samples;
  std::map<std::string, std::size_t> ends_histogram;
  std::map<std::string, std::size_t> class_histogram;
};

// Seed of sample i; independent of worker count and execution order.
std::uint64_t sample_seed(std::uint64_t seed, std::size_t index);

SampleReport sample_fiber_points(const Tower& tower, const SampleParams& params);

}  // namespace schreier
