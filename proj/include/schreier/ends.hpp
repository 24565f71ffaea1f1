#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schreier/fiber.hpp"
#include "schreier/metric.hpp"

namespace schreier {

struct EndsParams {
  std::vector<std::uint32_t> r_schedule{2, 4, 8, 16};
  std::uint32_t R_factor = 4;
  std::uint32_t confirm = 2;
  // Number of outer radii per r: R = (R_factor + i) * r, i = 0..window-1.
  std::uint32_t window = 3;
  std::size_t max_level = 16;

  // Throws ConfigError.
  void validate() const;

  friend bool operator==(const EndsParams&, const EndsParams&) = default;
};

// Smallest K such that |B_K(v_K, R)| = |B_{K+j}(v_{K+j}, R)| for j = 1..confirm.
// Throws BudgetExhausted (carrying the last two counts) when K + confirm
// would pass max_level or the tower depth.
BallSnapshot stable_ball(FiberPoint& p, std::uint32_t R, std::uint32_t confirm, std::size_t max_level = 16);

struct EndsRow {
  std::uint32_t r = 0;
  std::uint32_t R = 0;
  std::size_t level = 0;
  std::uint64_t ball_size = 0;
  std::uint32_t components = 0;
  std::uint32_t touching = 0;
};

struct EndsReport {
  std::string point;
  std::string tower;
  EndsParams params;
  std::vector<EndsRow> rows;
  // Per r in schedule order; empty when E(r, R) varies over the window.
  std::vector<std::optional<std::uint32_t>> plateaus;
  // Empty means "unstable".
  std::optional<std::uint32_t> verdict;

  std::string verdict_text() const;
};

EndsReport estimate_ends(FiberPoint& p, const EndsParams& params = {});

}  // namespace schreier
