#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schreier/ends.hpp"
#include "schreier/tower.hpp"

namespace schreier {

struct TowerSpec {
  // dyadic | torus | rt | schori | generalized | mixed | file:PATH
  std::string name = "schori";
  std::string method = "voltage";  // schori: voltage | folding
  std::uint32_t n = 1;             // generalized
  std::string variant = "4n";      // generalized: 4n | 4n+2
  std::vector<std::uint32_t> degrees;  // mixed; empty = default sequence of length 10
  std::size_t levels = 0;          // eagerly built levels K
  std::vector<std::string> decorate;  // loop labels added to every level

  friend bool operator==(const TowerSpec&, const TowerSpec&) = default;
};

struct RunConfig {
  std::string command = "ends";  // build | ends | classify | sample | export
  TowerSpec tower;
  std::string policy = "id";
  EndsParams ends;
  std::size_t budget = 20;       // classification levels
  std::optional<std::uint64_t> seed;
  std::size_t samples = 100;
  std::size_t workers = 1;
  std::size_t level = 0;         // export
  std::string output_dir;        // empty: $SCHREIER_OUT or "."
  std::string format = "";       // table | json for reports, dot | json for export
  bool strict = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

nlohmann::json config_to_json(const RunConfig& c);
// Missing keys take defaults; unknown keys and bad values throw ConfigError.
RunConfig config_from_json(const nlohmann::json& j);

// Throws ConfigError.
void validate(const RunConfig& c);

std::vector<std::string> tower_names();
Tower build_tower(const TowerSpec& spec);

}  // namespace schreier
