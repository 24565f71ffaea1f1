#include "schreier/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "schreier/builders.hpp"
#include "schreier/errors.hpp"
#include "schreier/fiber.hpp"
#include "schreier/io.hpp"

namespace schreier {

using nlohmann::json;

namespace {

const std::vector<std::string> kCommands{"build", "ends", "classify", "sample", "export"};

template <class T>
void read(const json& j, const char* key, T& into) {
  if (!j.contains(key)) return;
  try {
    into = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config: bad value for '") + key + "'");
  }
}

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
  if (!j.is_object()) throw ConfigError("config: " + where + " must be an object");
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw ConfigError("config: unknown key '" + key + "' in " + where);
}

std::string list(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

std::vector<std::string> tower_names() {
  return {"dyadic", "torus", "rt", "schori", "generalized", "mixed", "file:PATH"};
}

json config_to_json(const RunConfig& c) {
  return json{{"command", c.command},
              {"tower",
               {{"name", c.tower.name},
                {"method", c.tower.method},
                {"n", c.tower.n},
                {"variant", c.tower.variant},
                {"degrees", c.tower.degrees},
                {"levels", c.tower.levels},
                {"decorate", c.tower.decorate}}},
              {"policy", c.policy},
              {"ends",
               {{"r_schedule", c.ends.r_schedule},
                {"R_factor", c.ends.R_factor},
                {"confirm", c.ends.confirm},
                {"window", c.ends.window},
                {"max_level", c.ends.max_level}}},
              {"budget", c.budget},
              {"seed", c.seed ? json(*c.seed) : json(nullptr)},
              {"samples", c.samples},
              {"workers", c.workers},
              {"level", c.level},
              {"output_dir", c.output_dir},
              {"format", c.format},
              {"strict", c.strict}};
}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  reject_unknown(j,
                 {"command", "tower", "policy", "ends", "budget", "seed", "samples", "workers", "level", "output_dir",
                  "format", "strict"},
                 "config");
  read(j, "command", c.command);
  if (j.contains("tower")) {
    const json& t = j.at("tower");
    reject_unknown(t, {"name", "method", "n", "variant", "degrees", "levels", "decorate"}, "tower");
    read(t, "name", c.tower.name);
    read(t, "method", c.tower.method);
    read(t, "n", c.tower.n);
    read(t, "variant", c.tower.variant);
    read(t, "degrees", c.tower.degrees);
    read(t, "levels", c.tower.levels);
    read(t, "decorate", c.tower.decorate);
  }
  read(j, "policy", c.policy);
  if (j.contains("ends")) {
    const json& e = j.at("ends");
    reject_unknown(e, {"r_schedule", "R_factor", "confirm", "window", "max_level"}, "ends");
    read(e, "r_schedule", c.ends.r_schedule);
    read(e, "R_factor", c.ends.R_factor);
    read(e, "confirm", c.ends.confirm);
    read(e, "window", c.ends.window);
    read(e, "max_level", c.ends.max_level);
  }
  read(j, "budget", c.budget);
  if (j.contains("seed") && !j.at("seed").is_null()) {
    std::uint64_t s = 0;
    read(j, "seed", s);
    c.seed = s;
  }
  read(j, "samples", c.samples);
  read(j, "workers", c.workers);
  read(j, "level", c.level);
  read(j, "output_dir", c.output_dir);
  read(j, "format", c.format);
  read(j, "strict", c.strict);
  return c;
}

void validate(const RunConfig& c) {
  if (std::find(kCommands.begin(), kCommands.end(), c.command) == kCommands.end())
    throw ConfigError("unknown command '" + c.command + "'; available: " + list(kCommands));
  const auto& t = c.tower;
  const auto names = tower_names();
  if (!t.name.starts_with("file:") && std::find(names.begin(), names.end() - 1, t.name) == names.end() - 1)
    throw ConfigError("unknown tower '" + t.name + "'; available: " + list(names));
  if (t.method != "voltage" && t.method != "folding")
    throw ConfigError("unknown method '" + t.method + "'; available: voltage, folding");
  if (t.variant != "4n" && t.variant != "4n+2")
    throw ConfigError("unknown variant '" + t.variant + "'; available: 4n, 4n+2");
  if (t.n < 1) throw ConfigError("generalized tower needs n >= 1");
  for (auto d : t.degrees)
    if (d != 3 && d != 5) throw ConfigError("mixed tower degrees must be 3 or 5");
  make_policy(c.policy);
  c.ends.validate();
  if (c.command == "classify" && c.budget < 4) throw ConfigError("classification budget must be at least 4");
  if (c.command == "sample") {
    if (c.samples < 1) throw ConfigError("sample count must be at least 1");
    if (!c.seed) throw ConfigError("sampling requires --seed");
  }
  if (c.workers < 1) throw ConfigError("workers must be at least 1");
  static const std::set<std::string> report_formats{"", "table", "json"}, graph_formats{"", "dot", "json"};
  const auto& formats = c.command == "export" ? graph_formats : report_formats;
  if (!formats.count(c.format)) throw ConfigError("unknown format '" + c.format + "' for " + c.command);
}

Tower build_tower(const TowerSpec& spec) {
  Tower tower = [&]() -> Tower {
    const std::size_t K = spec.levels;
    if (spec.name == "dyadic") return build_dyadic_tower(K);
    if (spec.name == "torus") return build_torus_tower(K);
    if (spec.name == "rt") return build_rt_tower(K);
    if (spec.name == "schori")
      return build_schori_tower(K, spec.method == "folding" ? SchoriMethod::Folding : SchoriMethod::Voltage);
    if (spec.name == "generalized")
      return build_generalized_schori_tower(
          spec.n, spec.variant == "4n+2" ? GeneralizedVariant::FourNPlusTwo : GeneralizedVariant::FourN, K);
    if (spec.name == "mixed")
      return build_mixed_tower(spec.degrees.empty() ? default_mixed_degrees(10) : spec.degrees, K);
    if (spec.name.starts_with("file:")) {
      std::ifstream in(spec.name.substr(5));
      if (!in) throw ConfigError("cannot read tower file '" + spec.name.substr(5) + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        return tower_from_json(json::parse(buf.str()));
      } catch (const json::exception& e) {
        throw ConfigError(std::string("tower file: ") + e.what());
      }
    }
    throw ConfigError("unknown tower '" + spec.name + "'; available: " + list(tower_names()));
  }();
  if (!spec.decorate.empty()) tower = decorate_tower(tower, spec.decorate);
  return tower;
}

}  // namespace schreier
