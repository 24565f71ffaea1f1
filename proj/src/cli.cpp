#include "schreier/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "schreier/config.hpp"
#include "schreier/errors.hpp"
#include "schreier/io.hpp"
#include "schreier/sampler.hpp"
#include "schreier/taxonomy.hpp"

namespace schreier {

namespace {

std::string output_dir(const RunConfig& c) {
  if (!c.output_dir.empty()) return c.output_dir;
  if (const char* env = std::getenv("SCHREIER_OUT"); env && *env) return env;
  return ".";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path.string() + "'");
  f << text;
}

ReportFormat report_format(const RunConfig& c) { return c.format == "json" ? ReportFormat::Json : ReportFormat::Table; }

int run_command(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.command == "build") {
    Tower tower = build_tower(c.tower);
    const std::filesystem::path dir = output_dir(c);
    for (std::size_t k = 0; k <= c.tower.levels; ++k) {
      auto path = dir / ("level_" + std::to_string(k) + ".json");
      write_file(path, export_graph(*tower.level(k), GraphFormat::Json));
      out << "level " << k << ": " << tower.vertex_count(k) << " vertices -> " << path.string() << "\n";
    }
    write_file(dir / "tower.json", export_tower_manifest(tower, c.tower.levels));
    return kExitOk;
  }
  if (c.command == "export") {
    TowerSpec spec = c.tower;
    if (spec.name == "schori" && spec.method == "folding") spec.levels = std::max(spec.levels, c.level);
    Tower tower = build_tower(spec);
    const bool dot = c.format != "json";
    std::string text = export_graph(*tower.level(c.level), dot ? GraphFormat::Dot : GraphFormat::Json);
    if (c.output_dir.empty()) {
      out << text;
    } else {
      auto path = std::filesystem::path(c.output_dir) / ("level_" + std::to_string(c.level) + (dot ? ".dot" : ".json"));
      write_file(path, text);
      out << path.string() << "\n";
    }
    return kExitOk;
  }
  Tower tower = build_tower(c.tower);
  if (c.command == "ends") {
    FiberPoint p(tower, make_policy(c.policy));
    try {
      EndsReport r = estimate_ends(p, c.ends);
      out << export_report(r, report_format(c));
      return (c.strict && !r.verdict) ? kExitUnstable : kExitOk;
    } catch (const BudgetExhausted& e) {
      err << "budget exhausted: " << e.what() << " (last counts " << e.previous_count() << ", " << e.last_count()
          << ")\n";
      if (c.format == "json")
        out << nlohmann::json{{"point", p.id()}, {"tower", tower.name()}, {"verdict", "unstable"},
                              {"reason", e.what()}}
                   .dump(2)
            << "\n";
      else
        out << "verdict: unstable\n";
      return c.strict ? kExitUnstable : kExitOk;
    }
  }
  if (c.command == "classify") {
    FiberPoint p(tower, make_policy(c.policy));
    ClassificationTrace t = classify_fiber_point(p, c.budget);
    out << export_report(t, report_format(c));
    return (c.strict && t.verdict == Verdict::Undetermined) ? kExitUnstable : kExitOk;
  }
  // sample
  SampleParams params;
  params.count = c.samples;
  params.seed = *c.seed;
  params.classify_budget = c.budget;
  params.ends = c.ends;
  params.workers = c.workers;
  SampleReport s = sample_fiber_points(tower, params);
  out << export_report(s, report_format(c));
  const bool unstable = s.ends_histogram.count("unstable") || s.class_histogram.count("undetermined");
  return (c.strict && unstable) ? kExitUnstable : kExitOk;
}

std::vector<std::uint32_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::uint32_t v = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size())
      throw ConfigError(std::string("bad ") + what + " list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schreier graph towers, leaf classification and end counts"};
  app.require_subcommand(1, 1);

  std::string config_path, tower, method, variant, degrees, decorate, policy, r_list, format, out_dir;
  std::uint32_t n = 1, R_factor = 4, confirm = 2, window = 3;
  std::size_t levels = 0, max_level = 16, budget = 20, samples = 100, workers = 1, level = 0;
  std::uint64_t seed = 0;
  bool strict = false, dump_config = false;

  struct Bound {
    CLI::Option* opt;
    std::function<void(RunConfig&)> apply;
  };
  std::vector<Bound> bound;

  // sample uses --n for the sample count, so the generalized tower parameter
  // is also accepted as --tower-n.
  auto add_tower_options = [&](CLI::App* sub, bool n_alias) {
    bound.push_back({sub->add_option("--config", config_path, "RunConfig JSON file"), [](RunConfig&) {}});
    bound.push_back({sub->add_option("--tower", tower, "dyadic | torus | rt | schori | generalized | mixed | file:PATH"),
                     [&](RunConfig& c) { c.tower.name = tower; }});
    bound.push_back({sub->add_option("--method", method, "schori: voltage | folding"),
                     [&](RunConfig& c) { c.tower.method = method; }});
    bound.push_back({sub->add_option(n_alias ? "--n,--tower-n" : "--tower-n", n, "generalized: handle parameter n"),
                     [&](RunConfig& c) { c.tower.n = n; }});
    bound.push_back({sub->add_option("--variant", variant, "generalized: 4n | 4n+2"),
                     [&](RunConfig& c) { c.tower.variant = variant; }});
    bound.push_back({sub->add_option("--degrees", degrees, "mixed: comma-separated degrees (3 or 5)"),
                     [&](RunConfig& c) { c.tower.degrees = parse_list(degrees, "degree"); }});
    bound.push_back({sub->add_option("--levels", levels, "eagerly built levels K"),
                     [&](RunConfig& c) { c.tower.levels = levels; }});
    bound.push_back({sub->add_option("--decorate", decorate, "comma-separated loop labels added to every level"),
                     [&](RunConfig& c) {
                       c.tower.decorate.clear();
                       std::stringstream ss(decorate);
                       for (std::string item; std::getline(ss, item, ',');) c.tower.decorate.push_back(item);
                     }});
    bound.push_back({sub->add_flag("--strict", strict, "exit 3 on unstable or undetermined verdicts"),
                     [&](RunConfig& c) { c.strict = strict; }});
    bound.push_back({sub->add_flag("--dump-config", dump_config, "print the effective configuration and exit"),
                     [](RunConfig&) {}});
  };
  auto add_ends_options = [&](CLI::App* sub) {
    bound.push_back({sub->add_option("--r", r_list, "inner radii, e.g. 2,4,8,16"),
                     [&](RunConfig& c) { c.ends.r_schedule = parse_list(r_list, "radius"); }});
    bound.push_back({sub->add_option("--R-factor", R_factor, "outer radius factor (>= 4)"),
                     [&](RunConfig& c) { c.ends.R_factor = R_factor; }});
    bound.push_back({sub->add_option("--confirm", confirm, "levels confirming a stable ball"),
                     [&](RunConfig& c) { c.ends.confirm = confirm; }});
    bound.push_back({sub->add_option("--window", window, "outer radii per inner radius"),
                     [&](RunConfig& c) { c.ends.window = window; }});
    bound.push_back({sub->add_option("--max-level", max_level, "deepest level searched"),
                     [&](RunConfig& c) { c.ends.max_level = max_level; }});
  };
  auto add_format = [&](CLI::App* sub, const char* help) {
    bound.push_back({sub->add_option("--format", format, help), [&](RunConfig& c) { c.format = format; }});
  };
  auto add_policy = [&](CLI::App* sub) {
    bound.push_back({sub->add_option("--policy", policy, "id | q | qprime | dyadic:J:L | word:W | random:SEED | far | "
                                                         "line:LABEL | flipflop"),
                     [&](RunConfig& c) { c.policy = policy; }});
  };
  auto add_out = [&](CLI::App* sub) {
    bound.push_back({sub->add_option("--out", out_dir, "output directory (default $SCHREIER_OUT or .)"),
                     [&](RunConfig& c) { c.output_dir = out_dir; }});
  };

  CLI::App* build = app.add_subcommand("build", "write level graphs as JSON");
  add_tower_options(build, true);
  add_out(build);

  CLI::App* ends = app.add_subcommand("ends", "estimate the number of ends of a leaf");
  add_tower_options(ends, true);
  add_policy(ends);
  add_ends_options(ends);
  add_format(ends, "table | json");

  CLI::App* classify = app.add_subcommand("classify", "classify a fiber point");
  add_tower_options(classify, true);
  add_policy(classify);
  add_format(classify, "table | json");
  bound.push_back({classify->add_option("--budget", budget, "levels to classify"),
                   [&](RunConfig& c) { c.budget = budget; }});

  CLI::App* sample = app.add_subcommand("sample", "sample random fiber points");
  add_tower_options(sample, false);
  add_ends_options(sample);
  add_format(sample, "table | json");
  bound.push_back({sample->add_option("--n", samples, "number of samples"), [&](RunConfig& c) { c.samples = samples; }});
  bound.push_back({sample->add_option("--seed", seed, "base seed"), [&](RunConfig& c) { c.seed = seed; }});
  bound.push_back({sample->add_option("--workers", workers, "worker threads"), [&](RunConfig& c) { c.workers = workers; }});
  bound.push_back({sample->add_option("--budget", budget, "classification levels"),
                   [&](RunConfig& c) { c.budget = budget; }});

  CLI::App* exp = app.add_subcommand("export", "print one level as DOT or JSON");
  add_tower_options(exp, true);
  add_format(exp, "dot | json");
  add_out(exp);
  bound.push_back({exp->add_option("--level", level, "level index"), [&](RunConfig& c) { c.level = level; }});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  try {
    RunConfig c;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigError("cannot read config '" + config_path + "'");
      try {
        c = config_from_json(nlohmann::json::parse(in));
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
      }
    }
    c.command = app.get_subcommands().front()->get_name();
    for (auto& b : bound)
      if (b.opt->count() > 0) b.apply(c);
    validate(c);
    if (dump_config) {
      out << config_to_json(c).dump(2) << "\n";
      return kExitOk;
    }
    return run_command(c, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace schreier
