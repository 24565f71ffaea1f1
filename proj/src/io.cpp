#include "schreier/io.hpp"

#include <iomanip>
#include <sstream>

#include "schreier/errors.hpp"

namespace schreier {

using nlohmann::json;

namespace {

void require_complete(const LabeledGraph& g) {
  if (!g.complete()) throw IncompleteGraph("export: graph is not complete");
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

json params_json(const EndsParams& p) {
  return json{{"r_schedule", p.r_schedule}, {"R_factor", p.R_factor}, {"confirm", p.confirm},
              {"window", p.window},         {"max_level", p.max_level}};
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

}  // namespace

json graph_to_json(const LabeledGraph& g) {
  require_complete(g);
  json perms = json::object();
  for (std::uint32_t label = 0; label < g.alphabet().size(); ++label) {
    auto f = g.forward(label);
    perms[g.alphabet().name(label)] = std::vector<Vertex>(f.begin(), f.end());
  }
  return json{{"vertex_count", g.vertex_count()},
              {"basepoint", g.basepoint()},
              {"labels", g.alphabet().names()},
              {"permutations", std::move(perms)}};
}

std::string export_graph(const LabeledGraph& g, GraphFormat format) {
  require_complete(g);
  if (format == GraphFormat::Json) return graph_to_json(g).dump() + "\n";
  std::ostringstream out;
  out << "digraph schreier {\n  node [shape=circle];\n";
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    out << "  " << x << (x == g.basepoint() ? " [shape=doublecircle]" : "") << ";\n";
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    for (std::uint32_t label = 0; label < g.alphabet().size(); ++label)
      out << "  " << x << " -> " << g.forward(label)[x] << " [label=" << dot_quote(g.alphabet().name(label))
          << "];\n";
  out << "}\n";
  return out.str();
}

LabeledGraph graph_from_json(const json& j) {
  try {
    const auto labels = j.at("labels").get<std::vector<std::string>>();
    Alphabet alphabet(labels);
    const auto n = j.at("vertex_count").get<Vertex>();
    std::vector<std::vector<Vertex>> perms;
    for (const auto& name : labels) {
      perms.push_back(j.at("permutations").at(name).get<std::vector<Vertex>>());
      if (perms.back().size() != n) throw InvalidInput("permutation '" + name + "' has the wrong length");
    }
    return make_action_graph(alphabet, perms, j.at("basepoint").get<Vertex>());
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed graph JSON: ") + e.what());
  }
}

LabeledGraph parse_graph(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed graph JSON: ") + e.what());
  }
  return graph_from_json(j);
}

std::string export_tower_manifest(const Tower& tower, std::size_t levels) {
  json sizes = json::array(), degrees = json::array();
  for (std::size_t k = 0; k <= levels; ++k) {
    sizes.push_back(tower.vertex_count(k));
    if (k < levels) degrees.push_back(tower.degree(k));
  }
  json j{{"name", tower.name()},  {"params", tower.params()}, {"labels", tower.alphabet().names()},
         {"levels", levels},      {"vertex_counts", sizes},   {"degrees", degrees}};
  return j.dump(2) + "\n";
}

Tower tower_from_json(const json& j) {
  try {
    std::vector<LabeledGraph> levels;
    for (const auto& g : j.at("levels")) levels.push_back(graph_from_json(g));
    std::vector<std::vector<Vertex>> bonding;
    if (j.contains("bonding")) {
      bonding = j.at("bonding").get<std::vector<std::vector<Vertex>>>();
    } else {
      for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
        std::vector<Vertex> map(levels[k + 1].vertex_count());
        for (Vertex x = 0; x < map.size(); ++x) map[x] = x % levels[k].vertex_count();
        bonding.push_back(std::move(map));
      }
    }
    for (std::size_t k = 0; k < bonding.size() && k + 1 < levels.size(); ++k)
      if (bonding[k].size() != levels[k + 1].vertex_count())
        throw InvalidInput("bonding map " + std::to_string(k) + " has the wrong length");
    for (std::size_t k = 0; k < bonding.size() && k < levels.size(); ++k)
      for (Vertex v : bonding[k])
        if (v >= levels[k].vertex_count()) throw InvalidInput("bonding map leaves the lower level");
    return Tower::from_levels(j.value("name", std::string("file")), json{{"K", levels.size() - 1}},
                              std::move(levels), bonding);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed tower JSON: ") + e.what());
  }
}

json report_to_json(const EndsReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back(json{{"r", row.r},
                        {"R", row.R},
                        {"level", row.level},
                        {"ball_size", row.ball_size},
                        {"components", row.components},
                        {"touching", row.touching}});
  json plateaus = json::array();
  for (std::size_t i = 0; i < r.plateaus.size(); ++i)
    plateaus.push_back(json{{"r", r.params.r_schedule[i]},
                            {"value", r.plateaus[i] ? json(*r.plateaus[i]) : json(nullptr)}});
  return json{{"point", r.point},
              {"tower", r.tower},
              {"params", params_json(r.params)},
              {"rows", std::move(rows)},
              {"plateaus", std::move(plateaus)},
              {"verdict", r.verdict ? json(*r.verdict) : json("unstable")}};
}

json report_to_json(const ClassificationTrace& t) {
  return json{{"point", t.point}, {"budget", t.budget}, {"tags", t.tag_names}, {"verdict", to_string(t.verdict)}};
}

json report_to_json(const SampleReport& s) {
  json samples = json::array();
  for (const auto& rec : s.samples)
    samples.push_back(json{{"index", rec.index},
                           {"seed", rec.seed},
                           {"classification", rec.classification},
                           {"ends", rec.ends},
                           {"budget_exhausted", rec.budget_exhausted}});
  return json{{"tower", s.tower},
              {"params",
               {{"count", s.params.count},
                {"seed", s.params.seed},
                {"classify_budget", s.params.classify_budget},
                {"ends", params_json(s.params.ends)}}},
              {"ends_histogram", s.ends_histogram},
              {"class_histogram", s.class_histogram},
              {"samples", std::move(samples)}};
}

std::string export_report(const EndsReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) return report_to_json(r).dump(2) + "\n";
  std::ostringstream out;
  out << "tower " << r.tower << "  point " << r.point << "\n";
  out << "r_schedule " << join(r.params.r_schedule) << "  R_factor " << r.params.R_factor << "  confirm "
      << r.params.confirm << "  window " << r.params.window << "  max_level " << r.params.max_level << "\n";
  out << std::setw(6) << "r" << std::setw(7) << "R" << std::setw(7) << "level" << std::setw(10) << "ball"
      << std::setw(7) << "comps" << std::setw(8) << "E(r,R)" << "\n";
  for (const auto& row : r.rows)
    out << std::setw(6) << row.r << std::setw(7) << row.R << std::setw(7) << row.level << std::setw(10)
        << row.ball_size << std::setw(7) << row.components << std::setw(8) << row.touching << "\n";
  for (std::size_t i = 0; i < r.plateaus.size(); ++i)
    out << "plateau r=" << r.params.r_schedule[i] << ": "
        << (r.plateaus[i] ? std::to_string(*r.plateaus[i]) : std::string("none")) << "\n";
  out << "verdict: " << r.verdict_text() << "\n";
  return out.str();
}

std::string export_report(const ClassificationTrace& t, ReportFormat format) {
  if (format == ReportFormat::Json) return report_to_json(t).dump(2) + "\n";
  std::ostringstream out;
  out << "point " << t.point << "  budget " << t.budget << "\n";
  out << std::setw(6) << "level" << "  tag\n";
  for (std::size_t i = 0; i < t.tag_names.size(); ++i) out << std::setw(6) << i + 1 << "  " << t.tag_names[i] << "\n";
  out << "verdict: " << to_string(t.verdict) << "\n";
  return out.str();
}

std::string export_report(const SampleReport& s, ReportFormat format) {
  if (format == ReportFormat::Json) return report_to_json(s).dump(2) + "\n";
  std::ostringstream out;
  out << "tower " << s.tower << "  samples " << s.params.count << "  seed " << s.params.seed << "\n";
  out << "ends:\n";
  for (const auto& [k, v] : s.ends_histogram) out << "  " << std::left << std::setw(14) << k << std::right << v << "\n";
  out << "classification:\n";
  for (const auto& [k, v] : s.class_histogram)
    out << "  " << std::left << std::setw(14) << k << std::right << v << "\n";
  return out.str();
}

}  // namespace schreier
