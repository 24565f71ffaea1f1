#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "schreier/ends.hpp"
#include "schreier/labeled_graph.hpp"
#include "schreier/sampler.hpp"
#include "schreier/taxonomy.hpp"
#include "schreier/tower.hpp"

namespace schreier {

enum class GraphFormat { Dot, Json };
enum class ReportFormat { Json, Table };

// Throws IncompleteGraph for graphs with undefined edges.
std::string export_graph(const LabeledGraph& g, GraphFormat format);
nlohmann::json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);
// Throws InvalidInput on malformed text.
LabeledGraph parse_graph(std::string_view json_text);

// Name, parameters, degrees and level sizes up to `levels`.
std::string export_tower_manifest(const Tower& tower, std::size_t levels);

// Tower file: {"name", "labels", "levels": [graph...], "bonding": [[...], ...]}.
Tower tower_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const EndsReport& r);
nlohmann::json report_to_json(const ClassificationTrace& t);
nlohmann::json report_to_json(const SampleReport& s);

std::string export_report(const EndsReport& r, ReportFormat format);
std::string export_report(const ClassificationTrace& t, ReportFormat format);
std::string export_report(const SampleReport& s, ReportFormat format);

}  // namespace schreier
