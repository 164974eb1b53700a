#pragma once

#include "tdfc/cluster_graph.hpp"
#include "tdfc/distribution.hpp"
#include "tdfc/families.hpp"
#include "tdfc/schedule.hpp"

#include <optional>
#include <string>

namespace tdfc {

/// Graph document: either an explicit structure or a family reference.
struct GraphDocument {
    ClusterGraph graph;
    std::optional<FamilySpec> family;
};

GraphDocument graph_from_json_text(const std::string& text);
std::string graph_to_json_text(const ClusterGraph& graph);

GraphDocument load_graph(const std::string& path);

/// Schedule documents round-trip bit-exactly: load(save(s)) == s and
/// save(load(text)) == text for writer-produced text.
Schedule schedule_from_json_text(const std::string& text);
std::string schedule_to_json_text(const Schedule& s);

Schedule load_schedule(const std::string& path);

/// 0/1 CSV rows of the distribution matrix.
std::string matrix_csv(const DistributionMatrix& d);

/// DOT export: excited nodes filled, edges labeled with their delay class
/// under the identity numbering.
std::string graph_dot(const ClusterGraph& graph);

std::string read_file(const std::string& path);

/// Write-then-rename so partially written files never appear.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace tdfc
