#pragma once

#include "tdfc/cluster_graph.hpp"
#include "tdfc/schedule.hpp"

#include <set>
#include <string>
#include <vector>

namespace tdfc {

/// Outcome of checking a schedule against its target structure: the edges
/// the schedule realizes (by exact stabilizer simulation), the edges the
/// target demands under the recorded numbering, and their differences.
struct VerifyReport {
    std::set<Edge> target_edges;
    std::set<Edge> realized_edges;
    std::set<Edge> missing;  ///< in target, not realized
    std::set<Edge> extra;    ///< realized, not in target
    bool excitations_match = false;
    bool emulator_consistent = false;  ///< gate multiset + timeline cross-check
    bool ok = false;

    std::string to_text() const;
};

/// Simulates the schedule, extracts the realized graph, and compares it to
/// the target mapped through the schedule's numbering (identity when the
/// schedule records none). Also cross-checks the discrete-event timeline:
/// the emulated gate stream must reproduce the same stabilizer state.
VerifyReport verify_schedule(const Schedule& s, const ClusterGraph& target);

}  // namespace tdfc
