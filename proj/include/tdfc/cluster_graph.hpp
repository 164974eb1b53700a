#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace tdfc {

/// Unordered slot pair with i < j enforced on construction.
using Edge = std::pair<int, int>;

inline Edge make_edge(int i, int j) {
    return i < j ? Edge{i, j} : Edge{j, i};
}

/// Target entanglement structure: a set of excited time-bin slots plus the
/// CZ edges between them. Slots are 1-based; slots outside `excited` are
/// virtual nodes (never excited, never an edge endpoint).
struct ClusterGraph {
    int n_slots = 0;
    std::set<int> excited;
    std::set<Edge> edges;

    ClusterGraph() = default;
    ClusterGraph(int n_slots, std::set<int> excited, std::set<Edge> edges);

    /// Throws InvalidSpec on any invariant violation (range, self-loop,
    /// edge endpoint not excited).
    void validate() const;

    std::map<int, int> degrees() const;

    bool is_connected() const;
};

}  // namespace tdfc
