#include "tdfc/cluster_graph.hpp"

#include "tdfc/errors.hpp"

#include <queue>
#include <string>

namespace tdfc {

ClusterGraph::ClusterGraph(int n, std::set<int> exc, std::set<Edge> e)
    : n_slots(n), excited(std::move(exc)), edges(std::move(e)) {
    validate();
}

void ClusterGraph::validate() const {
    if (n_slots < 0) {
        throw InvalidSpec("n_slots must be non-negative");
    }
    for (int i : excited) {
        if (i < 1 || i > n_slots) {
            throw IndexOutOfRange("excited slot " + std::to_string(i) +
                                  " outside [1, " + std::to_string(n_slots) + "]");
        }
    }
    for (const auto& [i, j] : edges) {
        if (i == j) {
            throw InvalidSpec("self-loop at slot " + std::to_string(i));
        }
        if (i > j) {
            throw InvalidSpec("edge not normalized: (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
        }
        if (!excited.count(i) || !excited.count(j)) {
            throw InvalidSpec("edge (" + std::to_string(i) + "," + std::to_string(j) +
                              ") touches an unexcited slot");
        }
    }
}

std::map<int, int> ClusterGraph::degrees() const {
    std::map<int, int> deg;
    for (int v : excited) deg[v] = 0;
    for (const auto& [i, j] : edges) {
        ++deg[i];
        ++deg[j];
    }
    return deg;
}

bool ClusterGraph::is_connected() const {
    if (excited.empty()) return true;
    std::map<int, std::vector<int>> adj;
    for (const auto& [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::set<int> seen;
    std::queue<int> q;
    q.push(*excited.begin());
    seen.insert(*excited.begin());
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adj[v]) {
            if (seen.insert(u).second) q.push(u);
        }
    }
    return seen.size() == excited.size();
}

}  // namespace tdfc
