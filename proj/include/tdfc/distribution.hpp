#pragma once

#include "tdfc/bitrow.hpp"
#include "tdfc/cluster_graph.hpp"

#include <set>
#include <vector>

namespace tdfc {

/// Upper-triangular 0/1 matrix describing a cluster state in emission order:
/// diagonal entries mark excited slots, entry (i,j) with i<j marks a CZ edge
/// between slots i and j. The occupied super-diagonal index j-i is the
/// delay class of that edge.
class DistributionMatrix {
public:
    DistributionMatrix() = default;
    explicit DistributionMatrix(int n);

    int size() const { return n_; }

    /// 1-based; the strictly lower-triangular part always reads as zero.
    bool get(int i, int j) const;
    void set_diagonal(int i, bool v);
    /// Toggles the (min,max) entry; CZ order does not matter.
    void toggle_off_diagonal(int i, int j);

    /// Throws InvalidSpec when an off-diagonal bit lacks its two diagonal
    /// excitations (entanglement between unexcited slots cannot be stored).
    void validate() const;

    std::set<int> excited() const;
    std::set<Edge> edge_set() const;

    friend bool operator==(const DistributionMatrix&, const DistributionMatrix&) = default;

private:
    void check_range(int i, int j) const;

    int n_ = 0;
    std::vector<BitRow> rows_;
};

/// One step of the generation sequence: excite a slot or entangle a slot
/// with the one `delay` emission periods later.
struct GenOp {
    enum class Kind { Excite, Entangle };

    Kind kind = Kind::Excite;
    int target = 0;  ///< slot index i
    int delay = 0;   ///< Entangle only: partner is target + delay

    static GenOp excite(int i) { return {Kind::Excite, i, 0}; }
    static GenOp entangle(int i, int alpha) { return {Kind::Entangle, i, alpha}; }
};

/// Plays a generation sequence against the all-zero matrix. Excite sets a
/// diagonal bit; Entangle toggles an off-diagonal bit (CZ is self-inverse).
/// Throws EntangleUnexcited when a gate touches a slot not yet excited.
DistributionMatrix apply_ops(const std::vector<GenOp>& ops, int n_slots);

/// Renumber a graph's nodes by `numbering` (slot of node v is numbering[v-1])
/// and record the result as a distribution matrix. `numbering` must be a
/// bijection on [1, n_slots].
DistributionMatrix to_distribution(const ClusterGraph& graph,
                                   const std::vector<int>& numbering);

DistributionMatrix to_distribution(const ClusterGraph& graph);  // identity numbering

/// Occupied super-diagonals { j-i : bits[i][j]=1, i<j }; one TDF delay
/// factor is needed per class (class 1 is producible without a TDF).
std::set<int> delay_classes(const DistributionMatrix& d);

struct GateCounts {
    int n_h = 0;   ///< Hadamard count = trace = number of excitations
    int n_cz = 0;  ///< CZ count = entrywise sum minus trace = number of edges
};

GateCounts gate_counts(const DistributionMatrix& d);

}  // namespace tdfc
