#pragma once

#include "tdfc/cluster_graph.hpp"
#include "tdfc/schedule.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace tdfc {

/// Placement of a tree into an a-dimensional grid. Every tree edge is one
/// axis-aligned unit step; axis 0 steps become delay-1 (native) gates and
/// axis k steps become gates of the k-th TDF once rasterized.
struct EmbeddingResult {
    std::vector<int> dims;                    ///< extent actually used per axis
    std::map<int, std::vector<int>> placement;  ///< tree node -> grid coordinate
    int raster_width = 1;                     ///< w; axis-k raster stride is w^k

    /// Slot index of a placed node under row-major rasterization.
    int slot_of(int node) const;

    /// Throws InvalidSpec unless the placement is injective and every tree
    /// edge of TCS(a,d) is a unit step along exactly one axis.
    void validate(int a, int d) const;
};

/// Builds a schedule from a graph and a slot numbering: delay-1 edges go to
/// the native chain, every other delay class gets one block (ascending).
Schedule schedule_from_numbering(const ClusterGraph& graph,
                                 const std::vector<int>& numbering,
                                 Provenance provenance);

/// Identity numbering. One block per delay class above 1; for the
/// heap-ordered a-ary tree of depth d this costs a^(d-1)-1 blocks.
Schedule compile_naive(const ClusterGraph& graph);

/// Renumbers the depth-d a-ary tree layer by layer with children grouped by
/// sibling rank, so every layer reuses the same a delay classes. The rank-r
/// child of the j-th parent in layer l sits at slot
///   start(l+1) + r * a^(l-1) + (j-1),
/// giving parent-child interval (1+r) * a^(l-1). For a=2 the classes are
/// exactly the powers of two 2^0 .. 2^(d-1).
Schedule compile_layer_symmetric(int a, int d);

/// Capacity margin of the a-dimensional lattice for the depth-d a-ary tree:
///   F(a,d) = d^a + (d-1)^a - (a^d - 1)/(a - 1).
/// Exact integer; throws Overflow instead of wrapping.
long long feasibility(int a, int d);

/// Largest d with F(a,d) > 0, found by increasing scan.
int max_embeddable_depth(int a);

/// Places the depth-d a-ary tree into an a-dimensional grid with unit-step
/// edges. Deterministic depth-first construction that prefers alternating
/// axes per layer and falls back to backtracking, pruned by two exact
/// bounds (distance from root, free capacity around each subtree).
/// Throws EmbeddingInfeasible when F(a,d) <= 0 (d >= 2) or when the search
/// exhausts its node budget.
EmbeddingResult embed_tree_in_lattice(int a, int d);

/// Rasterizes the embedding: axis-0 edges become native delay-1 gates and
/// each further axis becomes one TdfBlock with delay w^k, so the whole tree
/// needs a-1 TDFs regardless of depth. Gate masks contain only true tree
/// edges; adjacent placements without a tree edge stay disabled.
Schedule compile_lattice_embedded(int a, int d);

struct SearchResult {
    std::vector<int> numbering;
    Schedule schedule;
    int evaluations = 0;
};

/// Bounded local search over slot transpositions (first-improvement sweeps
/// with seeded restarts) minimizing the number of delay classes above 1.
/// The identity numbering seeds the first restart, so the result never
/// exceeds compile_naive's class count.
SearchResult minimize_delay_classes(const ClusterGraph& graph, int budget,
                                    std::uint64_t seed = 0);

}  // namespace tdfc
