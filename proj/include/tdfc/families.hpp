#pragma once

#include "tdfc/cluster_graph.hpp"

#include <string>
#include <vector>

namespace tdfc {

/// Named state family with its parameters.
struct FamilySpec {
    enum class Kind { Linear, Ccs, Tcs, Lattice };

    Kind kind = Kind::Linear;
    int n = 1;                  ///< Linear/CCS node count
    int branching = 2;          ///< TCS branching factor a
    int depth = 1;              ///< TCS layer count d
    std::vector<int> dims;      ///< Lattice extents

    static FamilySpec linear(int n);
    static FamilySpec ccs(int n);
    static FamilySpec tcs(int a, int d);
    static FamilySpec lattice(std::vector<int> dims);

    void validate() const;

    /// "linear:5", "ccs:5", "tcs:2,4", "lattice:3x4"
    static FamilySpec parse(const std::string& text);
    std::string to_string() const;
};

/// Number of nodes of the a-ary depth-d tree, (a^d - 1) / (a - 1).
int tcs_node_count(int a, int d);

/// Children of heap-ordered node k in an a-ary tree: a*k-(a-2) ... a*k+1.
std::vector<int> tcs_children(int a, int d, int k);

int tcs_parent(int a, int k);

/// Layer (1-based, root = 1) of heap-ordered node k.
int tcs_layer(int a, int k);

/// Builds the family graph. Linear(N) is the path, CCS(N) the complete
/// graph, TCS(a,d) the heap-ordered a-ary tree, Lattice the grid with
/// row-major slot numbering. All slots are excited.
ClusterGraph build_family(const FamilySpec& spec);

}  // namespace tdfc
