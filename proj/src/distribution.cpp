#include "tdfc/distribution.hpp"

#include "tdfc/errors.hpp"

#include <algorithm>
#include <string>

namespace tdfc {

DistributionMatrix::DistributionMatrix(int n) : n_(n) {
    if (n < 0) throw InvalidSpec("matrix dimension must be non-negative");
    rows_.assign(static_cast<std::size_t>(n), BitRow(static_cast<std::size_t>(n)));
}

void DistributionMatrix::check_range(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
        throw IndexOutOfRange("matrix index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") outside [1, " +
                              std::to_string(n_) + "]");
    }
}

bool DistributionMatrix::get(int i, int j) const {
    check_range(i, j);
    if (i > j) return false;  // strictly lower-triangular part is zero
    return rows_[static_cast<std::size_t>(i - 1)].get(static_cast<std::size_t>(j - 1));
}

void DistributionMatrix::set_diagonal(int i, bool v) {
    check_range(i, i);
    rows_[static_cast<std::size_t>(i - 1)].set(static_cast<std::size_t>(i - 1), v);
}

void DistributionMatrix::toggle_off_diagonal(int i, int j) {
    check_range(i, j);
    if (i == j) throw InvalidSpec("off-diagonal toggle on the diagonal");
    if (i > j) std::swap(i, j);
    rows_[static_cast<std::size_t>(i - 1)].toggle(static_cast<std::size_t>(j - 1));
}

void DistributionMatrix::validate() const {
    for (int i = 1; i <= n_; ++i) {
        for (int j = i + 1; j <= n_; ++j) {
            if (get(i, j) && !(get(i, i) && get(j, j))) {
                throw InvalidSpec("entanglement bit (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") between unexcited slots");
            }
        }
    }
}

std::set<int> DistributionMatrix::excited() const {
    std::set<int> out;
    for (int i = 1; i <= n_; ++i) {
        if (get(i, i)) out.insert(i);
    }
    return out;
}

std::set<Edge> DistributionMatrix::edge_set() const {
    std::set<Edge> out;
    for (int i = 1; i <= n_; ++i) {
        for (int j = i + 1; j <= n_; ++j) {
            if (get(i, j)) out.insert({i, j});
        }
    }
    return out;
}

DistributionMatrix apply_ops(const std::vector<GenOp>& ops, int n_slots) {
    DistributionMatrix d(n_slots);
    for (const auto& op : ops) {
        if (op.kind == GenOp::Kind::Excite) {
            if (op.target < 1 || op.target > n_slots) {
                throw IndexOutOfRange("Excite target " + std::to_string(op.target));
            }
            d.set_diagonal(op.target, true);
        } else {
            const int i = op.target;
            const int j = op.target + op.delay;
            if (op.delay < 1 || i < 1 || j > n_slots) {
                throw IndexOutOfRange("Entangle(" + std::to_string(i) + ", alpha=" +
                                      std::to_string(op.delay) + ") out of range");
            }
            if (!d.get(i, i) || !d.get(j, j)) {
                throw EntangleUnexcited("Entangle(" + std::to_string(i) + "," +
                                        std::to_string(j) + ") before both excitations");
            }
            d.toggle_off_diagonal(i, j);
        }
    }
    d.validate();
    return d;
}

DistributionMatrix to_distribution(const ClusterGraph& graph,
                                   const std::vector<int>& numbering) {
    graph.validate();
    const int n = graph.n_slots;
    if (static_cast<int>(numbering.size()) != n) {
        throw InvalidPermutation("numbering length " + std::to_string(numbering.size()) +
                                 " != n_slots " + std::to_string(n));
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int s : numbering) {
        if (s < 1 || s > n || seen[static_cast<std::size_t>(s)]) {
            throw InvalidPermutation("numbering is not a bijection on [1, " +
                                     std::to_string(n) + "]");
        }
        seen[static_cast<std::size_t>(s)] = true;
    }

    DistributionMatrix d(n);
    for (int v : graph.excited) {
        d.set_diagonal(numbering[static_cast<std::size_t>(v - 1)], true);
    }
    for (const auto& [u, v] : graph.edges) {
        d.toggle_off_diagonal(numbering[static_cast<std::size_t>(u - 1)],
                              numbering[static_cast<std::size_t>(v - 1)]);
    }
    d.validate();
    return d;
}

DistributionMatrix to_distribution(const ClusterGraph& graph) {
    std::vector<int> identity(static_cast<std::size_t>(graph.n_slots));
    for (int i = 0; i < graph.n_slots; ++i) identity[static_cast<std::size_t>(i)] = i + 1;
    return to_distribution(graph, identity);
}

std::set<int> delay_classes(const DistributionMatrix& d) {
    std::set<int> classes;
    for (const auto& [i, j] : d.edge_set()) classes.insert(j - i);
    return classes;
}

GateCounts gate_counts(const DistributionMatrix& d) {
    GateCounts c;
    c.n_h = static_cast<int>(d.excited().size());
    c.n_cz = static_cast<int>(d.edge_set().size());
    return c;
}

}  // namespace tdfc
