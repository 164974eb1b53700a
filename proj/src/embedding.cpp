#include "tdfc/compiler.hpp"

#include "tdfc/errors.hpp"
#include "tdfc/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace tdfc {

int EmbeddingResult::slot_of(int node) const {
    const auto it = placement.find(node);
    if (it == placement.end()) {
        throw IndexOutOfRange("node " + std::to_string(node) + " not placed");
    }
    int slot = 1, stride = 1;
    for (int c : it->second) {
        slot += c * stride;
        stride *= raster_width;
    }
    return slot;
}

void EmbeddingResult::validate(int a, int d) const {
    const int n = tcs_node_count(a, d);
    if (static_cast<int>(placement.size()) != n) {
        throw InvalidSpec("placement does not cover the tree");
    }
    for (int extent : dims) {
        // rasterization with stride w^k is injective only within width w
        if (extent < 1 || extent > raster_width) {
            throw InvalidSpec("lattice extent exceeds the raster width");
        }
    }
    std::set<std::vector<int>> seen;
    for (const auto& [node, pos] : placement) {
        if (static_cast<int>(pos.size()) != a) {
            throw InvalidSpec("coordinate dimension mismatch");
        }
        for (std::size_t ax = 0; ax < pos.size(); ++ax) {
            if (pos[ax] < 0 || pos[ax] >= dims[ax]) {
                throw InvalidSpec("coordinate outside lattice extents");
            }
        }
        if (!seen.insert(pos).second) {
            throw InvalidSpec("placement is not injective");
        }
    }
    for (int k = 1; k <= n; ++k) {
        for (int c : tcs_children(a, d, k)) {
            const auto& p = placement.at(k);
            const auto& q = placement.at(c);
            int l1 = 0;
            for (std::size_t ax = 0; ax < p.size(); ++ax) {
                l1 += std::abs(p[ax] - q[ax]);
            }
            if (l1 != 1) {
                throw InvalidSpec("tree edge (" + std::to_string(k) + "," +
                                  std::to_string(c) + ") is not a unit step");
            }
        }
    }
}

namespace {

/// Depth-first placement of the heap-ordered tree on a dense occupancy grid
/// centered at the root. Two exact pruning rules keep the search small:
/// a node in layer l can sit at most l-1 steps from the root, and the free
/// sites reachable by a subtree must at least match its size.
class EmbedSearch {
public:
    EmbedSearch(int a, int d)
        : a_(a), d_(d), n_(tcs_node_count(a, d)), side_(2 * d - 1) {
        grid_size_ = 1;
        for (int ax = 0; ax < a_; ++ax) grid_size_ *= side_;
        occupied_.assign(static_cast<std::size_t>(grid_size_), false);
        position_.assign(static_cast<std::size_t>(n_) + 1, {});

        // Tree sizes per layer and the DFS order of nodes.
        subtree_size_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (int k = n_; k >= 1; --k) {
            subtree_size_[static_cast<std::size_t>(k)] = 1;
            for (int c : tcs_children(a_, d_, k)) {
                subtree_size_[static_cast<std::size_t>(k)] +=
                    subtree_size_[static_cast<std::size_t>(c)];
            }
        }
        dfs_order_.reserve(static_cast<std::size_t>(n_));
        append_dfs(1);

        // Offsets of the l1 ball of each radius, for the capacity prune.
        ball_offsets_.resize(static_cast<std::size_t>(d_));
        std::vector<int> delta(static_cast<std::size_t>(a_), 0);
        build_ball(delta, 0, d_ - 1);
    }

    bool run(long long budget) {
        budget_ = budget;
        const std::vector<int> origin(static_cast<std::size_t>(a_), d_ - 1);
        position_[1] = origin;
        occupied_[static_cast<std::size_t>(index_of(origin))] = true;
        return place(1);
    }

    bool exhausted() const { return tries_ >= budget_; }

    std::map<int, std::vector<int>> placements() const {
        std::map<int, std::vector<int>> out;
        for (int k = 1; k <= n_; ++k) {
            out[k] = position_[static_cast<std::size_t>(k)];
        }
        return out;
    }

private:
    void append_dfs(int k) {
        dfs_order_.push_back(k);
        for (int c : tcs_children(a_, d_, k)) append_dfs(c);
    }

    void build_ball(std::vector<int>& delta, int ax, int remaining) {
        if (ax == a_) {
            int l1 = 0;
            for (int v : delta) l1 += std::abs(v);
            if (l1 > 0) {
                for (int r = l1; r <= d_ - 1; ++r) {
                    ball_offsets_[static_cast<std::size_t>(r)].push_back(delta);
                }
            }
            return;
        }
        for (int v = -remaining; v <= remaining; ++v) {
            delta[static_cast<std::size_t>(ax)] = v;
            build_ball(delta, ax + 1, remaining - std::abs(v));
        }
        delta[static_cast<std::size_t>(ax)] = 0;
    }

    int index_of(const std::vector<int>& pos) const {
        int idx = 0, stride = 1;
        for (int ax = 0; ax < a_; ++ax) {
            idx += pos[static_cast<std::size_t>(ax)] * stride;
            stride *= side_;
        }
        return idx;
    }

    int l1_from_root(const std::vector<int>& pos) const {
        int l1 = 0;
        for (int v : pos) l1 += std::abs(v - (d_ - 1));
        return l1;
    }

    bool in_grid(const std::vector<int>& pos) const {
        for (int v : pos) {
            if (v < 0 || v >= side_) return false;
        }
        return true;
    }

    /// Free sites usable by the subtree rooted at layer `layer` from `pos`:
    /// within l1 radius d-layer of pos and within the root ball.
    bool capacity_ok(const std::vector<int>& pos, int layer, int need) const {
        const int radius = d_ - layer;
        if (radius <= 0 || need <= 0) return true;
        int free = 0;
        for (const auto& delta : ball_offsets_[static_cast<std::size_t>(radius)]) {
            std::vector<int> q(static_cast<std::size_t>(a_));
            for (int ax = 0; ax < a_; ++ax) {
                q[static_cast<std::size_t>(ax)] =
                    pos[static_cast<std::size_t>(ax)] + delta[static_cast<std::size_t>(ax)];
            }
            if (!in_grid(q) || l1_from_root(q) > d_ - 1) continue;
            if (!occupied_[static_cast<std::size_t>(index_of(q))]) {
                if (++free >= need) return true;
            }
        }
        return false;
    }

    bool place(std::size_t order_idx) {
        if (order_idx == dfs_order_.size()) return true;
        const int k = dfs_order_[order_idx];
        const int layer = tcs_layer(a_, k);
        const auto& parent_pos = position_[static_cast<std::size_t>(tcs_parent(a_, k))];

        // Alternate the preferred axis per layer, positive direction first.
        for (int t = 0; t < 2 * a_; ++t) {
            const int ax = (layer + t / 2) % a_;
            const int dir = (t % 2 == 0) ? 1 : -1;
            std::vector<int> q = parent_pos;
            q[static_cast<std::size_t>(ax)] += dir;
            if (!in_grid(q) || l1_from_root(q) > layer - 1) continue;
            const int idx = index_of(q);
            if (occupied_[static_cast<std::size_t>(idx)]) continue;
            if (++tries_ > budget_) return false;

            occupied_[static_cast<std::size_t>(idx)] = true;
            position_[static_cast<std::size_t>(k)] = q;
            if (capacity_ok(q, layer, subtree_size_[static_cast<std::size_t>(k)] - 1) &&
                place(order_idx + 1)) {
                return true;
            }
            occupied_[static_cast<std::size_t>(idx)] = false;
        }
        return false;
    }

    int a_, d_, n_, side_;
    int grid_size_ = 0;
    long long budget_ = 0;
    long long tries_ = 0;
    std::vector<bool> occupied_;
    std::vector<std::vector<int>> position_;
    std::vector<int> subtree_size_;
    std::vector<int> dfs_order_;
    std::vector<std::vector<std::vector<int>>> ball_offsets_;
};

constexpr long long kEmbedBudget = 50'000'000;

/// Sites of each l1 parity within the radius-r ball of Z^a. Unit steps
/// alternate parity, so layer-l tree nodes can only land on sites of
/// parity (l-1) mod 2; comparing counts gives an exact infeasibility
/// proof that the plain capacity formula misses for a > 2.
std::pair<long long, long long> ball_parity_counts(int a, int r) {
    // sites at l1 distance exactly k from the origin in Z^a
    std::vector<long long> shell(static_cast<std::size_t>(r) + 1, 0);
    // dp over axes: ways to write distance k as sum of |coordinates|
    std::vector<long long> ways(static_cast<std::size_t>(r) + 1, 0);
    ways[0] = 1;
    for (int ax = 0; ax < a; ++ax) {
        std::vector<long long> next(static_cast<std::size_t>(r) + 1, 0);
        for (int k = 0; k <= r; ++k) {
            if (ways[static_cast<std::size_t>(k)] == 0) continue;
            for (int v = 0; k + v <= r; ++v) {
                next[static_cast<std::size_t>(k + v)] +=
                    ways[static_cast<std::size_t>(k)] * (v == 0 ? 1 : 2);
            }
        }
        ways = std::move(next);
    }
    shell = ways;
    long long even = 0, odd = 0;
    for (int k = 0; k <= r; ++k) {
        (k % 2 == 0 ? even : odd) += shell[static_cast<std::size_t>(k)];
    }
    return {even, odd};
}

void check_parity_capacity(int a, int d) {
    long long need_even = 0, need_odd = 0, layer_nodes = 1;
    for (int l = 1; l <= d; ++l) {
        ((l - 1) % 2 == 0 ? need_even : need_odd) += layer_nodes;
        layer_nodes *= a;
    }
    const auto [have_even, have_odd] = ball_parity_counts(a, d - 1);
    if (need_even > have_even || need_odd > have_odd) {
        throw EmbeddingInfeasible(
            "lattice parity capacity violated for a=" + std::to_string(a) +
                ", d=" + std::to_string(d) + ": need " + std::to_string(need_even) +
                "/" + std::to_string(need_odd) + " even/odd sites, have " +
                std::to_string(have_even) + "/" + std::to_string(have_odd),
            /*capacity=*/true);
    }
}

}  // namespace

EmbeddingResult embed_tree_in_lattice(int a, int d) {
    if (a < 2 || d < 1) throw OutOfRange("embedding requires a >= 2, d >= 1");

    EmbeddingResult result;
    result.raster_width = 2 * d - 1;

    if (d == 1) {
        // Single node; F(a,1) = 0 is the exact-fit boundary.
        result.dims.assign(static_cast<std::size_t>(a), 1);
        result.placement[1] = std::vector<int>(static_cast<std::size_t>(a), 0);
        return result;
    }
    if (feasibility(a, d) <= 0) {
        throw EmbeddingInfeasible(
            "lattice capacity bound violated: F(" + std::to_string(a) + "," +
                std::to_string(d) + ") = " + std::to_string(feasibility(a, d)) +
                " <= 0",
            /*capacity=*/true);
    }
    check_parity_capacity(a, d);

    EmbedSearch search(a, d);
    if (!search.run(kEmbedBudget)) {
        throw EmbeddingInfeasible(
            search.exhausted()
                ? "backtracking budget exhausted for a=" + std::to_string(a) +
                      ", d=" + std::to_string(d)
                : "backtracking search exhausted all placements for a=" +
                      std::to_string(a) + ", d=" + std::to_string(d),
            /*capacity=*/false);
    }

    auto placement = search.placements();

    // Normalize each axis to start at zero and record the used extents.
    std::vector<int> lo(static_cast<std::size_t>(a), 1 << 30);
    std::vector<int> hi(static_cast<std::size_t>(a), -(1 << 30));
    for (const auto& [node, pos] : placement) {
        for (int ax = 0; ax < a; ++ax) {
            lo[static_cast<std::size_t>(ax)] =
                std::min(lo[static_cast<std::size_t>(ax)], pos[static_cast<std::size_t>(ax)]);
            hi[static_cast<std::size_t>(ax)] =
                std::max(hi[static_cast<std::size_t>(ax)], pos[static_cast<std::size_t>(ax)]);
        }
    }
    for (auto& [node, pos] : placement) {
        for (int ax = 0; ax < a; ++ax) {
            pos[static_cast<std::size_t>(ax)] -= lo[static_cast<std::size_t>(ax)];
        }
    }
    result.placement = std::move(placement);
    for (int ax = 0; ax < a; ++ax) {
        result.dims.push_back(hi[static_cast<std::size_t>(ax)] -
                              lo[static_cast<std::size_t>(ax)] + 1);
    }
    result.validate(a, d);
    return result;
}

Schedule compile_lattice_embedded(int a, int d) {
    const EmbeddingResult embedding = embed_tree_in_lattice(a, d);
    const ClusterGraph tree = build_family(FamilySpec::tcs(a, d));

    Schedule s;
    s.provenance = {"lattice", {{"a", std::to_string(a)}, {"d", std::to_string(d)}}};
    s.numbering.resize(static_cast<std::size_t>(tree.n_slots));
    for (int k = 1; k <= tree.n_slots; ++k) {
        const int slot = embedding.slot_of(k);
        s.numbering[static_cast<std::size_t>(k - 1)] = slot;
        s.excitation_set.insert(slot);
        s.n_slots = std::max(s.n_slots, slot);
    }

    if (d >= 2) {
        // One block per lattice axis beyond the native axis, present even
        // when a given tree uses no edge along it.
        std::vector<std::set<int>> per_axis(static_cast<std::size_t>(a));
        for (const auto& [u, v] : tree.edges) {
            const int su = embedding.slot_of(u);
            const int sv = embedding.slot_of(v);
            const int delta = std::abs(su - sv);
            int stride = 1;
            for (int ax = 0; ax < a; ++ax) {
                if (delta == stride) {
                    per_axis[static_cast<std::size_t>(ax)].insert(std::min(su, sv));
                    break;
                }
                stride *= embedding.raster_width;
            }
        }
        s.native_chain_gates = std::move(per_axis[0]);
        int stride = embedding.raster_width;
        for (int ax = 1; ax < a; ++ax) {
            s.blocks.push_back({stride, std::move(per_axis[static_cast<std::size_t>(ax)])});
            stride *= embedding.raster_width;
        }
    }
    s.validate();

    // Every tree edge must have landed in some class; anything left over
    // would mean a non-unit or non-axis step slipped through.
    std::size_t assigned = s.native_chain_gates.size();
    for (const auto& b : s.blocks) assigned += b.enabled_gates.size();
    if (assigned != tree.edges.size()) {
        throw EmbeddingInfeasible("embedding produced a non-axis edge", false);
    }
    return s;
}

}  // namespace tdfc
