#include "tdfc/compiler.hpp"

#include "tdfc/distribution.hpp"
#include "tdfc/errors.hpp"
#include "tdfc/families.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace tdfc {

Schedule schedule_from_numbering(const ClusterGraph& graph,
                                 const std::vector<int>& numbering,
                                 Provenance provenance) {
    graph.validate();
    if (static_cast<int>(numbering.size()) != graph.n_slots) {
        throw InvalidPermutation("numbering length does not match n_slots");
    }

    Schedule s;
    s.n_slots = graph.n_slots;
    s.numbering = numbering;
    s.provenance = std::move(provenance);
    for (int v : graph.excited) {
        s.excitation_set.insert(numbering[static_cast<std::size_t>(v - 1)]);
    }
    std::map<int, std::set<int>> by_delay;
    for (const auto& [u, v] : graph.edges) {
        const auto e = make_edge(numbering[static_cast<std::size_t>(u - 1)],
                                 numbering[static_cast<std::size_t>(v - 1)]);
        const int delay = e.second - e.first;
        if (delay == 1) {
            s.native_chain_gates.insert(e.first);
        } else {
            by_delay[delay].insert(e.first);
        }
    }
    for (auto& [delay, gates] : by_delay) {
        s.blocks.push_back({delay, std::move(gates)});
    }
    s.validate();
    return s;
}

Schedule compile_naive(const ClusterGraph& graph) {
    std::vector<int> identity(static_cast<std::size_t>(graph.n_slots));
    std::iota(identity.begin(), identity.end(), 1);
    return schedule_from_numbering(graph, identity, {"naive", {}});
}

Schedule compile_layer_symmetric(int a, int d) {
    const auto spec = FamilySpec::tcs(a, d);
    const ClusterGraph tree = build_family(spec);
    const int n = tree.n_slots;

    // Layers keep their contiguous slot ranges; inside layer l+1 the
    // rank-r child of the parent at slot position j lands at
    // next_start + r * n_l + j, so the parent-child interval is
    // (1+r) * n_l for the whole layer.
    std::vector<int> numbering(static_cast<std::size_t>(n));
    numbering[0] = 1;
    int cur_start = 1, layer_size = 1, heap_first = 1;
    for (int l = 1; l < d; ++l) {
        const int next_start = cur_start + layer_size;
        for (int k = heap_first; k < heap_first + layer_size; ++k) {
            const int j = numbering[static_cast<std::size_t>(k - 1)] - cur_start;
            const auto children = tcs_children(a, d, k);
            for (std::size_t r = 0; r < children.size(); ++r) {
                numbering[static_cast<std::size_t>(children[r] - 1)] =
                    next_start + static_cast<int>(r) * layer_size + j;
            }
        }
        heap_first += layer_size;
        cur_start = next_start;
        layer_size *= a;
    }
    return schedule_from_numbering(
        tree, numbering,
        {"layer", {{"a", std::to_string(a)}, {"d", std::to_string(d)}}});
}

namespace {

using int128 = __int128;

int128 checked_mul(int128 a, int128 b) {
    int128 out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Overflow("integer overflow in feasibility computation");
    }
    return out;
}

int128 checked_pow(int128 base, int exp) {
    int128 out = 1;
    for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

/// F(a,d) in 128-bit arithmetic; feeds both the public API and the
/// depth scan (whose intermediate values outgrow 64 bits near a = 16).
int128 feasibility_wide(int a, int d) {
    if (a < 2 || d < 1) throw OutOfRange("feasibility requires a >= 2, d >= 1");
    const int128 capacity = checked_pow(d, a) + checked_pow(d - 1, a);
    const int128 tree = (checked_pow(a, d) - 1) / (a - 1);
    return capacity - tree;
}

}  // namespace

long long feasibility(int a, int d) {
    const int128 f = feasibility_wide(a, d);
    if (f > std::numeric_limits<long long>::max() ||
        f < std::numeric_limits<long long>::min()) {
        throw Overflow("feasibility value exceeds 64-bit range");
    }
    return static_cast<long long>(f);
}

int max_embeddable_depth(int a) {
    if (a < 2) throw OutOfRange("branching factor must be >= 2");
    int best = 0;
    for (int d = 1;; ++d) {
        const int128 f = feasibility_wide(a, d);
        if (f > 0) {
            best = d;
        } else if (d >= 2) {
            // The tree term grows exponentially against a polynomial
            // capacity, so the first non-positive value past d=1 is final.
            return best;
        }
    }
}

namespace {

struct SearchCost {
    int classes_above_one = 0;
    long long interval_sum = 0;

    friend auto operator<=>(const SearchCost&, const SearchCost&) = default;
};

SearchCost numbering_cost(const std::vector<int>& slot_of,
                          const std::vector<std::pair<int, int>>& edges) {
    std::set<int> classes;
    long long sum = 0;
    for (const auto& [u, v] : edges) {
        const int delta = std::abs(slot_of[static_cast<std::size_t>(u - 1)] -
                                   slot_of[static_cast<std::size_t>(v - 1)]);
        classes.insert(delta);
        sum += delta;
    }
    classes.erase(1);
    return {static_cast<int>(classes.size()), sum};
}

}  // namespace

SearchResult minimize_delay_classes(const ClusterGraph& graph, int budget,
                                    std::uint64_t seed) {
    graph.validate();
    const int n = graph.n_slots;
    std::vector<std::pair<int, int>> edges(graph.edges.begin(), graph.edges.end());

    std::vector<int> current(static_cast<std::size_t>(n));
    std::iota(current.begin(), current.end(), 1);
    std::vector<int> best = current;
    SearchCost best_cost = numbering_cost(current, edges);
    int evals = 1;

    std::mt19937_64 rng(seed);
    bool first_restart = true;
    while (evals < budget) {
        if (!first_restart) {
            std::iota(current.begin(), current.end(), 1);
            std::shuffle(current.begin(), current.end(), rng);
        }
        first_restart = false;
        SearchCost cost = numbering_cost(current, edges);
        ++evals;

        bool improved = true;
        while (improved && evals < budget) {
            improved = false;
            for (int i = 0; i < n && evals < budget; ++i) {
                for (int j = i + 1; j < n && evals < budget; ++j) {
                    std::swap(current[static_cast<std::size_t>(i)],
                              current[static_cast<std::size_t>(j)]);
                    const SearchCost c = numbering_cost(current, edges);
                    ++evals;
                    if (c < cost) {
                        cost = c;
                        improved = true;
                    } else {
                        std::swap(current[static_cast<std::size_t>(i)],
                                  current[static_cast<std::size_t>(j)]);
                    }
                }
            }
        }
        if (cost < best_cost || (cost == best_cost && current < best)) {
            best_cost = cost;
            best = current;
        }
    }

    SearchResult result;
    result.numbering = best;
    result.evaluations = evals;
    result.schedule = schedule_from_numbering(
        graph, best, {"search", {{"budget", std::to_string(budget)},
                                 {"seed", std::to_string(seed)}}});
    return result;
}

}  // namespace tdfc
