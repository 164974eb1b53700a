#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace tdfc {

/// One time-delayed feedback stage: a mirror round trip of `delay` emission
/// periods plus a per-slot enable mask. An enabled slot i means "apply CZ
/// between slots i and i+delay"; returning photons at disabled slots pass
/// through without scattering.
struct TdfBlock {
    int delay = 1;
    std::set<int> enabled_gates;

    friend bool operator==(const TdfBlock&, const TdfBlock&) = default;
};

struct Provenance {
    std::string pass;
    std::map<std::string, std::string> params;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Full generation schedule: which slots are excited, which consecutive
/// pairs are entangled at emission (no TDF needed), and the ordered TDF
/// blocks. Times are in units of the emission period, so slot i is emitted
/// at t = i. `numbering` maps input-graph node v to its slot numbering[v-1];
/// identity-sized passes use a permutation, the lattice pass an injection
/// into a larger slot range.
struct Schedule {
    int n_slots = 0;
    std::set<int> excitation_set;
    std::set<int> native_chain_gates;  ///< i meaning CZ(i, i+1) at emission
    std::vector<TdfBlock> blocks;
    std::vector<int> numbering;
    Provenance provenance;

    /// Throws InvalidSpec on violated invariants: gate endpoints must be
    /// excited, block delays pairwise distinct, indices in range.
    void validate() const;

    /// Delay classes in use: {1 if native gates exist} plus block delays.
    std::set<int> delay_classes_used() const;

    /// Number of TDF blocks (the native delay-1 class is not a TDF).
    int tdf_count() const { return static_cast<int>(blocks.size()); }

    /// All CZ gates as (i, j) slot pairs, native first, then blocks in order.
    std::vector<std::pair<int, int>> all_gates() const;

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

}  // namespace tdfc
