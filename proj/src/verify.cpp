#include "tdfc/verify.hpp"

#include "tdfc/emulator.hpp"
#include "tdfc/errors.hpp"
#include "tdfc/stabilizer.hpp"

#include <algorithm>
#include <sstream>

namespace tdfc {

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    os << "target edges:   " << target_edges.size() << '\n';
    os << "realized edges: " << realized_edges.size() << '\n';
    for (const auto& [i, j] : missing) {
        os << "missing: " << i << "-" << j << '\n';
    }
    for (const auto& [i, j] : extra) {
        os << "extra:   " << i << "-" << j << '\n';
    }
    if (!excitations_match) os << "excitation sets differ\n";
    if (!emulator_consistent) os << "emulator timeline disagrees with schedule\n";
    os << "verdict: " << (ok ? "OK" : "MISMATCH") << '\n';
    return os.str();
}

VerifyReport verify_schedule(const Schedule& s, const ClusterGraph& target) {
    target.validate();
    s.validate();

    std::vector<int> numbering = s.numbering;
    if (numbering.empty()) {
        numbering.resize(static_cast<std::size_t>(target.n_slots));
        for (int i = 0; i < target.n_slots; ++i) {
            numbering[static_cast<std::size_t>(i)] = i + 1;
        }
    }
    if (static_cast<int>(numbering.size()) != target.n_slots) {
        throw InvalidSpec("schedule numbering does not cover the target graph");
    }

    VerifyReport report;
    std::set<int> expected_excited;
    for (int v : target.excited) {
        expected_excited.insert(numbering[static_cast<std::size_t>(v - 1)]);
    }
    for (const auto& [u, v] : target.edges) {
        report.target_edges.insert(make_edge(numbering[static_cast<std::size_t>(u - 1)],
                                             numbering[static_cast<std::size_t>(v - 1)]));
    }

    const StabilizerTableau state = run_schedule(s);
    const ClusterGraph realized = extract_graph(state, s.excitation_set);
    report.realized_edges = realized.edges;
    report.excitations_match = expected_excited == s.excitation_set;

    std::set_difference(report.target_edges.begin(), report.target_edges.end(),
                        report.realized_edges.begin(), report.realized_edges.end(),
                        std::inserter(report.missing, report.missing.begin()));
    std::set_difference(report.realized_edges.begin(), report.realized_edges.end(),
                        report.target_edges.begin(), report.target_edges.end(),
                        std::inserter(report.extra, report.extra.begin()));

    // Timeline cross-check: CZ gates commute, but that is asserted here
    // rather than assumed — replaying the emulated gate order must land on
    // the same stabilizer state.
    const auto events = emulate(s, default_block_configs(s));
    auto emulated_gates = gate_sequence(events);
    auto schedule_gates = s.all_gates();
    std::sort(emulated_gates.begin(), emulated_gates.end());
    std::sort(schedule_gates.begin(), schedule_gates.end());
    bool consistent = emulated_gates == schedule_gates;
    if (consistent) {
        StabilizerTableau replay = prepare_plus(s.excitation_set, s.n_slots);
        for (const auto& [i, j] : gate_sequence(events)) replay.apply_cz(i, j);
        consistent = states_equal(replay, state);
    }
    report.emulator_consistent = consistent;

    report.ok = report.missing.empty() && report.extra.empty() &&
                report.excitations_match && report.emulator_consistent;
    return report;
}

}  // namespace tdfc
