#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tdfc/compiler.hpp"
#include "tdfc/emulator.hpp"
#include "tdfc/errors.hpp"
#include "tdfc/families.hpp"
#include "tdfc/stabilizer.hpp"

#include "test_util.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace tdfc;

namespace {

int count_kind(const std::vector<TimelineEvent>& events, EventKind kind) {
    return static_cast<int>(std::count_if(
        events.begin(), events.end(),
        [kind](const TimelineEvent& e) { return e.kind == kind; }));
}

}  // namespace

TEST_CASE("chains emulate without any feedback events") {
    const auto s = compile_naive(build_family(FamilySpec::linear(4)));
    const auto events = emulate(s, default_block_configs(s));
    CHECK(count_kind(events, EventKind::Emit) == 4);
    CHECK(count_kind(events, EventKind::Gate) == 3);
    CHECK(count_kind(events, EventKind::Return) == 0);
    CHECK(count_kind(events, EventKind::HandOff) == 0);
}

TEST_CASE("reference depth-4 tree schedule has six delay-7 gates") {
    const auto s = test::golden_24_schedule();
    const auto events = emulate(s, default_block_configs(s));

    std::vector<long long> gate_times;
    for (const auto& e : events) {
        if (e.kind == EventKind::Gate && e.block == 1) gate_times.push_back(e.time);
    }
    CHECK(gate_times == std::vector<long long>{8, 15, 18, 21, 24, 31});

    // every excited photon returns from the single block
    CHECK(count_kind(events, EventKind::Return) == 15);
    CHECK(count_kind(events, EventKind::HandOff) == 0);  // one block, no crossing
    CHECK(count_kind(events, EventKind::Gate) == 14);
}

TEST_CASE("a masked-off block returns photons without gating") {
    Schedule s;
    s.n_slots = 1;
    s.excitation_set = {1};
    s.blocks.push_back({1, {}});
    const auto events = emulate(s, default_block_configs(s));
    CHECK(count_kind(events, EventKind::Emit) == 1);
    CHECK(count_kind(events, EventKind::Return) == 1);
    CHECK(count_kind(events, EventKind::Gate) == 0);
}

TEST_CASE("returns precede coincident emissions") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = test::random_schedule(rng, 10);
        const auto events = emulate(s, default_block_configs(s));
        CHECK(std::is_sorted(events.begin(), events.end(),
                             [](const TimelineEvent& a, const TimelineEvent& b) {
                                 return std::tie(a.time, a.kind) <
                                        std::tie(b.time, b.kind);
                             }));
        // a Return is never preceded at its own time bin by an Emit
        std::map<long long, std::vector<EventKind>> by_time;
        for (const auto& e : events) by_time[e.time].push_back(e.kind);
        for (const auto& [time, kinds] : by_time) {
            bool seen_emit = false;
            for (const auto k : kinds) {
                if (k == EventKind::Emit) seen_emit = true;
                if (k == EventKind::Return) CHECK_FALSE(seen_emit);
                if (k == EventKind::Gate) CHECK_FALSE(seen_emit);
            }
        }
    }
}

TEST_CASE("every Return is followed by its Gate before the next Emit") {
    const auto s = test::golden_24_schedule();
    const auto events = emulate(s, default_block_configs(s));
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (events[i].kind != EventKind::Return) continue;
        const int slot = events[i].slot;
        const int block = events[i].block;
        const bool enabled =
            s.blocks[static_cast<std::size_t>(block - 1)].enabled_gates.count(slot) > 0;
        bool gate_seen = false;
        for (std::size_t j = i + 1; j < events.size(); ++j) {
            if (events[j].kind == EventKind::Emit) break;
            if (events[j].kind == EventKind::Gate && events[j].slot == slot &&
                events[j].block == block) {
                gate_seen = true;
                break;
            }
        }
        CHECK(gate_seen == enabled);
    }
}

TEST_CASE("one photon per time bin and per-block spacing") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const auto s = test::random_schedule(rng, 10);
        const auto events = emulate(s, default_block_configs(s));
        std::set<long long> emit_times;
        for (const auto& e : events) {
            if (e.kind == EventKind::Emit) {
                CHECK(emit_times.insert(e.time).second);
            }
        }
        // photons cross exactly blocks-1 circulators each
        std::map<int, int> handoffs;
        for (const auto& e : events) {
            if (e.kind == EventKind::HandOff) ++handoffs[e.slot];
        }
        const int expected =
            std::max(static_cast<int>(s.blocks.size()) - 1, 0);
        for (int slot : s.excitation_set) {
            CHECK(handoffs[slot] == (s.blocks.empty() ? 0 : expected));
        }
    }
}

TEST_CASE("emulated gates replay to the scheduled state") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = test::random_schedule(rng, 10);
        const auto events = emulate(s, default_block_configs(s));

        auto emulated = gate_sequence(events);
        auto scheduled = s.all_gates();
        std::sort(emulated.begin(), emulated.end());
        std::sort(scheduled.begin(), scheduled.end());
        CHECK(emulated == scheduled);

        auto replay = prepare_plus(s.excitation_set, s.n_slots);
        for (const auto& [i, j] : gate_sequence(events)) replay.apply_cz(i, j);
        CHECK(states_equal(replay, run_schedule(s)));
    }
}

TEST_CASE("total gate count for the embedded tree") {
    const auto s = compile_lattice_embedded(2, 4);
    const auto events = emulate(s, default_block_configs(s));
    CHECK(count_kind(events, EventKind::Gate) == 14);
}

TEST_CASE("hardware mismatches are rejected") {
    const auto s = test::golden_24_schedule();
    CHECK_THROWS_AS(emulate(s, {}), DelayMismatch);
    CHECK_THROWS_AS(emulate(s, {{6, Chirality::ScatterRight}}), DelayMismatch);

    Schedule bad = s;
    bad.blocks[0].enabled_gates.insert(2);  // slot 2 is vacuum
    CHECK_THROWS_AS(emulate(bad, default_block_configs(bad)), MaskViolation);
}

TEST_CASE("trace format is stable") {
    Schedule s;
    s.n_slots = 3;
    s.excitation_set = {1, 2};
    s.native_chain_gates = {1};
    s.blocks.push_back({2, {}});
    const auto events = emulate(s, default_block_configs(s));
    CHECK(trace_format(events) ==
          "t=1 kind=Emit args=slot=1\n"
          "t=2 kind=Gate args=i=1,j=2,block=0\n"
          "t=2 kind=Emit args=slot=2\n"
          "t=3 kind=Return args=slot=1,block=1\n"
          "t=4 kind=Return args=slot=2,block=1\n");
}
