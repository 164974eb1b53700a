#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tdfc/compiler.hpp"
#include "tdfc/errors.hpp"
#include "tdfc/families.hpp"
#include "tdfc/io.hpp"

#include "test_util.hpp"

#include <filesystem>
#include <random>

using namespace tdfc;

TEST_CASE("graph documents round-trip") {
    const auto g = build_family(FamilySpec::tcs(2, 3));
    const auto doc = graph_from_json_text(graph_to_json_text(g));
    CHECK(doc.graph.n_slots == g.n_slots);
    CHECK(doc.graph.excited == g.excited);
    CHECK(doc.graph.edges == g.edges);
}

TEST_CASE("family documents expand to their graphs") {
    const auto doc = graph_from_json_text(R"({"family": "tcs", "a": 2, "d": 3})");
    CHECK(doc.family.has_value());
    CHECK(doc.graph.edges == build_family(FamilySpec::tcs(2, 3)).edges);

    const auto lattice =
        graph_from_json_text(R"({"family": "lattice", "dims": [2, 3]})");
    CHECK(lattice.graph.n_slots == 6);
}

TEST_CASE("explicit graph documents normalize edges") {
    const auto doc = graph_from_json_text(
        R"({"n_slots": 3, "excited": [1, 2, 3], "edges": [[2, 1], [2, 3]]})");
    CHECK(doc.graph.edges == std::set<Edge>{{1, 2}, {2, 3}});
}

TEST_CASE("malformed documents raise ParseError") {
    CHECK_THROWS_AS(graph_from_json_text("not json"), ParseError);
    CHECK_THROWS_AS(graph_from_json_text(R"({"n_slots": 3})"), ParseError);
    CHECK_THROWS_AS(graph_from_json_text(R"({"family": "rings", "n": 3})"), ParseError);
    CHECK_THROWS_AS(
        graph_from_json_text(R"({"n_slots": 3, "excited": [1], "edges": [[1]]})"),
        ParseError);
    CHECK_THROWS_AS(schedule_from_json_text("[1, 2]"), ParseError);
    CHECK_THROWS_AS(schedule_from_json_text(R"({"n_slots": 2})"), ParseError);
}

TEST_CASE("schedule documents round-trip bit-exactly") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = test::random_schedule(rng, 12);
        s.provenance = {"naive", {{"note", "trial"}}};
        const std::string text = schedule_to_json_text(s);
        const Schedule loaded = schedule_from_json_text(text);
        CHECK(loaded == s);
        CHECK(schedule_to_json_text(loaded) == text);
    }

    const auto lattice = compile_lattice_embedded(2, 4);
    const std::string text = schedule_to_json_text(lattice);
    CHECK(schedule_from_json_text(text) == lattice);
    CHECK(schedule_to_json_text(schedule_from_json_text(text)) == text);
}

TEST_CASE("loaded schedules are validated") {
    CHECK_THROWS_AS(
        schedule_from_json_text(
            R"({"n_slots": 3, "excitation_set": [1], "native_chain_gates": [1],
                "blocks": []})"),
        InvalidSpec);
    CHECK_THROWS_AS(
        schedule_from_json_text(
            R"({"n_slots": 3, "excitation_set": [1, 2, 3], "native_chain_gates": [],
                "blocks": [{"delay": 2, "enabled_gates": [1]},
                           {"delay": 2, "enabled_gates": []}]})"),
        InvalidSpec);
}

TEST_CASE("matrix CSV export") {
    const auto d = to_distribution(build_family(FamilySpec::linear(3)));
    CHECK(matrix_csv(d) == "1,1,0\n0,1,1\n0,0,1\n");
}

TEST_CASE("DOT export marks excited nodes and delay classes") {
    const ClusterGraph g(3, {1, 3}, {{1, 3}});
    const std::string dot = graph_dot(g);
    CHECK(dot.find("1 [style=filled") != std::string::npos);
    CHECK(dot.find("2 [style=dashed]") != std::string::npos);
    CHECK(dot.find("1 -- 3 [label=\"2\"]") != std::string::npos);
}

TEST_CASE("atomic writes leave no temporaries") {
    const auto dir = std::filesystem::temp_directory_path() / "tdfc_io_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "data.txt").string();
    write_file_atomic(path, "hello\n");
    CHECK(read_file(path) == "hello\n");
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    write_file_atomic(path, "shorter\n");
    CHECK(read_file(path) == "shorter\n");
    std::filesystem::remove_all(dir);
}
