#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "mcf/filtration.hpp"
#include "mcf/homology.hpp"
#include "mcf/io.hpp"

using namespace mcf;

TEST_SUITE_BEGIN("io");

TEST_CASE("shortest round-trip doubles") {
    for (double x : {0.1, 1.0 / 3.0, 5.3, -2.25e-7, 0.0, 1e300}) {
        CHECK(parse_double(format_double(x), "test") == x);
    }
    CHECK(format_double(0.75) == "0.75");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(parse_double("inf", "test") == std::numeric_limits<double>::infinity());
    CHECK_THROWS(parse_double("zebra", "test"));
}

TEST_CASE("sequence JSON round trip") {
    auto seq = fixtures::running_example();
    auto back = sequence_from_json(sequence_to_json(seq));
    CHECK(back.scales() == seq.scales());
    CHECK(back.partitions() == seq.partitions());

    SUBCASE("missing fields are reported by name") {
        CHECK_THROWS_WITH_AS(sequence_from_json("{\"scales\": []}"),
                             doctest::Contains("n_points"), std::runtime_error);
    }
    SUBCASE("label-count mismatch is reported with the partition index") {
        CHECK_THROWS_WITH_AS(
            sequence_from_json(
                "{\"n_points\": 3, \"scales\": [1], \"partitions\": [[0, 1]]}"),
            doctest::Contains("partition 0"), std::runtime_error);
    }
}

TEST_CASE("sequence CSV round trip") {
    auto seq = fixtures::running_example();
    auto back = sequence_from_csv(sequence_to_csv(seq));
    CHECK(back.scales() == seq.scales());
    CHECK(back.partitions() == seq.partitions());
    CHECK_THROWS_WITH_AS(sequence_from_csv("1,0\nbad,0\n"), doctest::Contains("line 2"),
                         std::runtime_error);
}

TEST_CASE("filtration text round trip is bit exact") {
    SplitMix64 rng(8);
    auto seq = fixtures::random_sequence(6, 4, rng);
    auto fc = build_mcf(seq, 3);
    std::string text = filtration_to_text(fc);
    auto back = filtration_from_text(text);
    CHECK(filtration_to_text(back) == text);
    REQUIRE(back.size() == fc.size());
    for (std::size_t i = 0; i < fc.size(); ++i) {
        CHECK(back.cell(i).value == fc.cell(i).value);
        CHECK(back.cell(i).simplex == fc.cell(i).simplex);
    }
    CHECK_THROWS_WITH_AS(filtration_from_text("1 2 0 1\n"),
                         doctest::Contains("dimension"), std::runtime_error);
}

TEST_CASE("diagram CSV round trip with infinities") {
    auto r = reduce(build_mcf(fixtures::running_example(), 3));
    std::vector<PersistenceDiagram> diagrams{diagram(r, 0), diagram(r, 1), diagram(r, 2)};
    std::string csv = diagrams_to_csv(diagrams);
    CHECK(csv.find("0,1,inf") != std::string::npos);
    CHECK(csv.find("1,4,5") != std::string::npos);
    auto back = diagrams_from_csv(csv);
    REQUIRE(back.size() == 2); // dim 2 is empty and vanishes
    CHECK(back[0].points == diagrams[0].points);
    CHECK(back[1].points == diagrams[1].points);
    CHECK_THROWS_WITH_AS(diagrams_from_csv("dim,birth\n"), doctest::Contains("header"),
                         std::runtime_error);
}

TEST_CASE("atomic write leaves no temporary behind") {
    auto dir = std::filesystem::temp_directory_path() / "mcf_io_test";
    std::filesystem::create_directories(dir);
    auto path = dir / "out.txt";
    atomic_write(path, "payload\n");
    CHECK(read_file(path) == "payload\n");
    CHECK_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("edge list round trip") {
    RandomGraph g{5, {{0, 1}, {1, 4}, {2, 3}}, 7};
    auto dir = std::filesystem::temp_directory_path() / "mcf_io_test_graph";
    std::filesystem::create_directories(dir);
    auto path = dir / "graph.txt";
    atomic_write(path, graph_to_edge_list(g));
    auto back = read_edge_list(path);
    CHECK(back.n == 5);
    CHECK(back.edges == g.edges);
    std::filesystem::remove_all(dir);
}

TEST_SUITE_END();
