#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "fixtures.hpp"
#include "mcf/filtration.hpp"
#include "mcf/homology.hpp"
#include "mcf/synth.hpp"

using namespace mcf;

namespace {

std::map<Simplex, double> cell_map(const FilteredComplex& fc) {
    std::map<Simplex, double> out;
    for (const Cell& c : fc.cells()) out.emplace(c.simplex, c.value);
    return out;
}

} // namespace

TEST_SUITE_BEGIN("filtrations");

TEST_CASE("running-example clustering filtration") {
    auto seq = fixtures::running_example();
    auto fc = build_mcf(seq, 2);

    REQUIRE(fc.size() == 7);
    std::map<Simplex, double> expected{
        {Simplex{0}, 1}, {Simplex{1}, 1},    {Simplex{2}, 1},    {Simplex{0, 1}, 2},
        {Simplex{1, 2}, 3}, {Simplex{0, 2}, 4}, {Simplex{0, 1, 2}, 5}};
    CHECK(cell_map(fc) == expected);
    CHECK(validate(fc).ok);

    SUBCASE("cells are in reduction order") {
        for (std::size_t i = 1; i < fc.size(); ++i) {
            const Cell& a = fc.cell(i - 1);
            const Cell& b = fc.cell(i);
            bool ordered = a.value < b.value ||
                           (a.value == b.value &&
                            (a.dim() < b.dim() ||
                             (a.dim() == b.dim() && a.simplex < b.simplex)));
            CHECK(ordered);
        }
    }
    SUBCASE("filtration values") {
        CHECK(filtration_value(fc, Simplex{0, 1}) == 2);
        CHECK(filtration_value(fc, Simplex{1}) == 1);
        CHECK(filtration_value(fc, Simplex{0, 1, 2}) == 5);
        CHECK_THROWS_AS(filtration_value(fc, Simplex{0, 3}), std::out_of_range);
    }
    SUBCASE("skeleton restriction drops the triangle") {
        auto skeleton = build_mcf(seq, 1);
        CHECK(skeleton.size() == 6);
        CHECK_FALSE(skeleton.contains(Simplex{0, 1, 2}));
    }
    SUBCASE("not 2-determined: all edges precede the triangle") {
        CHECK(fc.value_of(Simplex{0, 1}) <= 4);
        CHECK(fc.value_of(Simplex{1, 2}) <= 4);
        CHECK(fc.value_of(Simplex{0, 2}) <= 4);
        CHECK(fc.value_of(Simplex{0, 1, 2}) == 5);
    }
}

TEST_CASE("clustering filtration of singletons") {
    ScaledPartitionSequence seq({Partition::singletons(4)}, {2.0});
    auto fc = build_mcf(seq, 3);
    CHECK(fc.size() == 4);
    for (const Cell& c : fc.cells()) {
        CHECK(c.dim() == 0);
        CHECK(c.value == 2.0);
    }
}

TEST_CASE("skeleton consistency and nestedness on random sequences") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        auto seq = fixtures::random_sequence(2 + static_cast<int>(rng.next_below(6)),
                                             1 + static_cast<int>(rng.next_below(5)), rng);
        auto full = build_mcf(seq, 3);
        CHECK(validate(full).ok);

        // the d-skeleton of the deeper build equals the shallow build
        auto shallow = build_mcf(seq, 2);
        std::map<Simplex, double> restricted;
        for (const Cell& c : full.cells())
            if (c.dim() <= 2) restricted.emplace(c.simplex, c.value);
        CHECK(cell_map(shallow) == restricted);

        // nestedness: cells with value <= t form a subcomplex for every t
        for (double t : full.scale_grid()) {
            for (const Cell& c : full.cells()) {
                if (c.value > t || c.dim() == 0) continue;
                for (std::size_t f = 0; f < c.simplex.size(); ++f)
                    CHECK(full.value_of(c.simplex.facet(f)) <= t);
            }
        }
    }
}

TEST_CASE("cluster assignment graph of the running example") {
    auto seq = fixtures::running_example();
    auto g = build_cag(seq);
    CHECK(g.num_vertices() == 3);
    CHECK(g.vertex_value() == 1.0);
    CHECK(g.edge(0, 1) == 2.0);
    CHECK(g.edge(1, 2) == 3.0);
    CHECK(g.edge(0, 2) == 4.0);
    CHECK(g.edge(2, 0) == 4.0); // symmetric lookup
}

TEST_CASE("points never co-clustered stay unlinked") {
    std::vector<Partition> parts{Partition({0, 1, 2}), Partition({0, 0, 1})};
    ScaledPartitionSequence seq(parts, {1, 2});
    auto g = build_cag(seq);
    CHECK(g.edge(0, 1) == 2.0);
    CHECK_FALSE(g.edge(0, 2).has_value());
    CHECK_FALSE(g.edge(1, 2).has_value());
}

TEST_CASE("hierarchical CAG weights satisfy the strong triangle inequality") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng.next_below(8));
        Eigen::MatrixXd dist = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                dist(i, j) = dist(j, i) = 0.25 + rng.next_double();
        auto seq = single_linkage(dist);
        auto g = build_cag(seq);
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (z == x || z == y) continue;
                    auto xy = g.edge(x, y), xz = g.edge(x, z), zy = g.edge(z, y);
                    REQUIRE(xy.has_value());
                    REQUIRE(xz.has_value());
                    REQUIRE(zy.has_value());
                    CHECK(*xy <= std::max(*xz, *zy) + 1e-15);
                }
    }
}

TEST_CASE("clique filtration of the running-example CAG") {
    auto seq = fixtures::running_example();
    auto fc = build_clique_filtration(build_cag(seq), 2);
    // the flag complex closes the triangle as soon as its last edge arrives
    CHECK(fc.value_of(Simplex{0, 1, 2}) == 4.0);
    CHECK(fc.value_of(Simplex{0, 1}) == 2.0);
    CHECK(fc.value_of(Simplex{1, 2}) == 3.0);
    CHECK(fc.value_of(Simplex{0, 2}) == 4.0);
    CHECK(validate(fc).ok);

    SUBCASE("1-skeletons of both constructions coincide, values included") {
        auto mcf_complex = build_mcf(seq, 2);
        for (const Cell& c : fc.cells())
            if (c.dim() <= 1) CHECK(mcf_complex.value_of(c.simplex) == c.value);
        for (const Cell& c : mcf_complex.cells())
            if (c.dim() <= 1) CHECK(fc.value_of(c.simplex) == c.value);
    }
}

TEST_CASE("clique filtration of an edgeless graph") {
    WeightedGraph g(3, 0.5);
    auto fc = build_clique_filtration(g, 3);
    CHECK(fc.size() == 3);
    for (const Cell& c : fc.cells()) CHECK(c.dim() == 0);
}

TEST_CASE("clique filtrations are 2-determined on random graphs") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng.next_below(6));
        WeightedGraph g(n, 0.0);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_double() < 0.6) g.set_edge(u, v, rng.next_double());
        auto fc = build_clique_filtration(g, 3);
        CHECK(validate(fc).ok);
        for (double t : fc.scale_grid()) {
            // every <=4-subset whose edges are all present at t must be a cell
            std::vector<int> vertices(static_cast<std::size_t>(n));
            std::iota(vertices.begin(), vertices.end(), 0);
            auto edge_at = [&](int a, int b) {
                auto w = g.edge(a, b);
                return w.has_value() && *w <= t;
            };
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = b + 1; c < n; ++c) {
                        if (edge_at(a, b) && edge_at(a, c) && edge_at(b, c)) {
                            REQUIRE(fc.contains(Simplex{a, b, c}));
                            CHECK(fc.value_of(Simplex{a, b, c}) <= t);
                        }
                    }
        }
    }
}

TEST_CASE("nerve filtration of the running example") {
    auto seq = fixtures::running_example();
    auto fc = build_mcnf(seq, 3);
    long vertex_count = 0;
    for (const Cell& c : fc.cells())
        if (c.dim() == 0) ++vertex_count;
    CHECK(vertex_count == 10); // 3+2+2+2+1 cluster occurrences
    CHECK(validate(fc).ok);

    SUBCASE("its 1-dimensional diagram matches the clustering filtration") {
        auto nerve_diagram = diagram(reduce(fc), 1);
        auto direct_diagram = diagram(reduce(build_mcf(seq, 3)), 1);
        REQUIRE(nerve_diagram.points.size() == 1);
        CHECK(nerve_diagram.points[0] == DiagramPoint{4, 5});
        CHECK(nerve_diagram.points == direct_diagram.points);
    }
}

TEST_CASE("nerve of a single partition is discrete") {
    ScaledPartitionSequence seq({Partition({0, 1, 2, 0, 1})}, {3.0});
    auto fc = build_mcnf(seq, 3);
    CHECK(fc.size() == 3);
    for (const Cell& c : fc.cells()) {
        CHECK(c.dim() == 0);
        CHECK(c.value == 3.0);
    }
}

TEST_CASE("validate flags hand-built defects") {
    SUBCASE("missing face") {
        FilteredComplex fc({Cell{1, Simplex{0}}, Cell{1, Simplex{1}}, Cell{2, Simplex{0, 1, 2}}},
                           2);
        auto report = validate(fc);
        CHECK_FALSE(report.ok);
        CHECK(!report.violations.empty());
    }
    SUBCASE("face after coface") {
        FilteredComplex fc({Cell{3, Simplex{0}}, Cell{1, Simplex{1}}, Cell{2, Simplex{0, 1}}},
                           1);
        auto report = validate(fc);
        CHECK_FALSE(report.ok);
    }
    SUBCASE("duplicate cells are rejected at construction") {
        CHECK_THROWS_AS(FilteredComplex({Cell{1, Simplex{0}}, Cell{2, Simplex{0}}}, 0),
                        std::invalid_argument);
    }
}

TEST_SUITE_END();
