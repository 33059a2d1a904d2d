#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fixtures.hpp"
#include "lpaleb/graph.hpp"

using namespace lpaleb;
using namespace lpaleb::testing;

namespace {

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in);
}

void check_invariants(const Graph& g) {
    std::size_t degree_sum = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const auto nbrs = g.neighbors(u);
        degree_sum += nbrs.size();
        CHECK(std::is_sorted(nbrs.begin(), nbrs.end(),
                             [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; }));
        for (const auto& [v, e] : nbrs) {
            CHECK(v != u);
            const auto back = g.neighbors(v);
            CHECK(std::count(back.begin(), back.end(), Incidence{u, e}) == 1);
            const auto& edge = g.edge(e);
            CHECK(edge.u == std::min(u, v));
            CHECK(edge.v == std::max(u, v));
        }
    }
    CHECK(degree_sum == 2 * g.edge_count());
    const auto edges = g.edges();
    CHECK(std::adjacent_find(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return !(a < b); }) ==
          edges.end());
}

}  // namespace

TEST_CASE("load_edge_list builds the expected graph") {
    const auto g = parse("0 1\n1 2\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    REQUIRE(g.edges().size() == 2);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{1, 2});
    check_invariants(g);
}

TEST_CASE("reversed and repeated lines collapse") {
    const auto g = parse("0 1\n1 0\n");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(parse("3 4\n4 3\n3 4\n").edge_count() == 1);
}

TEST_CASE("comments, blank lines and tabs are accepted") {
    const auto g = parse("# header\n\n  0\t1  \r\n# another\n2 1\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("empty input yields the empty graph") {
    const auto g = parse("# nothing here\n\n");
    CHECK(g.node_count() == 0);
    CHECK(g.edge_count() == 0);
    CHECK(g.average_degree() == 0.0);
}

TEST_CASE("gaps in node ids become isolated nodes") {
    const auto g = parse("0 1\n5 6\n");
    CHECK(g.node_count() == 7);
    for (NodeId u : {2u, 3u, 4u}) CHECK(degree(g, u) == 0);
    check_invariants(g);
}

TEST_CASE("parse errors report the line number") {
    try {
        parse("0 1\n\n1 x\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("0\n"), ParseError);
    CHECK_THROWS_AS(parse("-1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("1.5 2\n"), ParseError);
    CHECK_THROWS_AS(parse("99999999999 1\n"), ParseError);
}

TEST_CASE("self-loops are rejected with the line number") {
    try {
        parse("0 1\n2 2\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("degree") {
    const auto tri = triangle();
    for (NodeId u = 0; u < 3; ++u) CHECK(degree(tri, u) == 2);
    CHECK(degree(Graph::from_edges(1, {}), 0) == 0);
    CHECK_THROWS_AS(degree(tri, 3), std::out_of_range);
    CHECK_THROWS_AS(tri.neighbors(7), std::out_of_range);
    CHECK_THROWS_AS(tri.edge(3), std::out_of_range);
}

TEST_CASE("karate club dataset") {
    const auto g = load_edge_list_file(data_path("karate.edges"));
    CHECK(g.node_count() == 34);
    CHECK(g.edge_count() == 78);
    CHECK(g.average_degree() == doctest::Approx(156.0 / 34.0).epsilon(1e-12));
    // Count of edge lines touching node 0 in the standard list.
    CHECK(degree(g, 0) == 16);
    CHECK(degree(g, 33) == 17);
    check_invariants(g);
}

TEST_CASE("canonical round-trip and order insensitivity") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = 2 + rng.uniform_index(30);
        std::vector<std::string> lines;
        for (std::size_t k = 0; k < 3 * n; ++k) {
            const auto u = rng.uniform_index(n);
            const auto v = rng.uniform_index(n);
            if (u != v) lines.push_back(std::to_string(u) + " " + std::to_string(v));
        }
        std::string text;
        for (const auto& l : lines) text += l + "\n";
        const auto g = parse(text);
        check_invariants(g);

        std::ostringstream canonical;
        write_edge_list(canonical, g);
        CHECK(parse(canonical.str()) == g);

        rng.shuffle(std::span<std::string>(lines));
        std::string shuffled;
        for (const auto& l : lines) {
            // Also flip the orientation of every other line.
            const auto space = l.find(' ');
            shuffled += (shuffled.size() % 2 ? l.substr(space + 1) + " " + l.substr(0, space) : l) + "\n";
        }
        CHECK(parse(shuffled) == g);
    }
}
