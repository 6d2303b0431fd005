#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "megset/gen.hpp"
#include "megset/graph.hpp"
#include "support/oracles.hpp"

using namespace megset;

namespace {

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph cycle4() {
    return build_graph(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3)});
}

}  // namespace

TEST_CASE("edges canonicalize and compare") {
    Edge e(3, 1);
    CHECK(e.u == 1);
    CHECK(e.v == 3);
    CHECK(e == Edge(1, 3));
    CHECK(to_string(e) == "(1,3)");
    CHECK(Edge(0, 2) < Edge(1, 2));
}

TEST_CASE("build_graph structures and rejects bad input") {
    const Graph g = cycle4();
    CHECK(g.vertex_count == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.degree(0) == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.adjacency[0] == std::vector<int>{1, 3});
    CHECK(g.edge_index(Edge(0, 3)) == 1);  // canonical order (0,1),(0,3),(1,2),(2,3)
    CHECK_THROWS_AS(g.edge_index(Edge(0, 2)), ValidationError);

    CHECK_THROWS_AS(build_graph(3, {Edge(0, 0)}), SelfLoopError);
    CHECK_THROWS_AS(build_graph(3, {Edge(0, 3)}), EndpointOutOfRangeError);
    CHECK_THROWS_AS(build_graph(3, {Edge(0, -1)}), EndpointOutOfRangeError);
    CHECK_THROWS_AS(build_graph(3, {Edge(0, 1), Edge(1, 0)}), DuplicateEdgeError);
    CHECK_THROWS_AS(build_graph(-1, {}), ValidationError);
}

TEST_CASE("bfs distances and path counts on known graphs") {
    const BfsResult c4 = bfs_with_counts(cycle4(), 0);
    CHECK(c4.dist == std::vector<int>{0, 1, 2, 1});
    CHECK(c4.count == std::vector<PathCount>{1, 1, 2, 1});

    const BfsResult p3 = bfs_with_counts(path_graph(3), 0);
    CHECK(p3.dist == std::vector<int>{0, 1, 2});
    CHECK(p3.count == std::vector<PathCount>{1, 1, 1});

    const Graph isolated = build_graph(2, {});
    const BfsResult iso = bfs_with_counts(isolated, 0);
    CHECK(iso.dist[1] == kUnreachable);
    CHECK(iso.count[1] == 0);

    CHECK_THROWS_AS(bfs_with_counts(isolated, 2), ValidationError);
}

TEST_CASE("bfs counts stay exact beyond 64 bits") {
    // Chain of 70 diamonds: two parallel 2-edge routes per link, so the
    // number of shortest end-to-end paths is 2^70.
    const int links = 70;
    std::vector<Edge> edges;
    for (int i = 0; i < links; ++i) {
        const int x = 3 * i, a = 3 * i + 1, b = 3 * i + 2, next = 3 * i + 3;
        edges.emplace_back(x, a);
        edges.emplace_back(x, b);
        edges.emplace_back(a, next);
        edges.emplace_back(b, next);
    }
    const Graph g = build_graph(3 * links + 1, edges);
    const BfsResult r = bfs_with_counts(g, 0);
    CHECK(r.dist[3 * links] == 2 * links);
    CHECK(r.count[3 * links] == PathCount(1) << links);
}

TEST_CASE("bfs agrees with literal path enumeration") {
    for (uint64_t seed : {11u, 12u, 13u, 14u, 15u}) {
        const Graph g = gnp_connected(7, 0.4, seed);
        INFO("seed " << seed);
        for (int x = 0; x < g.vertex_count; ++x) {
            const BfsResult r = bfs_with_counts(g, x);
            for (int y = 0; y < g.vertex_count; ++y) {
                const auto ref = oracles::path_stats(g, x, y);
                CHECK(r.dist[y] == ref.dist);
                CHECK(r.count[y] == PathCount(ref.count));
            }
        }
    }
}

TEST_CASE("bfs invariants on random graphs") {
    for (uint64_t seed = 1; seed <= 12; ++seed) {
        const Graph g = gnp_connected(4 + static_cast<int>(seed % 6), 0.45, seed);
        std::vector<BfsResult> all;
        for (int v = 0; v < g.vertex_count; ++v) all.push_back(bfs_with_counts(g, v));
        for (int x = 0; x < g.vertex_count; ++x) {
            int zero_dist = 0;
            for (int y = 0; y < g.vertex_count; ++y) {
                if (all[x].dist[y] == 0) ++zero_dist;
                // Symmetry of distances and counts.
                CHECK(all[x].dist[y] == all[y].dist[x]);
                CHECK(all[x].count[y] == all[y].count[x]);
                // Count composition over predecessors.
                if (y != x) {
                    PathCount through;
                    for (int w : g.adjacency[y])
                        if (all[x].dist[w] == all[x].dist[y] - 1) through += all[x].count[w];
                    CHECK(all[x].count[y] == through);
                }
            }
            CHECK(zero_dist == 1);
        }
    }
}

TEST_CASE("connectivity check") {
    CHECK(is_connected(path_graph(3)));
    CHECK(is_connected(cycle4()));
    CHECK(!is_connected(build_graph(2, {})));
    CHECK(is_connected(build_graph(1, {})));
    CHECK(is_connected(build_graph(0, {})));
}

TEST_CASE("distance after deleting one edge") {
    const Graph c4 = cycle4();
    CHECK(distance_without_edge(c4, 0, 2, Edge(0, 1)) == 2);
    const Graph p3 = path_graph(3);
    CHECK(distance_without_edge(p3, 0, 2, Edge(1, 2)) == kUnreachable);
    CHECK(distance_without_edge(p3, 0, 1, Edge(1, 2)) == 1);
    CHECK_THROWS_AS(distance_without_edge(p3, 0, 2, Edge(0, 2)), ValidationError);

    for (uint64_t seed = 21; seed <= 30; ++seed) {
        const Graph g = gnp_connected(8, 0.35, seed);
        const BfsResult from0 = bfs_with_counts(g, 0);
        for (Edge e : g.edges) {
            const int d = distance_without_edge(g, 0, g.vertex_count - 1, e);
            // Deleting an edge can never shorten a route.
            CHECK((d == kUnreachable || d >= from0.dist[g.vertex_count - 1]));
        }
    }
}

TEST_CASE("edge list files round-trip") {
    for (uint64_t seed = 41; seed <= 48; ++seed) {
        const Graph g = gnp_connected(9, 0.3, seed);
        std::stringstream buf;
        write_graph(g, buf);
        const Graph back = read_graph(buf);
        CHECK(back.vertex_count == g.vertex_count);
        CHECK(back.edges == g.edges);
    }
}

TEST_CASE("edge list parser accepts comments and reversed endpoints") {
    std::istringstream in(
        "# comment first\n"
        "3 2\n"
        "\n"
        "1 0\n"
        "# mid comment\n"
        "2 1\n");
    const Graph g = read_graph(in);
    CHECK(g.vertex_count == 3);
    CHECK(g.edges == std::vector<Edge>{Edge(0, 1), Edge(1, 2)});
}

TEST_CASE("edge list parser rejects malformed input") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_graph(in);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("zebra\n"), ParseError);
    CHECK_THROWS_AS(parse("3\n"), ParseError);
    CHECK_THROWS_AS(parse("3 2\n0 1\n"), ParseError);         // missing edge line
    CHECK_THROWS_AS(parse("3 1\n0 1\n1 2\n"), ParseError);    // trailing content
    CHECK_THROWS_AS(parse("3 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse("-3 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("3 2\n0 1\n0 1\n"), DuplicateEdgeError);
    CHECK_THROWS_AS(parse("2 1\n0 5\n"), EndpointOutOfRangeError);
}

TEST_CASE("dot export lists every vertex and edge") {
    std::ostringstream out;
    write_dot(path_graph(3), out);
    const std::string dot = out.str();
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
}
