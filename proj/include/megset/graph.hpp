#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "common.hpp"

namespace megset {

// Number of distinct shortest paths between two vertices. Grows exponentially
// with n in general, so exact arbitrary-precision arithmetic is required: the
// monitoring predicate depends on exact count equality.
using PathCount = boost::multiprecision::cpp_int;

// Distance sentinel for unreachable vertex pairs. Kept distinct from any real
// distance so that arithmetic on "infinity" cannot happen silently.
inline constexpr int kUnreachable = -1;

struct EndpointOutOfRangeError : ValidationError {
    using ValidationError::ValidationError;
};
struct SelfLoopError : ValidationError {
    using ValidationError::ValidationError;
};
struct DuplicateEdgeError : ValidationError {
    using ValidationError::ValidationError;
};
struct DisconnectedError : ValidationError {
    using ValidationError::ValidationError;
};

// Unordered vertex pair stored canonically with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(Edge e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// Simple undirected graph on vertices 0..vertex_count-1. Immutable after
// construction through build_graph, hence safe to share across concurrent
// readers.
struct Graph {
    int vertex_count = 0;
    std::vector<std::vector<int>> adjacency;  // sorted neighbor lists
    std::vector<Edge> edges;                  // canonical (u < v), sorted

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }

    bool has_vertex(int v) const { return v >= 0 && v < vertex_count; }

    bool has_edge(Edge e) const {
        if (!has_vertex(e.u) || !has_vertex(e.v)) return false;
        const auto& adj = adjacency[e.u];
        return std::binary_search(adj.begin(), adj.end(), e.v);
    }
    bool has_edge(int a, int b) const { return has_edge(Edge(a, b)); }

    // Position of e in the canonical edge list.
    int edge_index(Edge e) const {
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e)
            throw ValidationError("not an edge of the graph: " + to_string(e));
        return static_cast<int>(it - edges.begin());
    }
};

inline Graph build_graph(int vertex_count, const std::vector<Edge>& edge_list) {
    if (vertex_count < 0) throw ValidationError("vertex count must be non-negative");
    Graph g;
    g.vertex_count = vertex_count;
    g.adjacency.resize(static_cast<size_t>(vertex_count));
    g.edges.reserve(edge_list.size());
    for (Edge e : edge_list) {
        if (e.u == e.v)
            throw SelfLoopError("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= vertex_count)
            throw EndpointOutOfRangeError("edge " + to_string(e) + " has an endpoint outside 0.." +
                                          std::to_string(vertex_count - 1));
        g.edges.push_back(e);
    }
    std::sort(g.edges.begin(), g.edges.end());
    auto dup = std::adjacent_find(g.edges.begin(), g.edges.end());
    if (dup != g.edges.end())
        throw DuplicateEdgeError("duplicate edge " + to_string(*dup));
    for (Edge e : g.edges) {
        g.adjacency[e.u].push_back(e.v);
        g.adjacency[e.v].push_back(e.u);
    }
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
    return g;
}

struct BfsResult {
    int source = 0;
    std::vector<int> dist;         // kUnreachable where no path exists
    std::vector<PathCount> count;  // exact shortest-path multiplicities (0 if unreachable)
};

inline BfsResult bfs_with_counts(const Graph& g, int source) {
    if (!g.has_vertex(source))
        throw ValidationError("BFS source out of range: " + std::to_string(source));
    BfsResult r;
    r.source = source;
    r.dist.assign(static_cast<size_t>(g.vertex_count), kUnreachable);
    r.count.assign(static_cast<size_t>(g.vertex_count), PathCount(0));
    r.dist[source] = 0;
    r.count[source] = 1;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int w : g.adjacency[u]) {
            if (r.dist[w] == kUnreachable) {
                r.dist[w] = r.dist[u] + 1;
                r.count[w] = r.count[u];
                frontier.push(w);
            } else if (r.dist[w] == r.dist[u] + 1) {
                r.count[w] += r.count[u];
            }
        }
    }
    return r;
}

// True iff every vertex is reachable from vertex 0 (vacuously for n <= 1).
inline bool is_connected(const Graph& g) {
    if (g.vertex_count <= 1) return true;
    BfsResult r = bfs_with_counts(g, 0);
    return std::none_of(r.dist.begin(), r.dist.end(),
                        [](int d) { return d == kUnreachable; });
}

// Hop distance from x to y in G - e (edge deleted, vertices kept).
inline int distance_without_edge(const Graph& g, int x, int y, Edge e) {
    if (!g.has_vertex(x) || !g.has_vertex(y))
        throw ValidationError("vertex out of range");
    if (!g.has_edge(e))
        throw ValidationError("not an edge of the graph: " + to_string(e));
    std::vector<int> dist(static_cast<size_t>(g.vertex_count), kUnreachable);
    dist[x] = 0;
    std::queue<int> frontier;
    frontier.push(x);
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        if (u == y) break;
        for (int w : g.adjacency[u]) {
            if (Edge(u, w) == e) continue;
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                frontier.push(w);
            }
        }
    }
    return dist[y];
}

// --- Edge-list text format -------------------------------------------------
//
// First line "n m", then m lines "u v" (0-based). '#' comment lines and blank
// lines are ignored. Either endpoint order is accepted on input; output is
// canonical u < v.

inline Graph read_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_data_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (detail::is_blank(line) || detail::is_comment(line)) continue;
            out = line;
            return true;
        }
        return false;
    };
    auto parse_two = [&](const std::string& text, long long& a, long long& b) {
        std::istringstream ss(text);
        std::string extra;
        if (!(ss >> a >> b) || (ss >> extra))
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected two integers, got \"" + detail::trim(text) + "\"");
    };

    std::string header;
    if (!next_data_line(header)) throw ParseError("empty graph file");
    long long n = 0, m = 0;
    parse_two(header, n, m);
    if (n < 0 || m < 0) throw ParseError("negative count in header");

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::string edge_line;
        if (!next_data_line(edge_line))
            throw ParseError("expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        long long a = 0, b = 0;
        parse_two(edge_line, a, b);
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    std::string tail;
    if (next_data_line(tail))
        throw ParseError("line " + std::to_string(line_no) + ": unexpected trailing content");
    return build_graph(static_cast<int>(n), edges);
}

inline void write_graph(const Graph& g, std::ostream& out) {
    out << g.vertex_count << ' ' << g.edge_count() << '\n';
    for (Edge e : g.edges) out << e.u << ' ' << e.v << '\n';
}

inline void write_dot(const Graph& g, std::ostream& out) {
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count; ++v) out << "  " << v << ";\n";
    for (Edge e : g.edges) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
}

}  // namespace megset
