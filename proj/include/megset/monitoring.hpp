#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "graph.hpp"

namespace megset {

// Sorted duplicate-free vertex subset claimed to monitor all edges.
struct MegSet {
    std::vector<int> vertices;

    MegSet() = default;
    explicit MegSet(std::vector<int> ids) : vertices(std::move(ids)) {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    }

    int size() const { return static_cast<int>(vertices.size()); }
    bool empty() const { return vertices.empty(); }
    bool contains(int v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }

    friend bool operator==(const MegSet&, const MegSet&) = default;
};

// A pair {x, y} certified to monitor a given edge.
struct MonitorWitness {
    int x = 0;
    int y = 0;
    Edge edge;
};

namespace detail {

inline void check_pair_preconditions(const Graph& g, int x, int y) {
    if (!g.has_vertex(x) || !g.has_vertex(y))
        throw ValidationError("vertex out of range");
    if (x == y) throw ValidationError("pair vertices must be distinct");
    if (!is_connected(g)) throw DisconnectedError("graph is not connected");
}

inline void check_meg_set_args(const Graph& g, const MegSet& m) {
    if (m.empty()) throw ValidationError("MEG-set is empty");
    for (int v : m.vertices)
        if (!g.has_vertex(v))
            throw ValidationError("MEG-set vertex out of range: " + std::to_string(v));
    if (!is_connected(g)) throw DisconnectedError("graph is not connected");
}

}  // namespace detail

// Core predicate: {x, y} monitors e iff e lies on every shortest x-y path.
// Characterization used here, for one orientation (u, v) of e: the distance
// condition d(x,u) + 1 + d(v,y) = d(x,y) places e on some geodesic, and the
// count condition sigma(x,u) * sigma(v,y) = sigma(x,y) forces all of them
// through it. At most one orientation can satisfy the distance condition.
//
// This overload takes precomputed BFS results from both endpoints and skips
// precondition checks; from_x.source must be x and from_y.source must be y.
inline bool pair_monitors_edge(const Graph& g, const BfsResult& from_x,
                               const BfsResult& from_y, Edge e) {
    (void)g;
    const int total = from_x.dist[from_y.source];
    auto oriented = [&](int u, int v) {
        if (from_x.dist[u] == kUnreachable || from_y.dist[v] == kUnreachable) return false;
        if (from_x.dist[u] + 1 + from_y.dist[v] != total) return false;
        return from_x.count[u] * from_y.count[v] == from_x.count[from_y.source];
    };
    return oriented(e.u, e.v) || oriented(e.v, e.u);
}

inline bool pair_monitors_edge(const Graph& g, int x, int y, Edge e) {
    detail::check_pair_preconditions(g, x, y);
    if (!g.has_edge(e))
        throw ValidationError("not an edge of the graph: " + to_string(e));
    return pair_monitors_edge(g, bfs_with_counts(g, x), bfs_with_counts(g, y), e);
}

// Independent route to the same predicate: {x, y} monitors e iff deleting e
// strictly increases d(x, y), where unreachable counts as an increase.
// Equivalence with pair_monitors_edge is a standing test obligation.
inline bool pair_monitors_edge_oracle(const Graph& g, int x, int y, Edge e) {
    detail::check_pair_preconditions(g, x, y);
    if (!g.has_edge(e))
        throw ValidationError("not an edge of the graph: " + to_string(e));
    const int base = bfs_with_counts(g, x).dist[y];
    const int without = distance_without_edge(g, x, y, e);
    return without == kUnreachable || without > base;
}

// All edges monitored by the pair {x, y}: two BFS runs and one pass over the
// edge list.
inline std::vector<Edge> monitored_edges_of_pair(const Graph& g, int x, int y) {
    detail::check_pair_preconditions(g, x, y);
    const BfsResult from_x = bfs_with_counts(g, x);
    const BfsResult from_y = bfs_with_counts(g, y);
    std::vector<Edge> out;
    for (Edge e : g.edges)
        if (pair_monitors_edge(g, from_x, from_y, e)) out.push_back(e);
    return out;
}

struct Verdict {
    bool valid = false;
    std::vector<Edge> unmonitored;  // canonical order; empty when valid
};

// Valid iff every edge is monitored by some pair from m. Pairs are visited in
// lexicographic order with per-edge short-circuiting; the verdict itself is
// order-independent.
inline Verdict verify_meg_set(const Graph& g, const MegSet& m) {
    detail::check_meg_set_args(g, m);
    const size_t edge_total = g.edges.size();
    std::vector<char> monitored(edge_total, 0);
    size_t missing = edge_total;

    std::vector<std::optional<BfsResult>> bfs(m.vertices.size());
    auto from = [&](size_t i) -> const BfsResult& {
        if (!bfs[i]) bfs[i] = bfs_with_counts(g, m.vertices[i]);
        return *bfs[i];
    };

    for (size_t i = 0; i + 1 < m.vertices.size() && missing > 0; ++i) {
        for (size_t j = i + 1; j < m.vertices.size() && missing > 0; ++j) {
            const BfsResult& fx = from(i);
            const BfsResult& fy = from(j);
            for (size_t idx = 0; idx < edge_total; ++idx) {
                if (monitored[idx]) continue;
                if (pair_monitors_edge(g, fx, fy, g.edges[idx])) {
                    monitored[idx] = 1;
                    --missing;
                }
            }
        }
    }

    Verdict verdict;
    verdict.valid = missing == 0;
    for (size_t idx = 0; idx < edge_total; ++idx)
        if (!monitored[idx]) verdict.unmonitored.push_back(g.edges[idx]);
    return verdict;
}

// Lexicographically least pair in m monitoring e, or nullopt.
inline std::optional<MonitorWitness> witness_for_edge(const Graph& g, const MegSet& m,
                                                      Edge e) {
    detail::check_meg_set_args(g, m);
    if (!g.has_edge(e))
        throw ValidationError("not an edge of the graph: " + to_string(e));
    std::vector<std::optional<BfsResult>> bfs(m.vertices.size());
    auto from = [&](size_t i) -> const BfsResult& {
        if (!bfs[i]) bfs[i] = bfs_with_counts(g, m.vertices[i]);
        return *bfs[i];
    };
    for (size_t i = 0; i + 1 < m.vertices.size(); ++i)
        for (size_t j = i + 1; j < m.vertices.size(); ++j)
            if (pair_monitors_edge(g, from(i), from(j), e))
                return MonitorWitness{m.vertices[i], m.vertices[j], e};
    return std::nullopt;
}

// Precomputed monitored-edge bitmask for every vertex pair of a connected
// graph. Row (x, y) agrees bit-for-bit with monitored_edges_of_pair(g, x, y);
// the solvers use it to test candidate sets without repeating BFS work.
class MonitorTable {
public:
    using Mask = boost::dynamic_bitset<>;

    explicit MonitorTable(const Graph& g)
        : vertex_count_(g.vertex_count), edge_count_(g.edge_count()) {
        if (!is_connected(g)) throw DisconnectedError("graph is not connected");
        std::vector<BfsResult> bfs;
        bfs.reserve(static_cast<size_t>(vertex_count_));
        for (int v = 0; v < vertex_count_; ++v) bfs.push_back(bfs_with_counts(g, v));
        masks_.reserve(static_cast<size_t>(vertex_count_) * (vertex_count_ - 1) / 2);
        for (int x = 0; x < vertex_count_; ++x) {
            for (int y = x + 1; y < vertex_count_; ++y) {
                Mask mask(static_cast<size_t>(edge_count_));
                for (int idx = 0; idx < edge_count_; ++idx)
                    if (pair_monitors_edge(g, bfs[x], bfs[y], g.edges[idx]))
                        mask.set(static_cast<size_t>(idx));
                masks_.push_back(std::move(mask));
            }
        }
    }

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return edge_count_; }

    const Mask& mask(int x, int y) const { return masks_[pair_index(x, y)]; }

    bool pair_monitors(int x, int y, int edge_index) const {
        return mask(x, y).test(static_cast<size_t>(edge_index));
    }

    Mask empty_mask() const { return Mask(static_cast<size_t>(edge_count_)); }

    // Union of pair masks over all pairs within the sorted id list.
    Mask coverage(const std::vector<int>& vertices) const {
        Mask covered = empty_mask();
        for (size_t i = 0; i + 1 < vertices.size(); ++i)
            for (size_t j = i + 1; j < vertices.size(); ++j)
                covered |= mask(vertices[i], vertices[j]);
        return covered;
    }

private:
    size_t pair_index(int x, int y) const {
        if (x > y) std::swap(x, y);
        return static_cast<size_t>(x) * (2 * vertex_count_ - x - 1) / 2 +
               static_cast<size_t>(y - x - 1);
    }

    int vertex_count_;
    int edge_count_;
    std::vector<Mask> masks_;
};

// --- MEG-set text format ----------------------------------------------------
//
// One line of space-separated vertex ids. '#' comment lines are ignored on
// input; tokens may span lines.

inline MegSet read_meg_set(std::istream& in) {
    std::vector<int> ids;
    std::string line;
    while (std::getline(in, line)) {
        if (detail::is_comment(line)) continue;
        std::istringstream ss(line);
        std::string token;
        while (ss >> token) {
            try {
                size_t pos = 0;
                int v = std::stoi(token, &pos);
                if (pos != token.size()) throw std::invalid_argument(token);
                ids.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("invalid vertex id \"" + token + "\"");
            }
        }
    }
    return MegSet(std::move(ids));
}

inline void write_meg_set(const MegSet& m, std::ostream& out) {
    for (size_t i = 0; i < m.vertices.size(); ++i) {
        if (i > 0) out << ' ';
        out << m.vertices[i];
    }
    out << '\n';
}

}  // namespace megset
