#pragma once

// Independent reference implementations used only by tests. Everything here
// favors being obviously correct over being fast: distances and path counts
// come from literal simple-path enumeration, the monitoring check walks every
// geodesic, and the minimum MEG-set search enumerates subsets with no
// structural shortcuts. Desk scale only.

#include <algorithm>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "megset/graph.hpp"
#include "megset/monitoring.hpp"

namespace oracles {

struct PathStats {
    int dist = megset::kUnreachable;
    long long count = 0;  // number of shortest paths
};

namespace detail {

// Enumerate every simple path from `at` to `target`, reporting each path's
// vertex sequence. Exponential; callers keep n small.
template <typename Fn>
void walk_paths(const megset::Graph& g, int at, int target, std::vector<int>& path,
                std::vector<char>& on_path, Fn&& report) {
    if (at == target) {
        report(path);
        return;
    }
    for (int w : g.adjacency[static_cast<size_t>(at)]) {
        if (on_path[static_cast<size_t>(w)]) continue;
        on_path[static_cast<size_t>(w)] = 1;
        path.push_back(w);
        walk_paths(g, w, target, path, on_path, report);
        path.pop_back();
        on_path[static_cast<size_t>(w)] = 0;
    }
}

template <typename Fn>
void for_each_simple_path(const megset::Graph& g, int x, int y, Fn&& report) {
    std::vector<int> path{x};
    std::vector<char> on_path(static_cast<size_t>(g.vertex_count), 0);
    on_path[static_cast<size_t>(x)] = 1;
    walk_paths(g, x, y, path, on_path, report);
}

}  // namespace detail

// Distance and shortest-path count by enumerating all simple paths.
inline PathStats path_stats(const megset::Graph& g, int x, int y) {
    PathStats out;
    if (x == y) {
        out.dist = 0;
        out.count = 1;
        return out;
    }
    detail::for_each_simple_path(g, x, y, [&](const std::vector<int>& path) {
        const int len = static_cast<int>(path.size()) - 1;
        if (out.dist == megset::kUnreachable || len < out.dist) {
            out.dist = len;
            out.count = 1;
        } else if (len == out.dist) {
            ++out.count;
        }
    });
    return out;
}

// Definition-literal monitoring check: e lies on every shortest x-y path.
inline bool definition_monitors(const megset::Graph& g, int x, int y, megset::Edge e) {
    int best = megset::kUnreachable;
    std::vector<std::vector<int>> shortest;
    detail::for_each_simple_path(g, x, y, [&](const std::vector<int>& path) {
        const int len = static_cast<int>(path.size()) - 1;
        if (best == megset::kUnreachable || len < best) {
            best = len;
            shortest.clear();
        }
        if (len == best) shortest.push_back(path);
    });
    if (shortest.empty()) return false;
    for (const auto& path : shortest) {
        bool uses_e = false;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (megset::Edge(path[i], path[i + 1]) == e) {
                uses_e = true;
                break;
            }
        if (!uses_e) return false;
    }
    return true;
}

// Per-pair monitored-edge masks derived from the edge-deletion route only
// (distance must strictly increase when the edge is removed). Shares nothing
// with the production counting predicate.
class DeletionMaskTable {
public:
    using Mask = boost::dynamic_bitset<>;

    explicit DeletionMaskTable(const megset::Graph& g) : n_(g.vertex_count) {
        std::vector<megset::BfsResult> bfs;
        for (int v = 0; v < n_; ++v) bfs.push_back(megset::bfs_with_counts(g, v));
        masks_.reserve(static_cast<size_t>(n_) * (n_ - 1) / 2);
        for (int x = 0; x < n_; ++x) {
            for (int y = x + 1; y < n_; ++y) {
                Mask mask(g.edges.size());
                for (size_t idx = 0; idx < g.edges.size(); ++idx) {
                    const int base = bfs[static_cast<size_t>(x)].dist[static_cast<size_t>(y)];
                    const int cut = megset::distance_without_edge(g, x, y, g.edges[idx]);
                    if (cut == megset::kUnreachable || cut > base) mask.set(idx);
                }
                masks_.push_back(std::move(mask));
            }
        }
    }

    const Mask& mask(int x, int y) const {
        if (x > y) std::swap(x, y);
        return masks_[static_cast<size_t>(x) * (2 * n_ - x - 1) / 2 +
                      static_cast<size_t>(y - x - 1)];
    }

private:
    int n_;
    std::vector<Mask> masks_;
};

namespace detail {

template <typename Fn>
bool each_combination(int n, int r, Fn&& fn) {
    std::vector<int> idx(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
        if (fn(idx)) return true;
        int i = r - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - r + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<size_t>(i)];
        for (int t = i + 1; t < r; ++t)
            idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
    }
}

}  // namespace detail

// Unrestricted exhaustive minimum MEG-set: subsets enumerated by cardinality
// then lexicographically, validity judged by the deletion-based masks. First
// hit is the lexicographically least minimum. No forced-vertex seeding, no
// candidate exclusion.
inline std::optional<megset::MegSet> brute_force_min_meg(
    const megset::Graph& g, std::optional<int> budget = std::nullopt) {
    if (g.vertex_count <= 1) return megset::MegSet{};
    const DeletionMaskTable table(g);
    const size_t edge_total = g.edges.size();
    const int limit = budget ? std::min(*budget, g.vertex_count) : g.vertex_count;
    for (int size = 1; size <= limit; ++size) {
        std::optional<megset::MegSet> found;
        detail::each_combination(g.vertex_count, size, [&](const std::vector<int>& ids) {
            boost::dynamic_bitset<> covered(edge_total);
            for (size_t i = 0; i + 1 < ids.size(); ++i)
                for (size_t j = i + 1; j < ids.size(); ++j)
                    covered |= table.mask(ids[i], ids[j]);
            if (covered.all()) {
                found = megset::MegSet(ids);
                return true;
            }
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace oracles
