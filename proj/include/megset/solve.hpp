#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "monitoring.hpp"

namespace megset {

// Vertices of degree 1. Every MEG-set must contain all of them: the pendant
// edge at a leaf is monitored only by pairs that include the leaf itself.
// Requires a connected graph with at least 2 vertices.
inline std::vector<int> forced_vertices(const Graph& g) {
    if (g.vertex_count < 2) throw ValidationError("graph has fewer than 2 vertices");
    if (!is_connected(g)) throw DisconnectedError("graph is not connected");
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count; ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

// Vertices adjacent to a degree-1 vertex. On 3 or more vertices, some minimum
// MEG-set avoids each of them: the leaf stands in for its neighbor on every
// geodesic through the pendant edge. Requires a connected graph with at least
// 3 vertices.
inline std::vector<int> removable_vertices(const Graph& g) {
    if (g.vertex_count < 3) throw ValidationError("graph has fewer than 3 vertices");
    if (!is_connected(g)) throw DisconnectedError("graph is not connected");
    std::vector<char> mark(static_cast<size_t>(g.vertex_count), 0);
    for (int v = 0; v < g.vertex_count; ++v)
        if (g.degree(v) == 1) mark[static_cast<size_t>(g.adjacency[v][0])] = 1;
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count; ++v)
        if (mark[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

namespace detail {

// Depth-first search over candidate vertices in ascending id order, adding at
// most `remaining` of them on top of `chosen`. Candidates are tried in lex
// order, so the first full cover found at a given total size is the
// lexicographically least one of that size.
inline bool extend_cover(const MonitorTable& table, const std::vector<int>& candidates,
                         size_t next, int remaining, std::vector<int>& chosen,
                         MonitorTable::Mask& covered) {
    if (covered.all()) return true;
    if (remaining == 0) return false;
    for (size_t i = next; i < candidates.size(); ++i) {
        if (candidates.size() - i < static_cast<size_t>(remaining)) break;
        const int v = candidates[i];
        MonitorTable::Mask gained = table.empty_mask();
        for (int u : chosen) gained |= table.mask(std::min(u, v), std::max(u, v));
        gained -= covered;
        if (gained.none() && remaining == 1) continue;
        const MonitorTable::Mask saved = covered;
        covered |= gained;
        chosen.push_back(v);
        if (extend_cover(table, candidates, i + 1, remaining - 1, chosen, covered))
            return true;
        chosen.pop_back();
        covered = saved;
    }
    return false;
}

}  // namespace detail

// Exhaustive minimum MEG-set search. Returns the lexicographically least
// minimum MEG-set, or nullopt when `budget` is given and no MEG-set of size
// <= budget exists. Seeds the search with the forced degree-1 vertices and,
// on 3+ vertices, never adds a neighbor of a leaf; both restrictions preserve
// the minimum and the lex order among minimum sets of the restricted family.
inline std::optional<MegSet> exact_min_meg(const Graph& g,
                                           std::optional<int> budget = std::nullopt) {
    if (budget && *budget < 0) return std::nullopt;
    if (g.vertex_count <= 1) {
        if (!is_connected(g)) throw DisconnectedError("graph is not connected");
        return MegSet{};
    }
    if (!is_connected(g)) throw DisconnectedError("graph is not connected");
    if (g.vertex_count == 2) {
        if (budget && *budget < 2) return std::nullopt;
        return MegSet(std::vector<int>{0, 1});
    }

    std::vector<int> base = forced_vertices(g);
    std::vector<char> excluded(static_cast<size_t>(g.vertex_count), 0);
    for (int v : removable_vertices(g)) excluded[static_cast<size_t>(v)] = 1;
    std::vector<int> candidates;
    for (int v = 0; v < g.vertex_count; ++v)
        if (!excluded[static_cast<size_t>(v)] &&
            !std::binary_search(base.begin(), base.end(), v))
            candidates.push_back(v);

    const MonitorTable table(g);
    const int max_size = budget ? std::min(*budget, g.vertex_count)
                                : g.vertex_count;
    if (static_cast<int>(base.size()) > max_size) return std::nullopt;

    for (int size = std::max<int>(2, static_cast<int>(base.size()));
         size <= max_size; ++size) {
        const int extra = size - static_cast<int>(base.size());
        if (extra > static_cast<int>(candidates.size())) break;
        std::vector<int> chosen = base;
        MonitorTable::Mask covered = table.coverage(base);
        if (extra == 0) {
            if (covered.all()) return MegSet(std::move(chosen));
            continue;
        }
        if (detail::extend_cover(table, candidates, 0, extra, chosen, covered))
            return MegSet(std::move(chosen));
    }
    return std::nullopt;
}

// Greedy MEG-set construction: start from the forced degree-1 vertices and
// repeatedly add the vertex whose pairs with the current set monitor the most
// still-unmonitored edges, lowest id on ties. Always returns a valid MEG-set;
// no size guarantee.
inline MegSet greedy_meg(const Graph& g) {
    if (g.vertex_count <= 1) {
        if (!is_connected(g)) throw DisconnectedError("graph is not connected");
        return MegSet{};
    }
    if (!is_connected(g)) throw DisconnectedError("graph is not connected");
    if (g.vertex_count == 2) return MegSet(std::vector<int>{0, 1});

    const MonitorTable table(g);
    std::vector<int> chosen = forced_vertices(g);
    std::vector<char> in_set(static_cast<size_t>(g.vertex_count), 0);
    for (int v : chosen) in_set[static_cast<size_t>(v)] = 1;
    MonitorTable::Mask covered = table.coverage(chosen);

    while (!covered.all()) {
        int best = -1;
        size_t best_gain = 0;
        for (int v = 0; v < g.vertex_count; ++v) {
            if (in_set[static_cast<size_t>(v)]) continue;
            MonitorTable::Mask gained = table.empty_mask();
            for (int u : chosen) gained |= table.mask(std::min(u, v), std::max(u, v));
            gained -= covered;
            const size_t gain = gained.count();
            if (best == -1 || gain > best_gain) {
                best = v;
                best_gain = gain;
            }
        }
        if (best == -1) throw Error("greedy search exhausted all vertices");
        if (best_gain == 0) {
            // No single vertex helps on its own. Some unmonitored edge then
            // has an endpoint outside the set (the endpoint pair monitors the
            // edge); pull the first such endpoint in so its partner pays off
            // on a later round. Also covers the cold start with < 2 chosen.
            best = -1;
            for (size_t idx = 0; idx < covered.size(); ++idx) {
                if (covered.test(idx)) continue;
                const Edge e = g.edges[idx];
                if (!in_set[static_cast<size_t>(e.u)]) best = e.u;
                else if (!in_set[static_cast<size_t>(e.v)]) best = e.v;
                if (best != -1) break;
            }
            if (best == -1) throw Error("unmonitored edge inside chosen set");
        }
        chosen.push_back(best);
        in_set[static_cast<size_t>(best)] = 1;
        std::sort(chosen.begin(), chosen.end());
        covered = table.coverage(chosen);
    }
    return MegSet(std::move(chosen));
}

// Drop vertices of a valid MEG-set in ascending id order, keeping each only
// if removing it breaks validity. Result is an inclusion-minimal MEG-set
// contained in the input. Throws if the input is not a valid MEG-set.
inline MegSet minimalize(const Graph& g, const MegSet& input, const MonitorTable& table) {
    detail::check_meg_set_args(g, input);
    if (!table.coverage(input.vertices).all())
        throw ValidationError("input is not a valid MEG-set");
    std::vector<int> kept = input.vertices;
    for (size_t i = 0; i < kept.size();) {
        if (kept.size() <= 1) break;
        std::vector<int> trial = kept;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (table.coverage(trial).all())
            kept = std::move(trial);
        else
            ++i;
    }
    return MegSet(std::move(kept));
}

inline MegSet minimalize(const Graph& g, const MegSet& input) {
    return minimalize(g, input, MonitorTable(g));
}

}  // namespace megset
