#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "graph.hpp"
#include "setcover.hpp"

namespace megset {

// All generators draw from std::mt19937_64 through the two helpers below.
// std::uniform_int_distribution is implementation-defined, so the same seed
// could produce different data on different standard libraries; raw modulo
// and mantissa draws keep the corpus reproducible everywhere. The slight
// modulo bias is irrelevant here.
using Rng = std::mt19937_64;

namespace detail {

inline int uniform_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

inline bool bernoulli(Rng& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace detail

// Uniform labeled tree on n >= 1 vertices, decoded from a random sequence.
inline Graph random_tree(int n, uint64_t seed) {
    if (n < 1) throw ValidationError("tree needs at least 1 vertex");
    if (n == 1) return build_graph(1, {});
    if (n == 2) return build_graph(2, {Edge(0, 1)});

    Rng rng(seed);
    std::vector<int> seq(static_cast<size_t>(n - 2));
    for (int& x : seq) x = detail::uniform_int(rng, 0, n - 1);

    std::vector<int> degree(static_cast<size_t>(n), 1);
    for (int x : seq) ++degree[static_cast<size_t>(x)];
    std::vector<Edge> edges;
    for (int x : seq) {
        int leaf = 0;
        while (degree[static_cast<size_t>(leaf)] != 1) ++leaf;
        edges.emplace_back(leaf, x);
        degree[static_cast<size_t>(leaf)] = 0;
        --degree[static_cast<size_t>(x)];
    }
    int a = -1;
    int b = -1;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<size_t>(v)] == 1) (a == -1 ? a : b) = v;
    edges.emplace_back(a, b);
    return build_graph(n, edges);
}

// Connected Erdos-Renyi draw: sample until connected, up to max_attempts.
inline Graph gnp_connected(int n, double p, uint64_t seed, int max_attempts = 1000) {
    if (n < 0) throw ValidationError("negative vertex count");
    if (n <= 1) return build_graph(std::max(n, 0), {});
    Rng rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (detail::bernoulli(rng, p)) edges.emplace_back(u, v);
        Graph g = build_graph(n, edges);
        if (is_connected(g)) return g;
    }
    throw Error("no connected draw within attempt limit; raise p or n");
}

// Connected graph on n >= 2 vertices where vertex n-1 is guaranteed to have
// degree 1: a random tree on the first n-1 vertices, a pendant edge to the
// last one, then extra_edges absent pairs among the first n-1 vertices.
inline Graph random_connected_with_leaf(int n, int extra_edges, uint64_t seed) {
    if (n < 2) throw ValidationError("needs at least 2 vertices");
    if (extra_edges < 0) throw ValidationError("negative edge count");
    Rng rng(seed);
    Graph tree = random_tree(n - 1, rng());
    std::vector<Edge> edges = tree.edges;
    edges.emplace_back(detail::uniform_int(rng, 0, n - 2), n - 1);

    std::vector<Edge> absent;
    for (int u = 0; u + 1 < n - 1; ++u)
        for (int v = u + 1; v < n - 1; ++v)
            if (!tree.has_edge(u, v)) absent.emplace_back(u, v);
    const int take = std::min<int>(extra_edges, static_cast<int>(absent.size()));
    for (int i = 0; i < take; ++i) {
        const int j = detail::uniform_int(rng, i, static_cast<int>(absent.size()) - 1);
        std::swap(absent[static_cast<size_t>(i)], absent[static_cast<size_t>(j)]);
        edges.push_back(absent[static_cast<size_t>(i)]);
    }
    return build_graph(n, edges);
}

// Random instance where every item is covered. Set sizes vary; no other
// structure is guaranteed.
inline SetCoverInstance random_cover_instance(int eta, int h, uint64_t seed) {
    if (eta < 1 || h < 1) throw ValidationError("needs at least 1 item and 1 set");
    Rng rng(seed);
    std::vector<std::vector<char>> member(
        static_cast<size_t>(h), std::vector<char>(static_cast<size_t>(eta), 0));
    for (int j = 0; j < h; ++j) {
        const int size = detail::uniform_int(rng, 1, std::max(1, eta / 2 + 1));
        for (int t = 0; t < size; ++t)
            member[static_cast<size_t>(j)]
                  [static_cast<size_t>(detail::uniform_int(rng, 0, eta - 1))] = 1;
    }
    for (int i = 0; i < eta; ++i) {
        bool covered = false;
        for (int j = 0; j < h && !covered; ++j)
            covered = member[static_cast<size_t>(j)][static_cast<size_t>(i)] != 0;
        if (!covered)
            member[static_cast<size_t>(detail::uniform_int(rng, 0, h - 1))]
                  [static_cast<size_t>(i)] = 1;
    }
    std::vector<std::vector<int>> sets(static_cast<size_t>(h));
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < eta; ++i)
            if (member[static_cast<size_t>(j)][static_cast<size_t>(i)])
                sets[static_cast<size_t>(j)].push_back(i);
    return make_instance(eta, std::move(sets));
}

// Random instance satisfying the normalized-form checks: every item in at
// least 2 sets, every set of size at least 2, h >= 2. Duplicate sets may
// occur (unavoidable at small eta).
inline SetCoverInstance random_normalized_instance(int eta, int h, uint64_t seed) {
    if (eta < 2 || h < 2) throw ValidationError("needs at least 2 items and 2 sets");
    Rng rng(seed);
    std::vector<std::vector<char>> member(
        static_cast<size_t>(h), std::vector<char>(static_cast<size_t>(eta), 0));
    for (int i = 0; i < eta; ++i) {
        const int j1 = detail::uniform_int(rng, 0, h - 1);
        const int j2 = (j1 + 1 + detail::uniform_int(rng, 0, h - 2)) % h;
        member[static_cast<size_t>(j1)][static_cast<size_t>(i)] = 1;
        member[static_cast<size_t>(j2)][static_cast<size_t>(i)] = 1;
        for (int j = 0; j < h; ++j)
            if (detail::bernoulli(rng, 0.15)) member[static_cast<size_t>(j)][static_cast<size_t>(i)] = 1;
    }
    for (int j = 0; j < h; ++j) {
        auto& row = member[static_cast<size_t>(j)];
        int size = 0;
        for (char c : row) size += c != 0;
        while (size < 2) {
            // Adding items only raises frequencies, so this cannot undo the
            // per-item guarantee above.
            const int start = detail::uniform_int(rng, 0, eta - 1);
            for (int t = 0; t < eta; ++t) {
                const size_t i = static_cast<size_t>((start + t) % eta);
                if (!row[i]) {
                    row[i] = 1;
                    ++size;
                    break;
                }
            }
        }
    }
    std::vector<std::vector<int>> sets(static_cast<size_t>(h));
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < eta; ++i)
            if (member[static_cast<size_t>(j)][static_cast<size_t>(i)])
                sets[static_cast<size_t>(j)].push_back(i);
    return make_instance(eta, std::move(sets));
}

// Random normalized instance where any two distinct sets share at most one
// item. Every set has exactly two items, so the collection is the edge set
// of a simple graph on the items; a spanning cycle over a random item
// permutation gives every item frequency 2, and the remaining h - eta sets
// are distinct non-cycle pairs. Requires eta >= 3 and
// eta <= h <= eta*(eta-1)/2.
inline SetCoverInstance random_linear_instance(int eta, int h, uint64_t seed) {
    if (eta < 3) throw ValidationError("needs at least 3 items");
    if (h < eta || h > eta * (eta - 1) / 2)
        throw ValidationError("set count must lie between eta and eta*(eta-1)/2");
    Rng rng(seed);
    std::vector<int> perm(static_cast<size_t>(eta));
    for (int i = 0; i < eta; ++i) perm[static_cast<size_t>(i)] = i;
    for (int i = eta - 1; i > 0; --i)
        std::swap(perm[static_cast<size_t>(i)],
                  perm[static_cast<size_t>(detail::uniform_int(rng, 0, i))]);

    std::vector<std::vector<char>> used(
        static_cast<size_t>(eta), std::vector<char>(static_cast<size_t>(eta), 0));
    std::vector<std::vector<int>> sets;
    sets.reserve(static_cast<size_t>(h));
    for (int i = 0; i < eta; ++i) {
        const int u = perm[static_cast<size_t>(i)];
        const int v = perm[static_cast<size_t>((i + 1) % eta)];
        used[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        used[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
        sets.push_back({u, v});
    }
    std::vector<std::pair<int, int>> rest;
    for (int u = 0; u < eta; ++u)
        for (int v = u + 1; v < eta; ++v)
            if (!used[static_cast<size_t>(u)][static_cast<size_t>(v)])
                rest.emplace_back(u, v);
    const int take = h - eta;
    for (int i = 0; i < take; ++i) {
        const int j = detail::uniform_int(rng, i, static_cast<int>(rest.size()) - 1);
        std::swap(rest[static_cast<size_t>(i)], rest[static_cast<size_t>(j)]);
        sets.push_back({rest[static_cast<size_t>(i)].first,
                        rest[static_cast<size_t>(i)].second});
    }
    return make_instance(eta, std::move(sets));
}

}  // namespace megset
