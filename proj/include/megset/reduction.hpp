#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "monitoring.hpp"
#include "setcover.hpp"
#include "solve.hpp"

namespace megset {

// Vertex roles in the cover-to-graph construction. Items and sets carry a
// copy index; the y/z spine is shared by all copies.
enum class RoleKind { Item, Set, Y, YPrime, Z, ZPrime };

struct Role {
    RoleKind kind = RoleKind::Item;
    int index = 0;  // item or set id
    int copy = -1;  // copy l for Item/Set, -1 otherwise
};

inline std::string role_to_string(const Role& r) {
    switch (r.kind) {
        case RoleKind::Item:
            return "item i=" + std::to_string(r.index) + " l=" + std::to_string(r.copy);
        case RoleKind::Set:
            return "set j=" + std::to_string(r.index) + " l=" + std::to_string(r.copy);
        case RoleKind::Y: return "y i=" + std::to_string(r.index);
        case RoleKind::YPrime: return "y_prime i=" + std::to_string(r.index);
        case RoleKind::Z: return "z j=" + std::to_string(r.index);
        case RoleKind::ZPrime: return "z_prime j=" + std::to_string(r.index);
    }
    throw Error("unknown role kind");
}

// Bipartite incidence graph of an instance: items 0..eta-1, then sets
// eta..eta+h-1, one edge per membership.
struct IncidenceGraph {
    Graph graph;
    int item_count = 0;
    int set_count = 0;
};

inline IncidenceGraph incidence_graph(const SetCoverInstance& inst) {
    std::vector<Edge> edges;
    for (int j = 0; j < inst.set_count(); ++j)
        for (int i : inst.sets[static_cast<size_t>(j)])
            edges.emplace_back(i, inst.item_count + j);
    IncidenceGraph out;
    out.item_count = inst.item_count;
    out.set_count = inst.set_count();
    out.graph = build_graph(inst.item_count + inst.set_count(), edges);
    return out;
}

// Graph built from a cover instance and a copy count k:
//   k disjoint copies of the incidence graph, laid out copy-major (items of
//   copy l, then sets of copy l);
//   a shared vertex y_i adjacent to item i in every copy, with pendant y'_i;
//   a shared vertex z_j adjacent to set j in every copy, with pendant z'_j;
//   a clique on the y vertices.
// Vertex ids are closed-form functions of the dimensions, so files produced
// for the same (eta, h, k) always agree on vertex meaning.
struct ReductionLayout {
    SetCoverInstance instance;
    int eta = 0;
    int h = 0;
    int k = 0;
    Graph graph;
    std::vector<Role> roles;

    int base() const { return eta + h; }
    int item_vertex(int i, int l) const { return l * base() + i; }
    int set_vertex(int j, int l) const { return l * base() + eta + j; }
    int y_vertex(int i) const { return k * base() + i; }
    int y_prime_vertex(int i) const { return k * base() + eta + i; }
    int z_vertex(int j) const { return k * base() + 2 * eta + j; }
    int z_prime_vertex(int j) const { return k * base() + 2 * eta + h + j; }

    const Role& role(int v) const { return roles[static_cast<size_t>(v)]; }

    // The pendant vertices y'_i and z'_j, ascending. Forced into every
    // MEG-set of the graph, and monitoring every edge outside the copies.
    std::vector<int> pendant_vertices() const {
        std::vector<int> out;
        for (int i = 0; i < eta; ++i) out.push_back(y_prime_vertex(i));
        for (int j = 0; j < h; ++j) out.push_back(z_prime_vertex(j));
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Builds the layout. The instance may be non-normalized, but it must have at
// least one item and one set, no empty set, and no uncovered item; those
// cases disconnect the construction or make extraction meaningless.
inline ReductionLayout build_reduction(const SetCoverInstance& inst, int k) {
    if (k < 2) throw ValidationError("copy count must be at least 2");
    if (inst.item_count < 1) throw ValidationError("instance has no items");
    if (inst.set_count() < 1) throw ValidationError("instance has no sets");
    for (const auto& s : inst.sets)
        if (s.empty()) throw ValidationError("empty set in instance");
    if (!covers_all_items(inst))
        throw ValidationError("some item is not covered by any set");

    ReductionLayout lay;
    lay.instance = inst;
    lay.eta = inst.item_count;
    lay.h = inst.set_count();
    lay.k = k;

    const int n = (k + 2) * lay.base();
    std::vector<Edge> edges;
    for (int l = 0; l < k; ++l) {
        for (int j = 0; j < lay.h; ++j)
            for (int i : inst.sets[static_cast<size_t>(j)])
                edges.emplace_back(lay.item_vertex(i, l), lay.set_vertex(j, l));
        for (int i = 0; i < lay.eta; ++i)
            edges.emplace_back(lay.item_vertex(i, l), lay.y_vertex(i));
        for (int j = 0; j < lay.h; ++j)
            edges.emplace_back(lay.set_vertex(j, l), lay.z_vertex(j));
    }
    for (int i = 0; i < lay.eta; ++i)
        edges.emplace_back(lay.y_vertex(i), lay.y_prime_vertex(i));
    for (int j = 0; j < lay.h; ++j)
        edges.emplace_back(lay.z_vertex(j), lay.z_prime_vertex(j));
    for (int i = 0; i < lay.eta; ++i)
        for (int i2 = i + 1; i2 < lay.eta; ++i2)
            edges.emplace_back(lay.y_vertex(i), lay.y_vertex(i2));

    lay.graph = build_graph(n, edges);

    lay.roles.resize(static_cast<size_t>(n));
    for (int l = 0; l < k; ++l) {
        for (int i = 0; i < lay.eta; ++i)
            lay.roles[static_cast<size_t>(lay.item_vertex(i, l))] = {RoleKind::Item, i, l};
        for (int j = 0; j < lay.h; ++j)
            lay.roles[static_cast<size_t>(lay.set_vertex(j, l))] = {RoleKind::Set, j, l};
    }
    for (int i = 0; i < lay.eta; ++i) {
        lay.roles[static_cast<size_t>(lay.y_vertex(i))] = {RoleKind::Y, i, -1};
        lay.roles[static_cast<size_t>(lay.y_prime_vertex(i))] = {RoleKind::YPrime, i, -1};
    }
    for (int j = 0; j < lay.h; ++j) {
        lay.roles[static_cast<size_t>(lay.z_vertex(j))] = {RoleKind::Z, j, -1};
        lay.roles[static_cast<size_t>(lay.z_prime_vertex(j))] = {RoleKind::ZPrime, j, -1};
    }
    return lay;
}

// Candidate MEG-set assembled from one cover per copy: all pendant vertices
// plus the chosen set vertices of each copy. Size is (eta + h) + sum of
// cover sizes. The result verifies valid whenever any two distinct sets of
// the instance share at most one item. With larger overlaps it can miss
// edges: for an unchosen set S_j and an item x_i in it, the only candidate
// watcher is a pair (S_{k,l}, z'_j) with S_k chosen and x_i in S_k, and
// that pair has one geodesic per item of the intersection of S_k and S_j,
// so it certifies the edge (x_{i,l}, S_{j,l}) only when the intersection
// is exactly {x_i}.
inline MegSet meg_from_covers(const ReductionLayout& lay,
                              const std::vector<std::vector<int>>& covers) {
    if (static_cast<int>(covers.size()) != lay.k)
        throw ValidationError("expected one cover per copy");
    for (const auto& c : covers)
        if (!is_cover(lay.instance, c))
            throw ValidationError("copy cover does not cover all items");
    std::vector<int> ids = lay.pendant_vertices();
    for (int l = 0; l < lay.k; ++l)
        for (int j : covers[static_cast<size_t>(l)])
            ids.push_back(lay.set_vertex(j, l));
    return MegSet(std::move(ids));
}

struct ExtractResult {
    MegSet meg;                            // minimalized, items swapped to sets
    std::vector<std::vector<int>> covers;  // one cover per copy
    int best_copy = 0;
    std::vector<int> best_cover;
};

// Cover extraction from any valid MEG-set of the layout graph:
// minimalize, replace each chosen item vertex by the lowest-index set vertex
// covering it in the same copy, then read off the set vertices per copy.
// Every copy yields a cover; the smallest one (lowest copy on ties) is
// reported as best. The arithmetic guarantee |best| * k <= |input| is a
// standing test obligation.
inline ExtractResult extract_covers(const ReductionLayout& lay, const MegSet& input,
                                    const MonitorTable& table) {
    const MegSet minimal = minimalize(lay.graph, input, table);

    std::vector<int> swapped;
    swapped.reserve(minimal.vertices.size());
    for (int v : minimal.vertices) {
        const Role& r = lay.role(v);
        if (r.kind == RoleKind::Item) {
            int j_min = -1;
            for (int j = 0; j < lay.h; ++j) {
                const auto& s = lay.instance.sets[static_cast<size_t>(j)];
                if (std::binary_search(s.begin(), s.end(), r.index)) {
                    j_min = j;
                    break;
                }
            }
            if (j_min == -1) throw Error("item vertex with no covering set");
            swapped.push_back(lay.set_vertex(j_min, r.copy));
        } else {
            swapped.push_back(v);
        }
    }
    MegSet meg(std::move(swapped));

    ExtractResult out;
    out.covers.assign(static_cast<size_t>(lay.k), {});
    for (int v : meg.vertices) {
        const Role& r = lay.role(v);
        if (r.kind == RoleKind::Set)
            out.covers[static_cast<size_t>(r.copy)].push_back(r.index);
    }
    for (int l = 0; l < lay.k; ++l)
        if (!is_cover(lay.instance, out.covers[static_cast<size_t>(l)]))
            throw Error("extracted copy " + std::to_string(l) + " is not a cover");

    out.best_copy = 0;
    for (int l = 1; l < lay.k; ++l)
        if (out.covers[static_cast<size_t>(l)].size() <
            out.covers[static_cast<size_t>(out.best_copy)].size())
            out.best_copy = l;
    out.best_cover = out.covers[static_cast<size_t>(out.best_copy)];
    out.meg = std::move(meg);
    return out;
}

inline ExtractResult extract_covers(const ReductionLayout& lay, const MegSet& input) {
    return extract_covers(lay, input, MonitorTable(lay.graph));
}

enum class MegSolver { Exact, Greedy };

inline std::string to_string(MegSolver s) {
    return s == MegSolver::Exact ? "exact" : "greedy";
}

struct PipelineOptions {
    std::optional<int> k;          // default: max(2, eta + h - 2) of the working instance
    MegSolver solver = MegSolver::Greedy;
    bool normalize_first = false;  // apply reduction rules before building
    int exact_cover_limit = 20;    // compute the exact cover optimum up to this set count
};

// End-to-end run record. All counts refer to the working instance (the input
// itself, or its residual after normalization).
struct PipelineReport {
    int eta = 0;                       // input items
    int h = 0;                         // input sets
    bool input_normalized = false;
    bool normalize_first = false;
    std::vector<int> forced;           // original set ids forced by normalization
    bool fully_solved = false;         // normalization left nothing to do
    int working_eta = 0;
    int working_h = 0;
    int N = 0;                         // working_eta + working_h
    int k = 0;
    int n = 0;                         // graph vertices
    int m = 0;                         // graph edges
    MegSolver solver = MegSolver::Greedy;
    int meg_input_size = 0;            // solver output fed to extraction
    int meg_size = 0;                  // after minimalize + item swap
    int best_copy = 0;
    std::vector<int> best_cover;       // original set ids, best copy only
    bool sprime_bound_holds = false;   // |best| * k <= meg_input_size
    std::optional<int> h_star;         // exact cover optimum of the working instance
    std::optional<int> upper_bound;    // N + k * h_star
    std::optional<bool> upper_bound_holds;  // exact solver only: meg_input_size <= bound
    std::vector<int> final_cover;      // forced + best, original ids
    bool final_cover_valid = false;
};

// Full round trip: (optionally normalize,) build the graph, solve for a
// MEG-set, extract covers, map back to original set ids.
inline PipelineReport run_pipeline(const SetCoverInstance& inst,
                                   const PipelineOptions& opts = {}) {
    if (!covers_all_items(inst))
        throw ValidationError("some item is not covered by any set");

    PipelineReport rep;
    rep.eta = inst.item_count;
    rep.h = inst.set_count();
    rep.input_normalized = is_normalized(inst);
    rep.normalize_first = opts.normalize_first;
    rep.solver = opts.solver;

    SetCoverInstance working = inst;
    std::vector<int> set_map(static_cast<size_t>(inst.set_count()));
    for (int j = 0; j < inst.set_count(); ++j) set_map[static_cast<size_t>(j)] = j;

    if (opts.normalize_first) {
        NormalizedInstance norm = normalize(inst);
        rep.forced = norm.forced;
        working = norm.instance;
        set_map = norm.set_map;
        if (norm.fully_solved()) {
            rep.fully_solved = true;
            rep.final_cover = rep.forced;
            rep.final_cover_valid = is_cover(inst, rep.final_cover);
            return rep;
        }
    }

    rep.working_eta = working.item_count;
    rep.working_h = working.set_count();
    rep.N = rep.working_eta + rep.working_h;
    rep.k = std::max(2, opts.k ? *opts.k : rep.N - 2);

    if (working.set_count() <= opts.exact_cover_limit)
        rep.h_star = static_cast<int>(exact_min_cover(working).size());
    if (rep.h_star) rep.upper_bound = rep.N + rep.k * *rep.h_star;

    const ReductionLayout lay = build_reduction(working, rep.k);
    rep.n = lay.graph.vertex_count;
    rep.m = lay.graph.edge_count();

    const MonitorTable table(lay.graph);
    MegSet meg_input;
    if (opts.solver == MegSolver::Exact) {
        const int cover_ref = rep.h_star
                                  ? *rep.h_star
                                  : static_cast<int>(greedy_cover(working).size());
        const int budget = rep.N + rep.k * cover_ref;
        auto found = exact_min_meg(lay.graph, budget);
        if (!found) throw Error("no MEG-set within the guaranteed size bound");
        meg_input = *found;
        if (rep.upper_bound)
            rep.upper_bound_holds = meg_input.size() <= *rep.upper_bound;
    } else {
        meg_input = greedy_meg(lay.graph);
    }
    rep.meg_input_size = meg_input.size();

    const ExtractResult ex = extract_covers(lay, meg_input, table);
    rep.meg_size = ex.meg.size();
    rep.best_copy = ex.best_copy;
    rep.sprime_bound_holds =
        static_cast<int>(ex.best_cover.size()) * rep.k <= rep.meg_input_size;

    for (int j : ex.best_cover)
        rep.best_cover.push_back(set_map[static_cast<size_t>(j)]);
    std::sort(rep.best_cover.begin(), rep.best_cover.end());

    rep.final_cover = rep.forced;
    rep.final_cover.insert(rep.final_cover.end(), rep.best_cover.begin(),
                           rep.best_cover.end());
    std::sort(rep.final_cover.begin(), rep.final_cover.end());
    rep.final_cover_valid = is_cover(inst, rep.final_cover);
    return rep;
}

namespace detail {

inline std::string join_ids(const std::vector<int>& ids) {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(ids[i]);
    }
    return out;
}

}  // namespace detail

inline void write_report(const PipelineReport& rep, std::ostream& out) {
    out << "eta=" << rep.eta << '\n';
    out << "h=" << rep.h << '\n';
    out << "input_normalized=" << (rep.input_normalized ? "true" : "false") << '\n';
    out << "normalize_first=" << (rep.normalize_first ? "true" : "false") << '\n';
    if (rep.normalize_first) {
        out << "forced=" << detail::join_ids(rep.forced) << '\n';
        out << "fully_solved=" << (rep.fully_solved ? "true" : "false") << '\n';
    }
    if (!rep.fully_solved) {
        out << "working_eta=" << rep.working_eta << '\n';
        out << "working_h=" << rep.working_h << '\n';
        out << "N=" << rep.N << '\n';
        out << "k=" << rep.k << '\n';
        out << "n=" << rep.n << '\n';
        out << "m=" << rep.m << '\n';
        out << "solver=" << to_string(rep.solver) << '\n';
        out << "meg_input_size=" << rep.meg_input_size << '\n';
        out << "meg_size=" << rep.meg_size << '\n';
        out << "best_copy=" << rep.best_copy << '\n';
        out << "best_cover=" << detail::join_ids(rep.best_cover) << '\n';
        out << "sprime_bound_holds=" << (rep.sprime_bound_holds ? "true" : "false")
            << '\n';
        if (rep.h_star) out << "h_star=" << *rep.h_star << '\n';
        if (rep.upper_bound) out << "upper_bound=" << *rep.upper_bound << '\n';
        if (rep.upper_bound_holds)
            out << "upper_bound_holds=" << (*rep.upper_bound_holds ? "true" : "false")
                << '\n';
    }
    out << "final_cover=" << detail::join_ids(rep.final_cover) << '\n';
    out << "final_cover_valid=" << (rep.final_cover_valid ? "true" : "false") << '\n';
}

// One "<vertex_id> <role>" line per vertex.
inline void write_layout(const ReductionLayout& lay, std::ostream& out) {
    for (int v = 0; v < lay.graph.vertex_count; ++v)
        out << v << ' ' << role_to_string(lay.role(v)) << '\n';
}

// Graphviz output with role labels.
inline void write_dot(const ReductionLayout& lay, std::ostream& out) {
    out << "graph g {\n";
    for (int v = 0; v < lay.graph.vertex_count; ++v)
        out << "  " << v << " [label=\"" << v << ": " << role_to_string(lay.role(v))
            << "\"];\n";
    for (Edge e : lay.graph.edges) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
}

}  // namespace megset
