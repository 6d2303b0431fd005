// Command-line front end. Exit codes: 0 success (or VALID verdict),
// 1 negative verdict (INVALID, mismatch, budget exhausted), 2 bad input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "megset/megset.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;

// All readers accept "-" for stdin.
template <typename Reader>
auto read_from(const std::string& path, Reader reader) {
    if (path == "-") return reader(std::cin);
    std::ifstream file(path);
    if (!file) throw megset::Error("cannot open " + path);
    return reader(file);
}

megset::Graph load_graph(const std::string& path) {
    return read_from(path, [](std::istream& in) { return megset::read_graph(in); });
}

megset::MegSet load_meg(const std::string& path) {
    return read_from(path, [](std::istream& in) { return megset::read_meg_set(in); });
}

megset::SetCoverInstance load_instance(const std::string& path) {
    return read_from(path, [](std::istream& in) { return megset::read_instance(in); });
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw megset::Error("cannot open " + path + " for writing");
    return out;
}

void print_ids(const std::vector<int>& ids, std::ostream& out) {
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) out << ' ';
        out << ids[i];
    }
    out << '\n';
}

int parse_pair(const std::string& text, int& x, int& y) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return -1;
    try {
        size_t pos = 0;
        x = std::stoi(text.substr(0, comma), &pos);
        if (pos != comma) return -1;
        y = std::stoi(text.substr(comma + 1), &pos);
        if (pos != text.size() - comma - 1) return -1;
    } catch (const std::exception&) {
        return -1;
    }
    return 0;
}

nlohmann::json report_to_json(const megset::PipelineReport& rep) {
    nlohmann::json j;
    j["eta"] = rep.eta;
    j["h"] = rep.h;
    j["input_normalized"] = rep.input_normalized;
    j["normalize_first"] = rep.normalize_first;
    if (rep.normalize_first) {
        j["forced"] = rep.forced;
        j["fully_solved"] = rep.fully_solved;
    }
    if (!rep.fully_solved) {
        j["working_eta"] = rep.working_eta;
        j["working_h"] = rep.working_h;
        j["N"] = rep.N;
        j["k"] = rep.k;
        j["n"] = rep.n;
        j["m"] = rep.m;
        j["solver"] = megset::to_string(rep.solver);
        j["meg_input_size"] = rep.meg_input_size;
        j["meg_size"] = rep.meg_size;
        j["best_copy"] = rep.best_copy;
        j["best_cover"] = rep.best_cover;
        j["sprime_bound_holds"] = rep.sprime_bound_holds;
        if (rep.h_star) j["h_star"] = *rep.h_star;
        if (rep.upper_bound) j["upper_bound"] = *rep.upper_bound;
        if (rep.upper_bound_holds) j["upper_bound_holds"] = *rep.upper_bound_holds;
    }
    j["final_cover"] = rep.final_cover;
    j["final_cover_valid"] = rep.final_cover_valid;
    return j;
}

struct Options {
    std::string input = "-";
    std::string meg_file;
    std::string pair_text;
    std::string solver = "greedy";
    std::string model = "gnp";
    std::string dot_path;
    std::string layout_path;
    int budget_raw = -1;  // < 0 means unset
    int k_raw = -1;       // < 0 means unset
    bool oracle = false;
    bool normalize_first = false;
    bool normalized_gen = false;
    bool linear_gen = false;
    bool json = false;
    int gen_n = 10;
    double gen_p = 0.3;
    int eta = 4;
    int h = 3;
    unsigned long long seed = 1;

    std::optional<int> budget() const {
        return budget_raw >= 0 ? std::optional<int>(budget_raw) : std::nullopt;
    }
    std::optional<int> k() const {
        return k_raw >= 0 ? std::optional<int>(k_raw) : std::nullopt;
    }
};

int cmd_graph_solve(const Options& o) {
    const megset::Graph g = load_graph(o.input);
    if (o.solver == "exact") {
        const auto m = megset::exact_min_meg(g, o.budget());
        if (!m) {
            std::cerr << "no MEG-set within budget " << o.budget_raw << "\n";
            return kNegative;
        }
        megset::write_meg_set(*m, std::cout);
    } else {
        megset::write_meg_set(megset::greedy_meg(g), std::cout);
    }
    return kOk;
}

int cmd_graph_verify(const Options& o) {
    const megset::Graph g = load_graph(o.input);
    const megset::MegSet m = load_meg(o.meg_file);
    const megset::Verdict v = megset::verify_meg_set(g, m);
    if (v.valid) {
        std::cout << "VALID\n";
        return kOk;
    }
    std::cout << "INVALID\n";
    for (megset::Edge e : v.unmonitored) std::cout << e.u << ' ' << e.v << '\n';
    return kNegative;
}

int cmd_graph_minimalize(const Options& o) {
    const megset::Graph g = load_graph(o.input);
    const megset::MegSet m = load_meg(o.meg_file);
    megset::write_meg_set(megset::minimalize(g, m), std::cout);
    return kOk;
}

int cmd_graph_monitor(const Options& o) {
    const megset::Graph g = load_graph(o.input);
    int x = 0, y = 0;
    if (parse_pair(o.pair_text, x, y) != 0)
        throw megset::Error("--pair expects X,Y with integer ids");
    const auto edges = megset::monitored_edges_of_pair(g, x, y);
    for (megset::Edge e : edges) std::cout << e.u << ' ' << e.v << '\n';
    if (o.oracle) {
        // Recompute with the edge-deletion oracle and compare edge by edge.
        for (megset::Edge e : g.edges) {
            const bool fast = megset::pair_monitors_edge(g, x, y, e);
            const bool slow = megset::pair_monitors_edge_oracle(g, x, y, e);
            if (fast != slow) {
                std::cerr << "MISMATCH on edge " << megset::to_string(e)
                          << ": predicate=" << fast << " oracle=" << slow << "\n";
                return kNegative;
            }
        }
        std::cerr << "oracle agreement on all " << g.edge_count() << " edges\n";
    }
    return kOk;
}

int cmd_graph_dot(const Options& o) {
    const megset::Graph g = load_graph(o.input);
    megset::write_dot(g, std::cout);
    return kOk;
}

int cmd_cover_solve(const Options& o) {
    const megset::SetCoverInstance inst = load_instance(o.input);
    const std::vector<int> cover =
        o.solver == "exact" ? megset::exact_min_cover(inst) : megset::greedy_cover(inst);
    print_ids(cover, std::cout);
    return kOk;
}

int cmd_cover_normalize(const Options& o) {
    const megset::SetCoverInstance inst = load_instance(o.input);
    const megset::NormalizedInstance norm = megset::normalize(inst);
    std::cout << "# forced:";
    for (int j : norm.forced) std::cout << ' ' << j;
    std::cout << "\n# fully_solved: " << (norm.fully_solved() ? "true" : "false") << '\n';
    std::cout << "# item_map:";
    for (int i : norm.item_map) std::cout << ' ' << i;
    std::cout << "\n# set_map:";
    for (int j : norm.set_map) std::cout << ' ' << j;
    std::cout << '\n';
    megset::write_instance(norm.instance, std::cout);
    return kOk;
}

int pick_k(const megset::SetCoverInstance& inst, std::optional<int> requested) {
    const int n_dims = inst.item_count + inst.set_count();
    return std::max(2, requested ? *requested : n_dims - 2);
}

int cmd_reduce_build(const Options& o) {
    const megset::SetCoverInstance inst = load_instance(o.input);
    if (!megset::is_normalized(inst))
        std::cerr << "warning: instance is not in normalized form; structural "
                     "guarantees may not hold\n";
    const megset::ReductionLayout lay =
        megset::build_reduction(inst, pick_k(inst, o.k()));
    megset::write_graph(lay.graph, std::cout);
    if (!o.layout_path.empty()) {
        auto out = open_output(o.layout_path);
        megset::write_layout(lay, out);
    }
    if (!o.dot_path.empty()) {
        auto out = open_output(o.dot_path);
        megset::write_dot(lay, out);
    }
    return kOk;
}

int cmd_reduce_extract(const Options& o) {
    const megset::SetCoverInstance inst = load_instance(o.input);
    const megset::ReductionLayout lay =
        megset::build_reduction(inst, pick_k(inst, o.k()));
    const megset::MegSet m = load_meg(o.meg_file);
    const megset::ExtractResult ex = megset::extract_covers(lay, m);
    std::cout << "meg_size=" << ex.meg.size() << '\n';
    for (int l = 0; l < lay.k; ++l) {
        std::cout << "copy " << l << ':';
        for (int j : ex.covers[static_cast<size_t>(l)]) std::cout << ' ' << j;
        std::cout << '\n';
    }
    std::cout << "best_copy=" << ex.best_copy << '\n';
    std::cout << "best=";
    for (size_t i = 0; i < ex.best_cover.size(); ++i) {
        if (i > 0) std::cout << ' ';
        std::cout << ex.best_cover[i];
    }
    std::cout << '\n';
    return kOk;
}

int cmd_pipeline_run(const Options& o) {
    const megset::SetCoverInstance inst = load_instance(o.input);
    if (!o.normalize_first && !megset::is_normalized(inst))
        std::cerr << "warning: instance is not in normalized form (use --normalize "
                     "to apply the reduction rules first)\n";
    megset::PipelineOptions popts;
    popts.k = o.k();
    popts.solver =
        o.solver == "exact" ? megset::MegSolver::Exact : megset::MegSolver::Greedy;
    popts.normalize_first = o.normalize_first;
    const megset::PipelineReport rep = megset::run_pipeline(inst, popts);
    if (o.json)
        std::cout << report_to_json(rep).dump(2) << '\n';
    else
        megset::write_report(rep, std::cout);
    return rep.final_cover_valid ? kOk : kNegative;
}

int cmd_gen_graph(const Options& o) {
    megset::Graph g;
    if (o.model == "gnp")
        g = megset::gnp_connected(o.gen_n, o.gen_p, o.seed);
    else if (o.model == "tree")
        g = megset::random_tree(o.gen_n, o.seed);
    else
        throw megset::Error("unknown model \"" + o.model + "\" (gnp or tree)");
    megset::write_graph(g, std::cout);
    return kOk;
}

int cmd_gen_cover(const Options& o) {
    megset::SetCoverInstance inst = [&] {
        if (o.linear_gen) return megset::random_linear_instance(o.eta, o.h, o.seed);
        if (o.normalized_gen)
            return megset::random_normalized_instance(o.eta, o.h, o.seed);
        return megset::random_cover_instance(o.eta, o.h, o.seed);
    }();
    megset::write_instance(inst, std::cout);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monitoring edge-geodetic sets: solvers, verification, and the "
                 "set-cover reduction"};
    app.require_subcommand(1);
    Options o;
    int (*action)(const Options&) = nullptr;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", o.input, "input file, or - for stdin")->required();
    };
    auto arm = [&](CLI::App* cmd, int (*fn)(const Options&)) {
        cmd->callback([&o, &action, fn]() { action = fn; (void)o; });
        return cmd;
    };

    CLI::App* graph = app.add_subcommand("graph", "operations on edge-list graphs");
    graph->require_subcommand(1);
    {
        CLI::App* c = graph->add_subcommand("solve", "compute a MEG-set");
        add_input(c);
        c->add_option("--solver", o.solver, "exact or greedy")
            ->check(CLI::IsMember({"exact", "greedy"}));
        c->add_flag_callback("--exact", [&o]() { o.solver = "exact"; });
        c->add_flag_callback("--greedy", [&o]() { o.solver = "greedy"; });
        c->add_option("--budget", o.budget_raw, "max cardinality for the exact search")
            ->check(CLI::NonNegativeNumber);
        arm(c, cmd_graph_solve);
    }
    {
        CLI::App* c = graph->add_subcommand("verify", "check a MEG-set file");
        add_input(c);
        c->add_option("--meg", o.meg_file, "MEG-set file")->required();
        arm(c, cmd_graph_verify);
    }
    {
        CLI::App* c = graph->add_subcommand("minimalize", "shrink a valid MEG-set");
        add_input(c);
        c->add_option("--meg", o.meg_file, "MEG-set file")->required();
        arm(c, cmd_graph_minimalize);
    }
    {
        CLI::App* c = graph->add_subcommand("monitor", "edges monitored by one pair");
        add_input(c);
        c->add_option("--pair", o.pair_text, "vertex pair X,Y")->required();
        c->add_flag("--oracle", o.oracle, "cross-check with the edge-deletion oracle");
        arm(c, cmd_graph_monitor);
    }
    {
        CLI::App* c = graph->add_subcommand("dot", "emit Graphviz DOT");
        add_input(c);
        arm(c, cmd_graph_dot);
    }

    CLI::App* cover = app.add_subcommand("cover", "set cover operations");
    cover->require_subcommand(1);
    {
        CLI::App* c = cover->add_subcommand("solve", "compute a cover");
        add_input(c);
        c->add_option("--solver", o.solver, "exact or greedy")
            ->check(CLI::IsMember({"exact", "greedy"}));
        c->add_flag_callback("--exact", [&o]() { o.solver = "exact"; });
        c->add_flag_callback("--greedy", [&o]() { o.solver = "greedy"; });
        arm(c, cmd_cover_solve);
    }
    {
        CLI::App* c = cover->add_subcommand("normalize", "apply the reduction rules");
        add_input(c);
        arm(c, cmd_cover_normalize);
    }

    CLI::App* reduce = app.add_subcommand("reduce", "cover-to-graph construction");
    reduce->require_subcommand(1);
    {
        CLI::App* c = reduce->add_subcommand("build", "build the graph from an instance");
        add_input(c);
        c->add_option("-k,--copies", o.k_raw, "copy count (default max(2, eta+h-2))")->check(CLI::Range(2, 1000000));
        c->add_option("--dot", o.dot_path, "also write labeled DOT here");
        c->add_option("--layout", o.layout_path, "also write vertex roles here");
        arm(c, cmd_reduce_build);
    }
    {
        CLI::App* c = reduce->add_subcommand(
            "extract", "extract covers from a MEG-set of the built graph");
        add_input(c);
        c->add_option("--meg", o.meg_file, "MEG-set file")->required();
        c->add_option("-k,--copies", o.k_raw, "copy count used at build time")->check(CLI::Range(2, 1000000));
        arm(c, cmd_reduce_extract);
    }

    CLI::App* pipeline = app.add_subcommand("pipeline", "cover -> graph -> cover");
    pipeline->require_subcommand(1);
    {
        CLI::App* c = pipeline->add_subcommand("run", "full round trip with report");
        add_input(c);
        c->add_option("--solver", o.solver, "exact or greedy")
            ->check(CLI::IsMember({"exact", "greedy"}));
        c->add_option("-k,--copies", o.k_raw, "copy count (default max(2, eta+h-2))")->check(CLI::Range(2, 1000000));
        c->add_flag("--normalize", o.normalize_first,
                    "apply the reduction rules before building");
        c->add_flag("--json", o.json, "JSON report instead of key=value lines");
        arm(c, cmd_pipeline_run);
    }

    CLI::App* gen = app.add_subcommand("gen", "seeded generators");
    gen->require_subcommand(1);
    {
        CLI::App* c = gen->add_subcommand("graph", "random connected graph");
        c->add_option("--model", o.model, "gnp or tree");
        c->add_option("--n", o.gen_n, "vertex count")->required();
        c->add_option("--p", o.gen_p, "edge probability (gnp)");
        c->add_option("--seed", o.seed, "RNG seed")->required();
        arm(c, cmd_gen_graph);
    }
    {
        CLI::App* c = gen->add_subcommand("cover", "random coverable instance");
        c->set_help_flag("--help", "print help");  // frees -h; --h below is an option
        c->add_option("--eta", o.eta, "item count")->required();
        c->add_option("--h", o.h, "set count")->required();
        c->add_option("--seed", o.seed, "RNG seed")->required();
        c->add_flag("--normalized", o.normalized_gen,
                    "guarantee the normalized-form properties");
        c->add_flag("--linear", o.linear_gen,
                    "normalized form plus pairwise set intersections of at "
                    "most one item");
        arm(c, cmd_gen_cover);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        return action ? action(o) : kBadInput;
    } catch (const megset::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
}
