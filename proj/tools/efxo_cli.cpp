//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: solve / verify / preprocess / gen / extract /
// stats / export-dot. One command per process, flags only, deterministic
// output bytes.

#include "efxo/efxo.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

using namespace efxo;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitError = 10;
constexpr int kExitUsage = 12;

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_instance(in);
}

Orientation load_orientation(const Instance& inst, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_orientation(inst, in);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct SolveOptions {
    SolveConfig config;
    std::string strategy = "auto";
    bool timing = false;
    std::string emit_orientation;
    int jobs = 1;
};

SolveResult run_one_solve(const Instance& inst, const SolveOptions& opt) {
    if (opt.strategy == "auto") return solve(inst, opt.config);
    if (opt.strategy == "bforce") {
        try {
            auto o = solve_bruteforce_orientations(inst, opt.config.bf_edge_cap);
            if (o) return {Decision::Yes, std::move(o), "bforce"};
            return {Decision::No, std::nullopt, "bforce"};
        } catch (const std::runtime_error&) {
            return {Decision::Indeterminate, std::nullopt, "bforce"};
        }
    }
    // Forced pipeline strategies run on the preprocessed instance and lift.
    auto pre = preprocess_full(inst);
    const Instance& red = pre.first;
    const ReductionTrace& trace = pre.second;
    auto finish = [&](std::optional<Orientation> o_red, const char* label) -> SolveResult {
        if (!o_red) return {Decision::No, std::nullopt, label};
        Orientation lifted = lift_orientation(inst, trace, *o_red);
        if (!verify_efx(inst, lifted).ok) throw std::runtime_error("lifted orientation failed verification");
        return {Decision::Yes, std::move(lifted), label};
    };
    if (opt.strategy == "2sat") {
        if (red.m() == 0) return finish(Orientation(0), "2sat");
        return finish(solve_small_cores(red), "2sat");
    }
    if (opt.strategy == "param") {
        if (red.m() == 0) return finish(Orientation(0), "param");
        auto pr = solve_parameterized(red, opt.config.tau, opt.config.param_cap);
        if (pr.decision == Decision::Indeterminate) return {Decision::Indeterminate, std::nullopt, "param"};
        return finish(pr.decision == Decision::Yes ? std::move(pr.orientation) : std::nullopt, "param");
    }
    throw std::runtime_error("unknown strategy " + opt.strategy);
}

int cmd_solve(const std::vector<std::string>& files, const SolveOptions& opt) {
    struct Item {
        std::string text;
        int code = kExitError;
        std::string orientation_text;
    };
    std::vector<Item> results(files.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= files.size()) return;
            std::ostringstream out;
            try {
                Instance inst = load_instance(files[i]);
                auto t0 = std::chrono::steady_clock::now();
                SolveResult r = run_one_solve(inst, opt);
                long long ms = 0;
                if (opt.timing)
                    ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
                const char* word = r.decision == Decision::Yes  ? "yes"
                                   : r.decision == Decision::No ? "no"
                                                                : "indeterminate";
                if (files.size() > 1) out << files[i] << ": ";
                out << "RESULT " << word << " strategy=" << r.strategy << " time_ms=" << ms << "\n";
                results[i].code = r.decision == Decision::Yes  ? kExitYes
                                  : r.decision == Decision::No ? kExitNo
                                                               : kExitIndeterminate;
                if (r.orientation) results[i].orientation_text = serialize_orientation(inst, *r.orientation);
            } catch (const std::exception& ex) {
                out << files[i] << ": error: " << ex.what() << "\n";
                results[i].code = kExitError;
            }
            results[i].text = out.str();
        }
    };
    int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int code = 0;
    for (size_t i = 0; i < files.size(); ++i) {
        std::cout << results[i].text;
        code = std::max(code, results[i].code);
    }
    if (!opt.emit_orientation.empty()) {
        if (files.size() != 1) throw std::runtime_error("--emit-orientation needs exactly one input");
        if (!results[0].orientation_text.empty()) write_output(opt.emit_orientation, results[0].orientation_text);
    }
    return code;
}

// ---------------------------------------------------------------------------
// Mapping sidecar files.
// ---------------------------------------------------------------------------

std::string sat_mapping_text(const SatMapping& map) {
    std::ostringstream out;
    out << "sat " << map.num_vars << " " << map.clauses.size() << "\n";
    for (int i = 0; i < map.num_vars; ++i)
        out << "var " << i << " " << map.vars[i].pos << " " << map.vars[i].neg << "\n";
    for (size_t j = 0; j < map.clauses.size(); ++j) {
        const auto& g = map.clauses[j];
        out << "clause " << j;
        for (VertexId v : g.path) out << " " << v;
        for (int q = 0; q < 3; ++q) out << " " << g.lit_var[q] << " " << (g.lit_neg[q] ? 1 : 0);
        out << "\n";
    }
    return out.str();
}

std::string mis_mapping_text(const MisInstance& mis, const MisMapping& map) {
    std::ostringstream out;
    out << "mis " << map.colors.size() << "\n";
    for (size_t i = 0; i < map.colors.size(); ++i) {
        out << "color " << i << " " << map.colors[i].path_base << " " << map.colors[i].size;
        for (int v : mis.colors[i]) out << " " << v;
        out << "\n";
    }
    for (size_t i = 0; i < map.q_base.size(); ++i)
        for (size_t j = 0; j < map.q_base[i].size(); ++j)
            out << "q " << i << " " << j << " " << map.q_base[i][j] << "\n";
    out << "ab " << map.a1 << " " << map.a2 << " " << map.b1 << " " << map.b2 << "\n";
    for (auto [u, v] : mis.edges) out << "edge " << u << " " << v << "\n";
    return out.str();
}

// Raw orientation lookup for extraction without the instance file.
struct RawOrientation {
    std::map<std::pair<VertexId, VertexId>, VertexId> target;
    VertexId of(VertexId u, VertexId v) const {
        auto it = target.find(std::minmax(u, v));
        if (it == target.end())
            throw std::runtime_error("orientation file misses edge " + std::to_string(u) + " " +
                                     std::to_string(v));
        return it->second;
    }
};

RawOrientation load_raw_orientation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    RawOrientation raw;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ss(line);
        VertexId u, v, t;
        std::string arrow;
        if (!(ss >> u)) continue;
        if (!(ss >> v >> arrow >> t) || arrow != "->") throw ParseError(lineno, "expected '<u> <v> -> <t>'");
        raw.target[std::minmax(u, v)] = t;
    }
    return raw;
}

// Smallest vertex of a tree with no incoming 1-edge under the raw targets.
VertexId raw_root(const std::vector<std::pair<VertexId, VertexId>>& tree_edges, const RawOrientation& raw) {
    std::map<VertexId, int> incoming;
    for (auto [u, v] : tree_edges) {
        incoming.emplace(u, 0);
        incoming.emplace(v, 0);
        ++incoming[raw.of(u, v)];
    }
    for (auto [v, c] : incoming)
        if (c == 0) return v;
    throw std::runtime_error("tree has no root under the given orientation");
}

int cmd_extract(const std::string& mapping_path, const std::string& orientation_path) {
    std::ifstream in(mapping_path);
    if (!in) throw std::runtime_error("cannot open " + mapping_path);
    RawOrientation raw = load_raw_orientation(orientation_path);
    std::string kind;
    in >> kind;
    if (kind == "sat") {
        int num_vars, num_clauses;
        in >> num_vars >> num_clauses;
        std::vector<std::pair<VertexId, VertexId>> vars(num_vars);
        struct ClauseRec {
            std::array<VertexId, 5> path;
            std::array<int, 3> var;
            std::array<int, 3> neg;
        };
        std::vector<ClauseRec> clauses(num_clauses);
        std::string tag;
        while (in >> tag) {
            if (tag == "var") {
                int i;
                in >> i;
                in >> vars[i].first >> vars[i].second;
            } else if (tag == "clause") {
                int j;
                in >> j;
                for (auto& v : clauses[j].path) in >> v;
                for (int q = 0; q < 3; ++q) in >> clauses[j].var[q] >> clauses[j].neg[q];
            } else {
                throw std::runtime_error("unknown mapping tag " + tag);
            }
        }
        std::vector<int> assignment(num_vars);
        for (int i = 0; i < num_vars; ++i) {
            VertexId root = raw_root({{vars[i].first, vars[i].second}}, raw);
            assignment[i] = root == vars[i].first ? 1 : 0;
        }
        // Self-check: every clause satisfied by the extracted assignment.
        for (const auto& c : clauses) {
            bool sat = false;
            for (int q = 0; q < 3; ++q) sat |= assignment[c.var[q]] != c.neg[q];
            if (!sat) throw std::runtime_error("extracted assignment does not satisfy the formula");
        }
        std::cout << "assignment";
        for (int i = 0; i < num_vars; ++i) std::cout << " " << assignment[i];
        std::cout << "\n";
        return 0;
    }
    if (kind == "mis") {
        int k;
        in >> k;
        std::vector<VertexId> base(k);
        std::vector<int> size(k);
        std::vector<std::vector<int>> members(k);
        std::vector<std::pair<int, int>> mis_edges;
        std::string tag;
        while (in >> tag) {
            if (tag == "color") {
                int i;
                in >> i;
                in >> base[i] >> size[i];
                members[i].resize(size[i]);
                for (auto& v : members[i]) in >> v;
            } else if (tag == "q") {
                int i, j, b;
                in >> i >> j >> b;
            } else if (tag == "ab") {
                int a1, a2, b1, b2;
                in >> a1 >> a2 >> b1 >> b2;
            } else if (tag == "edge") {
                int u, v;
                in >> u >> v;
                mis_edges.push_back({u, v});
            } else {
                throw std::runtime_error("unknown mapping tag " + tag);
            }
        }
        std::vector<int> selection;
        for (int i = 0; i < k; ++i) {
            std::vector<std::pair<VertexId, VertexId>> path_edges;
            for (int q = 0; q + 1 < 4 * size[i]; ++q) path_edges.push_back({base[i] + q, base[i] + q + 1});
            VertexId root = raw_root(path_edges, raw);
            int offset = root - base[i];
            if (offset % 4 != 1 && offset % 4 != 3)
                throw std::runtime_error("path rooted outside a u2/u4 slot; not a valid solution");
            selection.push_back(members[i][offset / 4]);
        }
        for (size_t i = 0; i < selection.size(); ++i)
            for (size_t j = i + 1; j < selection.size(); ++j)
                for (auto [u, v] : mis_edges)
                    if ((u == selection[i] && v == selection[j]) || (u == selection[j] && v == selection[i]))
                        throw std::runtime_error("extracted selection is not independent");
        std::cout << "selection";
        for (int v : selection) std::cout << " " << v;
        std::cout << "\n";
        return 0;
    }
    throw std::runtime_error("unknown mapping kind " + kind);
}

// ---------------------------------------------------------------------------
// stats / export-dot
// ---------------------------------------------------------------------------

std::string stats_json(const Instance& inst, bool structure, int mim_cap) {
    std::ostringstream out;
    ordered_json j;
    j["n"] = inst.n();
    j["m"] = inst.m();
    int ones = 0, zeros = 0;
    for (const auto& e : inst.edges()) {
        if (is_one(e.w)) ++ones;
        if (is_zero(e.w)) ++zeros;
    }
    j["ones"] = ones;
    j["zeros"] = zeros;
    auto f = one_forest(inst);
    j["components"] = f.components.size();

    Instance cores = inst.is_binary() ? preprocess_full(inst).first : inst;
    auto cf = one_forest(cores);
    std::vector<int> core_sizes;
    for (const auto& c : cf.components) core_sizes.push_back(static_cast<int>(c.vertices.size()));
    j["core_sizes"] = core_sizes;
    if (cf.all_trees()) {
        std::vector<int> states_per_tree;
        for (const auto& t : enumerate_states(cores, cf).trees)
            states_per_tree.push_back(static_cast<int>(t.states.size()));
        j["states_per_tree"] = states_per_tree;
    } else {
        // Non-binary instances skip preprocessing, so cyclic 1-components
        // may remain and states are undefined.
        j["states_per_tree"] = nullptr;
    }

    auto cls = detect_min_uncut_le1(inst);
    j["uncut_class"] = cls.kind == UncutClassification::Kind::Bipartite ? "bipartite"
                       : cls.kind == UncutClassification::Kind::OneEdge ? "one_edge"
                                                                        : "more_than_one";
    out << j.dump() << "\n";

    if (structure) {
        for (size_t i = 0; i < cf.components.size(); ++i) {
            const auto& c = cf.components[i];
            ordered_json s;
            s["core"] = i;
            s["size"] = c.vertices.size();
            // The tree itself, relabeled to 0..size-1.
            std::map<VertexId, VertexId> local;
            for (VertexId v : c.vertices) local.emplace(v, static_cast<VertexId>(local.size()));
            std::vector<Edge> edges;
            for (EdgeId e : c.edges)
                edges.push_back({local[cores.edge(e).u], local[cores.edge(e).v], Rat(1)});
            Instance tree = Instance::create(static_cast<int>(c.vertices.size()), std::move(edges));
            auto tf = one_forest(tree);
            bool core_pred =
                tree.n() == 1 || is_core_tree(tree, tf.components[0].vertices, tf.components[0].edges);
            bool bounds_ok = true;
            if (tree.m() <= mim_cap) {
                int mim = max_induced_matching_bf(tree, mim_cap).first;
                s["mim"] = mim;
                if (mim >= 2) bounds_ok &= 2 * mim + 1 <= tree.n() && tree.n() <= 5 * mim - 1;
            } else {
                s["mim"] = nullptr;
            }
            if (core_pred) {
                int a = static_cast<int>(max_leafed_split_orientation(tree).arcs.size());
                s["max_leafed_split"] = a;
                if (a >= 3) bounds_ok &= a + 1 <= tree.n() && tree.n() <= 5 * a - 1;
            } else {
                s["max_leafed_split"] = nullptr;
            }
            s["bounds_ok"] = bounds_ok;
            out << s.dump() << "\n";
        }
    }
    return out.str();
}

std::string dot_text(const Instance& inst, const Orientation* o) {
    std::ostringstream out;
    out << (o ? "digraph" : "graph") << " efx {\n";
    for (VertexId v = 0; v < inst.n(); ++v) out << "  " << v << ";\n";
    for (EdgeId e = 0; e < inst.m(); ++e) {
        const Edge& ed = inst.edge(e);
        VertexId a = ed.u, b = ed.v;
        if (o && o->target(inst, e) == ed.u) std::swap(a, b);
        out << "  " << a << (o ? " -> " : " -- ") << b;
        if (is_one(ed.w))
            out << " [style=bold]";
        else if (is_zero(ed.w))
            out << " [style=dashed]";
        else
            out << " [style=dashed,label=\"" << format_rat(ed.w) << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"EFX-orientation solver toolkit"};
    app.require_subcommand(1);

    auto* solve_cmd =
        app.add_subcommand("solve", "decide EFX orientability; exit 0 yes, 1 no, 2 indeterminate");
    std::vector<std::string> solve_files;
    std::string batch_dir;
    SolveOptions opt;
    solve_cmd->add_option("files", solve_files, "instance files");
    solve_cmd->add_option("--batch", batch_dir, "directory of .efx instances");
    solve_cmd->add_option("--tau", opt.config.tau, "size threshold between tau-cores and big-cores");
    solve_cmd->add_option("--strategy", opt.strategy, "auto|2sat|param|bforce")
        ->check(CLI::IsMember({"auto", "2sat", "param", "bforce"}));
    solve_cmd->add_option("--bf-cap", opt.config.bf_edge_cap, "edge cap for orientation brute force");
    solve_cmd->add_option("--rooting-cap", opt.config.rooting_cap, "combination cap for rooting brute force");
    solve_cmd->add_option("--param-cap", opt.config.param_cap, "combination cap for parameterized search");
    solve_cmd->add_option("--emit-orientation", opt.emit_orientation, "write the found orientation here");
    solve_cmd->add_option("--jobs", opt.jobs, "worker threads for batch runs");
    solve_cmd->add_flag("--timing", opt.timing, "report real milliseconds in the RESULT line");

    auto* verify_cmd = app.add_subcommand("verify", "check an orientation; exit 0 when EFX");
    std::string verify_inst, verify_orient;
    verify_cmd->add_option("instance", verify_inst)->required();
    verify_cmd->add_option("orientation", verify_orient)->required();

    auto* pre_cmd = app.add_subcommand("preprocess", "apply the equivalence-preserving reductions");
    std::string pre_in, pre_out, pre_trace;
    bool pre_zero = false;
    pre_cmd->add_option("instance", pre_in)->required();
    pre_cmd->add_option("--out", pre_out, "write the reduced instance here (default stdout)");
    pre_cmd->add_option("--emit-trace", pre_trace, "write the reduction trace here");
    pre_cmd->add_flag("--zero-degrees", pre_zero, "also apply the 0-degree gadget reduction");

    auto* gen_cmd = app.add_subcommand("gen", "instance generators");
    gen_cmd->require_subcommand(1);
    auto* gen_sat = gen_cmd->add_subcommand("sat", "3-CNF reduction");
    std::string sat_cnf, sat_out, sat_mapping;
    bool sat_low = false;
    gen_sat->add_option("--cnf", sat_cnf, "DIMACS-like CNF file")->required();
    gen_sat->add_option("--out", sat_out);
    gen_sat->add_option("--mapping", sat_mapping, "sidecar mapping file for extract");
    gen_sat->add_flag("--low-degree", sat_low, "compose with the 0-degree reduction");

    auto* gen_mis = gen_cmd->add_subcommand("mis", "multicolored-independent-set reduction");
    std::string mis_graph, mis_colors, mis_gadget = "1", mis_out, mis_mapping;
    gen_mis->add_option("--graph", mis_graph, "edge list: 'p mis <n> <m>' then '<u> <v>' lines")->required();
    gen_mis->add_option("--colors", mis_colors, "one line of vertex ids per color")->required();
    gen_mis->add_option("--gadget", mis_gadget, "1 | 2 | frac:p/q");
    gen_mis->add_option("--out", mis_out);
    gen_mis->add_option("--mapping", mis_mapping);

    auto* gen_rand = gen_cmd->add_subcommand("random", "seeded random instances");
    std::string rand_kind, rand_out, rand_p1 = "1/2";
    std::uint64_t rand_seed = 0;
    int rand_n = 8, rand_m = 10, rand_count = 1, rand_size = 9;
    gen_rand->add_option("--kind", rand_kind, "uniform | bipartite_plus_edges | tree_core")
        ->required()
        ->check(CLI::IsMember({"uniform", "bipartite_plus_edges", "tree_core"}));
    gen_rand->add_option("--seed", rand_seed)->required();
    gen_rand->add_option("--n", rand_n);
    gen_rand->add_option("--m", rand_m);
    gen_rand->add_option("--count", rand_count, "exact min-uncut for bipartite_plus_edges");
    gen_rand->add_option("--size", rand_size, "vertex count for tree_core");
    gen_rand->add_option("--p1", rand_p1, "probability of a 1-edge, as a rational");
    gen_rand->add_option("--out", rand_out);

    auto* extract_cmd = app.add_subcommand("extract", "map a solved orientation back to the source problem");
    std::string ext_mapping, ext_orientation;
    extract_cmd->add_option("--mapping", ext_mapping)->required();
    extract_cmd->add_option("--orientation", ext_orientation)->required();

    auto* stats_cmd = app.add_subcommand("stats", "per-instance JSON summary");
    std::string stats_in;
    bool stats_structure = false;
    int stats_mim_cap = 16;
    stats_cmd->add_option("instance", stats_in)->required();
    stats_cmd->add_flag("--structure", stats_structure, "also print per-core structural lines");
    stats_cmd->add_option("--mim-cap", stats_mim_cap, "edge cap for the induced-matching brute force");

    auto* dot_cmd = app.add_subcommand("export-dot", "GraphViz output; 1-edges bold, 0-edges dashed");
    std::string dot_in, dot_orient, dot_out;
    dot_cmd->add_option("instance", dot_in)->required();
    dot_cmd->add_option("orientation", dot_orient);
    dot_cmd->add_option("--out", dot_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) {
            if (!batch_dir.empty()) {
                std::vector<std::string> found;
                for (const auto& entry : std::filesystem::directory_iterator(batch_dir))
                    if (entry.is_regular_file() && entry.path().extension() == ".efx")
                        found.push_back(entry.path().string());
                std::sort(found.begin(), found.end());
                solve_files.insert(solve_files.end(), found.begin(), found.end());
            }
            if (solve_files.empty()) throw std::runtime_error("no input instances");
            return cmd_solve(solve_files, opt);
        }
        if (verify_cmd->parsed()) {
            Instance inst = load_instance(verify_inst);
            Orientation o = load_orientation(inst, verify_orient);
            auto rep = verify_efx(inst, o);
            if (rep.ok) {
                std::cout << "OK\n";
                return 0;
            }
            for (const auto& w : rep.witnesses)
                std::cout << "STRONG-ENVY envier=" << w.envier << " envied=" << w.envied
                          << " drop=" << inst.edge(w.dropped).u << "-" << inst.edge(w.dropped).v << "\n";
            return 1;
        }
        if (pre_cmd->parsed()) {
            Instance inst = load_instance(pre_in);
            auto [red, trace] = preprocess_full(inst);
            if (pre_zero) {
                auto [red2, t2] = reduce_zero_degrees(red);
                red = red2;
                trace.append(std::move(t2));
            }
            write_output(pre_out, serialize_instance(red));
            if (!pre_trace.empty()) write_output(pre_trace, serialize_trace(trace));
            return 0;
        }
        if (gen_sat->parsed()) {
            std::ifstream in(sat_cnf);
            if (!in) throw std::runtime_error("cannot open " + sat_cnf);
            MonotoneCnf f = parse_monotone_cnf(in);
            auto [inst, map] = from_monotone_3sat(f);
            if (sat_low) inst = reduce_3sat_low_degree(f);
            write_output(sat_out, serialize_instance(inst));
            if (!sat_mapping.empty()) write_output(sat_mapping, sat_mapping_text(map));
            return 0;
        }
        if (gen_mis->parsed()) {
            std::ifstream gin(mis_graph);
            if (!gin) throw std::runtime_error("cannot open " + mis_graph);
            MisInstance mis;
            {
                std::string p, kind;
                int m;
                if (!(gin >> p >> kind >> mis.n >> m) || p != "p" || kind != "mis")
                    throw std::runtime_error("graph file must start with 'p mis <n> <m>'");
                int u, v;
                while (gin >> u >> v) mis.edges.push_back({u, v});
                if (static_cast<int>(mis.edges.size()) != m)
                    throw std::runtime_error("graph file edge count mismatch");
            }
            std::ifstream colors_in(mis_colors);
            if (!colors_in) throw std::runtime_error("cannot open " + mis_colors);
            std::string line;
            while (std::getline(colors_in, line)) {
                std::istringstream ss(line);
                std::vector<int> color;
                int v;
                while (ss >> v) color.push_back(v);
                if (!color.empty()) mis.colors.push_back(std::move(color));
            }
            GadgetChoice gadget;
            if (mis_gadget == "1")
                gadget.kind = GadgetChoice::Kind::TwoOneEdges;
            else if (mis_gadget == "2")
                gadget.kind = GadgetChoice::Kind::CrossedOneEdgesWithZeros;
            else if (mis_gadget.rfind("frac:", 0) == 0) {
                gadget.kind = GadgetChoice::Kind::FractionalEdge;
                gadget.fractional_value = parse_rat(mis_gadget.substr(5));
            } else {
                throw std::runtime_error("--gadget must be 1, 2, or frac:p/q");
            }
            auto [inst, map] = from_mis(mis, gadget);
            write_output(mis_out, serialize_instance(inst));
            if (!mis_mapping.empty()) write_output(mis_mapping, mis_mapping_text(mis, map));
            return 0;
        }
        if (gen_rand->parsed()) {
            Rat p1 = parse_rat(rand_p1);
            if (p1 < Rat(0) || p1 > Rat(1)) throw std::runtime_error("--p1 must lie in [0,1]");
            auto num = static_cast<std::uint64_t>(p1.numerator().convert_to<long long>());
            auto den = static_cast<std::uint64_t>(p1.denominator().convert_to<long long>());
            Instance inst;
            if (rand_kind == "uniform")
                inst = gen_uniform(rand_n, rand_m, rand_seed, num, den);
            else if (rand_kind == "bipartite_plus_edges")
                inst = gen_bipartite_plus_edges(rand_n, rand_m, rand_count, rand_seed, num, den);
            else
                inst = gen_tree_core(rand_size, rand_seed);
            write_output(rand_out, serialize_instance(inst));
            return 0;
        }
        if (extract_cmd->parsed()) return cmd_extract(ext_mapping, ext_orientation);
        if (stats_cmd->parsed()) {
            Instance inst = load_instance(stats_in);
            std::cout << stats_json(inst, stats_structure, stats_mim_cap);
            return 0;
        }
        if (dot_cmd->parsed()) {
            Instance inst = load_instance(dot_in);
            std::optional<Orientation> o;
            if (!dot_orient.empty()) o = load_orientation(inst, dot_orient);
            write_output(dot_out, dot_text(inst, o ? &*o : nullptr));
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}
