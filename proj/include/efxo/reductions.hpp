//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "efxo/instance.hpp"
#include "efxo/one_forest.hpp"
#include "efxo/orientation.hpp"
#include "efxo/preprocess.hpp"
#include "efxo/rooting.hpp"
#include "efxo/structure.hpp"
#include "efxo/verify.hpp"

#include <array>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace efxo {

// ---------------------------------------------------------------------------
// Monotone 3-CNF.
// ---------------------------------------------------------------------------

/// CNF with 1..3 literals per clause. The hardness source restricts clauses
/// to a single polarity (monotone), but the gadget construction is
/// polarity-agnostic, so mixed clauses are accepted and is_monotone() tells
/// them apart.
struct MonotoneCnf {
    struct Clause {
        std::vector<std::pair<int, bool>> lits; // (variable, negated), 1..3 entries
    };
    int num_vars = 0;
    std::vector<Clause> clauses;

    bool is_monotone() const {
        for (const auto& c : clauses)
            for (const auto& [v, neg] : c.lits)
                if (neg != c.lits.front().second) return false;
        return true;
    }
};

inline void validate_cnf(const MonotoneCnf& f) {
    for (const auto& c : f.clauses) {
        if (c.lits.empty() || c.lits.size() > 3)
            throw std::runtime_error("cnf: clause must hold 1..3 literals");
        for (const auto& [v, neg] : c.lits) {
            (void)neg;
            if (v < 0 || v >= f.num_vars) throw std::runtime_error("cnf: variable out of range");
        }
    }
}

inline bool cnf_satisfied_by(const MonotoneCnf& f, const std::vector<bool>& a) {
    for (const auto& c : f.clauses) {
        bool sat = false;
        for (const auto& [v, neg] : c.lits) sat |= a[v] != neg;
        if (!sat) return false;
    }
    return true;
}

/// DIMACS-like text: 'c' comments, header "p cnf <vars> <clauses>", then one
/// 0-terminated clause per line with negative numbers for negated variables
/// (1-based). Each clause must be monotone.
inline MonotoneCnf parse_monotone_cnf(std::istream& in) {
    MonotoneCnf f;
    std::string line;
    int lineno = 0, expected = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok) || tok == "c") continue;
        if (tok == "p") {
            std::string kind;
            if (!(ss >> kind >> f.num_vars >> expected) || kind != "cnf")
                throw ParseError(lineno, "expected 'p cnf <vars> <clauses>'");
            continue;
        }
        if (expected < 0) throw ParseError(lineno, "clause before header");
        MonotoneCnf::Clause c;
        long lit = std::stol(tok);
        for (;;) {
            if (lit == 0) break;
            bool neg = lit < 0;
            int var = static_cast<int>(neg ? -lit : lit) - 1;
            if (var >= f.num_vars) throw ParseError(lineno, "variable out of range");
            c.lits.push_back({var, neg});
            if (!(ss >> lit)) throw ParseError(lineno, "clause not 0-terminated");
        }
        if (c.lits.empty()) throw ParseError(lineno, "empty clause");
        if (c.lits.size() > 3) throw ParseError(lineno, "clause with more than 3 literals");
        f.clauses.push_back(std::move(c));
    }
    if (expected >= 0 && static_cast<int>(f.clauses.size()) != expected)
        throw ParseError(lineno, "clause count mismatch");
    if (expected < 0) throw ParseError(lineno, "missing header");
    return f;
}

inline MonotoneCnf parse_monotone_cnf(const std::string& text) {
    std::istringstream ss(text);
    return parse_monotone_cnf(ss);
}

// ---------------------------------------------------------------------------
// SAT -> EFX-orientation.
// ---------------------------------------------------------------------------

/// Where each gadget lives in the generated instance. Clause literal slots
/// are padded to exactly three by repeating the last literal; an unused slot
/// would otherwise be freely rootable and break the equivalence.
struct SatMapping {
    struct VarGadget {
        VertexId pos, neg;
    };
    struct ClauseGadget {
        std::array<VertexId, 5> path;  // c1, c2, g3, g2, c3 in path order
        std::array<int, 3> lit_var;    // padded to 3
        std::array<bool, 3> lit_neg;
    };
    int num_vars = 0;
    std::vector<VarGadget> vars;
    std::vector<ClauseGadget> clauses;
};

/// Per variable a 1-edge P2; per clause a 1-edge P5 with two internal
/// 0-edges; literal 0-edges from alpha(c_q) to the literal's variable
/// vertex. The instance has an EFX orientation iff the formula is
/// satisfiable.
inline std::pair<Instance, SatMapping> from_monotone_3sat(const MonotoneCnf& f) {
    validate_cnf(f);
    SatMapping map;
    map.num_vars = f.num_vars;
    std::vector<Edge> edges;
    for (int i = 0; i < f.num_vars; ++i) {
        map.vars.push_back({2 * i, 2 * i + 1});
        edges.push_back({2 * i, 2 * i + 1, Rat(1)});
    }
    std::set<std::pair<VertexId, VertexId>> zero_edges;
    auto add_zero = [&](VertexId a, VertexId b) { zero_edges.insert(std::minmax(a, b)); };

    int base = 2 * f.num_vars;
    for (const auto& c : f.clauses) {
        SatMapping::ClauseGadget g;
        for (int q = 0; q < 5; ++q) g.path[q] = base + q;
        auto [c1, c2, g3, g2, c3] = std::tuple(g.path[0], g.path[1], g.path[2], g.path[3], g.path[4]);
        for (int q = 0; q + 1 < 5; ++q) edges.push_back({g.path[q], g.path[q + 1], Rat(1)});
        add_zero(c2, g2);
        add_zero(g3, c3);
        std::array<VertexId, 3> alpha{c2, c1, g2};
        for (int q = 0; q < 3; ++q) {
            auto [var, neg] = c.lits[std::min<size_t>(q, c.lits.size() - 1)];
            g.lit_var[q] = var;
            g.lit_neg[q] = neg;
            add_zero(alpha[q], neg ? map.vars[var].neg : map.vars[var].pos);
        }
        map.clauses.push_back(g);
        base += 5;
    }
    for (auto [a, b] : zero_edges) edges.push_back({a, b, Rat(0)});
    return {Instance::create(base, std::move(edges)), map};
}

/// Composition with the 0-degree reduction: afterwards G0 is a matching and
/// every 1-component is a P2, P3, or P5. The mapping of from_monotone_3sat
/// stays valid (the reduction only adds vertices and rewires 0-edges).
inline Instance reduce_3sat_low_degree(const MonotoneCnf& f) {
    auto [inst, map] = from_monotone_3sat(f);
    (void)map;
    return reduce_zero_degrees(inst).first;
}

/// Reads the truth assignment off a verified orientation: each variable is
/// true iff its P2 is rooted at the positive vertex. Throws when the
/// orientation does not verify.
inline std::vector<bool> extract_assignment(const Instance& inst, const SatMapping& map, Orientation o) {
    if (!verify_efx(inst, o).ok) throw std::runtime_error("extract_assignment: orientation does not verify");
    auto f = one_forest(inst);
    Rooting r = extract_rooting(inst, f, o);
    std::vector<bool> a(map.num_vars);
    for (int i = 0; i < map.num_vars; ++i) {
        VertexId root = r.root[f.component_of[map.vars[i].pos]];
        a[i] = root == map.vars[i].pos;
    }
    return a;
}

inline std::vector<bool> extract_assignment(const Instance& inst, const SatMapping& map, const Rooting& r) {
    auto f = one_forest(inst);
    std::vector<bool> a(map.num_vars);
    for (int i = 0; i < map.num_vars; ++i) a[i] = r.root[f.component_of[map.vars[i].pos]] == map.vars[i].pos;
    return a;
}

/// Inverse: a satisfying assignment becomes a feasible rooting (variable
/// gadget at its true vertex, clause gadget at its first true literal slot).
inline Rooting assignment_to_rooting(const Instance& inst, const SatMapping& map, const MonotoneCnf& f,
                                     const std::vector<bool>& a) {
    if (!cnf_satisfied_by(f, a)) throw std::runtime_error("assignment_to_rooting: assignment does not satisfy");
    auto forest = one_forest(inst);
    Rooting r;
    r.root.assign(forest.components.size(), -1);
    for (int i = 0; i < map.num_vars; ++i) {
        VertexId v = a[i] ? map.vars[i].pos : map.vars[i].neg;
        r.root[forest.component_of[v]] = v;
    }
    for (const auto& g : map.clauses) {
        std::array<VertexId, 3> c_of_slot{g.path[0], g.path[1], g.path[4]};
        VertexId pick = -1;
        for (int q = 0; q < 3 && pick == -1; ++q)
            if (a[g.lit_var[q]] != g.lit_neg[q]) pick = c_of_slot[q];
        if (pick == -1) throw std::runtime_error("assignment_to_rooting: unsatisfied clause");
        r.root[forest.component_of[pick]] = pick;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Multicolored independent set -> EFX-orientation.
// ---------------------------------------------------------------------------

struct MisInstance {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> colors; // partition of 0..n-1
};

inline void validate_mis(const MisInstance& mis) {
    std::vector<int> color_of(mis.n, -1);
    for (size_t i = 0; i < mis.colors.size(); ++i)
        for (int v : mis.colors[i]) {
            if (v < 0 || v >= mis.n) throw std::runtime_error("mis: vertex out of range");
            if (color_of[v] != -1) throw std::runtime_error("mis: color classes overlap");
            color_of[v] = static_cast<int>(i);
        }
    for (int v = 0; v < mis.n; ++v)
        if (color_of[v] == -1) throw std::runtime_error("mis: vertex without a color");
    for (auto [u, v] : mis.edges)
        if (u < 0 || v < 0 || u >= mis.n || v >= mis.n || u == v)
            throw std::runtime_error("mis: bad edge");
}

inline bool mis_adjacent(const MisInstance& mis, int u, int v) {
    for (auto [a, b] : mis.edges)
        if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
}

/// Exhaustive multicolored independent set; lexicographic-first witness as
/// one vertex index per color.
inline std::optional<std::vector<int>> mis_bruteforce(const MisInstance& mis, long long cap = 1000000) {
    validate_mis(mis);
    long long product = 1;
    for (const auto& c : mis.colors) {
        product *= static_cast<long long>(c.size());
        if (product > cap) throw std::runtime_error("mis_bruteforce: combination cap exceeded");
        if (product == 0) return std::nullopt;
    }
    std::vector<int> pick(mis.colors.size(), 0);
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (i == mis.colors.size()) return true;
        for (pick[i] = 0; pick[i] < static_cast<int>(mis.colors[i].size()); ++pick[i]) {
            bool ok = true;
            for (size_t j = 0; j < i && ok; ++j)
                ok = !mis_adjacent(mis, mis.colors[j][pick[j]], mis.colors[i][pick[i]]);
            if (ok && self(self, i + 1)) return true;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    std::vector<int> out;
    for (size_t i = 0; i < mis.colors.size(); ++i) out.push_back(mis.colors[i][pick[i]]);
    return out;
}

/// The bipartiteness-breaking gadget over {a1, a2, b1, b2}.
struct GadgetChoice {
    enum class Kind { TwoOneEdges, CrossedOneEdgesWithZeros, FractionalEdge } kind = Kind::TwoOneEdges;
    Rat fractional_value = Rat(1, 2);
};

struct MisMapping {
    struct Color {
        VertexId path_base; // path on 4 * size vertices
        int size;
    };
    std::vector<Color> colors;
    std::vector<std::vector<VertexId>> q_base; // per color, per vertex: base of the 5-path Q_u
    VertexId a1 = -1, a2 = -1, b1 = -1, b2 = -1;
};

/// The min-uncut-2 hardness construction: per color a path on 4|V_i|
/// vertices, per vertex an auxiliary 5-path, the a/b contact vertices, and a
/// goodness gadget. A good EFX orientation exists iff the MIS instance has a
/// multicolored independent set; the gadget makes every EFX orientation good.
inline std::pair<Instance, MisMapping> from_mis(const MisInstance& mis, const GadgetChoice& gadget) {
    validate_mis(mis);
    if (gadget.kind == GadgetChoice::Kind::FractionalEdge &&
        (gadget.fractional_value <= Rat(0) || gadget.fractional_value >= Rat(1)))
        throw std::runtime_error("from_mis: fractional gadget value must lie strictly between 0 and 1");

    MisMapping map;
    std::vector<Edge> edges;
    int next = 0;
    for (const auto& color : mis.colors) {
        if (color.empty()) throw std::runtime_error("from_mis: empty color class");
        map.colors.push_back({next, static_cast<int>(color.size())});
        for (int q = 0; q + 1 < 4 * static_cast<int>(color.size()); ++q)
            edges.push_back({next + q, next + q + 1, Rat(1)});
        next += 4 * static_cast<int>(color.size());
    }
    map.q_base.resize(mis.colors.size());
    for (size_t i = 0; i < mis.colors.size(); ++i)
        for (size_t j = 0; j < mis.colors[i].size(); ++j) {
            map.q_base[i].push_back(next);
            for (int q = 0; q + 1 < 5; ++q) edges.push_back({next + q, next + q + 1, Rat(1)});
            next += 5;
        }
    map.a1 = next++;
    map.a2 = next++;
    map.b1 = next++;
    map.b2 = next++;

    // Vertex u (color i, index j): u_k = path_base + 4j + (k-1); x_{u,k} = q_base + (k-1).
    auto u_at = [&](int i, int j, int k) { return map.colors[i].path_base + 4 * j + (k - 1); };
    auto x_at = [&](int i, int j, int k) { return map.q_base[i][j] + (k - 1); };
    std::vector<std::pair<int, int>> locate(mis.n); // mis vertex -> (color, index)
    for (size_t i = 0; i < mis.colors.size(); ++i)
        for (size_t j = 0; j < mis.colors[i].size(); ++j) locate[mis.colors[i][j]] = {static_cast<int>(i), static_cast<int>(j)};

    std::set<std::pair<VertexId, VertexId>> zeros;
    auto add_zero = [&](VertexId a, VertexId b) { zeros.insert(std::minmax(a, b)); };
    for (size_t i = 0; i < mis.colors.size(); ++i)
        for (size_t j = 0; j < mis.colors[i].size(); ++j) {
            add_zero(u_at(i, j, 2), map.a1);
            add_zero(u_at(i, j, 2), map.a2);
            add_zero(x_at(i, j, 3), map.b1);
            add_zero(x_at(i, j, 3), map.b2);
            add_zero(u_at(i, j, 3), x_at(i, j, 2));
        }
    for (auto [u, v] : mis.edges) {
        auto [iu, ju] = locate[u];
        auto [iv, jv] = locate[v];
        add_zero(x_at(iu, ju, 4), u_at(iv, jv, 3));
        add_zero(x_at(iv, jv, 4), u_at(iu, ju, 3));
    }
    for (auto [a, b] : zeros) edges.push_back({a, b, Rat(0)});

    switch (gadget.kind) {
    case GadgetChoice::Kind::TwoOneEdges:
        edges.push_back({map.a1, map.a2, Rat(1)});
        edges.push_back({map.b1, map.b2, Rat(1)});
        break;
    case GadgetChoice::Kind::CrossedOneEdgesWithZeros:
        edges.push_back({map.a1, map.b1, Rat(1)});
        edges.push_back({map.a2, map.b2, Rat(1)});
        edges.push_back({map.a1, map.a2, Rat(0)});
        edges.push_back({map.b1, map.b2, Rat(0)});
        break;
    case GadgetChoice::Kind::FractionalEdge:
        edges.push_back({map.a1, map.b1, Rat(1)});
        edges.push_back({map.a2, map.b2, Rat(1)});
        edges.push_back({map.b1, map.b2, gadget.fractional_value});
        break;
    }
    return {Instance::create(next, std::move(edges)), map};
}

/// Reads the selected multicolored set off a verified orientation: color i
/// selects the vertex whose u_2 or u_4 is the path root.
inline std::vector<int> extract_mis_selection(const Instance& inst, const MisInstance& mis,
                                              const MisMapping& map, Orientation o) {
    if (!verify_efx(inst, o).ok) throw std::runtime_error("extract_mis_selection: orientation does not verify");
    auto f = one_forest(inst);
    Rooting r = extract_rooting(inst, f, o);
    std::vector<int> out;
    for (size_t i = 0; i < map.colors.size(); ++i) {
        VertexId root = r.root[f.component_of[map.colors[i].path_base]];
        int offset = root - map.colors[i].path_base;
        int j = offset / 4, k = offset % 4;
        if (k != 1 && k != 3)
            throw std::runtime_error("extract_mis_selection: path rooted outside a u2/u4 slot");
        out.push_back(mis.colors[i][j]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Big-core variant (the W[1]-hardness shape).
// ---------------------------------------------------------------------------

struct BigCoreMapping {
    struct Color {
        int offset = 0;                 // vertex offset of this core
        std::vector<VertexId> roots;    // local ids, canonical arc order
        std::vector<VertexId> privates; // local ids
    };
    std::vector<Color> colors;
};

/// One gadgetized core per color; a cross 0-edge joins the private neighbors
/// of two roots whenever the MIS vertices they represent are adjacent. Roots
/// beyond |V_i| mimic the last vertex of the color.
inline std::pair<Instance, BigCoreMapping> from_mis_big_cores(const MisInstance& mis,
                                                              const std::vector<Instance>& cores) {
    validate_mis(mis);
    if (cores.size() != mis.colors.size())
        throw std::runtime_error("from_mis_big_cores: one core per color required");

    BigCoreMapping map;
    std::vector<Edge> edges;
    int next = 0;
    for (size_t i = 0; i < cores.size(); ++i) {
        if (mis.colors[i].empty()) throw std::runtime_error("from_mis_big_cores: empty color class");
        auto so = max_leafed_split_orientation(cores[i]);
        if (so.arcs.size() < mis.colors[i].size())
            throw std::runtime_error("from_mis_big_cores: core too small for its color class");
        auto g = gadgetize_core(cores[i], static_cast<int>(so.arcs.size()));
        BigCoreMapping::Color col;
        col.offset = next;
        col.roots = g.roots;
        col.privates = g.privates;
        for (const auto& e : cores[i].edges()) edges.push_back({e.u + next, e.v + next, Rat(1)});
        for (auto [u, v] : g.zero_edges)
            edges.push_back({std::min(u, v) + next, std::max(u, v) + next, Rat(0)});
        map.colors.push_back(std::move(col));
        next += cores[i].n();
    }

    // Root j of color i represents the min(j, |V_i|-1)-th vertex of V_i.
    auto vertex_of = [&](size_t i, size_t j) {
        return mis.colors[i][std::min(j, mis.colors[i].size() - 1)];
    };
    std::set<std::pair<VertexId, VertexId>> cross;
    for (size_t i = 0; i < map.colors.size(); ++i)
        for (size_t i2 = i + 1; i2 < map.colors.size(); ++i2)
            for (size_t j = 0; j < map.colors[i].roots.size(); ++j)
                for (size_t j2 = 0; j2 < map.colors[i2].roots.size(); ++j2)
                    if (mis_adjacent(mis, vertex_of(i, j), vertex_of(i2, j2)))
                        cross.insert(std::minmax(map.colors[i].privates[j] + map.colors[i].offset,
                                                 map.colors[i2].privates[j2] + map.colors[i2].offset));
    for (auto [a, b] : cross) edges.push_back({a, b, Rat(0)});
    return {Instance::create(next, std::move(edges)), map};
}

inline std::vector<int> extract_mis_selection_big_cores(const Instance& inst, const MisInstance& mis,
                                                        const BigCoreMapping& map, Orientation o) {
    if (!verify_efx(inst, o).ok)
        throw std::runtime_error("extract_mis_selection_big_cores: orientation does not verify");
    auto f = one_forest(inst);
    Rooting r = extract_rooting(inst, f, o);
    std::vector<int> out;
    for (size_t i = 0; i < map.colors.size(); ++i) {
        VertexId root = r.root[f.component_of[map.colors[i].offset + map.colors[i].roots.front()]];
        int local = root - map.colors[i].offset;
        size_t j = 0;
        while (j < map.colors[i].roots.size() && map.colors[i].roots[j] != local) ++j;
        if (j == map.colors[i].roots.size())
            throw std::runtime_error("extract_mis_selection_big_cores: rooted at a blocked vertex");
        out.push_back(mis.colors[i][std::min(j, mis.colors[i].size() - 1)]);
    }
    return out;
}

} // namespace efxo
