//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "efxo/instance.hpp"
#include "efxo/near_bipartite.hpp"
#include "efxo/one_forest.hpp"
#include "efxo/orientation.hpp"
#include "efxo/preprocess.hpp"
#include "efxo/rooting.hpp"
#include "efxo/twosat.hpp"
#include "efxo/verify.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace efxo {

enum class Decision { Yes, No, Indeterminate };

struct SolveResult {
    Decision decision = Decision::Indeterminate;
    std::optional<Orientation> orientation; // verified on the instance handed in
    std::string strategy;
};

/// Resource caps are configuration, not correctness: exceeding one yields
/// Indeterminate, never a guess.
struct SolveConfig {
    int tau = 12;
    int bf_edge_cap = 20;
    long long rooting_cap = 1000000;
    long long param_cap = 1000000;
};

namespace detail {

inline void require_preprocessed(const Instance& inst, const OneForest& f, const char* op) {
    for (const auto& c : f.components)
        if (c.cyclic) throw std::runtime_error(std::string(op) + ": cyclic 1-component present");
    for (VertexId v : f.isolated)
        if (inst.degree(v) > 0)
            throw std::runtime_error(std::string(op) + ": vertex with 1-degree 0 still has edges");
}

inline int tree_diameter(const Instance& inst, const OneComponent& comp) {
    auto farthest = [&](VertexId s) {
        std::vector<int> dist(inst.n(), -1);
        dist[s] = 0;
        std::vector<VertexId> queue{s};
        VertexId far = s;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            VertexId v = queue[qi];
            for (VertexId w : inst.one_neighbors(v))
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    if (dist[w] > dist[far]) far = w;
                    queue.push_back(w);
                }
        }
        return std::pair(far, dist[far]);
    };
    auto [x, d0] = farthest(comp.vertices.front());
    (void)d0;
    return farthest(x).second;
}

/// A state is self-conflicting when a 0-edge joins two of its 1-neighbors;
/// such a root can never be feasible.
inline bool self_conflicting(const Instance& inst, const std::vector<VertexId>& nbhd) {
    std::vector<char> in(inst.n(), 0);
    for (VertexId v : nbhd) in[v] = 1;
    for (VertexId v : nbhd)
        for (VertexId w : inst.zero_neighbors(v))
            if (in[w]) return true;
    return false;
}

} // namespace detail

/// 2-SAT encoding for instances whose trees each keep at most two states
/// after pruning self-conflicting ones. One variable per tree (true picks the
/// smaller-id state); a 0-edge between the neighborhoods of states of
/// different trees forbids that joint choice; single-state trees emit unit
/// clauses; a state-less tree marks the formula contradictory.
inline TwoSatFormula build_twosat(const Instance& inst, const OneForest& f, const StateTable& states) {
    TwoSatFormula formula;
    formula.num_vars = static_cast<int>(states.trees.size());
    // vertex -> (variable, which polarity selects a state it belongs to)
    std::vector<std::vector<std::pair<int, bool>>> member(inst.n());

    for (size_t t = 0; t < states.trees.size(); ++t) {
        const auto& tree = states.trees[t];
        std::vector<VertexId> feasible;
        std::vector<const std::vector<VertexId>*> nbhds;
        for (size_t i = 0; i < tree.states.size(); ++i) {
            if (detail::self_conflicting(inst, tree.state_nbhd[i])) continue;
            feasible.push_back(tree.states[i]);
            nbhds.push_back(&tree.state_nbhd[i]);
        }
        if (feasible.size() > 2) throw std::runtime_error("build_twosat: a tree has more than 2 states");
        formula.var_tree.push_back(tree.tree_id);
        if (feasible.empty()) {
            formula.contradiction = true;
            formula.var_states.push_back({-1, -1});
            continue;
        }
        formula.var_states.push_back({feasible[0], feasible.size() == 2 ? feasible[1] : -1});
        for (VertexId v : *nbhds[0]) member[v].push_back({static_cast<int>(t), true});
        if (feasible.size() == 2)
            for (VertexId v : *nbhds[1]) member[v].push_back({static_cast<int>(t), false});
        else
            formula.clauses.push_back({{static_cast<int>(t), true}, {static_cast<int>(t), true}});
    }
    if (formula.contradiction) return formula;

    for (EdgeId e = 0; e < inst.m(); ++e) {
        if (!is_zero(inst.edge(e).w)) continue;
        for (auto [ta, pa] : member[inst.edge(e).u])
            for (auto [tb, pb] : member[inst.edge(e).v]) {
                if (ta == tb) continue;
                formula.clauses.push_back({TwoSatFormula::Lit{ta, pa}.negated(), TwoSatFormula::Lit{tb, pb}.negated()});
            }
    }
    (void)f;
    return formula;
}

inline TwoSatFormula build_twosat(const Instance& inst, const StateTable& states) {
    return build_twosat(inst, one_forest(inst), states);
}

/// Linear-time route for preprocessed instances whose 1-trees all have
/// diameter at most 3 (P2/P3/P4 cores): decide via 2-SAT, then realize the
/// satisfying assignment as a rooting.
inline std::optional<Orientation> solve_small_cores(const Instance& inst) {
    auto f = one_forest(inst);
    detail::require_preprocessed(inst, f, "solve_small_cores");
    for (const auto& c : f.components)
        if (detail::tree_diameter(inst, c) > 3)
            throw std::runtime_error("solve_small_cores: a 1-tree has diameter > 3");
    auto states = enumerate_states(inst, f);
    auto formula = build_twosat(inst, f, states);
    auto assignment = twosat_solve(formula);
    if (!assignment) return std::nullopt;
    Rooting r;
    r.root.resize(f.components.size());
    for (int v = 0; v < formula.num_vars; ++v)
        r.root[formula.var_tree[v]] = formula.var_states[v][(*assignment)[v] ? 0 : 1];
    Orientation o = rooting_to_orientation(inst, f, r);
    if (!verify_efx(inst, o).ok) throw std::runtime_error("solve_small_cores: result failed verification");
    return o;
}

struct ParameterizedResult {
    Decision decision = Decision::Indeterminate;
    std::optional<Orientation> orientation;
    long long combinations_tried = 0;
    int tau_cores = 0; // enumerated trees of size <= tau
    int big_cores = 0; // enumerated trees of size > tau
};

/// Lexicographic enumeration over the states of every tree with diameter > 3
/// (the tau-cores and big-cores); for each prefix the chosen neighborhoods
/// must stay pairwise independent, and each full choice leaves a 2-SAT
/// instance over the small trees. First success wins; exhaustion means NO;
/// blowing the combination cap means Indeterminate.
///
/// States that cannot appear in any feasible rooting are removed upfront by
/// arc-consistency (a state dies when some other tree conflicts with it in
/// every remaining state). That never changes the decision or the
/// lexicographically-first witness, but it collapses the search on the
/// hardness-reduction instances.
inline ParameterizedResult solve_parameterized(const Instance& inst, int tau = 12,
                                               long long combination_cap = 1000000) {
    auto f = one_forest(inst);
    detail::require_preprocessed(inst, f, "solve_parameterized");
    auto states = enumerate_states(inst, f);
    size_t ntrees = states.trees.size();

    ParameterizedResult grouping;
    std::vector<size_t> enumerated, small;
    for (size_t t = 0; t < f.components.size(); ++t) {
        if (detail::tree_diameter(inst, f.components[t]) <= 3) {
            small.push_back(t);
            continue;
        }
        enumerated.push_back(t);
        // The grouping only affects complexity bookkeeping, not the search.
        (f.components[t].vertices.size() <= static_cast<size_t>(tau) ? grouping.tau_cores
                                                                     : grouping.big_cores)++;
    }

    // Flat state list: (tree, state index), pruning self-conflicting states.
    struct StateRef {
        size_t tree;
        int idx;
    };
    std::vector<StateRef> flat;
    std::vector<std::vector<int>> flat_of(ntrees); // tree -> flat ids, state order
    for (size_t t = 0; t < ntrees; ++t)
        for (size_t i = 0; i < states.trees[t].states.size(); ++i)
            if (!detail::self_conflicting(inst, states.trees[t].state_nbhd[i])) {
                flat_of[t].push_back(static_cast<int>(flat.size()));
                flat.push_back({t, static_cast<int>(i)});
            }

    // Pairwise conflicts: a 0-edge joins the two neighborhoods.
    size_t ns = flat.size();
    std::vector<char> conflict(ns * ns, 0);
    {
        std::vector<char> mark(inst.n(), 0);
        for (size_t a = 0; a < ns; ++a) {
            const auto& na = states.trees[flat[a].tree].state_nbhd[flat[a].idx];
            for (VertexId v : na) mark[v] = 1;
            for (size_t b = 0; b < ns; ++b) {
                if (flat[b].tree == flat[a].tree) continue;
                bool c = false;
                const auto& nb = states.trees[flat[b].tree].state_nbhd[flat[b].idx];
                for (VertexId v : nb) {
                    for (VertexId w : inst.zero_neighbors(v))
                        if (mark[w]) {
                            c = true;
                            break;
                        }
                    if (c) break;
                }
                conflict[a * ns + b] = conflict[b * ns + a] = static_cast<char>(c);
            }
            for (VertexId v : na) mark[v] = 0;
        }
    }

    // Consistency propagation to a fixed point. A state dies when some other
    // tree conflicts with it in every remaining state (arc consistency), or
    // when some pair of other trees admits no jointly independent choice
    // compatible with it (this catches case-split gadgets whose branches all
    // force the same conclusion). Killed states occur in no feasible
    // rooting, so decisions and lexicographic-first witnesses survive.
    std::vector<char> alive(ns, 1);
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t a = 0; a < ns; ++a) {
            if (!alive[a]) continue;
            size_t ta = flat[a].tree;
            for (size_t t = 0; t < ntrees && alive[a]; ++t) {
                if (t == ta) continue;
                bool any = false;
                for (int b : flat_of[t])
                    if (alive[b] && !conflict[a * ns + b]) {
                        any = true;
                        break;
                    }
                if (!any) {
                    alive[a] = 0;
                    changed = true;
                }
            }
            if (!alive[a]) continue;
            for (size_t t1 = 0; t1 < ntrees && alive[a]; ++t1) {
                if (t1 == ta) continue;
                for (size_t t2 = t1 + 1; t2 < ntrees && alive[a]; ++t2) {
                    if (t2 == ta) continue;
                    bool any = false;
                    for (int b1 : flat_of[t1]) {
                        if (!alive[b1] || conflict[a * ns + b1]) continue;
                        for (int b2 : flat_of[t2])
                            if (alive[b2] && !conflict[a * ns + b2] &&
                                !conflict[static_cast<size_t>(b1) * ns + b2]) {
                                any = true;
                                break;
                            }
                        if (any) break;
                    }
                    if (!any) {
                        alive[a] = 0;
                        changed = true;
                    }
                }
            }
        }
    }
    std::vector<std::vector<int>> feasible(ntrees); // surviving flat ids per tree
    for (size_t t = 0; t < ntrees; ++t)
        for (int b : flat_of[t])
            if (alive[b]) feasible[t].push_back(b);
    for (size_t t = 0; t < ntrees; ++t)
        if (feasible[t].empty()) {
            grouping.decision = Decision::No;
            return grouping;
        }
    for (size_t t : small)
        if (feasible[t].size() > 2) throw std::runtime_error("solve_parameterized: small tree with > 2 states");

    // Small-vs-small conflicts become 2-SAT clauses at each leaf.
    std::vector<std::pair<int, int>> small_conflicts; // (flat a, flat b), a < b
    for (size_t ki = 0; ki < small.size(); ++ki)
        for (size_t kj = ki + 1; kj < small.size(); ++kj)
            for (int a : feasible[small[ki]])
                for (int b : feasible[small[kj]])
                    if (conflict[static_cast<size_t>(a) * ns + b]) small_conflicts.push_back({a, b});

    ParameterizedResult result = grouping;
    std::vector<int> choice(enumerated.size(), -1);
    std::vector<int> small_k_of_tree(ntrees, -1);
    for (size_t k = 0; k < small.size(); ++k) small_k_of_tree[small[k]] = static_cast<int>(k);
    std::vector<signed char> surv_pol(ns); // per leaf: -1 dead, 0 = picked when var true, 1 = when false

    auto solve_small_part = [&](Rooting& r) -> bool {
        TwoSatFormula formula;
        formula.num_vars = static_cast<int>(small.size());
        std::fill(surv_pol.begin(), surv_pol.end(), static_cast<signed char>(-1));
        auto state_of = [&](int a) { return states.trees[flat[a].tree].states[flat[a].idx]; };
        for (size_t k = 0; k < small.size(); ++k) {
            std::array<int, 2> surv{-1, -1};
            int cnt = 0;
            for (int a : feasible[small[k]]) {
                bool ok = true;
                for (size_t d = 0; d < enumerated.size(); ++d) {
                    int b = feasible[enumerated[d]][choice[d]];
                    if (conflict[static_cast<size_t>(a) * ns + b]) {
                        ok = false;
                        break;
                    }
                }
                if (ok) surv[cnt++] = a;
            }
            if (cnt == 0) return false;
            formula.var_tree.push_back(static_cast<int>(small[k]));
            formula.var_states.push_back({state_of(surv[0]), cnt == 2 ? state_of(surv[1]) : -1});
            surv_pol[surv[0]] = 0;
            if (cnt == 2)
                surv_pol[surv[1]] = 1;
            else
                formula.clauses.push_back({{static_cast<int>(k), true}, {static_cast<int>(k), true}});
        }
        for (auto [a, b] : small_conflicts) {
            if (surv_pol[a] < 0 || surv_pol[b] < 0) continue;
            int ka = small_k_of_tree[flat[a].tree], kb = small_k_of_tree[flat[b].tree];
            formula.clauses.push_back({TwoSatFormula::Lit{ka, surv_pol[a] == 0}.negated(),
                                       TwoSatFormula::Lit{kb, surv_pol[b] == 0}.negated()});
        }
        auto assignment = twosat_solve(formula);
        if (!assignment) return false;
        for (int v = 0; v < formula.num_vars; ++v) {
            VertexId root = formula.var_states[v][(*assignment)[v] ? 0 : 1];
            r.root[states.trees[formula.var_tree[v]].tree_id] = root;
        }
        return true;
    };

    // Depth-first over the enumerated trees, in (tree id, state index) order.
    auto rec = [&](auto&& self, size_t depth) -> bool {
        if (result.combinations_tried > combination_cap) return false;
        if (depth == enumerated.size()) {
            ++result.combinations_tried;
            Rooting r;
            r.root.assign(f.components.size(), -1);
            for (size_t d = 0; d < enumerated.size(); ++d) {
                int a = feasible[enumerated[d]][choice[d]];
                r.root[states.trees[flat[a].tree].tree_id] = states.trees[flat[a].tree].states[flat[a].idx];
            }
            if (!solve_small_part(r)) return false;
            Orientation o = rooting_to_orientation(inst, f, r);
            if (!verify_efx(inst, o).ok)
                throw std::runtime_error("solve_parameterized: result failed verification");
            result.decision = Decision::Yes;
            result.orientation = std::move(o);
            return true;
        }
        size_t t = enumerated[depth];
        for (size_t i = 0; i < feasible[t].size(); ++i) {
            int a = feasible[t][i];
            bool ok = true;
            for (size_t d = 0; d < depth; ++d)
                if (conflict[static_cast<size_t>(a) * ns + feasible[enumerated[d]][choice[d]]]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            choice[depth] = static_cast<int>(i);
            if (self(self, depth + 1)) return true;
        }
        return false;
    };

    if (rec(rec, 0)) return result;
    if (result.combinations_tried > combination_cap) {
        result.decision = Decision::Indeterminate;
        result.orientation.reset();
        return result;
    }
    result.decision = Decision::No;
    return result;
}

/// Definitional oracle: sweeps all 2^m orientations in lexicographic
/// direction order and returns the first one that verifies.
inline std::optional<Orientation> solve_bruteforce_orientations(const Instance& inst, int edge_cap = 20) {
    if (inst.m() > edge_cap) throw std::runtime_error("solve_bruteforce_orientations: edge cap exceeded");
    int m = inst.m();
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        Orientation o(m);
        for (EdgeId e = 0; e < m; ++e) o.set(e, (mask >> (m - 1 - e)) & 1 ? Dir::ToV : Dir::ToU);
        if (verify_efx(inst, o).ok) return o;
    }
    return std::nullopt;
}

inline long long rooting_state_product(const Instance& inst) {
    auto states = enumerate_states(inst);
    long long product = 1;
    for (const auto& t : states.trees) {
        product *= static_cast<long long>(t.states.size());
        if (product > (1LL << 62) / 4) return product; // saturate well past any cap
    }
    return product;
}

/// Rooting-restricted brute force over the state table, first feasible
/// combination in lexicographic order.
inline std::optional<Orientation> solve_bruteforce_rootings(const Instance& inst, long long cap = 1000000) {
    auto f = one_forest(inst);
    detail::require_preprocessed(inst, f, "solve_bruteforce_rootings");
    if (rooting_state_product(inst) > cap)
        throw std::runtime_error("solve_bruteforce_rootings: combination cap exceeded");
    auto states = enumerate_states(inst, f);

    std::vector<char> in_R(inst.n(), 0);
    Rooting r;
    r.root.assign(f.components.size(), -1);
    auto rec = [&](auto&& self, size_t t) -> bool {
        if (t == states.trees.size()) return true;
        const auto& tree = states.trees[t];
        for (size_t i = 0; i < tree.states.size(); ++i) {
            const auto& nbhd = tree.state_nbhd[i];
            bool ok = !detail::self_conflicting(inst, nbhd);
            for (VertexId v : nbhd) {
                if (!ok) break;
                for (VertexId w : inst.zero_neighbors(v))
                    if (in_R[w]) {
                        ok = false;
                        break;
                    }
            }
            if (!ok) continue;
            r.root[tree.tree_id] = tree.states[i];
            for (VertexId v : nbhd) in_R[v] = 1;
            if (self(self, t + 1)) return true;
            for (VertexId v : nbhd) in_R[v] = 0;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    Orientation o = rooting_to_orientation(inst, f, r);
    if (!verify_efx(inst, o).ok) throw std::runtime_error("solve_bruteforce_rootings: result failed verification");
    return o;
}

/// Portfolio front door. Binary instances run the full pipeline:
/// preprocess, then near-bipartite construction when min-uncut <= 1, then
/// 2-SAT when all cores are small, then parameterized enumeration, then
/// capped brute force. Non-binary instances go straight to capped brute
/// force. Every YES carries an orientation re-verified on the input
/// instance.
inline SolveResult solve(const Instance& inst, const SolveConfig& config = {}) {
    if (!inst.is_binary()) {
        if (inst.m() <= config.bf_edge_cap) {
            auto o = solve_bruteforce_orientations(inst, config.bf_edge_cap);
            if (o) return {Decision::Yes, std::move(o), "bforce"};
            return {Decision::No, std::nullopt, "bforce"};
        }
        return {Decision::Indeterminate, std::nullopt, "cap"};
    }

    auto pre = preprocess_full(inst);
    const Instance& red = pre.first;
    const ReductionTrace& trace = pre.second;
    auto finish = [&](std::optional<Orientation> o_red, const char* strategy) -> SolveResult {
        if (!o_red) return {Decision::No, std::nullopt, strategy};
        Orientation lifted = lift_orientation(inst, trace, *o_red);
        if (!verify_efx(inst, lifted).ok)
            throw std::runtime_error("solve: lifted orientation failed verification");
        return {Decision::Yes, std::move(lifted), strategy};
    };

    if (red.m() == 0) return finish(Orientation(0), "preprocess");

    auto uncut = detect_min_uncut_le1(red);
    if (uncut.kind == UncutClassification::Kind::Bipartite) {
        std::vector<VertexId> A, B;
        for (VertexId v = 0; v < red.n(); ++v) (uncut.side[v] == 0 ? A : B).push_back(v);
        return finish(solve_near_bipartite(red, A, B), "near-bipartite");
    }
    if (uncut.kind == UncutClassification::Kind::OneEdge) {
        auto [A, B] = derive_ab_partition(red, uncut.edge);
        return finish(solve_near_bipartite(red, A, B), "near-bipartite");
    }

    auto f = one_forest(red);
    bool all_small = true;
    for (const auto& c : f.components) all_small &= detail::tree_diameter(red, c) <= 3;
    if (all_small) return finish(solve_small_cores(red), "2sat");

    auto pr = solve_parameterized(red, config.tau, config.param_cap);
    if (pr.decision == Decision::Yes) return finish(std::move(pr.orientation), "param");
    if (pr.decision == Decision::No) return finish(std::nullopt, "param");

    if (red.m() <= config.bf_edge_cap)
        return finish(solve_bruteforce_orientations(red, config.bf_edge_cap), "bforce");
    if (rooting_state_product(red) <= config.rooting_cap)
        return finish(solve_bruteforce_rootings(red, config.rooting_cap), "bforce");
    return {Decision::Indeterminate, std::nullopt, "cap"};
}

} // namespace efxo
