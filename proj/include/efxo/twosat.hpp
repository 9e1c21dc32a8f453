//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "efxo/instance.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace efxo {

/// 2-CNF over tree-state variables. Unit constraints are encoded as (l, l).
/// `var_tree`/`var_states` tie each variable back to a 1-tree and the states
/// its two polarities select (unused by the plain solver).
struct TwoSatFormula {
    struct Lit {
        int var;
        bool positive;
        Lit negated() const { return {var, !positive}; }
    };
    int num_vars = 0;
    std::vector<std::pair<Lit, Lit>> clauses;
    bool contradiction = false; // a tree had no feasible state at all
    std::vector<int> var_tree;
    std::vector<std::array<VertexId, 2>> var_states; // state picked when true / when false (-1 if unit)
};

/// Implication-graph 2-SAT via iterative Tarjan SCC. Deterministic: node
/// order and adjacency order are fixed by the formula.
inline std::optional<std::vector<bool>> twosat_solve(const TwoSatFormula& f) {
    if (f.contradiction) return std::nullopt;
    int n = 2 * f.num_vars;
    auto node = [](TwoSatFormula::Lit l) { return 2 * l.var + (l.positive ? 0 : 1); };
    std::vector<std::vector<int>> out(n);
    for (const auto& [a, b] : f.clauses) {
        if (a.var < 0 || a.var >= f.num_vars || b.var < 0 || b.var >= f.num_vars)
            throw std::runtime_error("twosat: clause references undeclared variable");
        out[node(a.negated())].push_back(node(b));
        out[node(b.negated())].push_back(node(a));
    }

    std::vector<int> comp(n, -1), low(n, 0), disc(n, -1), stk;
    std::vector<char> on_stack(n, 0);
    int timer = 0, ncomp = 0;
    // Iterative Tarjan; frame = (node, next-edge-index).
    std::vector<std::pair<int, size_t>> frames;
    for (int s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        frames.push_back({s, 0});
        while (!frames.empty()) {
            auto& [v, ei] = frames.back();
            if (ei == 0) {
                disc[v] = low[v] = timer++;
                stk.push_back(v);
                on_stack[v] = 1;
            }
            if (ei < out[v].size()) {
                int w = out[v][ei++];
                if (disc[w] == -1)
                    frames.push_back({w, 0});
                else if (on_stack[w])
                    low[v] = std::min(low[v], disc[w]);
            } else {
                if (low[v] == disc[v]) {
                    for (;;) {
                        int w = stk.back();
                        stk.pop_back();
                        on_stack[w] = 0;
                        comp[w] = ncomp;
                        if (w == v) break;
                    }
                    ++ncomp;
                }
                int vv = v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[vv]);
            }
        }
    }

    std::vector<bool> assignment(f.num_vars);
    for (int x = 0; x < f.num_vars; ++x) {
        if (comp[2 * x] == comp[2 * x + 1]) return std::nullopt;
        // Components pop in reverse topological order, so the later component
        // is the one implied by the other.
        assignment[x] = comp[2 * x] < comp[2 * x + 1];
    }
    return assignment;
}

} // namespace efxo
