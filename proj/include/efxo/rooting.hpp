//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "efxo/instance.hpp"
#include "efxo/one_forest.hpp"
#include "efxo/orientation.hpp"
#include "efxo/verify.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace efxo {

/// Non-dominated root candidates per 1-tree. A vertex u dominates v when
/// N1(u) is a proper subset of N1(v); for equal neighborhoods the smaller id
/// survives. Dominated vertices never need to be tried as roots.
struct StateTable {
    struct Tree {
        int tree_id = 0;                                       // index into OneForest::components
        std::vector<VertexId> states;                          // sorted ascending
        std::vector<std::vector<VertexId>> state_nbhd;         // N1 per state, sorted
        std::vector<std::pair<VertexId, VertexId>> dominated;  // (dominated vertex, dominating state)
    };
    std::vector<Tree> trees;
};

/// One chosen root per 1-tree, aligned with OneForest::components order.
struct Rooting {
    std::vector<VertexId> root;
};

inline void require_preprocessed_forest(const Instance& inst, const OneForest& f) {
    for (const auto& c : f.components)
        if (c.cyclic) throw std::runtime_error("instance not preprocessed: cyclic 1-component present");
    (void)inst;
}

inline StateTable enumerate_states(const Instance& inst, const OneForest& f) {
    require_preprocessed_forest(inst, f);
    StateTable table;
    for (size_t t = 0; t < f.components.size(); ++t) {
        const auto& comp = f.components[t];
        StateTable::Tree tree;
        tree.tree_id = static_cast<int>(t);
        std::vector<std::vector<VertexId>> nbhd(comp.vertices.size());
        for (size_t i = 0; i < comp.vertices.size(); ++i) nbhd[i] = inst.one_neighbors(comp.vertices[i]);

        // j dominates i when N1(j) is a proper subset of N1(i), or the
        // neighborhoods are equal and j has the smaller id.
        auto dominates = [&](size_t j, size_t i) {
            if (j == i) return false;
            if (!std::includes(nbhd[i].begin(), nbhd[i].end(), nbhd[j].begin(), nbhd[j].end())) return false;
            return nbhd[j].size() < nbhd[i].size() || comp.vertices[j] < comp.vertices[i];
        };
        std::vector<char> is_dominated(comp.vertices.size(), 0);
        for (size_t i = 0; i < comp.vertices.size(); ++i)
            for (size_t j = 0; j < comp.vertices.size(); ++j)
                if (dominates(j, i)) {
                    is_dominated[i] = 1;
                    break;
                }
        for (size_t i = 0; i < comp.vertices.size(); ++i) {
            if (!is_dominated[i]) {
                tree.states.push_back(comp.vertices[i]);
                tree.state_nbhd.push_back(nbhd[i]);
                continue;
            }
            // Certificate: the smallest surviving state that dominates i
            // (always exists, dominance is a strict partial order).
            for (size_t j = 0; j < comp.vertices.size(); ++j) {
                if (!is_dominated[j] && dominates(j, i)) {
                    tree.dominated.push_back({comp.vertices[i], comp.vertices[j]});
                    break;
                }
            }
        }
        table.trees.push_back(std::move(tree));
    }
    return table;
}

inline StateTable enumerate_states(const Instance& inst) { return enumerate_states(inst, one_forest(inst)); }

struct FeasibilityResult {
    bool ok = true;
    std::optional<EdgeId> violating; // a 0-edge with both endpoints in R
};

/// Prop.-style feasibility: the union R of the roots' 1-neighborhoods must be
/// independent in G0.
inline FeasibilityResult rooting_feasible(const Instance& inst, const OneForest& f, const Rooting& r) {
    if (r.root.size() != f.components.size()) throw std::runtime_error("rooting size mismatch");
    std::vector<char> in_R(inst.n(), 0);
    for (size_t t = 0; t < f.components.size(); ++t) {
        VertexId root = r.root[t];
        if (root < 0 || root >= inst.n() || f.component_of[root] != static_cast<int>(t))
            throw std::runtime_error("root not in its tree");
        for (VertexId w : inst.one_neighbors(root)) in_R[w] = 1;
    }
    for (EdgeId e = 0; e < inst.m(); ++e) {
        if (!is_zero(inst.edge(e).w)) continue;
        if (in_R[inst.edge(e).u] && in_R[inst.edge(e).v]) return {false, e};
    }
    return {true, std::nullopt};
}

inline FeasibilityResult rooting_feasible(const Instance& inst, const Rooting& r) {
    return rooting_feasible(inst, one_forest(inst), r);
}

/// Builds the nice orientation a feasible rooting implies: 1-edges away from
/// each root, 0-edges incident to a root's 1-neighbor away from that
/// neighbor, every other 0-edge toward its larger endpoint.
inline Orientation rooting_to_orientation(const Instance& inst, const OneForest& f, const Rooting& r) {
    auto feas = rooting_feasible(inst, f, r);
    if (!feas.ok) throw std::runtime_error("infeasible rooting");
    Orientation o(inst.m());

    std::vector<char> in_R(inst.n(), 0);
    for (size_t t = 0; t < f.components.size(); ++t)
        for (VertexId w : inst.one_neighbors(r.root[t])) in_R[w] = 1;

    // 1-edges: BFS from each root, orient parent -> child.
    std::vector<char> seen(inst.n(), 0);
    for (size_t t = 0; t < f.components.size(); ++t) {
        std::vector<VertexId> queue{r.root[t]};
        seen[r.root[t]] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            VertexId v = queue[qi];
            for (auto [w, e] : inst.adj(v)) {
                if (!is_one(inst.edge(e).w) || seen[w]) continue;
                seen[w] = 1;
                o.set_toward(inst, e, w);
                queue.push_back(w);
            }
        }
    }

    for (EdgeId e = 0; e < inst.m(); ++e) {
        if (!is_zero(inst.edge(e).w)) continue;
        VertexId u = inst.edge(e).u, v = inst.edge(e).v;
        if (in_R[u] && in_R[v]) throw std::runtime_error("feasible rooting produced a forced conflict");
        if (in_R[u])
            o.set_toward(inst, e, v);
        else if (in_R[v])
            o.set_toward(inst, e, u);
        else
            o.set_toward(inst, e, std::max(u, v));
    }
    return o;
}

inline Orientation rooting_to_orientation(const Instance& inst, const Rooting& r) {
    return rooting_to_orientation(inst, one_forest(inst), r);
}

/// Vertices with no 1-edge oriented toward them, per tree. In a nice
/// orientation each tree has exactly one.
inline std::vector<std::vector<VertexId>> rootless_per_tree(const Instance& inst, const OneForest& f,
                                                            const Orientation& o) {
    std::vector<char> has_one(inst.n(), 0);
    for (EdgeId e = 0; e < inst.m(); ++e)
        if (is_one(inst.edge(e).w)) has_one[o.target(inst, e)] = 1;
    std::vector<std::vector<VertexId>> out(f.components.size());
    for (size_t t = 0; t < f.components.size(); ++t)
        for (VertexId v : f.components[t].vertices)
            if (!has_one[v]) out[t].push_back(v);
    return out;
}

/// Rewrites an EFX orientation into a nice one: per 1-tree, picks the
/// smallest vertex currently holding no 1-item as root and reorients the
/// tree's 1-edges away from it. 0-edges are untouched. Requires every
/// 1-component to be a tree.
inline void make_nice(const Instance& inst, const OneForest& f, Orientation& o) {
    require_preprocessed_forest(inst, f);
    auto rootless = rootless_per_tree(inst, f, o);
    for (size_t t = 0; t < f.components.size(); ++t) {
        if (rootless[t].empty()) throw std::runtime_error("tree with no rootless vertex");
        VertexId root = rootless[t].front();
        std::vector<char> seen(inst.n(), 0);
        std::vector<VertexId> queue{root};
        seen[root] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            VertexId v = queue[qi];
            for (auto [w, e] : inst.adj(v)) {
                if (!is_one(inst.edge(e).w) || seen[w]) continue;
                seen[w] = 1;
                o.set_toward(inst, e, w);
                queue.push_back(w);
            }
        }
    }
}

/// Reads off the rooting of a nice orientation, nice-ifying first if needed.
inline Rooting extract_rooting(const Instance& inst, const OneForest& f, Orientation& o) {
    make_nice(inst, f, o);
    auto rootless = rootless_per_tree(inst, f, o);
    Rooting r;
    for (auto& v : rootless) r.root.push_back(v.front());
    return r;
}

} // namespace efxo
