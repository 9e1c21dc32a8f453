//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "efxo/instance.hpp"

#include <algorithm>
#include <vector>

namespace efxo {

/// A connected component of G1 (the subgraph of 1-edges).
struct OneComponent {
    std::vector<VertexId> vertices; // sorted
    std::vector<EdgeId> edges;      // sorted
    bool cyclic = false;            // edges >= vertices
};

struct OneForest {
    std::vector<OneComponent> components; // ordered by smallest vertex
    std::vector<VertexId> isolated;       // vertices with 1-degree 0, sorted
    std::vector<int> component_of;        // vertex -> component index, -1 for isolated

    bool all_trees() const {
        for (const auto& c : components)
            if (c.cyclic) return false;
        return true;
    }
};

/// A core is a tree none of whose vertices is adjacent to two leaves. True
/// when the instance's 1-edges form a single tree satisfying that, or a
/// single vertex / single edge degenerate case.
inline bool is_core_tree(const Instance& inst, const std::vector<VertexId>& vertices,
                         const std::vector<EdgeId>& edges) {
    if (edges.size() + 1 != vertices.size()) return false;
    for (VertexId v : vertices) {
        int leaf_nbrs = 0;
        for (VertexId w : inst.one_neighbors(v))
            if (inst.one_degree(w) == 1) ++leaf_nbrs;
        if (leaf_nbrs >= 2) return false;
    }
    return true;
}

/// Partitions the vertices touched by 1-edges into components, each tagged
/// tree-or-cyclic; vertices with no 1-edge are listed separately.
inline OneForest one_forest(const Instance& inst) {
    OneForest f;
    f.component_of.assign(inst.n(), -1);
    for (VertexId start = 0; start < inst.n(); ++start) {
        if (f.component_of[start] != -1) continue;
        if (inst.one_degree(start) == 0) {
            f.isolated.push_back(start);
            continue;
        }
        OneComponent comp;
        std::vector<VertexId> stack{start};
        f.component_of[start] = static_cast<int>(f.components.size());
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.vertices.push_back(v);
            for (auto [w, e] : inst.adj(v)) {
                if (!is_one(inst.edge(e).w)) continue;
                comp.edges.push_back(e);
                if (f.component_of[w] == -1) {
                    f.component_of[w] = f.component_of[v];
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        std::sort(comp.edges.begin(), comp.edges.end());
        comp.edges.erase(std::unique(comp.edges.begin(), comp.edges.end()), comp.edges.end());
        comp.cyclic = comp.edges.size() >= comp.vertices.size();
        f.components.push_back(std::move(comp));
    }
    return f;
}

} // namespace efxo
