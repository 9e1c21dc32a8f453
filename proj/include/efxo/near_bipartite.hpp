//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "efxo/instance.hpp"
#include "efxo/orientation.hpp"
#include "efxo/verify.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace efxo {

struct UncutClassification {
    enum class Kind { Bipartite, OneEdge, MoreThanOne } kind = Kind::Bipartite;
    std::vector<char> side; // 2-coloring of G (Bipartite) / of G-e (OneEdge)
    EdgeId edge = -1;       // OneEdge: smallest edge whose removal bipartitions G
};

namespace detail {

/// 2-colors the whole graph, each component BFS'd from its smallest vertex
/// with color 0. On failure reports an odd cycle (as a vertex sequence) built
/// from the BFS tree. `skip` excludes one edge.
inline std::optional<std::vector<char>> try_bipartition(const Instance& inst, EdgeId skip,
                                                        std::vector<VertexId>* odd_cycle) {
    std::vector<char> color(inst.n(), -1);
    std::vector<VertexId> parent(inst.n(), -1);
    for (VertexId s = 0; s < inst.n(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<VertexId> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            VertexId v = queue[qi];
            for (auto [w, e] : inst.adj(v)) {
                if (e == skip) continue;
                if (color[w] == -1) {
                    color[w] = static_cast<char>(1 - color[v]);
                    parent[w] = v;
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    if (odd_cycle) {
                        // Join the two tree paths at their common ancestor.
                        std::vector<VertexId> pv{v}, pw{w};
                        std::vector<char> on_pv(inst.n(), 0);
                        on_pv[v] = 1;
                        for (VertexId x = v; parent[x] != -1; x = parent[x]) {
                            pv.push_back(parent[x]);
                            on_pv[parent[x]] = 1;
                        }
                        while (!on_pv[pw.back()]) pw.push_back(parent[pw.back()]);
                        odd_cycle->clear();
                        for (VertexId x : pv) {
                            odd_cycle->push_back(x);
                            if (x == pw.back()) break;
                        }
                        for (size_t i = pw.size() - 1; i-- > 0;) odd_cycle->push_back(pw[i]);
                    }
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

} // namespace detail

/// Bipartite test; on failure, tries removing each edge of the discovered odd
/// cycle (only those can help) and reports the smallest edge that works.
inline UncutClassification detect_min_uncut_le1(const Instance& inst) {
    std::vector<VertexId> cycle;
    if (auto side = detail::try_bipartition(inst, -1, &cycle))
        return {UncutClassification::Kind::Bipartite, std::move(*side), -1};

    EdgeId best = -1;
    std::vector<char> best_side;
    for (size_t i = 0; i < cycle.size(); ++i) {
        EdgeId e = *inst.find_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
        if (best != -1 && e >= best) continue;
        if (auto side = detail::try_bipartition(inst, e, nullptr)) {
            best = e;
            best_side = std::move(*side);
        }
    }
    if (best == -1) return {UncutClassification::Kind::MoreThanOne, {}, -1};
    return {UncutClassification::Kind::OneEdge, std::move(best_side), best};
}

/// Given e with G-e bipartite and both endpoints on one side, splits V into
/// (A, B): the endpoints' side becomes A when w(e)=1 and B when w(e)=0.
inline std::pair<std::vector<VertexId>, std::vector<VertexId>> derive_ab_partition(const Instance& inst,
                                                                                   EdgeId e) {
    if (detail::try_bipartition(inst, -1, nullptr))
        throw std::runtime_error("derive_ab_partition: instance is already bipartite");
    auto side = detail::try_bipartition(inst, e, nullptr);
    if (!side) throw std::runtime_error("derive_ab_partition: removing e does not make the graph bipartite");
    const Edge& ed = inst.edge(e);
    if ((*side)[ed.u] != (*side)[ed.v])
        throw std::runtime_error("derive_ab_partition: edge endpoints on different sides");
    if (!is_zero(ed.w) && !is_one(ed.w))
        throw std::runtime_error("derive_ab_partition: uncut edge must be 0- or 1-valued");
    char x = (*side)[ed.u];
    char a_color = is_one(ed.w) ? x : static_cast<char>(1 - x);
    std::pair<std::vector<VertexId>, std::vector<VertexId>> out;
    for (VertexId v = 0; v < inst.n(); ++v)
        ((*side)[v] == a_color ? out.first : out.second).push_back(v);
    return out;
}

/// Constructive solver for instances split into A (1-edges only, at most one
/// cycle per component) and B (0-edges only). Step 1 orients the
/// A-components, step 2 pulls one 1-edge from B onto each tree root, step 3
/// orients the rest toward B (toward the larger id inside B).
inline Orientation solve_near_bipartite(const Instance& inst, const std::vector<VertexId>& A,
                                        const std::vector<VertexId>& B) {
    std::vector<char> in_A(inst.n(), -1);
    for (VertexId v : A) in_A[v] = 1;
    for (VertexId v : B) {
        if (in_A[v] != -1) throw std::runtime_error("solve_near_bipartite: A and B overlap");
        in_A[v] = 0;
    }
    for (VertexId v = 0; v < inst.n(); ++v)
        if (in_A[v] == -1) throw std::runtime_error("solve_near_bipartite: A and B do not cover V");
    for (EdgeId e = 0; e < inst.m(); ++e) {
        const Edge& ed = inst.edge(e);
        if (in_A[ed.u] && in_A[ed.v] && !is_one(ed.w))
            throw std::runtime_error("solve_near_bipartite: G[A] must contain only 1-edges");
        if (!in_A[ed.u] && !in_A[ed.v] && !is_zero(ed.w))
            throw std::runtime_error("solve_near_bipartite: G[B] must contain only 0-edges");
    }

    Orientation o(inst.m());
    std::vector<char> seen(inst.n(), 0);
    std::vector<VertexId> roots;
    for (VertexId s : A) {
        if (seen[s]) continue;
        // Collect the component of G[A] containing s.
        std::vector<VertexId> comp{s};
        seen[s] = 1;
        size_t edge_count = 0;
        for (size_t qi = 0; qi < comp.size(); ++qi)
            for (auto [w, e] : inst.adj(comp[qi])) {
                (void)e;
                if (!in_A[w]) continue;
                ++edge_count;
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        edge_count /= 2;
        if (edge_count >= comp.size() + 1)
            throw std::runtime_error("solve_near_bipartite: an A-component has more than one cycle");

        if (edge_count == comp.size()) {
            // Unicyclic: direct the unique cycle, then orient outward.
            std::sort(comp.begin(), comp.end());
            std::vector<VertexId> parent(inst.n(), -2);
            std::vector<VertexId> cycle;
            std::vector<VertexId> stack{comp.front()};
            parent[comp.front()] = -1;
            bool found = false;
            while (!stack.empty() && !found) {
                VertexId v = stack.back();
                stack.pop_back();
                for (auto [w, e] : inst.adj(v)) {
                    (void)e;
                    if (!in_A[w]) continue;
                    if (parent[w] == -2) {
                        parent[w] = v;
                        stack.push_back(w);
                    } else if (w != parent[v]) {
                        std::vector<VertexId> pv{v}, pw{w};
                        std::vector<char> on_pv(inst.n(), 0);
                        on_pv[v] = 1;
                        for (VertexId x = v; parent[x] != -1; x = parent[x]) {
                            pv.push_back(parent[x]);
                            on_pv[parent[x]] = 1;
                        }
                        while (!on_pv[pw.back()]) pw.push_back(parent[pw.back()]);
                        for (VertexId x : pv) {
                            cycle.push_back(x);
                            if (x == pw.back()) break;
                        }
                        for (size_t i = pw.size() - 1; i-- > 0;) cycle.push_back(pw[i]);
                        found = true;
                        break;
                    }
                }
            }
            for (size_t i = 0; i < cycle.size(); ++i)
                o.set_toward(inst, *inst.find_edge(cycle[i], cycle[(i + 1) % cycle.size()]), cycle[(i + 1) % cycle.size()]);
            std::vector<char> done(inst.n(), 0);
            for (VertexId v : cycle) done[v] = 1;
            std::vector<VertexId> queue = cycle;
            for (size_t qi = 0; qi < queue.size(); ++qi)
                for (auto [w, e] : inst.adj(queue[qi])) {
                    if (!in_A[w] || done[w]) continue;
                    done[w] = 1;
                    o.set_toward(inst, e, w);
                    queue.push_back(w);
                }
        } else {
            // Tree: orient away from the smallest vertex, which becomes a root.
            VertexId root = *std::min_element(comp.begin(), comp.end());
            roots.push_back(root);
            std::vector<char> done(inst.n(), 0);
            done[root] = 1;
            std::vector<VertexId> queue{root};
            for (size_t qi = 0; qi < queue.size(); ++qi)
                for (auto [w, e] : inst.adj(queue[qi])) {
                    if (!in_A[w] || done[w]) continue;
                    done[w] = 1;
                    o.set_toward(inst, e, w);
                    queue.push_back(w);
                }
        }
    }

    // Step 2: each tree root pulls one 1-edge from B, when one exists.
    std::vector<char> pulled(inst.m(), 0);
    std::sort(roots.begin(), roots.end());
    for (VertexId u : roots)
        for (auto [w, e] : inst.adj(u)) {
            if (in_A[w] || !is_one(inst.edge(e).w)) continue;
            o.set_toward(inst, e, u);
            pulled[e] = 1;
            break;
        }

    // Step 3: everything else heads into B.
    for (EdgeId e = 0; e < inst.m(); ++e) {
        const Edge& ed = inst.edge(e);
        if (in_A[ed.u] && in_A[ed.v]) continue;
        if (pulled[e]) continue;
        if (!in_A[ed.u] && !in_A[ed.v])
            o.set_toward(inst, e, std::max(ed.u, ed.v));
        else
            o.set_toward(inst, e, in_A[ed.u] ? ed.v : ed.u);
    }

    if (!verify_efx(inst, o).ok)
        throw std::runtime_error("solve_near_bipartite: construction failed verification");
    return o;
}

} // namespace efxo
