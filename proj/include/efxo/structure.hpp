//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "efxo/instance.hpp"
#include "efxo/one_forest.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <vector>

namespace efxo {

// ---------------------------------------------------------------------------
// Induced matchings on trees.
// ---------------------------------------------------------------------------

namespace detail {

inline void require_one_tree(const Instance& inst, const char* op) {
    if (inst.n() == 1 && inst.m() == 0) return;
    auto f = one_forest(inst);
    if (f.components.size() != 1 || f.components[0].cyclic ||
        f.components[0].vertices.size() != static_cast<size_t>(inst.n()))
        throw std::runtime_error(std::string(op) + ": input must be a single 1-tree");
    for (const auto& e : inst.edges())
        if (!is_one(e.w)) throw std::runtime_error(std::string(op) + ": input must carry only 1-edges");
}

/// Two matching edges are compatible in an induced matching when they share
/// no endpoint and no graph edge joins them.
inline bool im_compatible(const Instance& g, EdgeId a, EdgeId b) {
    const Edge& ea = g.edge(a);
    const Edge& eb = g.edge(b);
    std::array<VertexId, 2> xs{ea.u, ea.v}, ys{eb.u, eb.v};
    for (VertexId x : xs)
        for (VertexId y : ys)
            if (x == y || g.find_edge(x, y)) return false;
    return true;
}

} // namespace detail

/// Exhaustive maximum induced matching; ties resolved toward the
/// lexicographically smallest edge-id set (include-first recursion).
inline std::pair<int, std::vector<EdgeId>> max_induced_matching_bf(const Instance& tree, int edge_cap = 16) {
    detail::require_one_tree(tree, "max_induced_matching_bf");
    if (tree.m() > edge_cap) throw std::runtime_error("max_induced_matching_bf: edge cap exceeded");
    std::vector<EdgeId> cur, best;
    auto rec = [&](auto&& self, EdgeId e) -> void {
        if (cur.size() + (tree.m() - e) <= best.size()) return; // cannot beat best
        if (e == tree.m()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        bool ok = true;
        for (EdgeId f : cur)
            if (!detail::im_compatible(tree, f, e)) {
                ok = false;
                break;
            }
        if (ok) {
            cur.push_back(e);
            self(self, e + 1);
            cur.pop_back();
        }
        self(self, e + 1);
    };
    rec(rec, 0);
    return {static_cast<int>(best.size()), best};
}

struct LeafedMatching {
    bool feasible = false;
    int size = 0;
    std::vector<EdgeId> matching; // sorted edge ids
};

/// Maximum induced matching that saturates every leaf in `required`, by the
/// three-state dynamic program D(t, no|bot|top) rooted at the smallest
/// non-leaf. Returns INFEASIBLE when two required leaves sit at distance
/// less than 4 (no such matching can exist). Linear time in the tree size.
inline LeafedMatching leafed_mim_dp(const Instance& tree, const std::vector<VertexId>& required) {
    detail::require_one_tree(tree, "leafed_mim_dp");
    for (VertexId v : required)
        if (v < 0 || v >= tree.n() || tree.degree(v) != 1)
            throw std::runtime_error("leafed_mim_dp: required vertex is not a leaf");

    // Distance guard between required leaves.
    for (size_t i = 0; i < required.size(); ++i) {
        std::vector<int> dist(tree.n(), -1);
        dist[required[i]] = 0;
        std::vector<VertexId> queue{required[i]};
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (auto [w, e] : tree.adj(queue[qi])) {
                (void)e;
                if (dist[w] == -1) {
                    dist[w] = dist[queue[qi]] + 1;
                    queue.push_back(w);
                }
            }
        for (size_t j = i + 1; j < required.size(); ++j)
            if (dist[required[j]] < 4) return {};
    }

    if (tree.n() == 1) return {true, 0, {}};
    if (tree.n() == 2) return {true, 1, {0}};

    std::vector<char> in_L(tree.n(), 0);
    for (VertexId v : required) in_L[v] = 1;

    VertexId root = -1;
    for (VertexId v = 0; v < tree.n() && root == -1; ++v)
        if (tree.degree(v) >= 2) root = v;

    // Rooted structure in DFS postorder.
    std::vector<VertexId> order, parent(tree.n(), -1);
    std::vector<std::vector<VertexId>> children(tree.n());
    {
        std::vector<VertexId> stack{root};
        std::vector<char> seen(tree.n(), 0);
        seen[root] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (auto [w, e] : tree.adj(v)) {
                (void)e;
                if (seen[w]) continue;
                seen[w] = 1;
                parent[w] = v;
                children[v].push_back(w);
                stack.push_back(w);
            }
        }
        std::reverse(order.begin(), order.end()); // children before parents
    }

    constexpr long long NEG = std::numeric_limits<long long>::min() / 4;
    enum { NO = 0, BOT = 1, TOP = 2 };
    std::vector<std::array<long long, 3>> dp(tree.n());
    // Back-pointers: for NO, per-child pick (NO or TOP); for TOP, which child
    // is the BOT partner.
    std::vector<std::vector<char>> pick_no(tree.n());
    std::vector<int> top_child(tree.n(), -1);

    auto add = [&](long long a, long long b) { return a <= NEG || b <= NEG ? NEG : a + b; };

    for (VertexId t : order) {
        if (children[t].empty()) {
            dp[t][BOT] = 1;
            dp[t][TOP] = NEG;
            dp[t][NO] = in_L[t] ? NEG : 0;
            continue;
        }
        long long sum_no = 0, sum_best = 0;
        pick_no[t].resize(children[t].size());
        for (size_t j = 0; j < children[t].size(); ++j) {
            VertexId c = children[t][j];
            sum_no = add(sum_no, dp[c][NO]);
            long long best = std::max(dp[c][NO], dp[c][TOP]);
            pick_no[t][j] = dp[c][TOP] > dp[c][NO] ? TOP : NO;
            sum_best = add(sum_best, best);
        }
        dp[t][NO] = sum_best;
        dp[t][BOT] = add(1, sum_no);
        dp[t][TOP] = NEG;
        for (size_t j = 0; j < children[t].size(); ++j) {
            VertexId c = children[t][j];
            if (dp[c][BOT] <= NEG) continue;
            // bot for child j, no for the rest
            long long rest = 0;
            for (size_t j2 = 0; j2 < children[t].size(); ++j2)
                if (j2 != j) rest = add(rest, dp[children[t][j2]][NO]);
            long long val = add(dp[c][BOT], rest);
            if (val > dp[t][TOP]) {
                dp[t][TOP] = val;
                top_child[t] = static_cast<int>(j);
            }
        }
    }

    long long best = std::max(dp[root][NO], dp[root][TOP]);
    if (best <= NEG) return {};

    LeafedMatching out;
    out.feasible = true;
    out.size = static_cast<int>(best);
    // Reconstruct.
    std::vector<std::pair<VertexId, char>> stack{{root, dp[root][TOP] > dp[root][NO] ? char(TOP) : char(NO)}};
    while (!stack.empty()) {
        auto [t, state] = stack.back();
        stack.pop_back();
        if (state == BOT) {
            out.matching.push_back(*tree.find_edge(parent[t], t));
            for (VertexId c : children[t]) stack.push_back({c, NO});
        } else if (state == TOP) {
            for (size_t j = 0; j < children[t].size(); ++j)
                stack.push_back({children[t][j], static_cast<int>(j) == top_child[t] ? char(BOT) : char(NO)});
        } else {
            for (size_t j = 0; j < children[t].size(); ++j) stack.push_back({children[t][j], pick_no[t][j]});
        }
    }
    std::sort(out.matching.begin(), out.matching.end());
    if (static_cast<int>(out.matching.size()) != out.size)
        throw std::runtime_error("leafed_mim_dp: reconstruction mismatch");
    return out;
}

// ---------------------------------------------------------------------------
// Split orientations and the product-graph bijection.
// ---------------------------------------------------------------------------

struct Arc {
    VertexId tail, head;
    bool operator==(const Arc& o) const { return tail == o.tail && head == o.head; }
};

struct SplitOrientation {
    std::vector<Arc> arcs;
    bool leafed = false;
};

/// Split property: every arc is an edge, and for any two arcs (u,v), (x,y)
/// neither u-y nor x-v is an edge.
inline bool is_split_orientation(const Instance& g, const std::vector<Arc>& arcs) {
    for (const Arc& a : arcs)
        if (!g.find_edge(a.tail, a.head)) return false;
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = 0; j < arcs.size(); ++j) {
            if (i == j) continue;
            if (arcs[i].tail != arcs[j].head && g.find_edge(arcs[i].tail, arcs[j].head)) return false;
        }
    return true;
}

inline bool is_leafed_split_orientation(const Instance& tree, const std::vector<Arc>& arcs) {
    if (!is_split_orientation(tree, arcs)) return false;
    for (VertexId v = 0; v < tree.n(); ++v) {
        if (tree.degree(v) != 1) continue;
        VertexId nb = tree.adj(v)[0].first;
        if (std::find(arcs.begin(), arcs.end(), Arc{v, nb}) == arcs.end()) return false;
    }
    return true;
}

/// Direct product with a single edge: vertices (v,0) = v and (v,1) = v+n,
/// edges u0-v1 and u1-v0 for every edge uv. For a tree the result is two
/// disjoint copies split by distance parity.
inline Instance product_with_edge(const Instance& g) {
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        edges.push_back({e.u, e.v + g.n(), Rat(1)});
        edges.push_back({e.v, e.u + g.n(), Rat(1)});
    }
    return Instance::create(2 * g.n(), std::move(edges));
}

namespace detail {

inline bool is_induced_matching(const Instance& g, const std::vector<EdgeId>& edges) {
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j)
            if (!im_compatible(g, edges[i], edges[j])) return false;
    return true;
}

} // namespace detail

/// The bijection f(u0 v1) = (u,v) from induced matchings of g x e to split
/// orientations of g.
inline SplitOrientation matching_to_split_orientation(const Instance& g, const Instance& product,
                                                      const std::vector<EdgeId>& matching) {
    if (!detail::is_induced_matching(product, matching))
        throw std::runtime_error("matching_to_split_orientation: input is not an induced matching");
    SplitOrientation so;
    for (EdgeId e : matching) {
        const Edge& ed = product.edge(e);
        VertexId lo = std::min(ed.u, ed.v), hi = std::max(ed.u, ed.v);
        if (lo >= g.n() || hi < g.n())
            throw std::runtime_error("matching_to_split_orientation: edge not in the product graph");
        so.arcs.push_back({lo, hi - g.n()});
    }
    so.leafed = is_leafed_split_orientation(g, so.arcs);
    return so;
}

/// Inverse of the bijection: arcs back to product edges.
inline std::vector<EdgeId> split_orientation_to_matching(const Instance& g, const Instance& product,
                                                         const SplitOrientation& so) {
    if (!is_split_orientation(g, so.arcs))
        throw std::runtime_error("split_orientation_to_matching: input violates the split property");
    std::vector<EdgeId> out;
    for (const Arc& a : so.arcs) out.push_back(*product.find_edge(a.tail, a.head + g.n()));
    std::sort(out.begin(), out.end());
    return out;
}

/// Canonical arc order: leaf arcs first (ascending tail), then the rest
/// ascending by (tail, head).
inline void canonicalize_arcs(const Instance& tree, std::vector<Arc>& arcs) {
    auto is_leaf_arc = [&](const Arc& a) { return tree.degree(a.tail) == 1; };
    std::sort(arcs.begin(), arcs.end(), [&](const Arc& a, const Arc& b) {
        bool la = is_leaf_arc(a), lb = is_leaf_arc(b);
        if (la != lb) return la;
        return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
    });
}

/// Maximum leafed split orientation of a core: split the leaves by distance
/// parity, compute the two leafed matchings, and push them through the copy
/// maps and the bijection. Linear time.
inline SplitOrientation max_leafed_split_orientation(const Instance& core) {
    detail::require_one_tree(core, "max_leafed_split_orientation");
    auto f = one_forest(core);
    if (core.n() >= 2 &&
        !is_core_tree(core, f.components[0].vertices, f.components[0].edges))
        throw std::runtime_error("max_leafed_split_orientation: input is not a core");

    SplitOrientation so;
    so.leafed = true;
    if (core.n() == 1) return so;
    if (core.n() == 2) {
        so.arcs = {{0, 1}, {1, 0}};
        return so;
    }

    VertexId r = -1;
    for (VertexId v = 0; v < core.n() && r == -1; ++v)
        if (core.degree(v) >= 2) r = v;
    std::vector<int> dist(core.n(), -1);
    dist[r] = 0;
    std::vector<VertexId> queue{r};
    for (size_t qi = 0; qi < queue.size(); ++qi)
        for (auto [w, e] : core.adj(queue[qi])) {
            (void)e;
            if (dist[w] == -1) {
                dist[w] = dist[queue[qi]] + 1;
                queue.push_back(w);
            }
        }

    std::vector<VertexId> L1, L2;
    for (VertexId v = 0; v < core.n(); ++v)
        if (core.degree(v) == 1) (dist[v] % 2 == 0 ? L1 : L2).push_back(v);

    auto R1 = leafed_mim_dp(core, L1);
    auto R2 = leafed_mim_dp(core, L2);
    if (!R1.feasible || !R2.feasible)
        throw std::runtime_error("max_leafed_split_orientation: leafed matchings infeasible on a core");

    // Copy-0 matching edges become arcs rooted at the even endpoint, copy-1
    // ones at the odd endpoint.
    for (EdgeId e : R1.matching) {
        const Edge& ed = core.edge(e);
        so.arcs.push_back(dist[ed.u] % 2 == 0 ? Arc{ed.u, ed.v} : Arc{ed.v, ed.u});
    }
    for (EdgeId e : R2.matching) {
        const Edge& ed = core.edge(e);
        so.arcs.push_back(dist[ed.u] % 2 == 1 ? Arc{ed.u, ed.v} : Arc{ed.v, ed.u});
    }
    canonicalize_arcs(core, so.arcs);
    if (!is_leafed_split_orientation(core, so.arcs))
        throw std::runtime_error("max_leafed_split_orientation: construction failed validation");
    return so;
}

// ---------------------------------------------------------------------------
// The root-fixing 0-edge gadget over a core.
// ---------------------------------------------------------------------------

struct CoreGadget {
    std::vector<std::pair<VertexId, VertexId>> zero_edges;
    std::vector<VertexId> roots;    // arc tails, canonical order
    std::vector<VertexId> privates; // matching arc heads
};

/// Takes the first k arcs of the maximum leafed split orientation as roots
/// with private neighbors, then blocks every non-root u by a 0-edge between
/// two of u's neighbors (the smallest-id pair). In the augmented core the
/// feasible roots are exactly the returned ones.
inline CoreGadget gadgetize_core(const Instance& core, int k) {
    auto so = max_leafed_split_orientation(core);
    if (static_cast<int>(so.arcs.size()) < k)
        throw std::runtime_error("gadgetize_core: split orientation smaller than k");
    CoreGadget g;
    std::vector<char> is_root(core.n(), 0);
    for (int i = 0; i < k; ++i) {
        g.roots.push_back(so.arcs[i].tail);
        g.privates.push_back(so.arcs[i].head);
        is_root[so.arcs[i].tail] = 1;
    }
    for (VertexId u = 0; u < core.n(); ++u) {
        if (is_root[u]) continue;
        if (core.degree(u) < 2)
            throw std::runtime_error("gadgetize_core: non-root leaf (k smaller than the leaf count)");
        g.zero_edges.push_back({core.adj(u)[0].first, core.adj(u)[1].first});
    }
    return g;
}

inline Instance augment_core(const Instance& core, const CoreGadget& g) {
    std::vector<Edge> edges = core.edges();
    for (auto [u, v] : g.zero_edges) edges.push_back({std::min(u, v), std::max(u, v), Rat(0)});
    return Instance::create(core.n(), std::move(edges));
}

} // namespace efxo
