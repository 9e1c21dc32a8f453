//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "efxo/instance.hpp"
#include "efxo/one_forest.hpp"
#include "efxo/orientation.hpp"
#include "efxo/rooting.hpp"
#include "efxo/verify.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace efxo {

/// One reversible reduction step. Vertex ids are stable across steps: removed
/// vertices simply lose all their edges, and gadget vertices are appended at
/// the end. `removed`/`added` fully determine the forward rewrite; the
/// remaining fields drive the solution lift.
struct TraceStep {
    enum class Kind { DropIsolated, DropCyclicComponent, ZeroDegreeTree, LeafMerge };
    Kind kind;

    std::vector<Edge> removed;
    std::vector<Edge> added;
    int new_vertices = 0; // appended ids [n_before, n_before + new_vertices)

    // DropIsolated
    VertexId vertex = -1;

    // DropCyclicComponent
    std::vector<VertexId> component;
    std::vector<VertexId> cycle; // in cycle order

    // ZeroDegreeTree
    VertexId center = -1; // u
    VertexId apex = -1;   // u'
    std::vector<VertexId> zero_nbrs;

    // LeafMerge
    VertexId kept = -1;         // u, absorbs the removed leaf
    VertexId removed_leaf = -1; // v
    VertexId parent = -1;       // p, shared 1-neighbor
    VertexId sibling = -1;      // q, reconnection target for a uv 0-edge
    bool had_uv = false;
};

struct ReductionTrace {
    std::vector<TraceStep> steps;
    bool empty() const { return steps.empty(); }
    void append(ReductionTrace other) {
        for (auto& s : other.steps) steps.push_back(std::move(s));
    }
};

namespace detail {

inline std::vector<Edge> edges_without(const Instance& inst, const std::vector<Edge>& removed) {
    std::set<std::pair<VertexId, VertexId>> gone;
    for (const auto& e : removed) gone.insert({e.u, e.v});
    std::vector<Edge> out;
    for (const auto& e : inst.edges())
        if (!gone.count({e.u, e.v})) out.push_back(e);
    return out;
}

inline void require_binary(const Instance& inst, const char* op) {
    if (!inst.is_binary()) throw std::runtime_error(std::string(op) + ": instance must be binary");
}

} // namespace detail

/// Replays one step forward.
inline Instance apply_step(const Instance& inst, const TraceStep& s) {
    auto edges = detail::edges_without(inst, s.removed);
    for (const auto& e : s.added) edges.push_back(e);
    return Instance::create(inst.n() + s.new_vertices, std::move(edges));
}

/// Undoes one step: drops what it added, restores what it removed.
inline Instance undo_step(const Instance& inst, const TraceStep& s) {
    auto edges = detail::edges_without(inst, s.added);
    for (const auto& e : s.removed) edges.push_back(e);
    return Instance::create(inst.n() - s.new_vertices, std::move(edges));
}

inline Instance replay(const Instance& inst, const ReductionTrace& trace) {
    Instance cur = inst;
    for (const auto& s : trace.steps) cur = apply_step(cur, s);
    return cur;
}

// ---------------------------------------------------------------------------
// Basic reductions: drop 1-isolated vertices and cyclic 1-components.
// ---------------------------------------------------------------------------

inline std::pair<Instance, ReductionTrace> preprocess_basic(const Instance& inst) {
    detail::require_binary(inst, "preprocess_basic");
    Instance cur = inst;
    ReductionTrace trace;
    for (;;) {
        // Vertices whose 1-degree is 0 lose all their (0-valued) edges.
        VertexId isolated = -1;
        for (VertexId v = 0; v < cur.n(); ++v)
            if (cur.degree(v) > 0 && cur.one_degree(v) == 0) {
                isolated = v;
                break;
            }
        if (isolated != -1) {
            TraceStep s;
            s.kind = TraceStep::Kind::DropIsolated;
            s.vertex = isolated;
            for (auto [w, e] : cur.adj(isolated)) {
                (void)w;
                s.removed.push_back(cur.edge(e));
            }
            cur = apply_step(cur, s);
            trace.steps.push_back(std::move(s));
            continue;
        }

        // Cyclic 1-components disappear entirely, with every incident edge.
        auto forest = one_forest(cur);
        const OneComponent* cyc = nullptr;
        for (const auto& c : forest.components)
            if (c.cyclic) {
                cyc = &c;
                break;
            }
        if (!cyc) break;

        TraceStep s;
        s.kind = TraceStep::Kind::DropCyclicComponent;
        s.component = cyc->vertices;
        s.cycle = [&] {
            // DFS over the component's 1-edges; first back edge closes a cycle.
            std::map<VertexId, VertexId> parent;
            std::vector<VertexId> stack{cyc->vertices.front()};
            parent[stack.front()] = -1;
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                for (auto [w, e] : cur.adj(v)) {
                    if (!is_one(cur.edge(e).w)) continue;
                    if (!parent.count(w)) {
                        parent[w] = v;
                        stack.push_back(w);
                    } else if (w != parent[v]) {
                        // Walk both endpoints up to their common ancestor.
                        std::vector<VertexId> pv{v}, pw{w};
                        std::set<VertexId> on_pv{v};
                        for (VertexId x = v; parent[x] != -1; x = parent[x]) {
                            pv.push_back(parent[x]);
                            on_pv.insert(parent[x]);
                        }
                        while (!on_pv.count(pw.back())) pw.push_back(parent[pw.back()]);
                        std::vector<VertexId> cycle;
                        for (VertexId x : pv) {
                            cycle.push_back(x);
                            if (x == pw.back()) break;
                        }
                        for (size_t i = pw.size() - 1; i-- > 0;) cycle.push_back(pw[i]);
                        return cycle;
                    }
                }
            }
            throw std::runtime_error("cyclic component without a cycle");
        }();
        std::set<VertexId> in_comp(cyc->vertices.begin(), cyc->vertices.end());
        std::set<std::pair<VertexId, VertexId>> seen;
        for (VertexId v : cyc->vertices)
            for (auto [w, e] : cur.adj(v)) {
                (void)w;
                const Edge& ed = cur.edge(e);
                if (seen.insert({ed.u, ed.v}).second) s.removed.push_back(ed);
            }
        cur = apply_step(cur, s);
        trace.steps.push_back(std::move(s));
    }
    return {cur, trace};
}

// ---------------------------------------------------------------------------
// Core procedure: merge twin leaves until no vertex of a >=4-vertex 1-tree is
// adjacent to two leaves.
// ---------------------------------------------------------------------------

inline std::pair<Instance, ReductionTrace> make_cores(const Instance& inst) {
    detail::require_binary(inst, "make_cores");
    if (!one_forest(inst).all_trees())
        throw std::runtime_error("make_cores: cyclic 1-component present, run preprocess_basic first");

    Instance cur = inst;
    ReductionTrace trace;
    for (;;) {
        auto forest = one_forest(cur);
        bool merged = false;
        for (VertexId p = 0; p < cur.n() && !merged; ++p) {
            int comp = forest.component_of[p];
            if (comp == -1 || forest.components[comp].vertices.size() < 4) continue;
            std::vector<VertexId> leaves;
            VertexId q_nonleaf = -1;
            for (VertexId w : cur.one_neighbors(p)) {
                if (cur.one_degree(w) == 1)
                    leaves.push_back(w);
                else if (q_nonleaf == -1)
                    q_nonleaf = w;
            }
            if (leaves.size() < 2) continue;

            // Star case: every 1-neighbor of p is a leaf; the largest leaf is
            // exempted and plays the role of q. A star inside a >=4 tree has
            // at least 3 leaves, so leaves[1] never collides with q.
            VertexId q = q_nonleaf != -1 ? q_nonleaf : leaves.back();
            VertexId u = leaves.front();
            VertexId v = leaves[1];
            if (v == q) continue;

            TraceStep s;
            s.kind = TraceStep::Kind::LeafMerge;
            s.kept = u;
            s.removed_leaf = v;
            s.parent = p;
            s.sibling = q;
            s.removed.push_back(cur.edge(*cur.find_edge(v, p)));
            std::set<std::pair<VertexId, VertexId>> present;
            for (const auto& e : cur.edges()) present.insert({e.u, e.v});
            for (auto [x, e] : cur.adj(v)) {
                if (!is_zero(cur.edge(e).w)) continue;
                s.removed.push_back(cur.edge(e));
                VertexId target = x == u ? q : x;
                if (x == u) s.had_uv = true;
                auto key = std::minmax(u, target);
                if (!present.count({key.first, key.second})) {
                    s.added.push_back({key.first, key.second, Rat(0)});
                    present.insert({key.first, key.second});
                }
            }
            cur = apply_step(cur, s);
            trace.steps.push_back(std::move(s));
            merged = true;
        }
        if (!merged) break;
    }
    return {cur, trace};
}

// ---------------------------------------------------------------------------
// 0-degree reduction: replace a vertex of 0-degree > 1 by a binary-tree
// gadget so that its 0-degree drops to 1.
// ---------------------------------------------------------------------------

inline std::pair<Instance, ReductionTrace> reduce_zero_degrees(const Instance& inst) {
    detail::require_binary(inst, "reduce_zero_degrees");
    Instance cur = inst;
    ReductionTrace trace;
    for (;;) {
        VertexId u = -1;
        for (VertexId v = 0; v < cur.n(); ++v)
            if (cur.zero_degree(v) > 1) {
                u = v;
                break;
            }
        if (u == -1) break;

        TraceStep s;
        s.kind = TraceStep::Kind::ZeroDegreeTree;
        s.center = u;
        s.zero_nbrs = cur.zero_neighbors(u);
        for (VertexId z : s.zero_nbrs) s.removed.push_back(cur.edge(*cur.find_edge(u, z)));

        // Balanced full binary tree over the sorted 0-neighbors. Internal
        // nodes get fresh ids in preorder, the apex u' first; then one fresh
        // vertex per tree edge, in the same preorder.
        int next_id = cur.n();
        std::vector<std::pair<VertexId, VertexId>> tree_edges; // (parent, child) preorder
        auto build = [&](auto&& self, int lo, int hi) -> VertexId {
            if (hi - lo == 1) return s.zero_nbrs[lo];
            VertexId node = next_id++;
            int mid = lo + (hi - lo + 1) / 2;
            size_t slot = tree_edges.size();
            tree_edges.insert(tree_edges.begin() + slot, 2, {node, -1});
            tree_edges[slot].second = self(self, lo, mid);
            tree_edges[slot + 1].second = self(self, mid, hi);
            return node;
        };
        s.apex = build(build, 0, static_cast<int>(s.zero_nbrs.size()));
        for (auto [a, b] : tree_edges) {
            VertexId w = next_id++;
            s.added.push_back({std::min(a, w), std::max(a, w), Rat(1)});
            s.added.push_back({std::min(w, b), std::max(w, b), Rat(0)});
        }
        s.added.push_back({std::min(u, s.apex), std::max(u, s.apex), Rat(0)});
        s.new_vertices = next_id - cur.n();

        cur = apply_step(cur, s);
        trace.steps.push_back(std::move(s));
    }
    return {cur, trace};
}

/// Basic reductions and core merges iterated to a joint fixed point. The
/// 0-degree reduction is not part of this pipeline: it enlarges the instance
/// and is invoked explicitly by generators.
inline std::pair<Instance, ReductionTrace> preprocess_full(const Instance& inst) {
    Instance cur = inst;
    ReductionTrace trace;
    for (;;) {
        auto [after_basic, t1] = preprocess_basic(cur);
        auto [after_cores, t2] = make_cores(after_basic);
        bool changed = !t1.empty() || !t2.empty();
        cur = after_cores;
        trace.append(std::move(t1));
        trace.append(std::move(t2));
        if (!changed) break;
    }
    return {cur, trace};
}

// ---------------------------------------------------------------------------
// Solution lift: given an EFX orientation of the reduced instance, rebuild
// one for the original instance by undoing each step in reverse.
// ---------------------------------------------------------------------------

namespace detail {

inline Orientation lift_one_step(const Instance& prev, const Instance& cur, const TraceStep& s, Orientation o) {
    Orientation out(prev.m());
    auto copy_common = [&] {
        for (EdgeId e = 0; e < prev.m(); ++e) {
            const Edge& ed = prev.edge(e);
            if (auto ce = cur.find_edge(ed.u, ed.v)) out.set_toward(prev, e, o.target(cur, *ce));
        }
    };

    switch (s.kind) {
    case TraceStep::Kind::DropIsolated: {
        copy_common();
        for (const auto& ed : s.removed) out.set_toward(prev, *prev.find_edge(ed.u, ed.v), s.vertex);
        return out;
    }
    case TraceStep::Kind::DropCyclicComponent: {
        copy_common();
        std::set<VertexId> in_comp(s.component.begin(), s.component.end());
        std::set<std::pair<VertexId, VertexId>> done;
        // Cycle edges become a directed cycle.
        for (size_t i = 0; i < s.cycle.size(); ++i) {
            VertexId a = s.cycle[i], b = s.cycle[(i + 1) % s.cycle.size()];
            out.set_toward(prev, *prev.find_edge(a, b), b);
            done.insert(std::minmax(a, b));
        }
        // Remaining component 1-edges: BFS away from the cycle.
        std::set<VertexId> seen(s.cycle.begin(), s.cycle.end());
        std::vector<VertexId> queue(s.cycle.begin(), s.cycle.end());
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            VertexId v = queue[qi];
            for (auto [w, e] : prev.adj(v)) {
                if (!is_one(prev.edge(e).w) || !in_comp.count(w) || seen.count(w)) continue;
                seen.insert(w);
                out.set_toward(prev, e, w);
                done.insert(std::minmax(v, w));
                queue.push_back(w);
            }
        }
        // Whatever is left: leftover 1-edges inside the component and all
        // incident 0-edges. Incident 0-edges point into the component.
        for (const auto& ed : s.removed) {
            auto key = std::minmax(ed.u, ed.v);
            if (done.count({key.first, key.second})) continue;
            EdgeId e = *prev.find_edge(ed.u, ed.v);
            if (in_comp.count(ed.u) && in_comp.count(ed.v))
                out.set_toward(prev, e, std::max(ed.u, ed.v));
            else
                out.set_toward(prev, e, in_comp.count(ed.u) ? ed.u : ed.v);
        }
        return out;
    }
    case TraceStep::Kind::ZeroDegreeTree: {
        // Every restored 0-edge at the center copies the
        // direction of the apex edge. Sound for nice orientations, so
        // nice-ify first.
        Orientation nice = o;
        auto cur_forest = one_forest(cur);
        make_nice(cur, cur_forest, nice);
        bool toward_center = nice.target(cur, *cur.find_edge(s.center, s.apex)) == s.center;
        for (EdgeId e = 0; e < prev.m(); ++e) {
            const Edge& ed = prev.edge(e);
            if (auto ce = cur.find_edge(ed.u, ed.v)) out.set_toward(prev, e, nice.target(cur, *ce));
        }
        for (const auto& ed : s.removed) {
            VertexId other = ed.u == s.center ? ed.v : ed.u;
            out.set_toward(prev, *prev.find_edge(ed.u, ed.v), toward_center ? s.center : other);
        }
        return out;
    }
    case TraceStep::Kind::LeafMerge: {
        // Keep the rooting: the restored leaf hangs off the parent, so its
        // 1-edge always points at it; its 0-edges mirror the kept twin's
        // unless an endpoint is a root neighbor.
        Orientation nice = o;
        auto cur_forest = one_forest(cur);
        Rooting roots = extract_rooting(cur, cur_forest, nice);

        std::vector<char> in_R(prev.n(), 0);
        for (VertexId root : roots.root)
            for (VertexId w : prev.one_neighbors(root)) in_R[w] = 1;

        for (EdgeId e = 0; e < prev.m(); ++e) {
            const Edge& ed = prev.edge(e);
            if (auto ce = cur.find_edge(ed.u, ed.v)) out.set_toward(prev, e, nice.target(cur, *ce));
        }
        for (const auto& ed : s.removed) {
            EdgeId e = *prev.find_edge(ed.u, ed.v);
            VertexId v = s.removed_leaf;
            VertexId x = ed.u == v ? ed.v : ed.u;
            if (x == s.parent && is_one(ed.w)) {
                out.set_toward(prev, e, v); // tree edge, always away from the root
                continue;
            }
            if (x == s.kept) {
                // The uv 0-edge was re-routed to uq; mirror that edge.
                VertexId t = nice.target(cur, *cur.find_edge(s.kept, s.sibling));
                out.set_toward(prev, e, t == s.kept ? s.kept : v);
                continue;
            }
            if (in_R[x]) {
                out.set_toward(prev, e, v);
            } else if (in_R[v]) {
                out.set_toward(prev, e, x);
            } else {
                VertexId t = nice.target(cur, *cur.find_edge(s.kept, x));
                out.set_toward(prev, e, t == x ? x : v);
            }
        }
        return out;
    }
    }
    throw std::runtime_error("unreachable");
}

} // namespace detail

/// Lifts an EFX orientation of the reduced instance back to the original.
/// Throws if `o` does not verify on the reduced instance.
inline Orientation lift_orientation(const Instance& original, const ReductionTrace& trace, const Orientation& o) {
    std::vector<Instance> snaps{original};
    for (const auto& s : trace.steps) snaps.push_back(apply_step(snaps.back(), s));
    if (!is_efx(snaps.back(), o)) throw std::runtime_error("lift: orientation fails verification on reduced instance");
    Orientation cur = o;
    for (size_t k = trace.steps.size(); k-- > 0;)
        cur = detail::lift_one_step(snaps[k], snaps[k + 1], trace.steps[k], cur);
    return cur;
}

// ---------------------------------------------------------------------------
// Trace serialization (one tagged line per step).
// ---------------------------------------------------------------------------

namespace detail {

inline std::string edge_list(const std::vector<Edge>& edges) {
    std::string out;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v) + ":" + format_rat(edges[i].w);
    }
    return out.empty() ? "-" : out;
}

inline std::string vertex_list(const std::vector<VertexId>& vs) {
    std::string out;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    return out.empty() ? "-" : out;
}

} // namespace detail

inline void serialize_trace(const ReductionTrace& trace, std::ostream& out) {
    for (const auto& s : trace.steps) {
        switch (s.kind) {
        case TraceStep::Kind::DropIsolated:
            out << "drop-isolated vertex=" << s.vertex << " removed=" << detail::edge_list(s.removed) << "\n";
            break;
        case TraceStep::Kind::DropCyclicComponent:
            out << "drop-cyclic vertices=" << detail::vertex_list(s.component)
                << " cycle=" << detail::vertex_list(s.cycle) << " removed=" << detail::edge_list(s.removed)
                << "\n";
            break;
        case TraceStep::Kind::ZeroDegreeTree:
            out << "zero-tree center=" << s.center << " apex=" << s.apex
                << " nbrs=" << detail::vertex_list(s.zero_nbrs) << " new=" << s.new_vertices
                << " removed=" << detail::edge_list(s.removed) << " added=" << detail::edge_list(s.added)
                << "\n";
            break;
        case TraceStep::Kind::LeafMerge:
            out << "leaf-merge kept=" << s.kept << " removed-leaf=" << s.removed_leaf << " parent=" << s.parent
                << " sibling=" << s.sibling << " removed=" << detail::edge_list(s.removed)
                << " added=" << detail::edge_list(s.added) << "\n";
            break;
        }
    }
}

inline std::string serialize_trace(const ReductionTrace& trace) {
    std::ostringstream ss;
    serialize_trace(trace, ss);
    return ss.str();
}

} // namespace efxo
