//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "efxo/instance.hpp"
#include "efxo/one_forest.hpp"
#include "efxo/rng.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace efxo {

/// m distinct random edges on n vertices, each valued 1 with probability
/// p1_num/p1_den and 0 otherwise. Reproducible from the seed.
inline Instance gen_uniform(int n, int m, std::uint64_t seed, std::uint64_t p1_num = 1,
                            std::uint64_t p1_den = 2) {
    if (n < 0 || m < 0 || static_cast<long long>(m) > static_cast<long long>(n) * (n - 1) / 2)
        throw std::runtime_error("gen_uniform: impossible parameter combination");
    Rng rng(seed);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
    rng.shuffle(pairs);
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) edges.push_back({pairs[i].first, pairs[i].second, Rat(rng.chance(p1_num, p1_den) ? 1 : 0)});
    return Instance::create(n, std::move(edges));
}

/// Random graph with min-uncut number exactly `count`, by construction:
/// `count` vertex-disjoint triangles (edge-disjoint odd cycles force >= count
/// removals) on top of an otherwise bipartite graph (removing each
/// triangle's inner edge restores bipartiteness). Values are random binary.
inline Instance gen_bipartite_plus_edges(int n, int m, int count, std::uint64_t seed,
                                         std::uint64_t p1_num = 1, std::uint64_t p1_den = 2) {
    if (n < 0 || m < 0 || count < 0 || n < 3 * count || m < 3 * count)
        throw std::runtime_error("gen_bipartite_plus_edges: impossible parameter combination");
    Rng rng(seed);
    // Triangle t uses vertices 3t, 3t+1 (left side) and 3t+2 (right side).
    // Remaining vertices split evenly between the sides (random membership)
    // so cross-edge slots are always plentiful.
    std::vector<char> side(n, 0);
    for (int t = 0; t < count; ++t) side[3 * t + 2] = 1;
    std::vector<VertexId> rest;
    for (VertexId v = 3 * count; v < n; ++v) rest.push_back(v);
    rng.shuffle(rest);
    for (size_t i = 0; i < rest.size(); ++i) side[rest[i]] = static_cast<char>(i % 2);

    std::vector<Edge> edges;
    auto value = [&] { return Rat(rng.chance(p1_num, p1_den) ? 1 : 0); };
    for (int t = 0; t < count; ++t) {
        edges.push_back({3 * t, 3 * t + 2, value()});
        edges.push_back({3 * t + 1, 3 * t + 2, value()});
        edges.push_back({3 * t, 3 * t + 1, value()}); // the uncut edge
    }
    std::vector<std::pair<VertexId, VertexId>> cross;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            if (side[u] == side[v]) continue;
            bool used = false;
            for (const auto& e : edges) used |= (e.u == u && e.v == v);
            if (!used) cross.push_back({u, v});
        }
    int extra = m - 3 * count;
    if (extra > static_cast<int>(cross.size()))
        throw std::runtime_error("gen_bipartite_plus_edges: not enough bipartite slots for m edges");
    rng.shuffle(cross);
    for (int i = 0; i < extra; ++i) edges.push_back({cross[i].first, cross[i].second, value()});
    return Instance::create(n, std::move(edges));
}

/// Random labeled tree via a Prüfer sequence; all edges valued 1.
inline Instance gen_tree(int size, std::uint64_t seed) {
    if (size <= 0) throw std::runtime_error("gen_tree: size must be positive");
    if (size == 1) return Instance::create(1, {});
    if (size == 2) return Instance::create(2, {{0, 1, Rat(1)}});
    Rng rng(seed);
    std::vector<int> prufer(size - 2);
    for (auto& x : prufer) x = static_cast<int>(rng.below(size));
    std::vector<int> deg(size, 1);
    for (int x : prufer) ++deg[x];
    std::vector<Edge> edges;
    std::vector<char> used(size, 0);
    for (int x : prufer) {
        for (VertexId leaf = 0; leaf < size; ++leaf) {
            if (deg[leaf] == 1 && !used[leaf]) {
                edges.push_back({std::min(leaf, x), std::max(leaf, x), Rat(1)});
                used[leaf] = 1;
                --deg[x];
                break;
            }
        }
    }
    std::vector<VertexId> last;
    for (VertexId v = 0; v < size; ++v)
        if (deg[v] == 1 && !used[v]) last.push_back(v);
    edges.push_back({last[0], last[1], Rat(1)});
    return Instance::create(size, std::move(edges));
}

/// Random tree core of the given size (rejection sampling). Size 3 is
/// impossible: the only 3-vertex tree has a vertex adjacent to two leaves.
inline Instance gen_tree_core(int size, std::uint64_t seed, int max_attempts = 100000) {
    if (size == 3) throw std::runtime_error("gen_tree_core: no 3-vertex tree is a core");
    if (size <= 0) throw std::runtime_error("gen_tree_core: size must be positive");
    Rng rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Instance t = gen_tree(size, rng.next());
        auto f = one_forest(t);
        if (size == 1 || (f.components.size() == 1 &&
                          is_core_tree(t, f.components[0].vertices, f.components[0].edges)))
            return t;
    }
    throw std::runtime_error("gen_tree_core: rejection sampling failed");
}

/// Path on 3k-1 vertices with pendant leaves at positions 3i-2 and 3i-1
/// (1-based) for i in [k]. A core on 5k-1 vertices whose maximum induced
/// matching is k: the extremal upper-bound witness.
inline Instance pendant_path_core(int k) {
    if (k < 1) throw std::runtime_error("pendant_path_core: k must be >= 1");
    int path_len = 3 * k - 1;
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < path_len; ++i) edges.push_back({i, i + 1, Rat(1)});
    int next = path_len;
    for (int i = 1; i <= k; ++i) {
        edges.push_back({3 * i - 3, next++, Rat(1)});
        edges.push_back({3 * i - 2, next++, Rat(1)});
    }
    return Instance::create(next, std::move(edges));
}

/// Star with k spokes, each subdivided once: 2k+1 vertices, maximum induced
/// matching k: the extremal lower-bound witness.
inline Instance subdivided_star_core(int k) {
    if (k < 1) throw std::runtime_error("subdivided_star_core: k must be >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i) {
        edges.push_back({0, i, Rat(1)});
        edges.push_back({i, k + i, Rat(1)});
    }
    return Instance::create(2 * k + 1, std::move(edges));
}

} // namespace efxo
