//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "efxo/instance.hpp"
#include "efxo/orientation.hpp"
#include "efxo/rng.hpp"

#include <vector>

namespace efxo::test {

inline Instance inst_of(int n, std::vector<std::tuple<int, int, const char*>> edges) {
    std::vector<Edge> es;
    for (auto [u, v, w] : edges) es.push_back({u, v, parse_rat(w)});
    return Instance::create(n, std::move(es));
}

/// All-1 path on ids 0..k-1.
inline Instance path_instance(int k) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < k; ++i) es.push_back({i, i + 1, Rat(1)});
    return Instance::create(k, std::move(es));
}

inline Orientation random_orientation(const Instance& inst, Rng& rng) {
    Orientation o(inst.m());
    for (EdgeId e = 0; e < inst.m(); ++e) o.set(e, rng.below(2) ? Dir::ToV : Dir::ToU);
    return o;
}

/// Decodes a Prüfer sequence into tree edges on `size` labeled vertices.
inline std::vector<std::pair<int, int>> prufer_decode(int size, const std::vector<int>& seq) {
    std::vector<int> deg(size, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    std::vector<char> used(size, 0);
    for (int x : seq) {
        for (int leaf = 0; leaf < size; ++leaf) {
            if (deg[leaf] == 1 && !used[leaf]) {
                edges.push_back({leaf, x});
                used[leaf] = 1;
                --deg[x];
                break;
            }
        }
    }
    std::vector<int> last;
    for (int v = 0; v < size; ++v)
        if (deg[v] == 1 && !used[v]) last.push_back(v);
    edges.push_back({last[0], last[1]});
    return edges;
}

/// Calls fn(instance) for every labeled tree on `size` vertices (all edges 1).
template <class Fn>
inline void for_all_labeled_trees(int size, Fn&& fn) {
    if (size == 1) {
        fn(Instance::create(1, {}));
        return;
    }
    if (size == 2) {
        fn(Instance::create(2, {{0, 1, Rat(1)}}));
        return;
    }
    std::vector<int> seq(size - 2, 0);
    for (;;) {
        std::vector<Edge> es;
        for (auto [u, v] : prufer_decode(size, seq)) es.push_back({std::min(u, v), std::max(u, v), Rat(1)});
        fn(Instance::create(size, std::move(es)));
        int i = 0;
        while (i < static_cast<int>(seq.size()) && seq[i] == size - 1) seq[i++] = 0;
        if (i == static_cast<int>(seq.size())) break;
        ++seq[i];
    }
}

} // namespace efxo::test
