//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
#include "efxo/generate.hpp"
#include "efxo/preprocess.hpp"
#include "efxo/rooting.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

#include <catch_amalgamated.hpp>

using namespace efxo;

namespace {

// Independent rooting search: every combination of candidate roots, literal
// feasibility scan. Used to cross-check dominance pruning and completeness.
bool rooting_exists(const Instance& inst, const std::vector<std::vector<VertexId>>& candidates) {
    std::vector<size_t> pick(candidates.size(), 0);
    if (candidates.empty()) return true;
    for (;;) {
        std::vector<char> in_R(inst.n(), 0);
        for (size_t t = 0; t < candidates.size(); ++t)
            for (VertexId w : inst.one_neighbors(candidates[t][pick[t]])) in_R[w] = 1;
        bool ok = true;
        for (EdgeId e = 0; e < inst.m() && ok; ++e)
            if (is_zero(inst.edge(e).w) && in_R[inst.edge(e).u] && in_R[inst.edge(e).v]) ok = false;
        if (ok) return true;
        size_t t = 0;
        while (t < pick.size() && ++pick[t] == candidates[t].size()) pick[t++] = 0;
        if (t == pick.size()) return false;
    }
}

std::vector<std::vector<VertexId>> all_vertices_per_tree(const Instance& inst) {
    std::vector<std::vector<VertexId>> out;
    for (const auto& c : one_forest(inst).components) out.push_back(c.vertices);
    return out;
}

std::vector<std::vector<VertexId>> state_vertices_per_tree(const Instance& inst) {
    std::vector<std::vector<VertexId>> out;
    for (const auto& t : enumerate_states(inst).trees) out.push_back(t.states);
    return out;
}

} // namespace

TEST_CASE("enumerate_states: P2 has two states") {
    auto table = enumerate_states(test::path_instance(2));
    REQUIRE(table.trees.size() == 1);
    CHECK(table.trees[0].states == std::vector<VertexId>{0, 1});
}

TEST_CASE("enumerate_states: P4 keeps the two leaves") {
    auto table = enumerate_states(test::path_instance(4));
    REQUIRE(table.trees.size() == 1);
    CHECK(table.trees[0].states == std::vector<VertexId>{0, 3});
}

TEST_CASE("enumerate_states: P5 drops only the middle") {
    auto table = enumerate_states(test::path_instance(5));
    REQUIRE(table.trees.size() == 1);
    CHECK(table.trees[0].states == std::vector<VertexId>{0, 1, 3, 4});
    REQUIRE(table.trees[0].dominated.size() == 1);
    CHECK(table.trees[0].dominated[0].first == 2);
}

TEST_CASE("enumerate_states: rejects cyclic 1-components") {
    Instance tri = test::inst_of(3, {{0, 1, "1"}, {1, 2, "1"}, {0, 2, "1"}});
    CHECK_THROWS(enumerate_states(tri));
}

TEST_CASE("state table invariants on random trees") {
    Rng rng(404);
    for (int iter = 0; iter < 60; ++iter) {
        Instance tree = gen_tree(2 + static_cast<int>(rng.below(8)), rng.next());
        auto table = enumerate_states(tree);
        REQUIRE(table.trees.size() == 1);
        const auto& t = table.trees[0];
        auto nb = [&](VertexId v) { return tree.one_neighbors(v); };
        auto dominates = [&](VertexId a, VertexId b) {
            auto na = nb(a), nbv = nb(b);
            if (!std::includes(nbv.begin(), nbv.end(), na.begin(), na.end())) return false;
            return na.size() < nbv.size() || (na == nbv && a < b);
        };
        // No candidate dominates another candidate.
        for (VertexId a : t.states)
            for (VertexId b : t.states)
                if (a != b) REQUIRE_FALSE(dominates(a, b));
        // Every vertex is a state or certified dominated by a state.
        std::vector<VertexId> covered = t.states;
        for (auto [v, s] : t.dominated) {
            REQUIRE(std::find(t.states.begin(), t.states.end(), s) != t.states.end());
            REQUIRE(dominates(s, v));
            covered.push_back(v);
        }
        std::sort(covered.begin(), covered.end());
        REQUIRE(covered.size() == static_cast<size_t>(tree.n()));
    }
}

TEST_CASE("rooting_feasible: no 0-edges means any rooting works") {
    Instance inst = test::path_instance(4);
    auto f = one_forest(inst);
    for (VertexId r = 0; r < 4; ++r) {
        Rooting rooting{{r}};
        CHECK(rooting_feasible(inst, f, rooting).ok);
    }
}

TEST_CASE("rooting_feasible: crossing 0-edge examples") {
    // Trees {0,1} and {2,3}; 0-edge between 1 and 3.
    Instance inst = test::inst_of(4, {{0, 1, "1"}, {2, 3, "1"}, {1, 3, "0"}});
    auto bad = rooting_feasible(inst, Rooting{{0, 2}});
    REQUIRE_FALSE(bad.ok);
    CHECK(*bad.violating == *inst.find_edge(1, 3));
    CHECK(rooting_feasible(inst, Rooting{{0, 3}}).ok);
    CHECK_THROWS(rooting_feasible(inst, Rooting{{2, 0}})); // roots in wrong trees
}

TEST_CASE("rooting_to_orientation: single edge and P3") {
    Instance p2 = test::path_instance(2);
    Orientation o = rooting_to_orientation(p2, Rooting{{0}});
    CHECK(o.target(p2, 0) == 1);
    CHECK(verify_efx(p2, o).ok);

    Instance p3 = test::path_instance(3);
    Orientation o3 = rooting_to_orientation(p3, Rooting{{0}});
    CHECK(o3.target(p3, 0) == 1);
    CHECK(o3.target(p3, 1) == 2);
    CHECK(verify_efx(p3, o3).ok);
}

TEST_CASE("rooting_to_orientation: feasible rootings verify and are nice") {
    Rng rng(808);
    int checked = 0;
    for (int iter = 0; iter < 300; ++iter) {
        int n = 2 + static_cast<int>(rng.below(6));
        int m = static_cast<int>(rng.below(std::min(12, n * (n - 1) / 2) + 1));
        auto [inst, trace] = preprocess_full(gen_uniform(n, m, rng.next()));
        auto f = one_forest(inst);
        if (f.components.empty()) continue;
        // Try a handful of random rootings; keep the feasible ones.
        for (int t = 0; t < 5; ++t) {
            Rooting r;
            for (const auto& c : f.components) r.root.push_back(c.vertices[rng.below(c.vertices.size())]);
            if (!rooting_feasible(inst, f, r).ok) continue;
            Orientation o = rooting_to_orientation(inst, f, r);
            REQUIRE(verify_efx(inst, o).ok);
            auto rootless = rootless_per_tree(inst, f, o);
            for (const auto& rl : rootless) REQUIRE(rl.size() == 1);
            ++checked;
        }
    }
    CHECK(checked >= 200);
}

TEST_CASE("dominance soundness: state-restricted search matches all-vertex search") {
    Rng rng(909);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng.below(7));
        int m = static_cast<int>(rng.below(std::min(12, n * (n - 1) / 2) + 1));
        auto [inst, trace] = preprocess_full(gen_uniform(n, m, rng.next()));
        REQUIRE(rooting_exists(inst, all_vertices_per_tree(inst)) ==
                rooting_exists(inst, state_vertices_per_tree(inst)));
    }
}

TEST_CASE("nice-orientation completeness: rootings decide exactly like orientations") {
    Rng rng(1010);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng.below(7));
        int m = static_cast<int>(rng.below(std::min(12, n * (n - 1) / 2) + 1));
        auto [inst, trace] = preprocess_full(gen_uniform(n, m, rng.next()));
        REQUIRE(oracle::efx_exists(inst) == rooting_exists(inst, all_vertices_per_tree(inst)));
    }
}

TEST_CASE("make_nice turns any EFX orientation into a nice one") {
    Rng rng(1111);
    int converted = 0;
    for (int iter = 0; iter < 150; ++iter) {
        int n = 2 + static_cast<int>(rng.below(6));
        int m = static_cast<int>(rng.below(std::min(10, n * (n - 1) / 2) + 1));
        auto [inst, trace] = preprocess_full(gen_uniform(n, m, rng.next()));
        Orientation o = test::random_orientation(inst, rng);
        if (!verify_efx(inst, o).ok) continue;
        auto f = one_forest(inst);
        make_nice(inst, f, o);
        REQUIRE(verify_efx(inst, o).ok);
        for (const auto& rl : rootless_per_tree(inst, f, o)) REQUIRE(rl.size() == 1);
        ++converted;
    }
    CHECK(converted >= 40);
}
