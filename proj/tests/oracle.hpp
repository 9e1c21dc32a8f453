//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
// Test-side oracles. Everything here is written straight from definitions and
// stays independent of the library code paths it cross-checks.
#pragma once

#include "efxo/instance.hpp"
#include "efxo/orientation.hpp"

#include <optional>
#include <vector>

namespace efxo::oracle {

// w_i(S): agent i values an edge set by summing the values of edges incident
// to i; everything else counts 0.
inline Rat value_for(const Instance& inst, VertexId i, const std::vector<EdgeId>& bundle,
                     EdgeId dropped = -1) {
    Rat total(0);
    for (EdgeId e : bundle) {
        if (e == dropped) continue;
        if (inst.edge(e).u == i || inst.edge(e).v == i) total += inst.edge(e).w;
    }
    return total;
}

// Literal strong-envy definition: exists g in X_j with w_i(X_j \ {g}) > w_i(X_i).
inline bool strongly_envies(const Instance& inst, const std::vector<std::vector<EdgeId>>& bundles,
                            VertexId i, VertexId j) {
    Rat own = value_for(inst, i, bundles[i]);
    for (EdgeId g : bundles[j])
        if (value_for(inst, i, bundles[j], g) > own) return true;
    return false;
}

inline bool is_efx(const Instance& inst, const Orientation& o) {
    auto bundles = o.bundles(inst);
    for (VertexId i = 0; i < inst.n(); ++i)
        for (VertexId j = 0; j < inst.n(); ++j)
            if (i != j && strongly_envies(inst, bundles, i, j)) return false;
    return true;
}

// Plain 2^m sweep; the definitional decision oracle for small instances.
inline std::optional<Orientation> find_efx(const Instance& inst) {
    if (inst.m() > 22) throw std::runtime_error("oracle::find_efx: instance too large");
    for (std::uint64_t mask = 0; mask < (1ULL << inst.m()); ++mask) {
        Orientation o(inst.m());
        for (EdgeId e = 0; e < inst.m(); ++e)
            o.set(e, (mask >> (inst.m() - 1 - e)) & 1 ? Dir::ToV : Dir::ToU);
        if (oracle::is_efx(inst, o)) return o;
    }
    return std::nullopt;
}

inline bool efx_exists(const Instance& inst) { return find_efx(inst).has_value(); }

} // namespace efxo::oracle
