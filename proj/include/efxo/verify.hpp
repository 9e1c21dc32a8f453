//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "efxo/instance.hpp"
#include "efxo/orientation.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

namespace efxo {

/// A strong-envy certificate: `envier` values `envied`'s bundle minus the
/// `dropped` item strictly above its own bundle.
struct Witness {
    VertexId envier, envied;
    EdgeId dropped;
    bool operator==(const Witness& o) const {
        return envier == o.envier && envied == o.envied && dropped == o.dropped;
    }
};

struct VerifyReport {
    bool ok = true;
    std::vector<Witness> witnesses; // sorted lexicographically
};

namespace detail {

/// Smallest witness item: any bundle element other than the shared edge keeps
/// the shared edge's value in the envied bundle.
inline EdgeId smallest_drop(const std::vector<EdgeId>& bundle, EdgeId shared) {
    for (EdgeId g : bundle)
        if (g != shared) return g;
    return -1;
}

} // namespace detail

/// Definitional verifier over exact rational values. An agent u strongly
/// envies the holder of edge uv exactly when the edge points away from u,
/// w(uv) exceeds the total value of u's own bundle, and the holder has a
/// second item to drop.
inline VerifyReport verify_efx_definitional(const Instance& inst, const Orientation& o) {
    o.check(inst);
    auto bundles = o.bundles(inst);
    std::vector<Rat> own(inst.n(), Rat(0));
    for (EdgeId e = 0; e < inst.m(); ++e) own[o.target(inst, e)] += inst.edge(e).w;

    VerifyReport rep;
    for (EdgeId e = 0; e < inst.m(); ++e) {
        VertexId holder = o.target(inst, e);
        VertexId envier = o.source(inst, e);
        if (inst.edge(e).w > own[envier] && bundles[holder].size() >= 2) {
            rep.witnesses.push_back({envier, holder, detail::smallest_drop(bundles[holder], e)});
        }
    }
    std::sort(rep.witnesses.begin(), rep.witnesses.end(), [](const Witness& a, const Witness& b) {
        return std::tuple(a.envier, a.envied, a.dropped) < std::tuple(b.envier, b.envied, b.dropped);
    });
    rep.ok = rep.witnesses.empty();
    return rep;
}

/// Fast binary-instance check: u strongly envies v iff uv is a 1-edge
/// oriented toward v, u holds no 1-item, and v holds a second item.
inline VerifyReport verify_efx_binary(const Instance& inst, const Orientation& o) {
    o.check(inst);
    std::vector<char> has_one(inst.n(), 0);
    std::vector<int> items(inst.n(), 0);
    for (EdgeId e = 0; e < inst.m(); ++e) {
        VertexId t = o.target(inst, e);
        ++items[t];
        if (is_one(inst.edge(e).w)) has_one[t] = 1;
    }
    VerifyReport rep;
    for (EdgeId e = 0; e < inst.m(); ++e) {
        if (!is_one(inst.edge(e).w)) continue;
        VertexId holder = o.target(inst, e);
        VertexId envier = o.source(inst, e);
        if (!has_one[envier] && items[holder] >= 2) {
            EdgeId drop = -1;
            for (auto [w, f] : inst.adj(holder)) {
                (void)w;
                if (f != e && o.target(inst, f) == holder) {
                    drop = f;
                    break;
                }
            }
            rep.witnesses.push_back({envier, holder, drop});
        }
    }
    std::sort(rep.witnesses.begin(), rep.witnesses.end(), [](const Witness& a, const Witness& b) {
        return std::tuple(a.envier, a.envied, a.dropped) < std::tuple(b.envier, b.envied, b.dropped);
    });
    rep.ok = rep.witnesses.empty();
    return rep;
}

inline VerifyReport verify_efx(const Instance& inst, const Orientation& o) {
    return inst.is_binary() ? verify_efx_binary(inst, o) : verify_efx_definitional(inst, o);
}

inline bool is_efx(const Instance& inst, const Orientation& o) { return verify_efx(inst, o).ok; }

} // namespace efxo
