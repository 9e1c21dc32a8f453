//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "efxo/instance.hpp"

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace efxo {

enum class Dir : std::uint8_t { ToU = 0, ToV = 1 };

/// One direction per edge of a fixed instance, in canonical edge order.
/// bundle(i) is the set of edges directed toward i.
class Orientation {
public:
    Orientation() = default;
    explicit Orientation(int m) : dirs_(m, Dir::ToU) {}
    Orientation(int m, Dir fill) : dirs_(m, fill) {}

    int m() const { return static_cast<int>(dirs_.size()); }
    Dir dir(EdgeId e) const { return dirs_[e]; }
    void set(EdgeId e, Dir d) { dirs_[e] = d; }

    /// Orients edge e toward vertex t (t must be an endpoint).
    void set_toward(const Instance& inst, EdgeId e, VertexId t) {
        const Edge& ed = inst.edge(e);
        if (t == ed.u)
            dirs_[e] = Dir::ToU;
        else if (t == ed.v)
            dirs_[e] = Dir::ToV;
        else
            throw std::runtime_error("set_toward: vertex not an endpoint");
    }

    VertexId target(const Instance& inst, EdgeId e) const {
        return dirs_[e] == Dir::ToU ? inst.edge(e).u : inst.edge(e).v;
    }
    VertexId source(const Instance& inst, EdgeId e) const {
        return dirs_[e] == Dir::ToU ? inst.edge(e).v : inst.edge(e).u;
    }

    std::vector<std::vector<EdgeId>> bundles(const Instance& inst) const {
        check(inst);
        std::vector<std::vector<EdgeId>> b(inst.n());
        for (EdgeId e = 0; e < m(); ++e) b[target(inst, e)].push_back(e);
        return b;
    }

    void check(const Instance& inst) const {
        if (m() != inst.m()) throw std::runtime_error("orientation does not cover the instance edge set");
    }

    bool operator==(const Orientation& other) const { return dirs_ == other.dirs_; }

private:
    std::vector<Dir> dirs_;
};

/// Format: one line per edge, canonical order: "<u> <v> -> <u|v>".
inline void serialize_orientation(const Instance& inst, const Orientation& o, std::ostream& out) {
    o.check(inst);
    for (EdgeId e = 0; e < inst.m(); ++e)
        out << inst.edge(e).u << " " << inst.edge(e).v << " -> " << o.target(inst, e) << "\n";
}

inline std::string serialize_orientation(const Instance& inst, const Orientation& o) {
    std::ostringstream ss;
    serialize_orientation(inst, o, ss);
    return ss.str();
}

inline Orientation parse_orientation(const Instance& inst, std::istream& in) {
    Orientation o(inst.m());
    std::vector<bool> seen(inst.m(), false);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ss(line);
        VertexId u, v, t;
        std::string arrow;
        if (!(ss >> u)) continue;
        if (!(ss >> v >> arrow >> t) || arrow != "->") throw ParseError(lineno, "expected '<u> <v> -> <t>'");
        auto e = inst.find_edge(u, v);
        if (!e) throw ParseError(lineno, "no such edge in instance");
        if (seen[*e]) throw ParseError(lineno, "duplicate edge line");
        seen[*e] = true;
        if (t != u && t != v) throw ParseError(lineno, "target is not an endpoint");
        o.set_toward(inst, *e, t);
    }
    for (EdgeId e = 0; e < inst.m(); ++e)
        if (!seen[e]) throw ParseError(lineno, "missing direction for edge " + std::to_string(inst.edge(e).u) +
                                                   " " + std::to_string(inst.edge(e).v));
    return o;
}

inline Orientation parse_orientation(const Instance& inst, const std::string& text) {
    std::istringstream ss(text);
    return parse_orientation(inst, ss);
}

} // namespace efxo
