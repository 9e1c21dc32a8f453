//
// Copyright 2026 the efxo authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "efxo/rational.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace efxo {

using VertexId = int;
using EdgeId = int;

/// Error raised while reading one of the text formats; carries the 1-based
/// line number the problem was found on.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct Edge {
    VertexId u, v; // u < v
    Rat w;
    bool operator==(const Edge& other) const { return u == other.u && v == other.v && w == other.w; }
};

/// A symmetric graph instance: agents are vertices, items are edges, and the
/// two endpoints of an edge value it identically. Immutable once built; edges
/// are kept in canonical order (sorted by endpoints) so edge ids are stable.
class Instance {
public:
    Instance() = default;

    static Instance create(int n, std::vector<Edge> edges) {
        Instance inst;
        inst.n_ = n;
        if (n < 0) throw std::runtime_error("negative vertex count");
        for (auto& e : edges) {
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u == e.v) throw std::runtime_error("self-loop at vertex " + std::to_string(e.u));
            if (e.u < 0 || e.v >= n)
                throw std::runtime_error("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                         std::to_string(e.v));
            if (e.w < Rat(0)) throw std::runtime_error("negative edge value");
        }
        std::sort(edges.begin(), edges.end(),
                  [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
        for (size_t i = 1; i < edges.size(); ++i) {
            if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
                throw std::runtime_error("parallel edge " + std::to_string(edges[i].u) + " " +
                                         std::to_string(edges[i].v));
        }
        inst.edges_ = std::move(edges);
        inst.build_index();
        return inst;
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    bool is_binary() const { return binary_; }

    /// (neighbor, edge id) pairs, sorted by neighbor id.
    const std::vector<std::pair<VertexId, EdgeId>>& adj(VertexId v) const { return adj_[v]; }

    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const {
        if (u > v) std::swap(u, v);
        for (auto [w, e] : adj_[u])
            if (w == v) return e;
        return std::nullopt;
    }

    std::vector<VertexId> one_neighbors(VertexId v) const {
        std::vector<VertexId> out;
        for (auto [w, e] : adj_[v])
            if (is_one(edges_[e].w)) out.push_back(w);
        return out;
    }

    std::vector<VertexId> zero_neighbors(VertexId v) const {
        std::vector<VertexId> out;
        for (auto [w, e] : adj_[v])
            if (is_zero(edges_[e].w)) out.push_back(w);
        return out;
    }

    int one_degree(VertexId v) const {
        int d = 0;
        for (auto [w, e] : adj_[v])
            if (is_one(edges_[e].w)) ++d;
        return d;
    }

    int zero_degree(VertexId v) const {
        int d = 0;
        for (auto [w, e] : adj_[v])
            if (is_zero(edges_[e].w)) ++d;
        return d;
    }

    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

    bool operator==(const Instance& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    void build_index() {
        adj_.assign(n_, {});
        for (EdgeId e = 0; e < m(); ++e) {
            adj_[edges_[e].u].push_back({edges_[e].v, e});
            adj_[edges_[e].v].push_back({edges_[e].u, e});
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
        binary_ = true;
        for (const auto& e : edges_)
            if (!is_zero(e.w) && !is_one(e.w)) binary_ = false;
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;
    bool binary_ = true;
};

/// Reads the line-oriented instance format:
///   p efx <n> <m>
///   <u> <v> <w>      (m lines; w is an integer or p/q rational; '#' comments)
inline Instance parse_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;
        if (n < 0) {
            std::string kind;
            if (tok != "p" || !(ss >> kind >> n >> m) || kind != "efx" || n < 0 || m < 0)
                throw ParseError(lineno, "expected header 'p efx <n> <m>'");
            std::string extra;
            if (ss >> extra) throw ParseError(lineno, "trailing tokens after header");
            continue;
        }
        VertexId u, v;
        std::string wtok;
        std::istringstream es(line);
        if (!(es >> u >> v >> wtok)) throw ParseError(lineno, "expected '<u> <v> <w>'");
        std::string extra;
        if (es >> extra) throw ParseError(lineno, "trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "vertex out of range");
        if (u == v) throw ParseError(lineno, "self-loop");
        Rat w;
        try {
            w = parse_rat(wtok);
        } catch (const std::exception& ex) {
            throw ParseError(lineno, ex.what());
        }
        if (w < Rat(0)) throw ParseError(lineno, "negative value");
        edges.push_back({std::min(u, v), std::max(u, v), w});
        for (size_t i = 0; i + 1 < edges.size(); ++i)
            if (edges[i].u == edges.back().u && edges[i].v == edges.back().v)
                throw ParseError(lineno, "duplicate edge");
    }
    if (n < 0) throw ParseError(lineno, "missing header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(lineno, "edge count mismatch: header says " + std::to_string(m) + ", got " +
                                     std::to_string(edges.size()));
    return Instance::create(n, std::move(edges));
}

inline Instance parse_instance(const std::string& text) {
    std::istringstream ss(text);
    return parse_instance(ss);
}

/// Byte-deterministic inverse of parse_instance; edges in canonical order.
inline void serialize_instance(const Instance& inst, std::ostream& out) {
    out << "p efx " << inst.n() << " " << inst.m() << "\n";
    for (const auto& e : inst.edges()) out << e.u << " " << e.v << " " << format_rat(e.w) << "\n";
}

inline std::string serialize_instance(const Instance& inst) {
    std::ostringstream ss;
    serialize_instance(inst, ss);
    return ss.str();
}

} // namespace efxo
