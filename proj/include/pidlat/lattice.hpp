#pragma once

/*
 * Enumeration and navigation of the decomposition lattice.
 *
 * Node count is Dedekind(n) - 2: 1, 4, 18, 166, 7579 for n = 1..5.
 * Enumeration past n = 5 is capped by default (n = 6 can be unlocked by
 * the caller; n = 7 would not even fit the 64-bit truth table).
 */

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "pidlat/errors.hpp"
#include "pidlat/statements.hpp"

namespace pidlat {

inline constexpr int kDefaultMaxSources = 5;
inline constexpr int kAbsoluteMaxSources = 6;

// All parthood distributions for n sources, ascending by table mask (so the
// all-way synergy node comes first and the all-way shared node last).
// Generated by recursive extension over the mask-ordered powerset: a
// collection may be assigned 0 only if every immediate subset is 0, which
// is exactly the monotonicity constraint.
inline std::vector<ParthoodDistribution> enumerate_nodes(int n, int max_n = kDefaultMaxSources) {
    if (n < 1) throw std::invalid_argument("source count must be at least 1");
    const int cap = std::min(max_n, kAbsoluteMaxSources);
    if (n > cap)
        throw capacity_error("n = " + std::to_string(n) + " exceeds the supported limit of " +
                             std::to_string(cap) +
                             " sources; the lattice has Dedekind(n) - 2 nodes, which grows "
                             "super-exponentially (7828352 already at n = 6)");

    const int m = collection_count(n);
    std::vector<ParthoodDistribution> out;
    std::uint64_t table = 0;

    auto extend = [&](auto&& self, int c) -> void {
        if (c == m) {
            if (table >> (m - 1) & 1u) out.push_back({n, table});
            return;
        }
        if (c > 0) {
            bool zero_ok = true;
            for (int i = 0; i < n && zero_ok; ++i)
                if ((c >> i & 1) && (table >> (c & ~(1 << i)) & 1u)) zero_ok = false;
            if (zero_ok) self(self, c + 1);
            table |= std::uint64_t{1} << c;
            self(self, c + 1);
            table &= ~(std::uint64_t{1} << c);
        } else {
            self(self, 1); // f({}) = 0
        }
    };
    extend(extend, 0);

    std::sort(out.begin(), out.end(),
              [](const ParthoodDistribution& a, const ParthoodDistribution& b) { return a.table < b.table; });
    return out;
}

// Lower covers per the children algorithm: each valuation V with f(V) = 0
// whose one-bit extensions all satisfy f yields the child f + {V}.  Output
// ascends by table mask.
inline std::vector<ParthoodDistribution> children(const ParthoodDistribution& f) {
    const int m = collection_count(f.n);
    std::vector<ParthoodDistribution> out;
    for (int v = 1; v < m; ++v) {
        if (f.table >> v & 1u) continue;
        bool addable = true;
        for (int i = 0; i < f.n && addable; ++i)
            if (!(v >> i & 1) && !(f.table >> (v | 1 << i) & 1u)) addable = false;
        if (addable) out.push_back({f.n, f.table | std::uint64_t{1} << v});
    }
    return out; // ascending already: v ascends and tables share the base mask
}

// Upper covers by brute-force cover scan over the node list.
inline std::vector<ParthoodDistribution> parents(const ParthoodDistribution& f,
                                                 const std::vector<ParthoodDistribution>& nodes) {
    std::vector<ParthoodDistribution> out;
    for (const ParthoodDistribution& g : nodes) {
        if (g == f || !leq(f, g)) continue;
        bool cover = true;
        for (const ParthoodDistribution& h : nodes) {
            if (h == f || h == g) continue;
            if (leq(f, h) && leq(h, g)) { cover = false; break; }
        }
        if (cover) out.push_back(g);
    }
    return out;
}

inline std::vector<ParthoodDistribution> parents(const ParthoodDistribution& f) {
    return parents(f, enumerate_nodes(f.n, kAbsoluteMaxSources));
}

class Lattice {
  public:
    static Lattice build(int n, int max_n = kDefaultMaxSources) {
        Lattice lat;
        lat.n_ = n;
        lat.nodes_ = enumerate_nodes(n, max_n);
        return lat;
    }

    int n() const { return n_; }
    std::size_t size() const { return nodes_.size(); }
    const std::vector<ParthoodDistribution>& nodes() const { return nodes_; }
    const ParthoodDistribution& node(int index) const { return nodes_[static_cast<std::size_t>(index)]; }

    int top_index() const { return 0; }
    int bottom_index() const { return static_cast<int>(nodes_.size()) - 1; }

    // Index of a node by truth table; -1 if absent.
    int index_of(std::uint64_t table) const {
        auto it = std::lower_bound(nodes_.begin(), nodes_.end(), table,
                                   [](const ParthoodDistribution& a, std::uint64_t t) { return a.table < t; });
        if (it == nodes_.end() || it->table != table) return -1;
        return static_cast<int>(it - nodes_.begin());
    }
    int index_of(const ParthoodDistribution& f) const { return index_of(f.table); }
    int index_of(const Antichain& alpha) const {
        return index_of(parthood_from_antichain(alpha, n_).table);
    }

    Antichain antichain_of(int index) const { return antichain_from_parthood(node(index)); }
    LogicStatement statement_of(int index) const { return statement_from_antichain(antichain_of(index)); }

    std::vector<int> children_of(int index) const {
        std::vector<int> out;
        for (const ParthoodDistribution& c : children(node(index))) out.push_back(index_of(c));
        return out;
    }

    std::vector<int> parents_of(int index) const {
        std::vector<int> out;
        for (const ParthoodDistribution& p : parents(node(index), nodes_)) out.push_back(index_of(p));
        return out;
    }

  private:
    int n_ = 0;
    std::vector<ParthoodDistribution> nodes_; // ascending by table
};

enum class NodeView { antichain, bitstring, statement };

inline NodeView parse_node_view(const std::string& name) {
    if (name == "antichain") return NodeView::antichain;
    if (name == "bitstring") return NodeView::bitstring;
    if (name == "statement") return NodeView::statement;
    throw std::invalid_argument("unknown view '" + name + "' (expected antichain, bitstring or statement)");
}

inline std::string node_label(const Lattice& lattice, int index, NodeView view) {
    switch (view) {
        case NodeView::bitstring: return bitstring(lattice.node(index));
        case NodeView::statement: return to_string(lattice.statement_of(index));
        case NodeView::antichain: default: return to_string(lattice.antichain_of(index));
    }
}

// Deterministic DOT digraph of the Hasse diagram, edges oriented child ->
// parent (bottom to top).
inline std::string export_dot(const Lattice& lattice, NodeView view = NodeView::antichain) {
    std::string out = "digraph pid_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < lattice.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + node_label(lattice, static_cast<int>(i), view) +
               "\"];\n";
    for (std::size_t i = 0; i < lattice.size(); ++i)
        for (int c : lattice.children_of(static_cast<int>(i)))
            out += "  n" + std::to_string(c) + " -> n" + std::to_string(i) + ";\n";
    out += "}\n";
    return out;
}

} // namespace pidlat
