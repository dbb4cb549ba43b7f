#pragma once

/*
 * The logical view of lattice nodes: disjunctions of logically independent
 * conjunctions of propositional variables ("phi_i" = "source i took its
 * realized value").  Isomorphic to the antichain and parthood views; the
 * truth table of a statement is exactly the parthood distribution.
 */

#include <string>
#include <vector>

#include "pidlat/parthood.hpp"

namespace pidlat {

struct LogicStatement {
    // Conjunctions as index sets, canonically ordered by (size, mask) with
    // ascending indices inside each conjunction; no index-set contains
    // another (the antichain property in logical guise).
    std::vector<Collection> dnf;

    friend bool operator==(const LogicStatement& a, const LogicStatement& b) { return a.dnf == b.dnf; }
    friend bool operator!=(const LogicStatement& a, const LogicStatement& b) { return !(a == b); }
};

inline LogicStatement statement_from_antichain(const Antichain& alpha) {
    if (alpha.empty()) throw std::invalid_argument("empty antichain has no statement");
    return LogicStatement{alpha.collections()};
}

inline Antichain antichain_from_statement(const LogicStatement& stmt) {
    return Antichain::from_collections(stmt.dnf);
}

// Does the valuation (set of true variables, as a mask) satisfy the statement?
inline bool satisfies(const LogicStatement& stmt, std::uint32_t valuation) {
    for (Collection conj : stmt.dnf)
        if ((valuation & conj.mask) == conj.mask) return true;
    return false;
}

// Evaluate the statement on all 2^n valuations.  The result is monotone and
// equals parthood_from_antichain of the statement's antichain.
inline ParthoodDistribution truth_table(const LogicStatement& stmt, int n) {
    if (stmt.dnf.empty()) throw std::invalid_argument("empty statement has no truth table");
    for (Collection conj : stmt.dnf)
        if (conj.empty() || conj.mask >= (std::uint32_t{1} << n))
            throw std::invalid_argument("statement references variables beyond n=" + std::to_string(n));
    const int m = collection_count(n);
    std::uint64_t table = 0;
    for (int v = 0; v < m; ++v)
        if (satisfies(stmt, static_cast<std::uint32_t>(v))) table |= std::uint64_t{1} << v;
    return {n, table};
}

// "(φ1∧φ2)∨(φ2∧φ3)"; parentheses only where needed.
inline std::string to_string(const LogicStatement& stmt) {
    auto conj_text = [](Collection c) {
        std::string out;
        bool first = true;
        for (int i : c.indices()) {
            if (!first) out += "∧"; // ∧
            out += "φ" + std::to_string(i);
            first = false;
        }
        return out;
    };
    std::string out;
    const bool many = stmt.dnf.size() > 1;
    bool first = true;
    for (Collection c : stmt.dnf) {
        if (!first) out += "∨"; // ∨
        if (many && c.size() > 1)
            out += "(" + conj_text(c) + ")";
        else
            out += conj_text(c);
        first = false;
    }
    return out;
}

} // namespace pidlat
