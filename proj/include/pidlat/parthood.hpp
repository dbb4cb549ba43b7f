#pragma once

/*
 * Parthood distributions: monotone Boolean functions on the powerset of
 * {1,...,n} with f({}) = 0 and f({1,...,n}) = 1.  Each one characterizes a
 * single information atom and is the canonical identity of a lattice node.
 *
 * The full truth table is packed into a 64-bit mask (bit c = value on the
 * collection with mask c), which caps n at 6 and makes order tests O(1).
 *
 * Order convention: x <= y iff ones(x) is a superset of ones(y).  The
 * all-way shared node (value 1 on every non-empty collection) is the
 * bottom element and the all-way synergy node (value 1 only on the full
 * set) is the top.  Redundancy at a node then sums the atoms at or below
 * it, matching the worked two-source case.
 */

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "pidlat/collections.hpp"

namespace pidlat {

inline int collection_count(int n) { return 1 << n; }

struct ParthoodDistribution {
    int n = 0;               // number of sources
    std::uint64_t table = 0; // bit c = f(collection with mask c)

    bool value(Collection a) const { return table >> a.mask & 1u; }
    bool value(std::uint32_t collection_mask) const { return table >> collection_mask & 1u; }
    int ones() const { return std::popcount(table); }

    friend bool operator==(const ParthoodDistribution& a, const ParthoodDistribution& b) {
        return a.n == b.n && a.table == b.table;
    }
    friend bool operator!=(const ParthoodDistribution& a, const ParthoodDistribution& b) {
        return !(a == b);
    }
};

namespace detail {
inline void require_same_n(const ParthoodDistribution& f, const ParthoodDistribution& g) {
    if (f.n != g.n)
        throw std::invalid_argument("parthood distributions over different source counts: " +
                                    std::to_string(f.n) + " vs " + std::to_string(g.n));
}
} // namespace detail

// Validity check: f({}) = 0, f(full) = 1, and monotone under inclusion.
inline bool is_parthood_table(int n, std::uint64_t table) {
    const int m = collection_count(n);
    if (table & 1u) return false;
    if (!(table >> (m - 1) & 1u)) return false;
    for (int c = 0; c < m; ++c) {
        if (!(table >> c & 1u)) continue;
        for (int i = 0; i < n; ++i) {
            if (c >> i & 1) continue;
            if (!(table >> (c | 1 << i) & 1u)) return false;
        }
    }
    return true;
}

// Bottom: value 1 on every non-empty collection (all-way shared atom).
inline ParthoodDistribution bottom_node(int n) {
    const int m = collection_count(n);
    std::uint64_t all = (m == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    return {n, all & ~std::uint64_t{1}};
}

// Top: value 1 only on the full set (all-way synergy atom).
inline ParthoodDistribution top_node(int n) {
    return {n, std::uint64_t{1} << (collection_count(n) - 1)};
}

// x at-or-below y: ones(x) contains ones(y).
inline bool leq(const ParthoodDistribution& x, const ParthoodDistribution& y) {
    detail::require_same_n(x, y);
    return (x.table & y.table) == y.table;
}

// Greatest lower bound; ones(meet) = ones(x) | ones(y).  Statement-level
// this is the canonicalized disjunction.
inline ParthoodDistribution meet(const ParthoodDistribution& x, const ParthoodDistribution& y) {
    detail::require_same_n(x, y);
    return {x.n, x.table | y.table};
}

// Least upper bound; ones(join) = ones(x) & ones(y) (statement-level the
// canonicalized conjunction).
inline ParthoodDistribution join(const ParthoodDistribution& x, const ParthoodDistribution& y) {
    detail::require_same_n(x, y);
    return {x.n, x.table & y.table};
}

// The antichain of subset-minimal collections with value 1.  Inverse of
// parthood_from_antichain.
inline Antichain antichain_from_parthood(const ParthoodDistribution& f) {
    const int m = collection_count(f.n);
    std::vector<Collection> minimal;
    for (int c = 1; c < m; ++c) {
        if (!(f.table >> c & 1u)) continue;
        bool is_minimal = true;
        for (int i = 0; i < f.n && is_minimal; ++i)
            if ((c >> i & 1) && (f.table >> (c & ~(1 << i)) & 1u)) is_minimal = false;
        if (is_minimal) minimal.push_back(Collection{static_cast<std::uint32_t>(c)});
    }
    return Antichain::from_collections(std::move(minimal));
}

// f_alpha(b) = 1 iff b contains some member of alpha.
inline ParthoodDistribution parthood_from_antichain(const Antichain& alpha, int n) {
    if (alpha.empty()) throw std::invalid_argument("empty antichain has no parthood distribution");
    if (n < 1 || n > 6) throw std::invalid_argument("unsupported source count: " + std::to_string(n));
    if (alpha.max_index() > n)
        throw std::invalid_argument("antichain " + to_string(alpha) + " references sources beyond n=" +
                                    std::to_string(n));
    const int m = collection_count(n);
    std::uint64_t table = 0;
    for (int c = 1; c < m; ++c)
        for (Collection a : alpha.collections())
            if ((static_cast<std::uint32_t>(c) & a.mask) == a.mask) {
                table |= std::uint64_t{1} << c;
                break;
            }
    return {n, table};
}

// Truth table rendered as a bit string, one character per collection in
// ascending mask order (leftmost = empty collection).
inline std::string bitstring(const ParthoodDistribution& f) {
    const int m = collection_count(f.n);
    std::string out(static_cast<std::size_t>(m), '0');
    for (int c = 0; c < m; ++c)
        if (f.table >> c & 1u) out[static_cast<std::size_t>(c)] = '1';
    return out;
}

} // namespace pidlat
