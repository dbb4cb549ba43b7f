#pragma once

/*
 * Non-redundancy-based decompositions: restricted information, weak and
 * moderate synergy (all of which induce the same unique atoms), the
 * strong-synergy criterion (which provably does not), and the
 * unique-information criterion.
 *
 * Each quantity is a sum of atoms selected by a parthood condition:
 *
 *   res:  f(b) = 1 -> some a_i is contained in b   (at-or-above the node)
 *   ws:   f(a_i) = 0 for every i
 *   ms:   ws and additionally f(union a_i) = 1
 *   syn:  ms and f(union over J) = 0 for proper sub-tuples J, |J| >= 2,
 *         whose union differs from the full union
 *   unq:  f is exactly the node of the antichain
 *
 * Restricted information inverts over the dual lattice order; weak synergy
 * translates to restricted information; moderate synergy reduces to weak
 * synergy via ms(alpha) = ws(alpha) - ws({union}), where the single-
 * collection weak synergies are the conditional mutual informations
 * I(T : complement | collection).
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pidlat/atoms.hpp"
#include "pidlat/information.hpp"

namespace pidlat {

enum class Criterion { res, ws, ms, syn, unq };

inline std::string to_string(Criterion c) {
    switch (c) {
        case Criterion::res: return "res";
        case Criterion::ws: return "ws";
        case Criterion::ms: return "ms";
        case Criterion::syn: return "syn";
        case Criterion::unq: return "unq";
    }
    return "?";
}

inline Criterion parse_criterion(const std::string& name) {
    if (name == "res") return Criterion::res;
    if (name == "ws") return Criterion::ws;
    if (name == "ms") return Criterion::ms;
    if (name == "syn") return Criterion::syn;
    if (name == "unq") return Criterion::unq;
    throw std::invalid_argument("unknown criterion '" + name + "'");
}

// Evaluate a criterion on a raw tuple of collections (no canonicalization;
// the conditions themselves are total and deterministic).
inline bool criterion_holds(Criterion crit, const ParthoodDistribution& f,
                            const std::vector<Collection>& tuple) {
    auto up_closure_table = [&](void) {
        const int m = collection_count(f.n);
        std::uint64_t table = 0;
        for (int c = 1; c < m; ++c)
            for (Collection a : tuple)
                if (!a.empty() && (static_cast<std::uint32_t>(c) & a.mask) == a.mask) {
                    table |= std::uint64_t{1} << c;
                    break;
                }
        return table;
    };
    Collection all_union;
    for (Collection a : tuple) all_union.mask |= a.mask;

    switch (crit) {
        case Criterion::res:
            // every 1 of f lies in the up-closure of the tuple
            return (f.table & ~up_closure_table()) == 0;
        case Criterion::ws:
            for (Collection a : tuple)
                if (f.value(a)) return false;
            return true;
        case Criterion::ms:
            if (!f.value(all_union)) return false;
            for (Collection a : tuple)
                if (f.value(a)) return false;
            return true;
        case Criterion::syn: {
            if (tuple.empty() || !f.value(all_union)) return false;
            for (Collection a : tuple)
                if (f.value(a)) return false;
            const std::size_t m = tuple.size();
            for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << m); ++sub) {
                const int k = std::popcount(sub);
                if (k < 2 || k == static_cast<int>(m)) continue;
                Collection u;
                for (std::size_t j = 0; j < m; ++j)
                    if (sub >> j & 1u) u.mask |= tuple[j].mask;
                if (u != all_union && f.value(u)) return false;
            }
            return true;
        }
        case Criterion::unq:
            return f.table == up_closure_table();
    }
    return false;
}

inline bool criterion_holds(Criterion crit, const ParthoodDistribution& f, const Antichain& alpha) {
    return criterion_holds(crit, f, alpha.collections());
}

// One equation per antichain of the lattice: coefficient 1 on the atoms the
// criterion selects.  rhs is zero-filled; callers that have measured values
// fill it in.
struct LinearSystem {
    std::vector<std::string> row_labels;                 // antichain text
    std::vector<std::vector<std::int8_t>> coefficients;  // rows x nodes
    std::vector<double> rhs;
};

inline LinearSystem criterion_matrix(Criterion crit, const Lattice& lattice) {
    LinearSystem sys;
    const std::size_t count = lattice.size();
    sys.row_labels.reserve(count);
    sys.coefficients.reserve(count);
    sys.rhs.assign(count, 0.0);
    for (std::size_t r = 0; r < count; ++r) {
        const Antichain alpha = lattice.antichain_of(static_cast<int>(r));
        sys.row_labels.push_back(to_string(alpha));
        std::vector<std::int8_t> row(count, 0);
        for (std::size_t c = 0; c < count; ++c)
            row[c] = criterion_holds(crit, lattice.node(static_cast<int>(c)), alpha) ? 1 : 0;
        sys.coefficients.push_back(std::move(row));
    }
    return sys;
}

namespace detail {

template <class Pred>
double sum_atoms_if(const AtomTable& atoms, Pred&& pred) {
    const Lattice& lattice = *atoms.lattice;
    double acc = 0.0;
    for (std::size_t i = 0; i < lattice.size(); ++i)
        if (pred(lattice.node(static_cast<int>(i)))) acc += atoms.values[i];
    return acc;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Restricted information

inline double restricted_info_from_atoms(const AtomTable& atoms, const Antichain& alpha) {
    return detail::sum_atoms_if(atoms, [&](const ParthoodDistribution& f) {
        return criterion_holds(Criterion::res, f, alpha);
    });
}

// Unique atoms from restricted-information values (one per node antichain);
// this is Moebius inversion over the dual order.
inline AtomTable invert_restricted(const std::vector<double>& per_node_values, const Lattice& lattice) {
    if (per_node_values.size() != lattice.size())
        throw std::invalid_argument("restricted-information values must cover every lattice node");
    AtomTable cumulative{&lattice, per_node_values};
    return moebius_invert_dual(cumulative);
}

// ---------------------------------------------------------------------------
// Weak synergy

// alpha may be empty: no constraints, so the sum runs over every atom and
// equals the joint mutual information.
inline double weak_synergy_from_atoms(const AtomTable& atoms, const Antichain& alpha) {
    return detail::sum_atoms_if(atoms, [&](const ParthoodDistribution& f) {
        return criterion_holds(Criterion::ws, f, alpha);
    });
}

// The antichain of subset-minimal collections contained in no member of
// alpha; I_ws(alpha) = I_res(translation).  Empty for alpha = {{1..n}}.
inline Antichain ws_as_restricted(const Antichain& alpha, int n) {
    if (alpha.max_index() > n)
        throw std::invalid_argument("antichain references sources beyond n=" + std::to_string(n));
    const int m = collection_count(n);
    std::vector<Collection> admissible;
    for (int c = 1; c < m; ++c) {
        Collection b{static_cast<std::uint32_t>(c)};
        bool inside = false;
        for (Collection a : alpha.collections())
            if (b.subset_of(a)) { inside = true; break; }
        if (!inside) admissible.push_back(b);
    }
    return Antichain::from_collections(std::move(admissible)); // canonicalization keeps the minimal ones
}

// ---------------------------------------------------------------------------
// Moderate synergy

inline double moderate_synergy_from_atoms(const AtomTable& atoms, const Antichain& alpha) {
    return detail::sum_atoms_if(atoms, [&](const ParthoodDistribution& f) {
        return criterion_holds(Criterion::ms, f, alpha);
    });
}

// Unique atoms from moderate-synergy values.  Per-node values for
// single-collection antichains are ignored (the zero condition makes those
// rows trivial); they are replaced by the conditional-mutual-information
// consistency equations, after which the weak-synergy system is recovered
// and inverted through its restricted-information translation.
inline AtomTable invert_moderate(const std::vector<double>& per_node_ms, const JointDistribution& dist,
                                 const Lattice& lattice) {
    if (per_node_ms.size() != lattice.size())
        throw std::invalid_argument("moderate-synergy values must cover every lattice node");
    const int n = lattice.n();
    if (dist.source_count() != n)
        throw std::invalid_argument("distribution and lattice disagree on the source count");

    auto single_collection_ws = [&](Collection a) {
        return conditional_mi(dist, complement_collection(a, n), a);
    };

    std::vector<double> ws_values(lattice.size(), 0.0);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const Antichain beta = lattice.antichain_of(static_cast<int>(i));
        if (beta.size() == 1)
            ws_values[i] = single_collection_ws(beta.collections().front());
        else
            ws_values[i] = per_node_ms[i] + single_collection_ws(beta.union_of());
    }

    // Translate ws rows to restricted-information rows.  The translation is
    // a bijection onto the nodes minus the bottom, whose restricted
    // information is the joint mutual information.
    std::vector<double> res_values(lattice.size(), 0.0);
    std::vector<bool> assigned(lattice.size(), false);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const Antichain gamma = ws_as_restricted(lattice.antichain_of(static_cast<int>(i)), n);
        if (gamma.empty()) continue; // ws of the top node, identically zero
        const int target = lattice.index_of(gamma);
        res_values[static_cast<std::size_t>(target)] = ws_values[i];
        assigned[static_cast<std::size_t>(target)] = true;
    }
    res_values[static_cast<std::size_t>(lattice.bottom_index())] = joint_mutual_information(dist);
    assigned[static_cast<std::size_t>(lattice.bottom_index())] = true;
    for (bool a : assigned)
        if (!a) throw std::logic_error("moderate-synergy system left a node without an equation");

    return invert_restricted(res_values, lattice);
}

// ---------------------------------------------------------------------------
// Unique information

inline double unique_info_from_atoms(const AtomTable& atoms, const Antichain& alpha) {
    const int index = atoms.lattice->index_of(alpha);
    if (index < 0) throw std::invalid_argument("antichain " + to_string(alpha) + " is not a lattice node");
    return atoms.at(index);
}

// ---------------------------------------------------------------------------
// Strong synergy rank check

struct RankCheckReport {
    int n = 0;
    int node_count = 0;
    int rank = 0;
    int zero_rows = 0;
    bool unique_pid_possible = false;                             // rank == node_count
    std::vector<std::pair<std::string, std::string>> duplicates;  // identical non-zero row pairs
    std::optional<std::pair<std::string, std::string>> witness;   // all-singletons vs all-(n-1)-subsets
};

namespace detail {

// Exact rank of a small 0/1 matrix via fraction-free (Bareiss) elimination.
inline int integer_rank(std::vector<std::vector<long long>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    long long prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace detail

// Builds the strong-synergy coefficient matrix and reports its defect: for
// n = 3 the rows of {1}{2}{3} and {1,2}{1,3}{2,3} are identical, so the
// system cannot pin down unique atoms.  Exact integer arithmetic
// throughout.  Supported for n <= 3, where the defect has a worked witness.
inline RankCheckReport strong_synergy_rank_check(const Lattice& lattice) {
    if (lattice.n() > 3)
        throw std::invalid_argument("strong-synergy rank check supports n <= 3");
    const LinearSystem sys = criterion_matrix(Criterion::syn, lattice);

    RankCheckReport report;
    report.n = lattice.n();
    report.node_count = static_cast<int>(lattice.size());

    std::vector<std::vector<long long>> m;
    m.reserve(sys.coefficients.size());
    for (const auto& row : sys.coefficients) m.emplace_back(row.begin(), row.end());
    report.rank = detail::integer_rank(m);
    report.unique_pid_possible = report.rank == report.node_count;

    auto row_zero = [&](std::size_t i) {
        for (std::int8_t v : sys.coefficients[i])
            if (v) return false;
        return true;
    };
    for (std::size_t i = 0; i < sys.coefficients.size(); ++i)
        if (row_zero(i)) ++report.zero_rows;

    for (std::size_t i = 0; i < sys.coefficients.size(); ++i) {
        if (row_zero(i)) continue;
        for (std::size_t j = i + 1; j < sys.coefficients.size(); ++j)
            if (sys.coefficients[i] == sys.coefficients[j])
                report.duplicates.emplace_back(sys.row_labels[i], sys.row_labels[j]);
    }

    // Canonical witness pair: all singletons vs all (n-1)-element collections.
    const int n = lattice.n();
    if (n >= 3) {
        std::vector<Collection> singletons, pairs;
        for (int i = 1; i <= n; ++i) singletons.push_back(Collection::of({i}));
        for (int i = 1; i <= n; ++i)
            pairs.push_back(complement_collection(Collection::of({i}), n));
        const std::string lo = to_string(Antichain::from_collections(singletons));
        const std::string hi = to_string(Antichain::from_collections(pairs));
        for (const auto& dup : report.duplicates)
            if ((dup.first == lo && dup.second == hi) || (dup.first == hi && dup.second == lo))
                report.witness = dup;
    }

    return report;
}

} // namespace pidlat
