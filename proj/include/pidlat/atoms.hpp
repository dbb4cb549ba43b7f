#pragma once

/*
 * Per-node value tables and Moebius inversion over the lattice.
 *
 * A cumulative table assigns each node the sum of atoms over its down-set
 * (or up-set, for the dual measures).  Inversion recovers the atoms by a
 * subtraction pass along a linear extension of the order; the system is
 * unitriangular, so the solution is exact and unique.  Down-set membership
 * is a mask-inclusion test, no cover-graph traversal involved.
 */

#include <numeric>
#include <vector>

#include "pidlat/lattice.hpp"

namespace pidlat {

struct AtomTable {
    const Lattice* lattice = nullptr;
    std::vector<double> values; // one per node, lattice node order

    double at(int index) const { return values[static_cast<std::size_t>(index)]; }
};

inline AtomTable zero_table(const Lattice& lattice) {
    return {&lattice, std::vector<double>(lattice.size(), 0.0)};
}

// Evaluate a per-antichain measure at every node.
template <class MeasureFn>
AtomTable measure_on_lattice(const Lattice& lattice, const std::vector<Antichain>& antichains,
                             MeasureFn&& measure) {
    AtomTable out = zero_table(lattice);
    for (std::size_t i = 0; i < lattice.size(); ++i)
        out.values[i] = measure(antichains[i]);
    return out;
}

template <class MeasureFn>
AtomTable measure_on_lattice(const Lattice& lattice, MeasureFn&& measure) {
    std::vector<Antichain> antichains;
    antichains.reserve(lattice.size());
    for (std::size_t i = 0; i < lattice.size(); ++i) antichains.push_back(lattice.antichain_of(static_cast<int>(i)));
    return measure_on_lattice(lattice, antichains, measure);
}

inline std::vector<Antichain> all_antichains(const Lattice& lattice) {
    std::vector<Antichain> out;
    out.reserve(lattice.size());
    for (std::size_t i = 0; i < lattice.size(); ++i) out.push_back(lattice.antichain_of(static_cast<int>(i)));
    return out;
}

namespace detail {

// Node indices ordered so that strictly-smaller lattice elements come
// first: descending popcount for the primal order (bottom has the most
// ones), ascending for the dual.  Ties break by ascending table.
inline std::vector<int> linear_extension(const Lattice& lattice, bool bottom_first) {
    std::vector<int> order(lattice.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int pa = lattice.node(a).ones(), pb = lattice.node(b).ones();
        if (pa != pb) return bottom_first ? pa > pb : pa < pb;
        return lattice.node(a).table < lattice.node(b).table;
    });
    return order;
}

// g strictly below f (primal): ones(g) properly contains ones(f).
inline bool strictly_below(const ParthoodDistribution& g, const ParthoodDistribution& f) {
    return g.table != f.table && (g.table & f.table) == f.table;
}

inline AtomTable invert(const AtomTable& cumulative, bool down_sets) {
    const Lattice& lattice = *cumulative.lattice;
    AtomTable atoms = cumulative;
    const std::vector<int> order = linear_extension(lattice, down_sets);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const ParthoodDistribution& f = lattice.node(order[i]);
        double acc = 0.0;
        for (std::size_t j = 0; j < i; ++j) {
            const ParthoodDistribution& g = lattice.node(order[j]);
            const bool strict = down_sets ? strictly_below(g, f) : strictly_below(f, g);
            if (strict) acc += atoms.at(order[j]);
        }
        atoms.values[static_cast<std::size_t>(order[i])] -= acc;
    }
    return atoms;
}

} // namespace detail

// Atoms from down-set sums: table(f) = sum over g <= f of atom(g).
inline AtomTable moebius_invert(const AtomTable& cumulative) {
    return detail::invert(cumulative, true);
}

// Atoms from up-set sums (the dual order, used by restricted information).
inline AtomTable moebius_invert_dual(const AtomTable& cumulative) {
    return detail::invert(cumulative, false);
}

// Forward direction: per-node down-set sums of an atom table.
inline AtomTable accumulate_down(const AtomTable& atoms) {
    const Lattice& lattice = *atoms.lattice;
    AtomTable out = zero_table(lattice);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const ParthoodDistribution& f = lattice.node(static_cast<int>(i));
        double acc = 0.0;
        for (std::size_t j = 0; j < lattice.size(); ++j) {
            const ParthoodDistribution& g = lattice.node(static_cast<int>(j));
            if ((g.table & f.table) == f.table) acc += atoms.values[j]; // g <= f
        }
        out.values[i] = acc;
    }
    return out;
}

inline AtomTable accumulate_up(const AtomTable& atoms) {
    const Lattice& lattice = *atoms.lattice;
    AtomTable out = zero_table(lattice);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const ParthoodDistribution& f = lattice.node(static_cast<int>(i));
        double acc = 0.0;
        for (std::size_t j = 0; j < lattice.size(); ++j) {
            const ParthoodDistribution& g = lattice.node(static_cast<int>(j));
            if ((g.table & f.table) == g.table) acc += atoms.values[j]; // g >= f
        }
        out.values[i] = acc;
    }
    return out;
}

// Sum of atoms at or below the node labelled by alpha (the redundancy of
// alpha; forward direction of the inversion).
inline double redundancy_from_atoms(const AtomTable& atoms, const Antichain& alpha) {
    const Lattice& lattice = *atoms.lattice;
    const ParthoodDistribution node = parthood_from_antichain(alpha, lattice.n());
    double acc = 0.0;
    for (std::size_t j = 0; j < lattice.size(); ++j) {
        const ParthoodDistribution& g = lattice.node(static_cast<int>(j));
        if ((g.table & node.table) == node.table) acc += atoms.values[j];
    }
    return acc;
}

} // namespace pidlat
