#pragma once

/*
 * End-to-end decomposition of a joint distribution into information atoms.
 *
 * The pointwise shared-exclusion measure is evaluated on every lattice node
 * for every positive-mass realization, Moebius-inverted into pointwise
 * atoms (the informative and misinformative surprisal tables are inverted
 * separately), and averaged with the realization masses.  The averaged
 * atoms are checked against every mutual information term: by minimal
 * consistency, I(T : a) must equal the sum of atoms whose parthood
 * distribution has value 1 on a.
 *
 * Selecting an alternate measure (res, ws, ms, unq) reports that measure's
 * per-node values and routes the atoms through the corresponding inverse
 * system, exercising its invertibility end to end; the atoms themselves
 * agree with the shared-exclusion ones up to solver round-off.
 */

#include <cmath>
#include <string>
#include <vector>

#include "pidlat/alternate.hpp"
#include "pidlat/atoms.hpp"
#include "pidlat/information.hpp"
#include "pidlat/redundancy.hpp"

namespace pidlat {

enum class Measure { sx, res, ws, ms, unq };

inline std::string to_string(Measure m) {
    switch (m) {
        case Measure::sx: return "sx";
        case Measure::res: return "res";
        case Measure::ws: return "ws";
        case Measure::ms: return "ms";
        case Measure::unq: return "unq";
    }
    return "?";
}

inline Measure parse_measure(const std::string& name) {
    if (name == "sx") return Measure::sx;
    if (name == "res") return Measure::res;
    if (name == "ws") return Measure::ws;
    if (name == "ms") return Measure::ms;
    if (name == "unq") return Measure::unq;
    throw std::invalid_argument("unknown measure '" + name + "' (expected sx, res, ws, ms or unq)");
}

struct CollectionResidual {
    Collection collection;
    double residual = 0.0; // I(T:a) - sum of atoms with f(a) = 1
};

struct ConsistencyReport {
    double tolerance = 1e-9;
    double max_abs_residual = 0.0;
    Collection worst;
    bool pass = false;
    std::vector<CollectionResidual> residuals; // every non-empty collection, ascending mask
};

// Minimal-consistency check of an averaged atom table against the
// distribution's mutual information terms.
inline ConsistencyReport validate_consistency(const AtomTable& averaged, const JointDistribution& dist,
                                              double tolerance = 1e-9) {
    const Lattice& lattice = *averaged.lattice;
    ConsistencyReport report;
    report.tolerance = tolerance;
    const int m = collection_count(lattice.n());
    for (int c = 1; c < m; ++c) {
        const Collection a{static_cast<std::uint32_t>(c)};
        double atom_sum = 0.0;
        for (std::size_t i = 0; i < lattice.size(); ++i)
            if (lattice.node(static_cast<int>(i)).value(a)) atom_sum += averaged.values[i];
        const double residual = mutual_information(dist, a) - atom_sum;
        report.residuals.push_back({a, residual});
        if (std::abs(residual) > report.max_abs_residual || report.worst.empty()) {
            report.max_abs_residual = std::abs(residual);
            report.worst = a;
        }
    }
    report.pass = report.max_abs_residual <= tolerance;
    return report;
}

struct PointwiseDecomposition {
    Realization realization;
    double mass = 0.0;
    AtomTable measure_values; // i_sx per node
    AtomTable atoms;
    AtomTable atoms_plus;  // from the informative surprisals
    AtomTable atoms_minus; // from the misinformative surprisals
};

struct DecompositionResult {
    Measure measure = Measure::sx;
    const Lattice* lattice = nullptr;
    std::vector<PointwiseDecomposition> pointwise; // ascending realization key
    AtomTable averaged;
    AtomTable averaged_plus;
    AtomTable averaged_minus;
    std::vector<double> measure_values; // per node, selected measure from the averaged atoms
    ConsistencyReport diagnostics;
};

inline DecompositionResult decompose(const JointDistribution& dist, Measure measure, const Lattice& lattice,
                                     double tolerance = 1e-9) {
    if (dist.source_count() != lattice.n())
        throw std::invalid_argument("distribution has " + std::to_string(dist.source_count()) +
                                    " sources but the lattice was built for n=" + std::to_string(lattice.n()));

    const std::vector<Antichain> antichains = all_antichains(lattice);

    DecompositionResult result;
    result.measure = measure;
    result.lattice = &lattice;
    result.averaged = zero_table(lattice);
    result.averaged_plus = zero_table(lattice);
    result.averaged_minus = zero_table(lattice);

    for (const auto& row : dist.rows()) {
        if (row.p <= 0.0) continue;
        const PointwiseContext ctx{&dist, row.realization};

        PointwiseDecomposition pw;
        pw.realization = row.realization;
        pw.mass = row.p;
        pw.measure_values = zero_table(lattice);
        AtomTable plus = zero_table(lattice), minus = zero_table(lattice);
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            const EventProbability ev = statement_event_probability(ctx, antichains[i]);
            pw.measure_values.values[i] = std::log2(ev.conditional_on_target / ev.unconditional);
            plus.values[i] = -std::log2(ev.unconditional);
            minus.values[i] = -std::log2(ev.conditional_on_target);
        }
        pw.atoms = moebius_invert(pw.measure_values);
        pw.atoms_plus = moebius_invert(plus);
        pw.atoms_minus = moebius_invert(minus);

        for (std::size_t i = 0; i < lattice.size(); ++i) {
            result.averaged.values[i] += row.p * pw.atoms.values[i];
            result.averaged_plus.values[i] += row.p * pw.atoms_plus.values[i];
            result.averaged_minus.values[i] += row.p * pw.atoms_minus.values[i];
        }
        result.pointwise.push_back(std::move(pw));
    }

    // Per-node values of the selected measure, and for the alternate
    // systems a pass through their inverse problem.
    result.measure_values.assign(lattice.size(), 0.0);
    switch (measure) {
        case Measure::sx: {
            const AtomTable forward = accumulate_down(result.averaged);
            result.measure_values = forward.values;
            break;
        }
        case Measure::res: {
            const AtomTable forward = accumulate_up(result.averaged);
            result.measure_values = forward.values;
            result.averaged = invert_restricted(result.measure_values, lattice);
            break;
        }
        case Measure::ws: {
            for (std::size_t i = 0; i < lattice.size(); ++i)
                result.measure_values[i] = weak_synergy_from_atoms(result.averaged, antichains[i]);
            // ws values determine the restricted-information values through
            // the translation; rebuild the atoms from those.
            std::vector<double> res_values(lattice.size(), 0.0);
            for (std::size_t i = 0; i < lattice.size(); ++i) {
                const Antichain gamma = ws_as_restricted(antichains[i], lattice.n());
                if (gamma.empty()) continue;
                res_values[static_cast<std::size_t>(lattice.index_of(gamma))] = result.measure_values[i];
            }
            res_values[static_cast<std::size_t>(lattice.bottom_index())] = joint_mutual_information(dist);
            result.averaged = invert_restricted(res_values, lattice);
            break;
        }
        case Measure::ms: {
            for (std::size_t i = 0; i < lattice.size(); ++i)
                result.measure_values[i] = moderate_synergy_from_atoms(result.averaged, antichains[i]);
            result.averaged = invert_moderate(result.measure_values, dist, lattice);
            break;
        }
        case Measure::unq: {
            result.measure_values = result.averaged.values; // I_unq(alpha) = atom at alpha
            break;
        }
    }

    result.diagnostics = validate_consistency(result.averaged, dist, tolerance);
    return result;
}

} // namespace pidlat
