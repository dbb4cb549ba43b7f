#pragma once

/*
 * Classical pointwise and average information quantities, log base 2
 * (bits) throughout.
 */

#include <cmath>

#include "pidlat/distribution.hpp"

namespace pidlat {

// log2( P(t | s_a) / P(t) ).  May be negative (misinformation) and is
// -inf when the realized sources exclude the target value.  Conditioning
// on the empty collection yields 0.
inline double pointwise_mi(const JointDistribution& dist, const Realization& r, Collection a) {
    if (a.empty()) return 0.0;
    const double p_t = dist.target_marginal(r.target_code);
    const double p_a = dist.source_match_probability(r, a);
    if (p_t <= 0.0 || p_a <= 0.0)
        throw std::domain_error("pointwise mutual information conditioned on a zero-probability event");
    const double p_at = dist.source_match_and_target_probability(r, a, r.target_code);
    return std::log2(p_at / (p_a * p_t));
}

// Mass-weighted average of the pointwise mutual information; >= 0.
inline double mutual_information(const JointDistribution& dist, Collection a) {
    if (a.empty()) return 0.0;
    double total = 0.0;
    for (const auto& row : dist.rows()) {
        if (row.p <= 0.0) continue; // 0 log 0 convention
        total += row.p * pointwise_mi(dist, row.realization, a);
    }
    return total;
}

inline double joint_mutual_information(const JointDistribution& dist) {
    return mutual_information(dist, full_collection(dist.source_count()));
}

// I(T : a | given) = I(T : a u given) - I(T : given), the chain-rule form.
inline double conditional_mi(const JointDistribution& dist, Collection a, Collection given) {
    Collection joint{a.mask | given.mask};
    return mutual_information(dist, joint) - mutual_information(dist, given);
}

} // namespace pidlat
