#pragma once

/*
 * The shared-exclusion pointwise redundancy.
 *
 * For a realization (s_1,...,s_n,t) and an antichain {a_1,...,a_m}, the
 * measure is the pointwise mutual information between the target value and
 * the truth of the statement "some collection a_j took its realized
 * values":
 *
 *     i_sx(t : alpha) = log2( P(A | t) / P(A) ),
 *     A = OR_j AND_{i in a_j} (S_i = s_i).
 *
 * The realized sources themselves satisfy A, so both probabilities are
 * positive whenever the context realization has positive mass.
 *
 * The informative/misinformative split keeps the two surprisals apart:
 * i+ = -log2 P(A) and i- = -log2 P(A|t), non-negative and non-decreasing
 * towards the top of the lattice, with i_sx = i+ - i-.
 */

#include <cmath>

#include "pidlat/collections.hpp"
#include "pidlat/distribution.hpp"

namespace pidlat {

struct PointwiseContext {
    const JointDistribution* dist = nullptr;
    Realization realization;
};

// Context for a positive-mass realization; anything else is rejected.
inline PointwiseContext make_context(const JointDistribution& dist, const Realization& r) {
    if (!(dist.mass(r) > 0.0))
        throw std::invalid_argument("pointwise context requires a realization with positive mass");
    return PointwiseContext{&dist, r};
}

inline PointwiseContext make_context(const JointDistribution& dist, std::size_t row_index) {
    return make_context(dist, dist.rows()[row_index].realization);
}

struct EventProbability {
    double unconditional = 0.0;      // P(A)
    double conditional_on_target = 0.0; // P(A | T = t)
};

// Probability of the instantiated disjunction-of-conjunctions event, plain
// and conditioned on the context's target value.
inline EventProbability statement_event_probability(const PointwiseContext& ctx, const Antichain& alpha) {
    if (alpha.empty()) throw std::invalid_argument("shared-exclusion measure needs a non-empty antichain");
    const JointDistribution& dist = *ctx.dist;

    auto event = [&](const Realization& row) {
        for (Collection a : alpha.collections())
            if (JointDistribution::matches(row, ctx.realization, a)) return true;
        return false;
    };

    double p = 0.0, p_and_t = 0.0;
    for (const auto& row : dist.rows()) {
        if (!event(row.realization)) continue;
        p += row.p;
        if (row.realization.target_code == ctx.realization.target_code) p_and_t += row.p;
    }
    const double p_t = dist.target_marginal(ctx.realization.target_code);
    return {p, p_and_t / p_t};
}

inline double i_cap_sx(const PointwiseContext& ctx, const Antichain& alpha) {
    const EventProbability ev = statement_event_probability(ctx, alpha);
    return std::log2(ev.conditional_on_target / ev.unconditional);
}

struct SxSplit {
    double informative = 0.0;    // i+ = -log2 P(A)
    double misinformative = 0.0; // i- = -log2 P(A|t)
};

inline SxSplit i_cap_sx_split(const PointwiseContext& ctx, const Antichain& alpha) {
    const EventProbability ev = statement_event_probability(ctx, alpha);
    return {-std::log2(ev.unconditional), -std::log2(ev.conditional_on_target)};
}

} // namespace pidlat
