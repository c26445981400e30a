#pragma once

#include "infnet/transforms.hpp"

namespace infnet {

// Step sizes of the half-unit lattice if the unit is the electron Compton scale.
// Documentation only; nothing here carries physical units.
inline constexpr double compton_time_step_seconds = 8e-21;
inline constexpr double compton_length_step_meters = 2.4e-12;

// Influence counts per unit of projected interval on each observer chain.
struct RatePair {
    double r_p = 0.0;
    double r_q = 0.0;
};

struct Kinematics {
    double mass = 0.0;      // sqrt(rP rQ)
    double energy = 0.0;    // (rP + rQ) / 2
    double momentum = 0.0;  // (rQ - rP) / 2
    double beta = 0.0;      // momentum / energy
};

// (count / Δp, count / Δq); throws zero_interval for non-positive intervals.
RatePair rates_from_counts(double count, double dp, double dq);

Kinematics kinematics_from_rates(const RatePair& rates);

// Counts are frame invariant and intervals follow pair_transform, so
// rP' = rP sqrt(n/m) and rQ' = rQ sqrt(m/n).
RatePair transform_rates(const FrameRelation& rel, const RatePair& rates);

// (Δp − Δq) / (Δp + Δq), cross-checked against momentum / energy.
double beta_consistency(double dp, double dq);

}  // namespace infnet
