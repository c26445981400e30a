#include "infnet/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace infnet {

RatePair rates_from_counts(double count, double dp, double dq) {
    if (!(dp > 0.0) || !(dq > 0.0)) throw Error(ErrorCode::zero_interval, "rates need Δp > 0 and Δq > 0");
    if (!(count >= 0.0)) throw Error(ErrorCode::invalid_argument, "count must be non-negative");
    return {count / dp, count / dq};
}

Kinematics kinematics_from_rates(const RatePair& rates) {
    if (!(rates.r_p >= 0.0) || !(rates.r_q >= 0.0)) throw Error(ErrorCode::invalid_argument, "rates must be non-negative");
    if (rates.r_p == 0.0 && rates.r_q == 0.0) throw Error(ErrorCode::invalid_argument, "both rates are zero");
    Kinematics k;
    k.mass = sqrt_product(rates.r_p, rates.r_q);
    k.energy = 0.5 * rates.r_p + 0.5 * rates.r_q;
    k.momentum = 0.5 * rates.r_q - 0.5 * rates.r_p;
    k.beta = k.momentum / k.energy;
    return k;
}

RatePair transform_rates(const FrameRelation& rel, const RatePair& rates) {
    const double mu = rel.multiplier();
    return {rates.r_p / mu, rates.r_q * mu};
}

double beta_consistency(double dp, double dq) {
    if (!(dp >= 0.0) || !(dq >= 0.0) || !(dp + dq > 0.0)) {
        throw Error(ErrorCode::zero_interval, "beta needs Δp + Δq > 0 with non-negative projections");
    }
    const double beta = (dp - dq) / (dp + dq);
    if (dp > 0.0 && dq > 0.0) {
        const double via_rates = kinematics_from_rates(rates_from_counts(1.0, dp, dq)).beta;
        if (std::abs(via_rates - beta) > 1e-12 * std::max(1.0, std::abs(beta))) {
            throw std::logic_error("beta from intervals disagrees with momentum / energy");
        }
    }
    return beta;
}

}  // namespace infnet
