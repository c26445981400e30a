#pragma once

#include <optional>

#include "infnet/geometry.hpp"
#include "infnet/rational.hpp"

namespace infnet {

// A unit-k interval on P maps to forward length m on P' and backward length
// n on Q', with k = sqrt(m n).
struct FrameRelation {
    double m = 1.0;
    double n = 1.0;

    double k() const;
    // Factor applied to Δp; Δq gets the reciprocal.
    double multiplier() const;
};

struct RealPair {
    double dp = 0.0;
    double dq = 0.0;

    double scalar() const { return dp * dq; }
};

struct SpacetimeInterval {
    double dt = 0.0;
    double dx = 0.0;
};

struct Boost {
    double beta = 0.0;
    double gamma = 1.0;  // +inf when |beta| == 1

    bool light_like() const;
};

// sqrt(a b) for a, b >= 0. One rounding when the product is a normal
// double; falls back to sqrt(a) sqrt(b) when it would overflow or underflow.
double sqrt_product(double a, double b);

RealPair to_real(const PairQuantification& pair);

// dt = (dp + dq) / 2, dx = (dp - dq) / 2
SpacetimeInterval to_spacetime(const RealPair& pair);

// (Δp sqrt(m/n), Δq sqrt(n/m)). Throws invalid_argument unless m, n > 0.
RealPair pair_transform(const FrameRelation& rel, const RealPair& pair);

// Exact variant; nullopt unless m/n is the square of a rational.
std::optional<PairQuantification> pair_transform_exact(const Rational& m, const Rational& n,
                                                       const PairQuantification& pair);

// Frame that applies `first` and then `second`.
FrameRelation compose(const FrameRelation& first, const FrameRelation& second);

// beta = (m - n) / (m + n); gamma is infinite when m or n is zero.
Boost beta_gamma(double m, double n);

// Boost that carries PQ coordinates into P'Q' coordinates, i.e. the one that
// agrees with pair_transform(rel, .). Its beta is -beta_gamma(rel.m, rel.n).beta:
// an event at rest for PQ moves with beta_gamma(m, n).beta as seen by P'Q'.
Boost frame_boost(const FrameRelation& rel);

// (γΔt − βγΔx, −βγΔt + γΔx). Throws light_like when |beta| == 1.
SpacetimeInterval lorentz_boost(const Boost& boost, double dt, double dx);

// sqrt(Δp Δq); throws negative_scalar for space-like pairs.
double interval_length(const PairQuantification& pair);
double interval_length(const RealPair& pair);
std::optional<Rational> interval_length_exact(const PairQuantification& pair);

}  // namespace infnet
