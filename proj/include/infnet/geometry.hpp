#pragma once

#include <array>

#include "infnet/network.hpp"
#include "infnet/projection.hpp"
#include "infnet/rational.hpp"

namespace infnet {

// (Δp, Δq) quantification of an interval by a chain pair.
struct PairQuantification {
    Rational dp;
    Rational dq;

    Rational scalar() const { return dp * dq; }
    bool operator==(const PairQuantification&) const = default;
};

PairQuantification operator+(const PairQuantification& a, const PairQuantification& b);

struct IntervalQuantification {
    std::array<Label, 4> quadruple{};  // (p_a, q_a, p_b, q_b)
    PairQuantification pair;
    Rational scalar;
};

// Along-chain (dp == dq) plus between-chain (dp == -dq) parts.
struct Decomposition {
    PairQuantification symmetric;
    PairQuantification antisymmetric;
};

struct MinkowskiScalar {
    Rational scalar;
    Rational dt;
    Rational dx;
};

// Chains agree on the lengths of each other's intervals, in both projection
// directions. Labels without a projection are skipped.
bool is_coordinated(const InfluenceNetwork& net, const Chain& p, const Chain& q);

// (Δp - Δq) / 2 with Δp = P q_j - p_i and Δq = q_j - Q p_i.
// Throws uncoordinated or missing_projection rather than guessing.
Rational distance(const InfluenceNetwork& net, const Chain& p, const Chain& q, Label p_i, Label q_j);

// Px = P Q̄ x, P̄x = P̄ Q x, Qx = Q P̄ x and Q̄x = Q̄ P x, all defined.
bool is_between(const InfluenceNetwork& net, EventId x, const Chain& p, const Chain& q);

// Generalized interval [a, b] for events that forward-project onto both
// chains and lie between them; other configurations are rejected.
IntervalQuantification quantify_interval(const InfluenceNetwork& net, EventId a, EventId b, const Chain& p,
                                         const Chain& q);

Decomposition decompose(const PairQuantification& pair);

MinkowskiScalar minkowski_scalar(const PairQuantification& pair);

}  // namespace infnet
