#include "infnet/transforms.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace infnet {

namespace {

void require_positive_frame(double m, double n) {
    if (!(m > 0.0) || !(n > 0.0) || !std::isfinite(m) || !std::isfinite(n)) {
        throw Error(ErrorCode::invalid_argument,
                    "frame relation needs m, n > 0 (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
    }
}

}  // namespace

double sqrt_product(double a, double b) {
    const double product = a * b;
    if (product >= std::numeric_limits<double>::min() && product <= std::numeric_limits<double>::max()) {
        return std::sqrt(product);
    }
    return std::sqrt(a) * std::sqrt(b);
}

double FrameRelation::k() const {
    require_positive_frame(m, n);
    return sqrt_product(m, n);
}

double FrameRelation::multiplier() const {
    require_positive_frame(m, n);
    return std::sqrt(m / n);
}

bool Boost::light_like() const {
    return std::abs(beta) >= 1.0;
}

RealPair to_real(const PairQuantification& pair) {
    return {to_double(pair.dp), to_double(pair.dq)};
}

SpacetimeInterval to_spacetime(const RealPair& pair) {
    return {(pair.dp + pair.dq) / 2.0, (pair.dp - pair.dq) / 2.0};
}

RealPair pair_transform(const FrameRelation& rel, const RealPair& pair) {
    require_positive_frame(rel.m, rel.n);
    return {pair.dp * std::sqrt(rel.m / rel.n), pair.dq * std::sqrt(rel.n / rel.m)};
}

std::optional<PairQuantification> pair_transform_exact(const Rational& m, const Rational& n,
                                                       const PairQuantification& pair) {
    if (m <= 0 || n <= 0) throw Error(ErrorCode::invalid_argument, "frame relation needs m, n > 0");
    const auto root = exact_sqrt(Rational(m / n));
    if (!root) return std::nullopt;
    return PairQuantification{pair.dp * *root, pair.dq / *root};
}

FrameRelation compose(const FrameRelation& first, const FrameRelation& second) {
    require_positive_frame(first.m, first.n);
    require_positive_frame(second.m, second.n);
    return {first.m * second.m, first.n * second.n};
}

Boost beta_gamma(double m, double n) {
    if (!(m >= 0.0) || !(n >= 0.0)) throw Error(ErrorCode::invalid_argument, "m and n must be non-negative");
    if (m == 0.0 && n == 0.0) throw Error(ErrorCode::invalid_argument, "m and n are both zero");
    Boost b;
    b.beta = (m - n) / (m + n);
    if (m == 0.0 || n == 0.0) {
        b.gamma = std::numeric_limits<double>::infinity();
    } else {
        // 1 - beta^2 = 4mn / (m+n)^2, which stays accurate near |beta| = 1.
        b.gamma = (m + n) / (2.0 * sqrt_product(m, n));
    }
    return b;
}

Boost frame_boost(const FrameRelation& rel) {
    require_positive_frame(rel.m, rel.n);
    return beta_gamma(rel.n, rel.m);
}

SpacetimeInterval lorentz_boost(const Boost& boost, double dt, double dx) {
    if (boost.light_like()) throw Error(ErrorCode::light_like, "lorentz_boost needs |beta| < 1");
    const double g = boost.gamma;
    const double bg = boost.beta * boost.gamma;
    return {g * dt - bg * dx, -bg * dt + g * dx};
}

double interval_length(const PairQuantification& pair) {
    const Rational s = pair.scalar();
    if (s < 0) throw Error(ErrorCode::negative_scalar, "pair (" + to_string(pair.dp) + ", " + to_string(pair.dq) + ") is space-like");
    if (auto exact = exact_sqrt(s)) return to_double(*exact);
    return std::sqrt(to_double(s));
}

double interval_length(const RealPair& pair) {
    const double s = pair.scalar();
    if (s < 0.0) throw Error(ErrorCode::negative_scalar, "space-like pair");
    return std::sqrt(s);
}

std::optional<Rational> interval_length_exact(const PairQuantification& pair) {
    const Rational s = pair.scalar();
    if (s < 0) throw Error(ErrorCode::negative_scalar, "pair (" + to_string(pair.dp) + ", " + to_string(pair.dq) + ") is space-like");
    return exact_sqrt(s);
}

}  // namespace infnet
