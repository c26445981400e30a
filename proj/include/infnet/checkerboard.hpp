#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "infnet/free_particle.hpp"

namespace infnet {

using Amplitude = std::complex<double>;

// (φ_P, φ_Q): amplitudes for having arrived by a P step or by a Q step.
struct Spinor {
    Amplitude phi_p{};
    Amplitude phi_q{};

    double norm() const { return std::norm(phi_p) + std::norm(phi_q); }
    bool operator==(const Spinor&) const = default;
};

// Half-integer lattice position stored doubled, so x = doubled / 2 exactly.
struct LatticeSite {
    std::int64_t doubled = 0;

    double x() const { return static_cast<double>(doubled) / 2.0; }
    auto operator<=>(const LatticeSite&) const = default;
};

inline constexpr double default_theta = std::numbers::pi / 4.0;

// P = [[cos θ, i sin θ], [0, 0]] and Q = [[0, 0], [i sin θ, cos θ]].
// At θ = π/4 the entries are exactly 1/√2 and i/√2.
class TransferMatrices {
public:
    using Matrix = std::array<std::array<Amplitude, 2>, 2>;

    explicit TransferMatrices(double theta = default_theta);

    double theta() const noexcept { return theta_; }
    double keep() const noexcept { return keep_; }               // cos θ
    Amplitude reverse() const noexcept { return {0.0, flip_}; }  // i sin θ
    const Matrix& mat_p() const noexcept { return p_; }
    const Matrix& mat_q() const noexcept { return q_; }

    Spinor apply_p(const Spinor& s) const;
    Spinor apply_q(const Spinor& s) const;

private:
    double theta_;
    double keep_;
    double flip_;
    Matrix p_{};
    Matrix q_{};
};

// Spinors on a contiguous range of doubled positions at one time step.
class SpinorField {
public:
    SpinorField() = default;
    SpinorField(std::size_t t, std::int64_t first_doubled, std::vector<Spinor> sites);

    static SpinorField point_source(const Spinor& s, LatticeSite at = {});
    static SpinorField point_source(Symbol helicity, LatticeSite at = {});

    std::size_t t() const noexcept { return t_; }
    std::int64_t first() const noexcept { return first_; }
    std::int64_t last() const noexcept { return first_ + static_cast<std::int64_t>(sites_.size()) - 1; }
    std::span<const Spinor> sites() const noexcept { return sites_; }

    Spinor at(LatticeSite site) const;  // zero outside the stored range
    double total_norm() const;
    double mean_x() const;
    // Smallest range holding every site whose probability exceeds `floor`.
    std::pair<LatticeSite, LatticeSite> support(double floor = 0.0) const;

private:
    std::size_t t_ = 0;
    std::int64_t first_ = 0;
    std::vector<Spinor> sites_;
};

// new φ_P(x) = row 0 of P applied at x + 1/2; new φ_Q(x) = row 1 of Q at x - 1/2.
SpinorField step_field(const SpinorField& field, const TransferMatrices& tm);

SpinorField propagate(const SpinorField& initial, std::size_t steps, const TransferMatrices& tm);

// Product of cos θ per repeated symbol and i sin θ per reversal; the first
// symbol is compared with `initial`.
Amplitude path_amplitude(const InfluenceSequence& word, Symbol initial, double theta = default_theta);

inline constexpr std::size_t path_sum_cap = 24;

// Sum of path_amplitude over all 2^steps words that run from x0 to x1 and end
// with `final_helicity`. Brute force; word ranks are split across threads.
Amplitude path_sum_kernel(Symbol initial, LatticeSite x0, Symbol final_helicity, LatticeSite x1, std::size_t steps,
                          double theta = default_theta);

// |P s|^2 + |Q s|^2 for a normalized spinor.
double one_step_probability_total(const Spinor& s, double theta = default_theta, double tolerance = 1e-12);

struct ZitterSample {
    std::size_t t = 0;
    double mean_x = 0.0;
    double norm = 0.0;
};

// ⟨x⟩ and total norm at t = 0..steps.
std::vector<ZitterSample> zitterbewegung_trace(const SpinorField& initial, std::size_t steps,
                                               const TransferMatrices& tm);

}  // namespace infnet
