#include "infnet/checkerboard.hpp"

#include <bit>
#include <cmath>

namespace infnet {

TransferMatrices::TransferMatrices(double theta) : theta_(theta) {
    if (!(theta > 0.0 && theta < std::numbers::pi / 2.0)) {
        throw Error(ErrorCode::invalid_argument, "theta must lie in (0, pi/2)");
    }
    if (theta == default_theta) {
        keep_ = flip_ = 1.0 / std::numbers::sqrt2;
    } else {
        keep_ = std::cos(theta);
        flip_ = std::sin(theta);
    }
    p_[0] = {Amplitude{keep_, 0.0}, Amplitude{0.0, flip_}};
    q_[1] = {Amplitude{0.0, flip_}, Amplitude{keep_, 0.0}};
}

Spinor TransferMatrices::apply_p(const Spinor& s) const {
    return {p_[0][0] * s.phi_p + p_[0][1] * s.phi_q, p_[1][0] * s.phi_p + p_[1][1] * s.phi_q};
}

Spinor TransferMatrices::apply_q(const Spinor& s) const {
    return {q_[0][0] * s.phi_p + q_[0][1] * s.phi_q, q_[1][0] * s.phi_p + q_[1][1] * s.phi_q};
}

SpinorField::SpinorField(std::size_t t, std::int64_t first_doubled, std::vector<Spinor> sites)
    : t_(t), first_(first_doubled), sites_(std::move(sites)) {}

SpinorField SpinorField::point_source(const Spinor& s, LatticeSite at) {
    return SpinorField(0, at.doubled, {s});
}

SpinorField SpinorField::point_source(Symbol helicity, LatticeSite at) {
    Spinor s;
    (helicity == Symbol::P ? s.phi_p : s.phi_q) = 1.0;
    return point_source(s, at);
}

Spinor SpinorField::at(LatticeSite site) const {
    if (site.doubled < first_ || site.doubled > last()) return {};
    return sites_[static_cast<std::size_t>(site.doubled - first_)];
}

double SpinorField::total_norm() const {
    double total = 0.0;
    for (const auto& s : sites_) total += s.norm();
    return total;
}

double SpinorField::mean_x() const {
    double moment = 0.0;
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        moment += LatticeSite{first_ + static_cast<std::int64_t>(i)}.x() * sites_[i].norm();
    }
    return moment;
}

std::pair<LatticeSite, LatticeSite> SpinorField::support(double floor) const {
    std::int64_t lo = last() + 1;
    std::int64_t hi = first_ - 1;
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        if (sites_[i].norm() > floor) {
            const std::int64_t d = first_ + static_cast<std::int64_t>(i);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
    }
    return {LatticeSite{lo}, LatticeSite{hi}};
}

SpinorField step_field(const SpinorField& field, const TransferMatrices& tm) {
    const auto old = field.sites();
    const std::int64_t first = field.first() - 1;
    const auto width = static_cast<std::int64_t>(old.size()) + 2;
    std::vector<Spinor> next(static_cast<std::size_t>(width));
    const double c = tm.keep();
    const Amplitude r = tm.reverse();
    const auto old_size = static_cast<std::int64_t>(old.size());

    // new site j sits at first + j; its P arrival comes from old index j, its
    // Q arrival from old index j - 2.
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < width; ++j) {
        Spinor out;
        if (j < old_size) {
            const Spinor& right = old[static_cast<std::size_t>(j)];
            out.phi_p = c * right.phi_p + r * right.phi_q;
        }
        if (j >= 2) {
            const Spinor& left = old[static_cast<std::size_t>(j - 2)];
            out.phi_q = r * left.phi_p + c * left.phi_q;
        }
        next[static_cast<std::size_t>(j)] = out;
    }
    return SpinorField(field.t() + 1, first, std::move(next));
}

SpinorField propagate(const SpinorField& initial, std::size_t steps, const TransferMatrices& tm) {
    SpinorField field = initial;
    for (std::size_t i = 0; i < steps; ++i) field = step_field(field, tm);
    return field;
}

Amplitude path_amplitude(const InfluenceSequence& word, Symbol initial, double theta) {
    const TransferMatrices tm(theta);
    Amplitude amplitude{1.0, 0.0};
    Symbol previous = initial;
    for (std::size_t i = 0; i < word.size(); ++i) {
        amplitude *= word[i] == previous ? Amplitude{tm.keep(), 0.0} : tm.reverse();
        previous = word[i];
    }
    return amplitude;
}

Amplitude path_sum_kernel(Symbol initial, LatticeSite x0, Symbol final_helicity, LatticeSite x1, std::size_t steps,
                          double theta) {
    if (steps > path_sum_cap) {
        throw Error(ErrorCode::cap_exceeded,
                    std::to_string(steps) + " steps exceed the path-sum cap of " + std::to_string(path_sum_cap));
    }
    if (steps == 0) return (x0 == x1 && initial == final_helicity) ? Amplitude{1.0, 0.0} : Amplitude{};

    const TransferMatrices tm(theta);
    const auto n = static_cast<int>(steps);
    const std::int64_t shift = x1.doubled - x0.doubled;
    if ((shift + n) % 2 != 0 || std::abs(shift) > n) return {};
    const int q_count = static_cast<int>((shift + n) / 2);

    // Bit i of a word is 1 for Q. Amplitude = cos^(n-R) (i sin)^R.
    std::vector<Amplitude> factor(steps + 1);
    for (int reversals = 0; reversals <= n; ++reversals) {
        factor[static_cast<std::size_t>(reversals)] =
            std::pow(tm.keep(), n - reversals) * std::pow(tm.reverse(), reversals);
    }
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    const std::uint64_t initial_bit = initial == Symbol::Q ? 1 : 0;
    const std::uint64_t final_bit = final_helicity == Symbol::Q ? 1 : 0;
    const auto words = static_cast<std::int64_t>(std::uint64_t{1} << n);

    double re = 0.0;
    double im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : re, im)
    for (std::int64_t rank = 0; rank < words; ++rank) {
        const auto w = static_cast<std::uint64_t>(rank);
        if (std::popcount(w) != q_count) continue;
        if (((w >> (n - 1)) & 1u) != final_bit) continue;
        const std::uint64_t previous = ((w << 1) | initial_bit) & mask;
        const Amplitude a = factor[static_cast<std::size_t>(std::popcount(w ^ previous))];
        re += a.real();
        im += a.imag();
    }
    return {re, im};
}

double one_step_probability_total(const Spinor& s, double theta, double tolerance) {
    if (std::abs(s.norm() - 1.0) > tolerance) {
        throw Error(ErrorCode::invalid_argument, "spinor is not normalized");
    }
    const TransferMatrices tm(theta);
    return tm.apply_p(s).norm() + tm.apply_q(s).norm();
}

std::vector<ZitterSample> zitterbewegung_trace(const SpinorField& initial, std::size_t steps,
                                               const TransferMatrices& tm) {
    std::vector<ZitterSample> trace;
    trace.reserve(steps + 1);
    SpinorField field = initial;
    for (std::size_t i = 0;; ++i) {
        trace.push_back({field.t(), field.mean_x(), field.total_norm()});
        if (i == steps) break;
        field = step_field(field, tm);
    }
    return trace;
}

}  // namespace infnet
