#include "infnet/reference.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace infnet::reference {

namespace {

std::vector<bool> reachable_from(const Adjacency& out, std::size_t start) {
    std::vector<bool> seen(out.size(), false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : out[v]) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

Adjacency predecessors(const Adjacency& out) {
    Adjacency in(out.size());
    for (std::size_t v = 0; v < out.size(); ++v) {
        for (auto w : out[v]) in[w].push_back(static_cast<std::uint32_t>(v));
    }
    return in;
}

}  // namespace

Reachability transitive_closure(const Adjacency& successors) {
    Reachability reach(successors.size());
    for (std::size_t v = 0; v < successors.size(); ++v) {
        const auto seen = reachable_from(successors, v);
        for (std::size_t w = 0; w < seen.size(); ++w) {
            if (seen[w]) reach.set(v, w);
        }
    }
    return reach;
}

std::vector<Edge> transitive_reduction(const InfluenceNetwork& net) {
    std::vector<Edge> kept;
    const Adjacency& out = net.successors();
    for (std::size_t u = 0; u < out.size(); ++u) {
        for (auto v : out[u]) {
            Adjacency without = out;
            auto& row = without[u];
            row.erase(std::find(row.begin(), row.end(), v));
            if (!reachable_from(without, u)[v]) kept.emplace_back(net.id_at(u), net.id_at(v));
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::optional<Label> forward_project(const InfluenceNetwork& net, EventId x, const Chain& onto) {
    const auto seen = reachable_from(net.successors(), net.index_of(x));
    std::optional<Label> best;
    for (Label l = 1; l <= onto.size(); ++l) {
        if (seen[net.index_of(onto.at(l))] && (!best || l < *best)) best = l;
    }
    return best;
}

std::optional<Label> backward_project(const InfluenceNetwork& net, EventId x, const Chain& onto) {
    const auto seen = reachable_from(predecessors(net.successors()), net.index_of(x));
    std::optional<Label> best;
    for (Label l = 1; l <= onto.size(); ++l) {
        if (seen[net.index_of(onto.at(l))] && (!best || l > *best)) best = l;
    }
    return best;
}

bool is_coordinated(const InfluenceNetwork& net, const Chain& p, const Chain& q) {
    auto agrees = [&](const Chain& from, const Chain& onto, bool forward) {
        for (Label lo = 1; lo <= from.size(); ++lo) {
            for (Label hi = lo; hi <= from.size(); ++hi) {
                const auto a = forward ? reference::forward_project(net, from.at(lo), onto) : reference::backward_project(net, from.at(lo), onto);
                const auto b = forward ? reference::forward_project(net, from.at(hi), onto) : reference::backward_project(net, from.at(hi), onto);
                if (a && b && *b - *a != hi - lo) return false;
            }
        }
        return true;
    };
    return agrees(p, q, true) && agrees(p, q, false) && agrees(q, p, true) && agrees(q, p, false);
}

namespace {

void extend(std::string& prefix, std::size_t p_left, std::size_t q_left, std::vector<InfluenceSequence>& out) {
    if (p_left == 0 && q_left == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (p_left > 0) {
        prefix.push_back('P');
        extend(prefix, p_left - 1, q_left, out);
        prefix.pop_back();
    }
    if (q_left > 0) {
        prefix.push_back('Q');
        extend(prefix, p_left, q_left - 1, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<InfluenceSequence> enumerate_sequences(std::size_t n_p, std::size_t n_q) {
    std::string prefix;
    std::vector<InfluenceSequence> out;
    extend(prefix, n_p, n_q, out);
    return out;
}

SpinorField step_field(const SpinorField& field, const TransferMatrices& tm) {
    const auto old = field.sites();
    std::vector<Spinor> next(old.size() + 2);
    for (std::size_t i = 0; i < old.size(); ++i) {
        const Spinor to_left = tm.apply_p(old[i]);
        const Spinor to_right = tm.apply_q(old[i]);
        // old index i is new index i + 1; P arrivals land one half-step left.
        next[i].phi_p += to_left.phi_p;
        next[i].phi_q += to_left.phi_q;
        next[i + 2].phi_p += to_right.phi_p;
        next[i + 2].phi_q += to_right.phi_q;
    }
    return SpinorField(field.t() + 1, field.first() - 1, std::move(next));
}

Amplitude path_sum_kernel(Symbol initial, LatticeSite x0, Symbol final_helicity, LatticeSite x1, std::size_t steps,
                          double theta) {
    if (steps == 0) return (x0 == x1 && initial == final_helicity) ? Amplitude{1.0, 0.0} : Amplitude{};
    const LatticePoint start{Rational(x0.doubled, 2), Rational(0)};
    const Rational target(x1.doubled, 2);
    Amplitude sum{};
    std::string word(steps, 'P');
    // Odometer over {P, Q}^steps.
    while (true) {
        const InfluenceSequence seq(word);
        if (seq[steps - 1] == final_helicity && sequence_to_path(seq, start).end().x == target) {
            sum += path_amplitude(seq, initial, theta);
        }
        std::size_t i = 0;
        while (i < steps && word[i] == 'Q') word[i++] = 'P';
        if (i == steps) break;
        word[i] = 'Q';
    }
    return sum;
}

SampleStatistics sample_beta(std::size_t n_steps, double prob_p, std::uint64_t seed, std::size_t count) {
    const auto words = sample_sequences(n_steps, prob_p, seed, count);
    double sum = 0.0;
    for (const auto& w : words) {
        sum += (static_cast<double>(w.count_q()) - static_cast<double>(w.count_p())) / static_cast<double>(n_steps);
    }
    SampleStatistics stats;
    stats.words = count;
    stats.steps = n_steps;
    stats.mean_beta = sum / static_cast<double>(count);
    stats.expected_beta = 1.0 - 2.0 * prob_p;
    stats.sigma_of_mean =
        std::sqrt(4.0 * prob_p * (1.0 - prob_p) / (static_cast<double>(n_steps) * static_cast<double>(count)));
    return stats;
}

}  // namespace infnet::reference
