#include "infnet/free_particle.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "infnet/projection.hpp"

namespace infnet {

namespace {

void check_counts(std::size_t n_p, std::size_t n_q, std::size_t cap) {
    if (cap > 62) throw Error(ErrorCode::invalid_argument, "enumeration cap above 62");
    if (n_p + n_q > cap) {
        throw Error(ErrorCode::cap_exceeded,
                    std::to_string(n_p + n_q) + " symbols exceed the enumeration cap of " + std::to_string(cap));
    }
}

std::mt19937_64 word_stream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

// 53-bit uniform in [0, 1); P when below prob_p.
bool draw_p(std::mt19937_64& rng, double prob_p) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u < prob_p;
}

void check_probability(double prob_p) {
    if (!(prob_p >= 0.0 && prob_p <= 1.0)) throw Error(ErrorCode::invalid_argument, "probP must lie in [0, 1]");
}

}  // namespace

Symbol parse_symbol(char c) {
    if (c == 'P') return Symbol::P;
    if (c == 'Q') return Symbol::Q;
    throw Error(ErrorCode::invalid_argument, std::string("symbol must be P or Q, got '") + c + "'");
}

InfluenceSequence::InfluenceSequence(std::string word) : word_(std::move(word)) {
    for (char c : word_) parse_symbol(c);
}

std::size_t InfluenceSequence::count_p() const {
    return static_cast<std::size_t>(std::count(word_.begin(), word_.end(), 'P'));
}

std::size_t InfluenceSequence::count_q() const {
    return word_.size() - count_p();
}

std::vector<LatticePoint> SpacetimePath::points() const {
    std::vector<LatticePoint> out{start};
    out.reserve(steps.size() + 1);
    for (const auto& s : steps) out.push_back({out.back().x + s.dx, out.back().t + s.dt});
    return out;
}

LatticePoint SpacetimePath::end() const {
    return points().back();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result / i * (n - k + i) + result % i * (n - k + i) / i;
    }
    return result;
}

InfluenceSequence sequence_at_rank(std::size_t n_p, std::size_t n_q, std::uint64_t rank) {
    if (rank >= binomial(n_p + n_q, n_p)) throw Error(ErrorCode::invalid_argument, "rank out of range");
    std::string word;
    word.reserve(n_p + n_q);
    while (n_p + n_q > 0) {
        // words that put P next
        const std::uint64_t with_p = n_p == 0 ? 0 : binomial(n_p - 1 + n_q, n_q);
        if (rank < with_p) {
            word.push_back('P');
            --n_p;
        } else {
            rank -= with_p;
            word.push_back('Q');
            --n_q;
        }
    }
    return InfluenceSequence(std::move(word));
}

std::vector<InfluenceSequence> enumerate_sequences(std::size_t n_p, std::size_t n_q, std::size_t cap) {
    check_counts(n_p, n_q, cap);
    const std::uint64_t total = binomial(n_p + n_q, n_p);
    std::vector<InfluenceSequence> out(total);
    const auto n = static_cast<std::int64_t>(total);
    // Each thread unranks the head of its contiguous block and walks the rest
    // in lexicographic order.
#pragma omp parallel
    {
        const std::int64_t threads = omp_get_num_threads();
        const std::int64_t id = omp_get_thread_num();
        const std::int64_t begin = n * id / threads;
        const std::int64_t end = n * (id + 1) / threads;
        if (begin < end) {
            std::string word = sequence_at_rank(n_p, n_q, static_cast<std::uint64_t>(begin)).str();
            for (std::int64_t r = begin; r < end; ++r) {
                out[static_cast<std::size_t>(r)] = InfluenceSequence(word);
                std::next_permutation(word.begin(), word.end());
            }
        }
    }
    return out;
}

SpacetimePath sequence_to_path(const InfluenceSequence& word, const LatticePoint& start) {
    const Rational half(1, 2);
    SpacetimePath path{start, {}};
    path.steps.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        path.steps.push_back({half, word[i] == Symbol::P ? Rational(-half) : half});
    }
    return path;
}

std::vector<InfluenceSequence> consistent_orderings(std::span<const Label> p_events, std::span<const Label> q_events,
                                                    std::size_t cap) {
    for (auto list : {p_events, q_events}) {
        if (std::adjacent_find(list.begin(), list.end(), std::greater_equal<>{}) != list.end()) {
            throw Error(ErrorCode::invalid_argument, "detection labels must be strictly increasing");
        }
    }
    return enumerate_sequences(p_events.size(), q_events.size(), cap);
}

std::vector<InfluenceSequence> sample_sequences(std::size_t n_steps, double prob_p, std::uint64_t seed,
                                                std::size_t count) {
    check_probability(prob_p);
    std::vector<InfluenceSequence> out(count);
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        auto rng = word_stream(seed, static_cast<std::uint64_t>(i));
        std::string word(n_steps, 'Q');
        for (auto& c : word) {
            if (draw_p(rng, prob_p)) c = 'P';
        }
        out[static_cast<std::size_t>(i)] = InfluenceSequence(std::move(word));
    }
    return out;
}

SampleStatistics sample_beta(std::size_t n_steps, double prob_p, std::uint64_t seed, std::size_t count) {
    check_probability(prob_p);
    if (n_steps == 0 || count == 0) throw Error(ErrorCode::invalid_argument, "need at least one step and one word");
    double beta_sum = 0.0;
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) reduction(+ : beta_sum)
    for (std::int64_t i = 0; i < n; ++i) {
        auto rng = word_stream(seed, static_cast<std::uint64_t>(i));
        std::int64_t p_hits = 0;
        for (std::size_t s = 0; s < n_steps; ++s) p_hits += draw_p(rng, prob_p) ? 1 : 0;
        const auto steps = static_cast<std::int64_t>(n_steps);
        beta_sum += static_cast<double>(steps - 2 * p_hits) / static_cast<double>(steps);
    }
    SampleStatistics stats;
    stats.words = count;
    stats.steps = n_steps;
    stats.mean_beta = beta_sum / static_cast<double>(count);
    stats.expected_beta = 1.0 - 2.0 * prob_p;
    stats.sigma_of_mean =
        std::sqrt(4.0 * prob_p * (1.0 - prob_p) / (static_cast<double>(n_steps) * static_cast<double>(count)));
    return stats;
}

InfluenceNetwork build_free_particle_fixture(std::size_t n_p, std::size_t n_q, const InfluenceSequence& word) {
    if (word.count_p() != n_p || word.count_q() != n_q) {
        throw Error(ErrorCode::inconsistent_word, "word " + word.str() + " does not have " + std::to_string(n_p) +
                                                      " P and " + std::to_string(n_q) + " Q symbols");
    }
    InfluenceNetwork net(ConnectivityMode::restricted);
    net.add_chain(particle_chain);
    net.add_chain(left_observer_chain);
    net.add_chain(right_observer_chain);
    std::vector<EventId> pi, p, q;
    for (std::size_t k = 0; k < word.size(); ++k) pi.push_back(net.add_event(particle_chain));
    for (std::size_t k = 0; k < word.size(); ++k) p.push_back(net.add_event(left_observer_chain));
    for (std::size_t k = 0; k < word.size(); ++k) q.push_back(net.add_event(right_observer_chain));
    for (std::size_t k = 0; k < word.size(); ++k) {
        net.add_influence(pi[k], word[k] == Symbol::P ? p[k] : q[k]);
    }
    net.finalize();
    return net;
}

std::vector<StepProjection> particle_step_projections(const InfluenceNetwork& fixture) {
    const Chain& pi = fixture.chain(particle_chain);
    const Chain& p = fixture.chain(left_observer_chain);
    const Chain& q = fixture.chain(right_observer_chain);
    std::vector<StepProjection> out;
    for (Label k = 1; k < pi.size(); ++k) {
        const EventId a = pi.at(k);
        const EventId b = pi.at(k + 1);
        StepProjection step;
        const auto pa = forward_project(fixture, a, p);
        const auto pb = forward_project(fixture, b, p);
        const auto qa = forward_project(fixture, a, q);
        const auto qb = forward_project(fixture, b, q);
        if (pa && pb) step.dp = *pb - *pa;
        if (qa && qb) step.dq = *qb - *qa;
        out.push_back(step);
    }
    return out;
}

}  // namespace infnet
