#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infnet/network.hpp"
#include "infnet/rational.hpp"

namespace infnet {

// Which observer an influence reached. Also used as the helicity of a
// checkerboard amplitude (the direction of the previous influence).
enum class Symbol : char { P = 'P', Q = 'Q' };

Symbol parse_symbol(char c);

// Word over {P, Q}: the observer hit by each successive influence.
class InfluenceSequence {
public:
    InfluenceSequence() = default;
    explicit InfluenceSequence(std::string word);

    const std::string& str() const noexcept { return word_; }
    std::size_t size() const noexcept { return word_.size(); }
    bool empty() const noexcept { return word_.empty(); }
    Symbol operator[](std::size_t i) const { return static_cast<Symbol>(word_[i]); }
    std::size_t count_p() const;
    std::size_t count_q() const;

    auto operator<=>(const InfluenceSequence&) const = default;

private:
    std::string word_;
};

struct LatticePoint {
    Rational x;
    Rational t;

    bool operator==(const LatticePoint&) const = default;
};

struct PathStep {
    Rational dt;
    Rational dx;
};

struct SpacetimePath {
    LatticePoint start;
    std::vector<PathStep> steps;

    // start followed by the point reached after each step
    std::vector<LatticePoint> points() const;
    LatticePoint end() const;
};

inline constexpr std::size_t default_enumeration_cap = 20;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// The word of lexicographic rank `rank` (P < Q) among words with the given counts.
InfluenceSequence sequence_at_rank(std::size_t n_p, std::size_t n_q, std::uint64_t rank);

// All C(n_p + n_q, n_p) words, lexicographic. Ranks are unranked in parallel.
std::vector<InfluenceSequence> enumerate_sequences(std::size_t n_p, std::size_t n_q,
                                                   std::size_t cap = default_enumeration_cap);

// One half-unit step per symbol: P moves dx = -1/2, Q moves dx = +1/2, dt = +1/2.
SpacetimePath sequence_to_path(const InfluenceSequence& word, const LatticePoint& start = {});

// Every interleaving of two observers' detection lists (strictly increasing labels).
std::vector<InfluenceSequence> consistent_orderings(std::span<const Label> p_events, std::span<const Label> q_events,
                                                    std::size_t cap = default_enumeration_cap);

// Each word draws from its own stream keyed by (seed, word index), so the
// output does not depend on the thread count.
std::vector<InfluenceSequence> sample_sequences(std::size_t n_steps, double prob_p, std::uint64_t seed,
                                                std::size_t count);

struct SampleStatistics {
    std::size_t words = 0;
    std::size_t steps = 0;
    double mean_beta = 0.0;      // mean over words of (n_Q - n_P) / n
    double expected_beta = 0.0;  // 1 - 2 prob_p
    double sigma_of_mean = 0.0;  // binomial standard error of mean_beta
};

// Same streams as sample_sequences, reduced to per-word velocities without
// materializing the words.
SampleStatistics sample_beta(std::size_t n_steps, double prob_p, std::uint64_t seed, std::size_t count);

inline constexpr const char* particle_chain = "Pi";
inline constexpr const char* left_observer_chain = "P";
inline constexpr const char* right_observer_chain = "Q";

// Restricted-mode network: chain Pi has one event per symbol; step k
// influences event k of chain P or chain Q (both have word.size() events, so
// observer labels double as a shared clock). Pi is never influenced.
InfluenceNetwork build_free_particle_fixture(std::size_t n_p, std::size_t n_q, const InfluenceSequence& word);

// Forward-projected lengths of a consecutive particle interval onto P and Q.
struct StepProjection {
    std::optional<Label> dp;
    std::optional<Label> dq;
};

// One entry per consecutive pair of particle events in a finalized fixture.
std::vector<StepProjection> particle_step_projections(const InfluenceNetwork& fixture);

}  // namespace infnet
