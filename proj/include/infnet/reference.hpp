#pragma once

// Serial reference implementations of the parallel kernels. They take a
// different algorithmic route on purpose and back the unit tests and
// benchmarks; production code should call the primary versions.

#include <optional>
#include <vector>

#include "infnet/checkerboard.hpp"
#include "infnet/closure.hpp"
#include "infnet/free_particle.hpp"
#include "infnet/network.hpp"
#include "infnet/projection.hpp"

namespace infnet::reference {

// One depth-first search per vertex.
Reachability transitive_closure(const Adjacency& successors);

// Drops each edge whose endpoints stay connected without it.
std::vector<Edge> transitive_reduction(const InfluenceNetwork& net);

// Graph search from x; independent of the precomputed closure.
std::optional<Label> forward_project(const InfluenceNetwork& net, EventId x, const Chain& onto);
std::optional<Label> backward_project(const InfluenceNetwork& net, EventId x, const Chain& onto);

// Checks every interval of each chain in both directions.
bool is_coordinated(const InfluenceNetwork& net, const Chain& p, const Chain& q);

// Depth-first prefix extension, P before Q.
std::vector<InfluenceSequence> enumerate_sequences(std::size_t n_p, std::size_t n_q);

// Scatter form: apply P and Q to each old site and shift the results.
SpinorField step_field(const SpinorField& field, const TransferMatrices& tm);

// Word by word through path_amplitude and sequence_to_path.
Amplitude path_sum_kernel(Symbol initial, LatticeSite x0, Symbol final_helicity, LatticeSite x1, std::size_t steps,
                          double theta);

// Reduces the materialized output of sample_sequences.
SampleStatistics sample_beta(std::size_t n_steps, double prob_p, std::uint64_t seed, std::size_t count);

}  // namespace infnet::reference
