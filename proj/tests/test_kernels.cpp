// Parallel kernels against their serial reference implementations.
#include <numbers>

#include <omp.h>

#include "doctest.h"
#include "infnet/checkerboard.hpp"
#include "infnet/geometry.hpp"
#include "infnet/reference.hpp"
#include "support.hpp"

using namespace infnet;

namespace {

// Runs `f` once with one thread and once with the default team.
template <typename F>
void at_thread_counts(F&& f) {
    const int saved = omp_get_max_threads();
    for (int threads : {1, std::max(4, saved)}) {
        omp_set_num_threads(threads);
        f();
    }
    omp_set_num_threads(saved);
}

}  // namespace

TEST_CASE("closure matches depth-first search") {
    std::mt19937_64 rng(5);
    at_thread_counts([&] {
        for (int trial = 0; trial < 40; ++trial) {
            const auto net = testing::random_network(rng, 10 + static_cast<std::size_t>(trial) * 3, trial % 2 == 0);
            CHECK(transitive_closure(net.successors()) == reference::transitive_closure(net.successors()));
        }
    });
}

TEST_CASE("reduction matches edge removal") {
    std::mt19937_64 rng(6);
    at_thread_counts([&] {
        for (int trial = 0; trial < 30; ++trial) {
            const auto net = testing::random_network(rng, 8 + static_cast<std::size_t>(trial) * 2, true);
            CHECK(transitive_reduction(net) == reference::transitive_reduction(net));
        }
    });
}

TEST_CASE("projections and coordination match graph search") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const auto net = testing::random_network(rng, 12 + static_cast<std::size_t>(trial), true);
        const Chain& p = net.chain("P");
        const Chain& q = net.chain("Q");
        for (EventId x : net.events()) {
            for (const Chain* c : {&p, &q}) {
                CHECK(forward_project(net, x, *c) == reference::forward_project(net, x, *c));
                CHECK(backward_project(net, x, *c) == reference::backward_project(net, x, *c));
            }
        }
        CHECK(is_coordinated(net, p, q) == reference::is_coordinated(net, p, q));
    }
    for (const char* name : {"coordinated.net", "uncoordinated.net", "two_chains.net"}) {
        const auto net = load_network(testing::fixture(name));
        const auto& chains = net.chains();
        const Chain& a = chains.begin()->second;
        const Chain& b = std::next(chains.begin())->second;
        CHECK(is_coordinated(net, a, b) == reference::is_coordinated(net, a, b));
    }
}

TEST_CASE("enumeration matches prefix extension") {
    at_thread_counts([] {
        for (std::size_t n = 0; n <= 14; ++n)
            for (std::size_t a = 0; a <= n; ++a)
                CHECK(enumerate_sequences(a, n - a) == reference::enumerate_sequences(a, n - a));
    });
    const auto words = enumerate_sequences(7, 6);
    for (std::uint64_t r = 0; r < words.size(); r += 37) CHECK(sequence_at_rank(7, 6, r) == words[r]);
}

TEST_CASE("step_field matches scatter form") {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> g;
    for (double theta : {0.2, std::numbers::pi / 4, 1.3}) {
        const TransferMatrices tm(theta);
        std::vector<Spinor> sites(15);
        for (auto& s : sites) s = {{g(rng), g(rng)}, {g(rng), g(rng)}};
        SpinorField a(0, -7, sites);
        SpinorField b = a;
        for (int i = 0; i < 20; ++i) {
            a = step_field(a, tm);
            b = reference::step_field(b, tm);
            REQUIRE(a.first() == b.first());
            REQUIRE(a.sites().size() == b.sites().size());
            for (std::size_t k = 0; k < a.sites().size(); ++k) {
                CHECK(std::abs(a.sites()[k].phi_p - b.sites()[k].phi_p) < 1e-12);
                CHECK(std::abs(a.sites()[k].phi_q - b.sites()[k].phi_q) < 1e-12);
            }
        }
    }
}

TEST_CASE("path sum matches word-by-word evaluation") {
    at_thread_counts([] {
        for (double theta : {0.3, std::numbers::pi / 4}) {
            for (std::size_t n = 0; n <= 10; ++n) {
                for (std::int64_t shift = -static_cast<std::int64_t>(n); shift <= static_cast<std::int64_t>(n);
                     shift += 2) {
                    for (Symbol i : {Symbol::P, Symbol::Q}) {
                        for (Symbol f : {Symbol::P, Symbol::Q}) {
                            const auto fast = path_sum_kernel(i, {0}, f, {shift}, n, theta);
                            const auto slow = reference::path_sum_kernel(i, {0}, f, {shift}, n, theta);
                            CHECK(std::abs(fast - slow) < 1e-12);
                        }
                    }
                }
            }
        }
    });
}

TEST_CASE("sampling does not depend on the thread count") {
    std::vector<std::vector<InfluenceSequence>> runs;
    std::vector<double> betas;
    at_thread_counts([&] {
        runs.push_back(sample_sequences(40, 0.35, 99, 257));
        betas.push_back(sample_beta(40, 0.35, 99, 257).mean_beta);
    });
    REQUIRE(runs.size() == 2);
    CHECK(runs[0] == runs[1]);
    CHECK(testing::rel_close(betas[0], betas[1], 1e-14));
    CHECK(testing::rel_close(betas[0], reference::sample_beta(40, 0.35, 99, 257).mean_beta, 1e-14));
}
