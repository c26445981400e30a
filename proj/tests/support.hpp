#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "infnet/network.hpp"
#include "infnet/network_io.hpp"

namespace infnet::testing {

inline std::string fixture(const std::string& name) {
    return std::string(INFNET_FIXTURE_DIR) + "/" + name;
}

inline bool rel_close(double a, double b, double tol = 1e-12) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Random legal edit sequence: a chain "P" (and "Q" when requested) plus free
// events, then influence attempts that are dropped when they would close a
// cycle or duplicate an edge.
inline InfluenceNetwork random_network(std::mt19937_64& rng, std::size_t events, bool two_chains = false) {
    InfluenceNetwork net(ConnectivityMode::general);
    net.add_chain("P");
    if (two_chains) net.add_chain("Q");
    std::uniform_int_distribution<std::size_t> pick(0, events - 1);
    std::vector<EventId> ids;
    for (std::size_t i = 0; i < events; ++i) {
        const auto r = rng() % 3;
        if (r == 0) {
            ids.push_back(net.add_event("P"));
        } else if (r == 1 && two_chains) {
            ids.push_back(net.add_event("Q"));
        } else {
            ids.push_back(net.add_event());
        }
    }
    const std::size_t attempts = events * 2;
    for (std::size_t i = 0; i < attempts; ++i) {
        const EventId a = ids[pick(rng)];
        const EventId b = ids[pick(rng)];
        if (a == b) continue;
        try {
            net.add_influence(a, b);
        } catch (const Error&) {
        }
    }
    net.finalize();
    return net;
}

}  // namespace infnet::testing
