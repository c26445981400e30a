#include <random>

#include "doctest.h"
#include "infnet/network_io.hpp"
#include "infnet/projection.hpp"
#include "infnet/reference.hpp"
#include "support.hpp"

using namespace infnet;
using infnet::testing::fixture;

TEST_CASE("forward and backward projections on the single-chain fixture") {
    const auto net = load_network(fixture("single_observer.net"));
    const Chain& p = net.chain("P");

    // chain events project onto themselves
    CHECK(quantify_event(net, EventId{3}, p) == EventCoordinate{3, 3});

    CHECK(forward_project(net, EventId{11}, p) == 4);
    CHECK_FALSE(backward_project(net, EventId{11}, p).has_value());
    CHECK(backward_project(net, EventId{12}, p) == 2);
    CHECK_FALSE(forward_project(net, EventId{12}, p).has_value());
    CHECK(quantify_event(net, EventId{13}, p) == EventCoordinate{});
    CHECK_THROWS_AS(forward_project(net, EventId{99}, p), Error);
}

TEST_CASE("quantify_event (5,2) agrees with a brute-force search") {
    const auto net = load_network(fixture("single_observer.net"));
    const Chain& p = net.chain("P");
    CHECK(net.event_count() == 10);
    const auto c = quantify_event(net, EventId{10}, p);
    CHECK(c == EventCoordinate{5, 2});
    CHECK(reference::forward_project(net, EventId{10}, p) == c.forward);
    CHECK(reference::backward_project(net, EventId{10}, p) == c.backward);
}

TEST_CASE("chain intervals") {
    const auto net = load_network(fixture("coordinated.net"));
    const Chain& p = net.chain("P");
    const Chain& q = net.chain("Q");

    CHECK(chain_interval_length({&p, 3, 5}) == 2);
    CHECK(chain_interval_length({&p, 4, 4}) == 0);
    CHECK(chain_interval_length({&p, 1, 7}) == 6);

    const auto fwd = project_interval(net, {&p, 2, 6}, q, Direction::forward);
    REQUIRE(fwd);
    CHECK(fwd->chain == &q);
    CHECK(chain_interval_length(*fwd) == 4);
    CHECK(fwd->lo == 4);

    const auto bwd = project_interval(net, {&p, 3, 7}, q, Direction::backward);
    REQUIRE(bwd);
    CHECK(chain_interval_length(*bwd) == 4);

    // P11 reaches no Q event
    CHECK_FALSE(project_interval(net, {&p, 9, 11}, q, Direction::forward).has_value());

    const auto point = project_interval(net, {&p, 5, 5}, q, Direction::forward);
    REQUIRE(point);
    CHECK(point->lo == 7);
    CHECK(point->hi == 7);

    CHECK_THROWS_AS(project_interval(net, {&p, 5, 13}, q, Direction::forward), Error);
}

TEST_CASE("property: projections are monotone, ordered and match graph search") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + rng() % 13;  // up to 14 events
        const auto net = testing::random_network(rng, n);
        const Chain& p = net.chain("P");
        const auto all = quantify_all(net, p);
        const auto events = net.events();
        for (std::size_t i = 0; i < events.size(); ++i) {
            const EventId x = events[i];
            const auto c = all[i];
            CHECK(c.forward == reference::forward_project(net, x, p));
            CHECK(c.backward == reference::backward_project(net, x, p));
            if (c.forward && c.backward) CHECK(*c.backward <= *c.forward);
            if (auto l = net.label_on(p, x)) CHECK(c == EventCoordinate{*l, *l});

            for (std::size_t j = 0; j < events.size(); ++j) {
                if (!net.influences(x, events[j])) continue;
                const auto d = all[j];
                if (c.forward && d.forward) CHECK(*c.forward <= *d.forward);
                if (c.backward && d.backward) CHECK(*c.backward <= *d.backward);
            }
        }
    }
}
