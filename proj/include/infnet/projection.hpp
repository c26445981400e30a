#pragma once

#include <optional>
#include <vector>

#include "infnet/network.hpp"

namespace infnet {

// (Px, P̄x): least chain label the event influences and greatest chain label
// that influences it. Either may be absent.
struct EventCoordinate {
    std::optional<Label> forward;
    std::optional<Label> backward;

    bool operator==(const EventCoordinate&) const = default;
};

// Labels [lo, hi] on one chain.
struct ChainInterval {
    const Chain* chain = nullptr;
    Label lo = 1;
    Label hi = 1;
};

enum class Direction { forward, backward };

std::optional<Label> forward_project(const InfluenceNetwork& net, EventId x, const Chain& onto);
std::optional<Label> backward_project(const InfluenceNetwork& net, EventId x, const Chain& onto);
EventCoordinate quantify_event(const InfluenceNetwork& net, EventId x, const Chain& onto);

// Projection of a chain event given by its label; convenient for chain-to-chain work.
std::optional<Label> project_label(const InfluenceNetwork& net, const Chain& from, Label label,
                                   const Chain& onto, Direction direction);

// Coordinates of every event (ascending id order) relative to one chain.
std::vector<EventCoordinate> quantify_all(const InfluenceNetwork& net, const Chain& onto);

Label chain_interval_length(const ChainInterval& interval);

std::optional<ChainInterval> project_interval(const InfluenceNetwork& net, const ChainInterval& interval,
                                              const Chain& onto, Direction direction);

}  // namespace infnet
