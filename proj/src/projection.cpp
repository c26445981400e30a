#include "infnet/projection.hpp"

#include <string>

namespace infnet {

namespace {

void check_interval(const ChainInterval& interval) {
    if (interval.chain == nullptr) throw Error(ErrorCode::invalid_argument, "interval has no chain");
    if (interval.lo < 1 || interval.hi > interval.chain->size() || interval.lo > interval.hi) {
        throw Error(ErrorCode::invalid_argument,
                    "interval [" + std::to_string(interval.lo) + "," + std::to_string(interval.hi) +
                        "] is not valid on chain " + interval.chain->name);
    }
}

}  // namespace

// Reachability from (or to) a fixed event is monotone along a chain, but the
// scans stay linear so that unvalidated chains still get exact answers.
std::optional<Label> forward_project(const InfluenceNetwork& net, EventId x, const Chain& onto) {
    const Reachability& reach = net.reachability();
    const std::size_t from = net.index_of(x);
    for (Label label = 1; label <= onto.size(); ++label) {
        if (reach.reaches(from, net.index_of(onto.at(label)))) return label;
    }
    return std::nullopt;
}

std::optional<Label> backward_project(const InfluenceNetwork& net, EventId x, const Chain& onto) {
    const Reachability& reach = net.reachability();
    const std::size_t to = net.index_of(x);
    for (Label label = onto.size(); label >= 1; --label) {
        if (reach.reaches(net.index_of(onto.at(label)), to)) return label;
    }
    return std::nullopt;
}

EventCoordinate quantify_event(const InfluenceNetwork& net, EventId x, const Chain& onto) {
    return {forward_project(net, x, onto), backward_project(net, x, onto)};
}

std::optional<Label> project_label(const InfluenceNetwork& net, const Chain& from, Label label,
                                   const Chain& onto, Direction direction) {
    const EventId e = from.at(label);
    return direction == Direction::forward ? forward_project(net, e, onto) : backward_project(net, e, onto);
}

std::vector<EventCoordinate> quantify_all(const InfluenceNetwork& net, const Chain& onto) {
    net.reachability();
    const std::vector<EventId> ids = net.events();
    std::vector<EventCoordinate> out(ids.size());
    const auto n = static_cast<std::int64_t>(ids.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = quantify_event(net, ids[static_cast<std::size_t>(i)], onto);
    }
    return out;
}

Label chain_interval_length(const ChainInterval& interval) {
    if (interval.lo > interval.hi) {
        throw Error(ErrorCode::invalid_argument, "interval with lo > hi");
    }
    return interval.hi - interval.lo;
}

std::optional<ChainInterval> project_interval(const InfluenceNetwork& net, const ChainInterval& interval,
                                              const Chain& onto, Direction direction) {
    check_interval(interval);
    net.chain(onto.name);
    const auto lo = project_label(net, *interval.chain, interval.lo, onto, direction);
    const auto hi = project_label(net, *interval.chain, interval.hi, onto, direction);
    if (!lo || !hi) return std::nullopt;
    return ChainInterval{&onto, *lo, *hi};
}

}  // namespace infnet
