#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "infnet/closure.hpp"
#include "infnet/error.hpp"

namespace infnet {

struct EventId {
    std::uint64_t value = 0;

    auto operator<=>(const EventId&) const = default;
};

// 1-based position of an event along a chain.
using Label = std::int64_t;

using Edge = std::pair<EventId, EventId>;

enum class ConnectivityMode {
    restricted,  // one chain per event, one cross-chain influence per event
    general,     // arbitrary connectivity between chains
};

std::string_view mode_name(ConnectivityMode mode) noexcept;

struct Chain {
    std::string name;
    std::vector<EventId> events;

    Label size() const noexcept { return static_cast<Label>(events.size()); }
    EventId at(Label label) const { return events.at(static_cast<std::size_t>(label - 1)); }
};

struct Violation {
    std::string rule;  // "postulate-3", "postulate-4", "chain-link", "chain-membership"
    std::vector<EventId> events;
    std::string detail;
};

// Append-only poset of influence events with named chains embedded in it.
//
// Mutations invalidate the reachability closure; call finalize() before
// querying influences() or any projection. A finalized network is read-only
// and may be shared between threads.
class InfluenceNetwork {
public:
    explicit InfluenceNetwork(ConnectivityMode mode = ConnectivityMode::general) : mode_(mode) {}

    ConnectivityMode mode() const noexcept { return mode_; }

    void add_chain(const std::string& name);

    // New event with the next free id. With a chain, the event is appended to
    // its tail and linked to the previous tail; without one it is flagged free.
    EventId add_event(std::optional<std::string_view> chain = std::nullopt);

    // Same as add_event but with a caller-chosen id (used by loaders).
    void add_event_with_id(EventId id, std::optional<std::string_view> chain = std::nullopt);

    // Appends an existing event to a chain, linking it to the current tail.
    void append_to_chain(std::string_view chain, EventId event);

    // Declares a chain over existing events without adding any edges.
    void register_chain(const std::string& name, std::vector<EventId> members);

    // Checked influence: also enforces the restricted-mode degree rule.
    void add_influence(EventId source, EventId target);

    // Only duplicate and cycle checks; mode rules are left to validate().
    void add_edge(EventId source, EventId target);

    void finalize();
    bool finalized() const noexcept { return finalized_; }

    // Reflexive reachability. Requires finalize().
    bool influences(EventId a, EventId b) const;

    bool has_event(EventId id) const noexcept { return index_.contains(id.value); }
    bool has_chain(std::string_view name) const;
    bool is_free(EventId id) const;

    std::size_t event_count() const noexcept { return ids_.size(); }
    std::vector<EventId> events() const;  // ascending
    const std::set<Edge>& edges() const noexcept { return edges_; }
    const std::map<std::string, Chain, std::less<>>& chains() const noexcept { return chains_; }
    const Chain& chain(std::string_view name) const;

    // Chains that list the event, in name order.
    std::vector<std::string> chains_of(EventId id) const;
    std::optional<Label> label_on(const Chain& chain, EventId id) const;

    // True when no chain lists both endpoints.
    bool is_cross_chain(EventId source, EventId target) const;

    // Dense vertex index used by the closure, in insertion order.
    std::size_t index_of(EventId id) const;
    EventId id_at(std::size_t index) const { return ids_.at(index); }
    const Adjacency& successors() const noexcept { return out_; }
    const Reachability& reachability() const;

private:
    Chain& chain_mut(std::string_view name);
    void insert_event(EventId id);
    void insert_edge(EventId source, EventId target);
    bool reaches_unfinalized(std::size_t from, std::size_t to) const;
    std::size_t cross_degree(EventId id) const;

    ConnectivityMode mode_;
    std::vector<EventId> ids_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<bool> free_;
    Adjacency out_;
    std::set<Edge> edges_;
    std::map<std::string, Chain, std::less<>> chains_;
    std::unordered_map<std::uint64_t, std::vector<std::string>> membership_;
    std::unordered_map<std::string, std::unordered_map<std::uint64_t, Label>> labels_;
    std::uint64_t next_id_ = 0;

    bool finalized_ = false;
    Reachability closure_;
};

// Covering relation: the minimal edge set with the same reachability.
std::vector<Edge> transitive_reduction(const InfluenceNetwork& net);

// Empty iff the network satisfies the chain and mode rules.
std::vector<Violation> validate(const InfluenceNetwork& net);

}  // namespace infnet

template <>
struct std::hash<infnet::EventId> {
    std::size_t operator()(const infnet::EventId& id) const noexcept {
        return std::hash<std::uint64_t>{}(id.value);
    }
};
