#include "infnet/network.hpp"

#include <algorithm>

namespace infnet {

namespace {

std::string id_str(EventId id) { return std::to_string(id.value); }

}  // namespace

std::string_view mode_name(ConnectivityMode mode) noexcept {
    return mode == ConnectivityMode::restricted ? "restricted" : "general";
}

void InfluenceNetwork::add_chain(const std::string& name) {
    if (name.empty()) throw Error(ErrorCode::invalid_argument, "chain name must not be empty");
    if (chains_.contains(name)) throw Error(ErrorCode::invalid_argument, "chain '" + name + "' already exists");
    chains_.emplace(name, Chain{name, {}});
    labels_[name];
}

EventId InfluenceNetwork::add_event(std::optional<std::string_view> chain) {
    EventId id{next_id_};
    add_event_with_id(id, chain);
    return id;
}

void InfluenceNetwork::add_event_with_id(EventId id, std::optional<std::string_view> chain) {
    if (chain && !has_chain(*chain)) throw Error(ErrorCode::unknown_chain, std::string(*chain));
    if (has_event(id)) throw Error(ErrorCode::duplicate_event, "event " + id_str(id) + " already exists");
    insert_event(id);
    if (chain) {
        append_to_chain(*chain, id);
    } else {
        free_[index_of(id)] = true;
    }
}

void InfluenceNetwork::append_to_chain(std::string_view name, EventId event) {
    Chain& c = chain_mut(name);
    const std::size_t vertex = index_of(event);
    auto& labels = labels_.at(c.name);
    if (labels.contains(event.value)) {
        throw Error(ErrorCode::invalid_argument, "event " + id_str(event) + " is already on chain " + c.name);
    }
    if (!c.events.empty()) {
        const EventId tail = c.events.back();
        if (!edges_.contains({tail, event})) add_edge(tail, event);
    }
    c.events.push_back(event);
    labels.emplace(event.value, c.size());
    membership_[event.value].push_back(c.name);
    std::sort(membership_[event.value].begin(), membership_[event.value].end());
    free_[vertex] = false;
    finalized_ = false;
}

void InfluenceNetwork::register_chain(const std::string& name, std::vector<EventId> members) {
    for (EventId e : members) index_of(e);
    std::set<EventId> unique(members.begin(), members.end());
    if (unique.size() != members.size()) {
        throw Error(ErrorCode::invalid_argument, "chain '" + name + "' lists an event twice");
    }
    add_chain(name);
    Chain& c = chain_mut(name);
    auto& labels = labels_.at(name);
    for (EventId e : members) {
        c.events.push_back(e);
        labels.emplace(e.value, c.size());
        membership_[e.value].push_back(name);
        std::sort(membership_[e.value].begin(), membership_[e.value].end());
        free_[index_of(e)] = false;
    }
    finalized_ = false;
}

void InfluenceNetwork::add_influence(EventId source, EventId target) {
    index_of(source);
    index_of(target);
    if (mode_ == ConnectivityMode::restricted && is_cross_chain(source, target)) {
        for (EventId e : {source, target}) {
            if (cross_degree(e) > 0) {
                throw Error(ErrorCode::degree_violation,
                            "event " + id_str(e) + " already takes part in a cross-chain influence");
            }
        }
    }
    add_edge(source, target);
}

void InfluenceNetwork::add_edge(EventId source, EventId target) {
    const std::size_t s = index_of(source);
    const std::size_t t = index_of(target);
    if (edges_.contains({source, target})) {
        throw Error(ErrorCode::duplicate_edge, id_str(source) + " -> " + id_str(target));
    }
    const bool back_path = finalized_ ? closure_.reaches(t, s) : reaches_unfinalized(t, s);
    if (back_path) {
        throw Error(ErrorCode::cycle_would_form, id_str(source) + " -> " + id_str(target));
    }
    insert_edge(source, target);
}

void InfluenceNetwork::finalize() {
    if (finalized_) return;
    closure_ = transitive_closure(out_);
    finalized_ = true;
}

bool InfluenceNetwork::influences(EventId a, EventId b) const {
    return reachability().reaches(index_of(a), index_of(b));
}

bool InfluenceNetwork::has_chain(std::string_view name) const {
    return chains_.find(name) != chains_.end();
}

bool InfluenceNetwork::is_free(EventId id) const {
    return free_[index_of(id)];
}

std::vector<EventId> InfluenceNetwork::events() const {
    std::vector<EventId> out = ids_;
    std::sort(out.begin(), out.end());
    return out;
}

const Chain& InfluenceNetwork::chain(std::string_view name) const {
    auto it = chains_.find(name);
    if (it == chains_.end()) throw Error(ErrorCode::unknown_chain, std::string(name));
    return it->second;
}

std::vector<std::string> InfluenceNetwork::chains_of(EventId id) const {
    index_of(id);
    auto it = membership_.find(id.value);
    return it == membership_.end() ? std::vector<std::string>{} : it->second;
}

std::optional<Label> InfluenceNetwork::label_on(const Chain& c, EventId id) const {
    auto chain_it = labels_.find(c.name);
    if (chain_it == labels_.end()) throw Error(ErrorCode::unknown_chain, c.name);
    auto it = chain_it->second.find(id.value);
    if (it == chain_it->second.end()) return std::nullopt;
    return it->second;
}

bool InfluenceNetwork::is_cross_chain(EventId source, EventId target) const {
    const auto a = chains_of(source);
    const auto b = chains_of(target);
    for (const auto& name : a) {
        if (std::find(b.begin(), b.end(), name) != b.end()) return false;
    }
    return true;
}

std::size_t InfluenceNetwork::index_of(EventId id) const {
    auto it = index_.find(id.value);
    if (it == index_.end()) throw Error(ErrorCode::unknown_event, id_str(id));
    return it->second;
}

const Reachability& InfluenceNetwork::reachability() const {
    if (!finalized_) throw Error(ErrorCode::not_finalized, "call finalize() before querying reachability");
    return closure_;
}

Chain& InfluenceNetwork::chain_mut(std::string_view name) {
    auto it = chains_.find(name);
    if (it == chains_.end()) throw Error(ErrorCode::unknown_chain, std::string(name));
    return it->second;
}

void InfluenceNetwork::insert_event(EventId id) {
    index_.emplace(id.value, ids_.size());
    ids_.push_back(id);
    free_.push_back(false);
    out_.emplace_back();
    next_id_ = std::max(next_id_, id.value + 1);
    finalized_ = false;
}

void InfluenceNetwork::insert_edge(EventId source, EventId target) {
    edges_.insert({source, target});
    out_[index_of(source)].push_back(static_cast<std::uint32_t>(index_of(target)));
    finalized_ = false;
}

bool InfluenceNetwork::reaches_unfinalized(std::size_t from, std::size_t to) const {
    if (from == to) return true;
    std::vector<bool> seen(out_.size(), false);
    std::vector<std::size_t> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (auto w : out_[v]) {
            if (w == to) return true;
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return false;
}

std::size_t InfluenceNetwork::cross_degree(EventId id) const {
    std::size_t degree = 0;
    for (const auto& [s, t] : edges_) {
        if ((s == id || t == id) && is_cross_chain(s, t)) ++degree;
    }
    return degree;
}

std::vector<Edge> transitive_reduction(const InfluenceNetwork& net) {
    const Reachability& reach = net.reachability();
    const Adjacency& out = net.successors();
    const auto n = static_cast<std::int64_t>(out.size());
    std::vector<std::vector<Edge>> kept(out.size());

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& succ = out[static_cast<std::size_t>(i)];
        for (auto v : succ) {
            const bool implied = std::any_of(succ.begin(), succ.end(), [&](std::uint32_t w) {
                return w != v && reach.reaches(w, v);
            });
            if (!implied) kept[static_cast<std::size_t>(i)].emplace_back(net.id_at(static_cast<std::size_t>(i)), net.id_at(v));
        }
    }

    std::vector<Edge> result;
    for (auto& part : kept) result.insert(result.end(), part.begin(), part.end());
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Violation> validate(const InfluenceNetwork& net) {
    std::vector<Violation> violations;
    const Reachability local = net.finalized() ? Reachability{} : transitive_closure(net.successors());
    const Reachability& reach = net.finalized() ? net.reachability() : local;

    for (EventId e : net.events()) {
        const auto chains = net.chains_of(e);
        if (net.mode() == ConnectivityMode::restricted && chains.size() != 1) {
            violations.push_back({"chain-membership", {e},
                                  "event lies on " + std::to_string(chains.size()) + " chains, expected exactly one"});
        } else if (net.mode() == ConnectivityMode::general && chains.empty() && !net.is_free(e)) {
            violations.push_back({"chain-membership", {e}, "event is on no chain and is not declared free"});
        }
    }

    for (const auto& [name, c] : net.chains()) {
        for (std::size_t i = 1; i < c.events.size(); ++i) {
            if (!net.edges().contains({c.events[i - 1], c.events[i]})) {
                violations.push_back({"chain-link", {c.events[i - 1], c.events[i]},
                                      "consecutive events on chain " + name + " lack a direct influence"});
            }
        }
        for (std::size_t i = 0; i < c.events.size(); ++i) {
            for (std::size_t j = i + 1; j < c.events.size(); ++j) {
                const auto a = net.index_of(c.events[i]);
                const auto b = net.index_of(c.events[j]);
                if (!reach.reaches(a, b) && !reach.reaches(b, a)) {
                    violations.push_back({"postulate-4", {c.events[i], c.events[j]},
                                          "events on chain " + name + " are incomparable"});
                }
            }
        }
    }

    if (net.mode() == ConnectivityMode::restricted) {
        std::map<EventId, std::vector<EventId>> cross;
        for (const auto& [s, t] : net.edges()) {
            if (!net.is_cross_chain(s, t)) continue;
            cross[s].push_back(t);
            cross[t].push_back(s);
        }
        for (const auto& [e, partners] : cross) {
            if (partners.size() > 1) {
                std::vector<EventId> involved{e};
                involved.insert(involved.end(), partners.begin(), partners.end());
                violations.push_back({"postulate-3", std::move(involved),
                                      "event takes part in " + std::to_string(partners.size()) +
                                          " cross-chain influences"});
            }
        }
    }
    return violations;
}

}  // namespace infnet
