#include "infnet/geometry.hpp"

#include <string>

namespace infnet {

namespace {

std::string label_str(Label l) { return std::to_string(l); }

// Every projectable label must be shifted by the same amount, which is the
// same as all projected intervals keeping their length.
bool constant_offset(const InfluenceNetwork& net, const Chain& from, const Chain& onto, Direction direction) {
    std::optional<Label> offset;
    for (Label label = 1; label <= from.size(); ++label) {
        const auto image = project_label(net, from, label, onto, direction);
        if (!image) continue;
        const Label shift = *image - label;
        if (offset && *offset != shift) return false;
        offset = shift;
    }
    return true;
}

void check_label(const Chain& c, Label l) {
    if (l < 1 || l > c.size()) {
        throw Error(ErrorCode::invalid_argument, "label " + label_str(l) + " is not on chain " + c.name);
    }
}

}  // namespace

PairQuantification operator+(const PairQuantification& a, const PairQuantification& b) {
    return {a.dp + b.dp, a.dq + b.dq};
}

bool is_coordinated(const InfluenceNetwork& net, const Chain& p, const Chain& q) {
    net.chain(p.name);
    net.chain(q.name);
    for (Direction d : {Direction::forward, Direction::backward}) {
        if (!constant_offset(net, p, q, d) || !constant_offset(net, q, p, d)) return false;
    }
    return true;
}

Rational distance(const InfluenceNetwork& net, const Chain& p, const Chain& q, Label p_i, Label q_j) {
    check_label(p, p_i);
    check_label(q, q_j);
    if (!is_coordinated(net, p, q)) {
        throw Error(ErrorCode::uncoordinated, "chains " + p.name + " and " + q.name + " are not coordinated");
    }
    const auto pq_j = project_label(net, q, q_j, p, Direction::forward);
    if (!pq_j) {
        throw Error(ErrorCode::missing_projection,
                    q.name + " event " + label_str(q_j) + " does not forward-project onto " + p.name);
    }
    const auto qp_i = project_label(net, p, p_i, q, Direction::forward);
    if (!qp_i) {
        throw Error(ErrorCode::missing_projection,
                    p.name + " event " + label_str(p_i) + " does not forward-project onto " + q.name);
    }
    const Rational dp(*pq_j - p_i);
    const Rational dq(q_j - *qp_i);
    return (dp - dq) / 2;
}

bool is_between(const InfluenceNetwork& net, EventId x, const Chain& p, const Chain& q) {
    net.index_of(x);
    // Composite projections: project x onto `via` in one direction, then the
    // resulting chain event onto `onto` in the other.
    auto composite = [&](const Chain& onto, Direction outer, const Chain& via,
                         Direction inner) -> std::optional<Label> {
        const auto mid = inner == Direction::forward ? forward_project(net, x, via) : backward_project(net, x, via);
        if (!mid) return std::nullopt;
        return project_label(net, via, *mid, onto, outer);
    };
    auto relation = [&](const Chain& a, const Chain& b) {
        const auto fwd = forward_project(net, x, a);
        const auto bwd = backward_project(net, x, a);
        const auto fwd_via = composite(a, Direction::forward, b, Direction::backward);
        const auto bwd_via = composite(a, Direction::backward, b, Direction::forward);
        return fwd && bwd && fwd_via && bwd_via && *fwd == *fwd_via && *bwd == *bwd_via;
    };
    return relation(p, q) && relation(q, p);
}

IntervalQuantification quantify_interval(const InfluenceNetwork& net, EventId a, EventId b, const Chain& p,
                                         const Chain& q) {
    std::array<std::optional<Label>, 4> proj{forward_project(net, a, p), forward_project(net, a, q),
                                             forward_project(net, b, p), forward_project(net, b, q)};
    for (std::size_t i = 0; i < proj.size(); ++i) {
        if (!proj[i]) {
            const EventId e = i < 2 ? a : b;
            const Chain& c = i % 2 == 0 ? p : q;
            throw Error(ErrorCode::missing_projection,
                        "event " + std::to_string(e.value) + " does not forward-project onto " + c.name);
        }
    }
    for (EventId e : {a, b}) {
        if (!is_between(net, e, p, q)) {
            throw Error(ErrorCode::not_between,
                        "event " + std::to_string(e.value) + " is not between " + p.name + " and " + q.name);
        }
    }
    IntervalQuantification out;
    out.quadruple = {*proj[0], *proj[1], *proj[2], *proj[3]};
    out.pair = {Rational(*proj[2] - *proj[0]), Rational(*proj[3] - *proj[1])};
    out.scalar = out.pair.scalar();
    return out;
}

Decomposition decompose(const PairQuantification& pair) {
    const Rational t = (pair.dp + pair.dq) / 2;
    const Rational x = (pair.dp - pair.dq) / 2;
    return {{t, t}, {x, -x}};
}

MinkowskiScalar minkowski_scalar(const PairQuantification& pair) {
    return {pair.scalar(), (pair.dp + pair.dq) / 2, (pair.dp - pair.dq) / 2};
}

}  // namespace infnet
