#include "infnet/svg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace infnet {

namespace {

constexpr double kMargin = 40.0;
constexpr double kColumn = 120.0;
constexpr double kRow = 50.0;

void open_svg(std::ostringstream& out, double width, double height) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
           "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#e07b00\"/>"
           "</marker></defs>\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace

std::string hasse_svg(const InfluenceNetwork& net) {
    const auto covering = transitive_reduction(net);

    // depth = longest path from any source, so influence always points up
    std::vector<std::uint32_t> depth(net.event_count(), 0);
    {
        Adjacency reversed(net.event_count());
        for (std::size_t v = 0; v < net.event_count(); ++v) {
            for (auto w : net.successors()[v]) reversed[w].push_back(static_cast<std::uint32_t>(v));
        }
        depth = dag_heights(reversed);
    }
    const std::uint32_t max_depth = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());

    std::map<EventId, double> column;
    double next_column = 0.0;
    for (const auto& [name, c] : net.chains()) {
        bool used = false;
        for (EventId e : c.events) {
            if (!column.contains(e)) {
                column[e] = next_column;
                used = true;
            }
        }
        if (used || c.events.empty()) next_column += 1.0;
    }
    for (EventId e : net.events()) {
        if (!column.contains(e)) column[e] = next_column++;
    }

    auto px = [&](EventId e) { return kMargin + column.at(e) * kColumn; };
    auto py = [&](EventId e) { return kMargin + (max_depth - depth[net.index_of(e)]) * kRow; };

    std::set<Edge> chain_links;
    for (const auto& [name, c] : net.chains()) {
        for (std::size_t i = 1; i < c.events.size(); ++i) chain_links.insert({c.events[i - 1], c.events[i]});
    }
    std::set<EventId> acts;
    std::set<EventId> responses;
    for (const auto& [s, t] : covering) {
        if (!chain_links.contains({s, t})) {
            acts.insert(s);
            responses.insert(t);
        }
    }

    std::ostringstream out;
    open_svg(out, 2 * kMargin + std::max(0.0, next_column - 1.0) * kColumn, 2 * kMargin + max_depth * kRow);
    for (const auto& [name, c] : net.chains()) {
        if (c.events.empty()) continue;
        out << "<polyline class=\"chain\" data-chain=\"" << name
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"5\" points=\"";
        for (std::size_t i = 0; i < c.events.size(); ++i) {
            out << (i ? " " : "") << px(c.events[i]) << ',' << py(c.events[i]);
        }
        out << "\"/>\n";
        out << "<text x=\"" << px(c.events.front()) << "\" y=\"" << py(c.events.front()) + 28
            << "\" text-anchor=\"middle\" font-size=\"14\">" << name << "</text>\n";
    }
    for (const auto& [s, t] : covering) {
        if (chain_links.contains({s, t})) continue;
        out << "<line class=\"influence\" x1=\"" << px(s) << "\" y1=\"" << py(s) << "\" x2=\"" << px(t)
            << "\" y2=\"" << py(t) << "\" stroke=\"#e07b00\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
    }
    for (EventId e : net.events()) {
        const bool act = acts.contains(e) && !responses.contains(e);
        out << "<circle class=\"event\" data-id=\"" << e.value << "\" cx=\"" << px(e) << "\" cy=\"" << py(e)
            << "\" r=\"7\" fill=\"" << (act ? "black" : "white") << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << px(e) + 12 << "\" y=\"" << py(e) + 4 << "\" font-size=\"12\">" << e.value
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string path_svg(const SpacetimePath& path) {
    const auto points = path.points();
    double min_x = 0.0, max_x = 0.0, min_t = 0.0, max_t = 0.0;
    bool first = true;
    for (const auto& p : points) {
        const double x = to_double(p.x);
        const double t = to_double(p.t);
        if (first) {
            min_x = max_x = x;
            min_t = max_t = t;
            first = false;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_t = std::min(min_t, t);
        max_t = std::max(max_t, t);
    }
    const double scale = 80.0;
    auto sx = [&](double x) { return kMargin + (x - min_x) * scale; };
    auto sy = [&](double t) { return kMargin + (max_t - t) * scale; };

    std::ostringstream out;
    open_svg(out, 2 * kMargin + (max_x - min_x) * scale, 2 * kMargin + (max_t - min_t) * scale);
    out << "<line class=\"axis\" x1=\"" << sx(to_double(path.start.x)) << "\" y1=\"" << sy(min_t) << "\" x2=\""
        << sx(to_double(path.start.x)) << "\" y2=\"" << sy(max_t)
        << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
    out << "<polyline class=\"path\" data-steps=\"" << path.steps.size()
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"3\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        out << (i ? " " : "") << sx(to_double(points[i].x)) << ',' << sy(to_double(points[i].t));
    }
    out << "\"/>\n";
    for (const auto& p : points) {
        out << "<circle cx=\"" << sx(to_double(p.x)) << "\" cy=\"" << sy(to_double(p.t))
            << "\" r=\"4\" fill=\"black\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace infnet
