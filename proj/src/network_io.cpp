#include "infnet/network_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace infnet {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

[[noreturn]] void fail(ErrorCode code, std::size_t line, const std::string& what) {
    throw Error(code, "line " + std::to_string(line) + ": " + what);
}

EventId parse_id(const std::string& tok, std::size_t line) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail(ErrorCode::parse_error, line, "bad event id '" + tok + "'");
    return EventId{v};
}

}  // namespace

InfluenceNetwork parse_network(std::istream& in) {
    std::optional<InfluenceNetwork> net;
    auto network = [&](std::size_t) -> InfluenceNetwork& {
        if (!net) net.emplace(ConnectivityMode::general);
        return *net;
    };

    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto tokens = split_ws(raw);
        if (tokens.empty()) continue;
        const std::string& keyword = tokens[0];

        try {
            if (keyword == "mode") {
                if (tokens.size() != 2) fail(ErrorCode::parse_error, line, "expected 'mode restricted|general'");
                if (net) fail(ErrorCode::parse_error, line, "mode must come before any chain, event or influence");
                if (tokens[1] == "restricted") {
                    net.emplace(ConnectivityMode::restricted);
                } else if (tokens[1] == "general") {
                    net.emplace(ConnectivityMode::general);
                } else {
                    fail(ErrorCode::parse_error, line, "unknown mode '" + tokens[1] + "'");
                }
            } else if (keyword == "chain") {
                if (tokens.size() < 2 || tokens[1].size() < 2 || tokens[1].back() != ':') {
                    fail(ErrorCode::parse_error, line, "expected 'chain <name>: <id> ...'");
                }
                const std::string name = tokens[1].substr(0, tokens[1].size() - 1);
                InfluenceNetwork& g = network(line);
                g.add_chain(name);
                for (std::size_t i = 2; i < tokens.size(); ++i) {
                    const EventId id = parse_id(tokens[i], line);
                    if (g.has_event(id)) {
                        g.append_to_chain(name, id);
                    } else {
                        g.add_event_with_id(id, name);
                    }
                }
            } else if (keyword == "event") {
                if (tokens.size() < 2) fail(ErrorCode::parse_error, line, "expected 'event <id> ...'");
                InfluenceNetwork& g = network(line);
                for (std::size_t i = 1; i < tokens.size(); ++i) g.add_event_with_id(parse_id(tokens[i], line));
            } else if (keyword == "influence") {
                if (tokens.size() != 4 || tokens[2] != "->") {
                    fail(ErrorCode::parse_error, line, "expected 'influence <src> -> <dst>'");
                }
                network(line).add_edge(parse_id(tokens[1], line), parse_id(tokens[3], line));
            } else {
                fail(ErrorCode::parse_error, line, "unknown keyword '" + keyword + "'");
            }
        } catch (const Error& e) {
            const std::string what = e.what();
            if (what.rfind(std::string(error_name(e.code())) + ": line ", 0) == 0) throw;
            // Re-tag library errors with the offending line.
            const std::string detail = what.substr(error_name(e.code()).size() + 2);
            fail(e.code(), line, detail);
        }
    }
    return net ? std::move(*net) : InfluenceNetwork(ConnectivityMode::general);
}

InfluenceNetwork parse_network(const std::string& text) {
    std::istringstream in(text);
    return parse_network(in);
}

InfluenceNetwork load_network(const std::filesystem::path& path, bool force) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot read " + path.string());
    InfluenceNetwork net = parse_network(in);
    net.finalize();
    if (!force) {
        const auto violations = validate(net);
        if (!violations.empty()) {
            throw Error(ErrorCode::validation_failed,
                        path.string() + " has " + std::to_string(violations.size()) +
                            " violation(s), first: " + format_violation(violations.front()));
        }
    }
    return net;
}

std::string serialize_network(const InfluenceNetwork& net) {
    std::ostringstream out;
    out << "mode " << mode_name(net.mode()) << '\n';
    std::set<Edge> implied;
    for (const auto& [name, c] : net.chains()) {
        out << "chain " << name << ':';
        for (EventId e : c.events) out << ' ' << e.value;
        out << '\n';
        for (std::size_t i = 1; i < c.events.size(); ++i) implied.insert({c.events[i - 1], c.events[i]});
    }
    std::vector<EventId> loose;
    for (EventId e : net.events()) {
        if (net.chains_of(e).empty()) loose.push_back(e);
    }
    if (!loose.empty()) {
        out << "event";
        for (EventId e : loose) out << ' ' << e.value;
        out << '\n';
    }
    for (const auto& [s, t] : net.edges()) {
        if (!implied.contains({s, t})) out << "influence " << s.value << " -> " << t.value << '\n';
    }
    return out.str();
}

std::string format_violation(const Violation& v) {
    std::string out = v.rule + " [";
    for (std::size_t i = 0; i < v.events.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v.events[i].value);
    }
    return out + "] " + v.detail;
}

}  // namespace infnet
