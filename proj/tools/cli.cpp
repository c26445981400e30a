#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "infnet/checkerboard.hpp"
#include "infnet/free_particle.hpp"
#include "infnet/geometry.hpp"
#include "infnet/kinematics.hpp"
#include "infnet/network_io.hpp"
#include "infnet/projection.hpp"
#include "infnet/svg.hpp"
#include "infnet/transforms.hpp"

namespace infnet::cli {

std::string format_number(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) return "nan";
    std::string s(buf, end);
    return s == "-0" ? "0" : s;
}

namespace {

std::string fmt(const std::optional<Label>& l) { return l ? std::to_string(*l) : "-"; }

std::string fmt(const PairQuantification& p) { return "(" + to_string(p.dp) + "," + to_string(p.dq) + ")"; }

std::string fmt(Amplitude a) { return format_number(a.real()) + ' ' + format_number(a.imag()); }

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::parse_error:
        case ErrorCode::io_error:
        case ErrorCode::invalid_argument:
            return exit_usage;
        default:
            return exit_violation;
    }
}

Symbol symbol_option(const std::string& s) {
    if (s.size() != 1) throw Error(ErrorCode::invalid_argument, "expected P or Q, got '" + s + "'");
    return parse_symbol(s[0]);
}

EventId event_option(std::uint64_t id, const InfluenceNetwork& net) {
    if (!net.has_event(EventId{id})) throw Error(ErrorCode::unknown_event, "no event " + std::to_string(id));
    return EventId{id};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) throw Error(ErrorCode::io_error, "cannot write " + path);
}

void print_pair_geometry(std::ostream& out, const PairQuantification& pair) {
    const auto m = minkowski_scalar(pair);
    const auto d = decompose(pair);
    out << "scalar " << to_string(m.scalar) << '\n'
        << "dt " << to_string(m.dt) << '\n'
        << "dx " << to_string(m.dx) << '\n'
        << "decomposition " << fmt(d.symmetric) << '+' << fmt(d.antisymmetric) << '\n';
}

struct Options {
    bool force = false;
    std::string file;
    std::string chain_p = "P";
    std::string chain_q = "Q";
    std::optional<std::string> pair_chain;
    std::vector<std::string> rational_pair;
    std::vector<double> real_pair;
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    Label p_label = 0;
    Label q_label = 0;
    double m = 1.0;
    double n = 1.0;
    double count = 0.0;
    double dp = 0.0;
    double dq = 0.0;
    std::optional<double> r_p;
    std::optional<double> r_q;
    std::size_t n_p = 0;
    std::size_t n_q = 0;
    std::size_t cap = default_enumeration_cap;
    std::optional<double> amplitudes_theta;
    std::string initial = "P";
    std::size_t steps = 0;
    double theta = default_theta;
    double prob_p = 0.5;
    std::size_t words = 1;
    std::uint64_t seed = 0;
    bool print_words = false;
    std::string csv;
    std::string zitter;
    std::string svg;
    std::string word;
};

using Handler = std::function<int(const Options&, std::ostream&)>;

int cmd_validate(const Options& o, std::ostream& out) {
    auto net = load_network(o.file, true);
    const auto violations = validate(net);
    for (const auto& v : violations) out << format_violation(v) << '\n';
    out << (violations.empty() ? "ok" : "violations " + std::to_string(violations.size())) << '\n';
    return violations.empty() ? exit_ok : exit_violation;
}

int cmd_quantify(const Options& o, std::ostream& out) {
    const auto net = load_network(o.file, o.force);
    const Chain& p = net.chain(o.chain_p);
    const auto coords = quantify_all(net, p);
    const auto ids = net.events();

    const Chain* q = o.pair_chain ? &net.chain(*o.pair_chain) : nullptr;
    bool classify = q != nullptr;
    if (q && !is_coordinated(net, p, *q)) {
        out << "warning: chains " << p.name << " and " << q->name << " are not coordinated; classification skipped\n";
        classify = false;
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
        out << ids[i].value << ' ' << fmt(coords[i].forward) << ' ' << fmt(coords[i].backward);
        if (classify) {
            const bool between = is_between(net, ids[i], p, *q);
            const bool pair_ready = between && coords[i].forward && forward_project(net, ids[i], *q);
            out << ' ' << (between ? "between" : "not-between") << ' ' << (pair_ready ? "pair" : "-");
        }
        out << '\n';
    }
    return exit_ok;
}

int cmd_interval(const Options& o, std::ostream& out) {
    if (!o.rational_pair.empty()) {
        print_pair_geometry(out, {parse_rational(o.rational_pair[0]), parse_rational(o.rational_pair[1])});
        return exit_ok;
    }
    if (o.file.empty()) throw Error(ErrorCode::invalid_argument, "give --pair or a network file with --from/--to");
    const auto net = load_network(o.file, o.force);
    const auto iq = quantify_interval(net, event_option(o.from, net), event_option(o.to, net), net.chain(o.chain_p),
                                      net.chain(o.chain_q));
    out << "quadruple " << iq.quadruple[0] << ' ' << iq.quadruple[1] << ' ' << iq.quadruple[2] << ' '
        << iq.quadruple[3] << '\n'
        << "pair " << fmt(iq.pair) << '\n';
    print_pair_geometry(out, iq.pair);
    return exit_ok;
}

int cmd_distance(const Options& o, std::ostream& out) {
    const auto net = load_network(o.file, o.force);
    out << "distance " << to_string(distance(net, net.chain(o.chain_p), net.chain(o.chain_q), o.p_label, o.q_label))
        << '\n';
    return exit_ok;
}

int cmd_transform(const Options& o, std::ostream& out) {
    const FrameRelation rel{o.m, o.n};
    const RealPair in{o.real_pair[0], o.real_pair[1]};
    const RealPair t = pair_transform(rel, in);
    const Boost b = frame_boost(rel);
    const SpacetimeInterval st = to_spacetime(t);
    out << "pair (" << format_number(t.dp) << ", " << format_number(t.dq) << ")\n"
        << "scalar " << format_number(t.scalar()) << '\n'
        << "dt " << format_number(st.dt) << '\n'
        << "dx " << format_number(st.dx) << '\n'
        << "beta " << format_number(b.beta) << '\n'
        << "gamma " << format_number(b.gamma) << '\n';
    return exit_ok;
}

int cmd_kinematics(const Options& o, std::ostream& out) {
    RatePair rates;
    std::optional<double> pair_beta;
    if (o.r_p || o.r_q) {
        if (!o.r_p || !o.r_q) throw Error(ErrorCode::invalid_argument, "--rp and --rq go together");
        rates = {*o.r_p, *o.r_q};
    } else {
        rates = rates_from_counts(o.count, o.dp, o.dq);
        pair_beta = beta_consistency(o.dp, o.dq);
    }
    const Kinematics k = kinematics_from_rates(rates);
    out << "rP " << format_number(rates.r_p) << '\n'
        << "rQ " << format_number(rates.r_q) << '\n'
        << "m " << format_number(k.mass) << '\n'
        << "E " << format_number(k.energy) << '\n'
        << "p " << format_number(k.momentum) << '\n'
        << "beta " << format_number(k.beta) << '\n';
    if (pair_beta) out << "beta-from-pair " << format_number(*pair_beta) << '\n';
    return exit_ok;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const auto words = enumerate_sequences(o.n_p, o.n_q, o.cap);
    if (!o.amplitudes_theta) {
        for (const auto& w : words) out << w.str() << '\n';
        return exit_ok;
    }
    const Symbol initial = symbol_option(o.initial);
    // Per-word amplitudes; the class sums come from the path-sum kernel.
    for (const auto& w : words) out << w.str() << ' ' << fmt(path_amplitude(w, initial, *o.amplitudes_theta)) << '\n';
    const LatticeSite end{static_cast<std::int64_t>(o.n_q) - static_cast<std::int64_t>(o.n_p)};
    for (Symbol f : {Symbol::P, Symbol::Q}) {
        const Amplitude total = path_sum_kernel(initial, LatticeSite{}, f, end, o.n_p + o.n_q, *o.amplitudes_theta);
        out << "sum-" << static_cast<char>(f) << ' ' << fmt(total) << '\n';
    }
    return exit_ok;
}

int cmd_simulate(const Options& o, std::ostream& out) {
    std::uint64_t seed = o.seed;
    if (const char* env = std::getenv("INFNET_SEED")) {
        const std::string s(env);
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw Error(ErrorCode::invalid_argument, "INFNET_SEED is not an unsigned integer");
        }
    }
    if (o.print_words) {
        for (const auto& w : sample_sequences(o.steps, o.prob_p, seed, o.words)) out << w.str() << '\n';
    }
    const auto s = sample_beta(o.steps, o.prob_p, seed, o.words);
    out << "seed " << seed << '\n'
        << "words " << s.words << '\n'
        << "steps " << s.steps << '\n'
        << "mean_beta " << format_number(s.mean_beta) << '\n'
        << "expected_beta " << format_number(s.expected_beta) << '\n'
        << "sigma_of_mean " << format_number(s.sigma_of_mean) << '\n';
    return exit_ok;
}

int cmd_propagate(const Options& o, std::ostream& out) {
    const TransferMatrices tm(o.theta);
    SpinorField field = SpinorField::point_source(symbol_option(o.initial));
    std::ostringstream csv;
    csv << "t,x,probP,probQ,total\n";
    for (std::size_t t = 0;; ++t) {
        const std::string total = format_number(field.total_norm());
        for (std::int64_t d = field.first(); d <= field.last(); ++d) {
            const LatticeSite site{d};
            const Spinor s = field.at(site);
            if (s.norm() == 0.0) continue;
            csv << t << ',' << format_number(site.x()) << ',' << format_number(std::norm(s.phi_p)) << ','
                << format_number(std::norm(s.phi_q)) << ',' << total << '\n';
        }
        if (t == o.steps) break;
        field = step_field(field, tm);
    }
    if (o.csv.empty()) {
        out << csv.str();
    } else {
        write_file(o.csv, csv.str());
    }
    if (!o.zitter.empty()) {
        std::ostringstream z;
        z << "t,mean_x,norm\n";
        for (const auto& s : zitterbewegung_trace(SpinorField::point_source(symbol_option(o.initial)), o.steps, tm)) {
            z << s.t << ',' << format_number(s.mean_x) << ',' << format_number(s.norm) << '\n';
        }
        write_file(o.zitter, z.str());
    }
    return exit_ok;
}

int cmd_hasse(const Options& o, std::ostream& out) {
    const auto net = load_network(o.file, o.force);
    write_file(o.svg, hasse_svg(net));
    out << "wrote " << o.svg << '\n';
    return exit_ok;
}

int cmd_paths(const Options& o, std::ostream& out) {
    const InfluenceSequence word(o.word);
    write_file(o.svg, path_svg(sequence_to_path(word)));
    out << "wrote " << o.svg << '\n';
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Influence-network toolkit", "infnet"};
    app.require_subcommand(1);
    Options o;
    std::map<CLI::App*, Handler> handlers;

    auto file_cmd = [&](const char* name, const char* help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", o.file, "network file")->required();
        sub->add_flag("--force", o.force, "load files that fail validation");
        handlers[sub] = std::move(h);
        return sub;
    };

    file_cmd("validate", "check a network file against the chain and mode rules", cmd_validate);

    auto* quantify = file_cmd("quantify", "project every event onto a chain", cmd_quantify);
    quantify->add_option("--chain", o.chain_p, "observer chain")->required();
    quantify->add_option("--pair", o.pair_chain, "second chain for the betweenness classification");

    auto* interval = app.add_subcommand("interval", "pair geometry of an interval");
    handlers[interval] = cmd_interval;
    interval->add_option("file", o.file, "network file");
    interval->add_flag("--force", o.force, "load files that fail validation");
    auto* pair_opt = interval->add_option("--pair", o.rational_pair, "explicit (dp, dq)")->expected(2);
    interval->add_option("--p", o.chain_p, "first chain");
    interval->add_option("--q", o.chain_q, "second chain");
    interval->add_option("--from", o.from, "interval start event")->excludes(pair_opt);
    interval->add_option("--to", o.to, "interval end event")->excludes(pair_opt);

    auto* dist = file_cmd("distance", "distance between two coordinated chains", cmd_distance);
    dist->add_option("--p", o.chain_p, "first chain");
    dist->add_option("--q", o.chain_q, "second chain");
    dist->add_option("--pi", o.p_label, "label on the first chain")->required();
    dist->add_option("--qj", o.q_label, "label on the second chain")->required();

    auto* transform = app.add_subcommand("transform", "map a pair into another frame");
    handlers[transform] = cmd_transform;
    transform->add_option("--m", o.m, "forward length on P'")->required();
    transform->add_option("--n", o.n, "backward length on Q'")->required();
    transform->add_option("--pair", o.real_pair, "(dp, dq)")->expected(2)->required();

    auto* kin = app.add_subcommand("kinematics", "mass, energy and momentum from influence rates");
    handlers[kin] = cmd_kinematics;
    auto* count = kin->add_option("--count", o.count, "influences counted on each chain");
    auto* dp = kin->add_option("--dp", o.dp, "projected interval on P");
    auto* dq = kin->add_option("--dq", o.dq, "projected interval on Q");
    auto* rp = kin->add_option("--rp", o.r_p, "rate on P")->excludes(count)->excludes(dp)->excludes(dq);
    kin->add_option("--rq", o.r_q, "rate on Q")->excludes(count)->excludes(dp)->excludes(dq)->needs(rp);
    count->needs(dp)->needs(dq);

    auto* en = app.add_subcommand("enumerate", "list influence sequences with fixed counts");
    handlers[en] = cmd_enumerate;
    en->add_option("--p", o.n_p, "number of P influences")->required();
    en->add_option("--q", o.n_q, "number of Q influences")->required();
    en->add_option("--cap", o.cap, "maximum word length");
    en->add_option("--amplitudes", o.amplitudes_theta, "mixing angle; print path amplitudes");
    en->add_option("--initial", o.initial, "helicity before the first step (P or Q)");

    auto* sim = app.add_subcommand("simulate", "sample random sequences and estimate the velocity");
    handlers[sim] = cmd_simulate;
    sim->add_option("--steps", o.steps, "symbols per word")->required();
    sim->add_option("--probp", o.prob_p, "probability of a P influence");
    sim->add_option("--count", o.words, "number of words");
    sim->add_option("--seed", o.seed, "RNG seed (INFNET_SEED overrides)");
    sim->add_flag("--words", o.print_words, "print the sampled words");

    auto* prop = app.add_subcommand("propagate", "evolve a point source on the checkerboard lattice");
    handlers[prop] = cmd_propagate;
    prop->add_option("--steps", o.steps, "time steps")->required();
    prop->add_option("--theta", o.theta, "mixing angle in (0, pi/2)");
    prop->add_option("--initial", o.initial, "initial helicity (P or Q)");
    prop->add_option("--csv", o.csv, "CSV output path (default: stdout)");
    prop->add_option("--zitter", o.zitter, "mean-position trace output path");

    auto* hasse = file_cmd("hasse", "SVG Hasse diagram of a network", cmd_hasse);
    hasse->add_option("--svg", o.svg, "output path")->required();

    auto* paths = app.add_subcommand("paths", "SVG of the zig-zag path of a word");
    handlers[paths] = cmd_paths;
    paths->add_option("--word", o.word, "word over P and Q")->required();
    paths->add_option("--svg", o.svg, "output path")->required();

    std::vector<std::string> argv_storage{"infnet"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    for (auto& [sub, handler] : handlers) {
        if (!sub->parsed()) continue;
        try {
            return handler(o, out);
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            return exit_code_for(e.code());
        }
    }
    return exit_usage;
}

}  // namespace infnet::cli
