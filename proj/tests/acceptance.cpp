// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "infnet/checkerboard.hpp"
#include "infnet/free_particle.hpp"
#include "infnet/geometry.hpp"
#include "infnet/kinematics.hpp"
#include "infnet/network_io.hpp"
#include "infnet/projection.hpp"
#include "infnet/transforms.hpp"

using namespace infnet;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& why) {
        if (!ok && pass) {
            pass = false;
            detail = why;
        }
    }
};

// |a - b| <= tol * max(|a|, |b|, scale). `scale` is the magnitude of the
// operands that produced a and b, so cancellation near zero is judged
// against the inputs rather than the tiny result.
bool close(double a, double b, double tol, double scale = 0.0) {
    return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), scale});
}

std::string num(double v) { return cli::format_number(v); }

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && secs > budget_seconds) {
        o.require(false, "took " + num(secs) + " s, budget " + num(budget_seconds) + " s");
    }
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %d: %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
                o.pass ? "" : " :: ", o.detail.c_str());
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num_dist(-1'000'000, 1'000'000);
    std::uniform_int_distribution<long long> den_dist(1, 1'000'000);
    return Rational(num_dist(rng), den_dist(rng));
}

}  // namespace

int main() {
    std::mt19937_64 rng(20240601);

    criterion(1, "enumerate --p 4 --q 3 lists 35 words from PPPPQQQ to QQQPPPP", 1.0, [](Outcome& o) {
        std::ostringstream out, err;
        o.require(cli::run({"enumerate", "--p", "4", "--q", "3"}, out, err) == 0, "exit code");
        std::vector<std::string> words;
        std::istringstream in(out.str());
        for (std::string w; std::getline(in, w);) words.push_back(w);
        o.require(words.size() == 35, "got " + std::to_string(words.size()) + " words");
        o.require(!words.empty() && words.front() == "PPPPQQQ", "first word");
        o.require(!words.empty() && words.back() == "QQQPPPP", "last word");
    });

    criterion(2, "coordinated chains: distance 2 from (2,-2) and (3,-1); scalar of (2,-2) is -4", 0, [](Outcome& o) {
        const auto net = load_network(INFNET_FIXTURE_DIR "/coordinated.net");
        const Chain& p = net.chain("P");
        const Chain& q = net.chain("Q");
        auto pair_for = [&](Label pi, Label qj) {
            const auto pq = project_label(net, q, qj, p, Direction::forward);
            const auto qp = project_label(net, p, pi, q, Direction::forward);
            if (!pq || !qp) throw Error(ErrorCode::missing_projection, "fixture endpoint");
            return PairQuantification{Rational(*pq - pi), Rational(qj - *qp)};
        };
        const auto a = pair_for(5, 5);
        const auto b = pair_for(5, 6);
        o.require(a == PairQuantification{2, -2}, "first endpoint pair is " + to_string(a.dp) + "," + to_string(a.dq));
        o.require(b == PairQuantification{3, -1}, "second endpoint pair is " + to_string(b.dp) + "," + to_string(b.dq));
        o.require(distance(net, p, q, 5, 5) == 2, "distance from (2,-2)");
        o.require(distance(net, p, q, 5, 6) == 2, "distance from (3,-1)");
        const auto iq = quantify_interval(net, p.at(5), q.at(5), p, q);
        o.require(iq.pair == PairQuantification{2, -2}, "interval pair");
        o.require(iq.scalar == -4, "interval scalar " + to_string(iq.scalar));
    });

    criterion(3, "decompose (4,2) = (3,3)+(1,-1); scalar 8 = 3^2 - 1^2", 0, [](Outcome& o) {
        const PairQuantification pair{4, 2};
        const auto d = decompose(pair);
        o.require(d.symmetric == PairQuantification{3, 3}, "symmetric part");
        o.require(d.antisymmetric == PairQuantification{1, -1}, "antisymmetric part");
        o.require(d.symmetric + d.antisymmetric == pair, "parts do not sum back");
        const auto m = minkowski_scalar(pair);
        o.require(m.scalar == 8 && m.dt == 3 && m.dx == 1, "minkowski scalar");
        o.require(m.dt * m.dt - m.dx * m.dx == 8, "3^2 - 1^2");
    });

    criterion(4, "dp*dq == dt^2 - dx^2 exactly for 10^4 random rational pairs", 1.0, [&](Outcome& o) {
        for (int i = 0; i < 10'000 && o.pass; ++i) {
            const PairQuantification pair{random_rational(rng), random_rational(rng)};
            const auto m = minkowski_scalar(pair);
            o.require(pair.dp * pair.dq == m.dt * m.dt - m.dx * m.dx, "identity broken at case " + std::to_string(i));
            o.require(m.scalar == pair.scalar(), "scalar mismatch at case " + std::to_string(i));
        }
    });

    criterion(5, "pair_transform preserves dp*dq for 10^4 random cases (1e-12 rel)", 1.0, [&](Outcome& o) {
        std::uniform_real_distribution<double> side(-100.0, 100.0);
        std::uniform_real_distribution<double> frame(0.01, 100.0);
        for (int i = 0; i < 10'000 && o.pass; ++i) {
            const RealPair pair{side(rng), side(rng)};
            const RealPair t = pair_transform({frame(rng), frame(rng)}, pair);
            o.require(close(t.scalar(), pair.scalar(), 1e-12), "case " + std::to_string(i));
        }
    });

    criterion(6, "pair_transform route equals lorentz_boost for 10^4 cases with |beta| <= 0.99", 1.0, [&](Outcome& o) {
        const auto worked = lorentz_boost(Boost{0.6, 1.25}, 5.0, 3.0);
        o.require(close(worked.dt, 4.0, 1e-12) && std::abs(worked.dx) <= 1e-12 * 5.0,
                  "worked case gave (" + num(worked.dt) + ", " + num(worked.dx) + ")");
        const auto via_pair = to_spacetime(pair_transform({1.0, 4.0}, {8.0, 2.0}));
        o.require(via_pair.dt == 4.0 && via_pair.dx == 0.0, "worked case through pair_transform");

        std::uniform_real_distribution<double> beta_dist(-0.99, 0.99);
        std::uniform_real_distribution<double> coord(-50.0, 50.0);
        for (int i = 0; i < 10'000 && o.pass; ++i) {
            // m/n chosen so that the frame boost has the drawn beta
            const double beta = beta_dist(rng);
            const FrameRelation rel{1.0 - beta, 1.0 + beta};
            const double dt = coord(rng);
            const double dx = coord(rng);
            const RealPair pair{dt + dx, dt - dx};
            const auto a = to_spacetime(pair_transform(rel, pair));
            const Boost b = frame_boost(rel);
            const auto c = lorentz_boost(b, dt, dx);
            const double scale = b.gamma * (std::abs(dt) + std::abs(dx));
            o.require(close(a.dt, c.dt, 1e-12, scale) && close(a.dx, c.dx, 1e-12, scale),
                      "case " + std::to_string(i) + " beta " + num(beta));
        }
    });

    criterion(7, "interval_length(z p) = z interval_length(p) for 10^3 cases (1e-12 rel)", 0, [&](Outcome& o) {
        std::uniform_real_distribution<double> side(1e-3, 1e3);
        std::uniform_real_distribution<double> zs(1e-3, 1e3);
        for (int i = 0; i < 1000 && o.pass; ++i) {
            const RealPair p{side(rng), side(rng)};
            const double z = zs(rng);
            o.require(close(interval_length(RealPair{z * p.dp, z * p.dq}), z * interval_length(p), 1e-12),
                      "case " + std::to_string(i));
        }
    });

    criterion(8, "mass^2 = E^2 - p^2 for 10^4 rate pairs; (0.5, 2) -> (1, 1.25, 0.75, 0.6)", 0, [&](Outcome& o) {
        const auto k = kinematics_from_rates({0.5, 2.0});
        o.require(k.mass == 1.0 && k.energy == 1.25 && k.momentum == 0.75 && close(k.beta, 0.6, 1e-15),
                  "worked case gave " + num(k.mass) + " " + num(k.energy) + " " + num(k.momentum) + " " + num(k.beta));
        const auto r = rates_from_counts(4.0, 8.0, 2.0);
        o.require(r.r_p == 0.5 && r.r_q == 2.0, "rates from counts");
        o.require(close(beta_consistency(8.0, 2.0), k.beta, 1e-15), "beta from the pair");

        std::uniform_real_distribution<double> rate(1e-3, 1e3);
        for (int i = 0; i < 10'000 && o.pass; ++i) {
            const auto kk = kinematics_from_rates({rate(rng), rate(rng)});
            const double e2 = kk.energy * kk.energy;
            o.require(close(kk.mass * kk.mass, e2 - kk.momentum * kk.momentum, 1e-12, e2),
                      "case " + std::to_string(i));
        }
    });

    criterion(9, "transform_rates keeps mass and boosts (E, p) for 10^3 cases (1e-12 rel)", 0, [&](Outcome& o) {
        std::uniform_real_distribution<double> rate(1e-2, 1e2);
        std::uniform_real_distribution<double> frame(0.05, 20.0);
        for (int i = 0; i < 1000 && o.pass; ++i) {
            const RatePair r{rate(rng), rate(rng)};
            const FrameRelation rel{frame(rng), frame(rng)};
            const auto before = kinematics_from_rates(r);
            const auto after = kinematics_from_rates(transform_rates(rel, r));
            const Boost b = frame_boost(rel);
            const auto boosted = lorentz_boost(b, before.energy, before.momentum);
            const double scale = b.gamma * (before.energy + std::abs(before.momentum));
            o.require(close(after.mass, before.mass, 1e-12), "mass, case " + std::to_string(i));
            o.require(close(after.energy, boosted.dt, 1e-12, scale), "energy, case " + std::to_string(i));
            o.require(close(after.momentum, boosted.dx, 1e-12, scale), "momentum, case " + std::to_string(i));
        }
    });

    criterion(10, "one-step probability is 1 and the field norm stays 1 over 100 steps", 0, [&](Outcome& o) {
        std::normal_distribution<double> g;
        for (double theta : {std::numbers::pi / 6, std::numbers::pi / 4, std::numbers::pi / 3}) {
            for (int i = 0; i < 1000 && o.pass; ++i) {
                Spinor s{{g(rng), g(rng)}, {g(rng), g(rng)}};
                const double n = std::sqrt(s.norm());
                s.phi_p /= n;
                s.phi_q /= n;
                const double total = one_step_probability_total(s, theta);
                o.require(std::abs(total - 1.0) <= 1e-12, "theta " + num(theta) + " total " + num(total));
            }
            const TransferMatrices tm(theta);
            SpinorField field = SpinorField::point_source(Symbol::P);
            for (std::size_t n = 1; n <= 100 && o.pass; ++n) {
                field = step_field(field, tm);
                o.require(std::abs(field.total_norm() - 1.0) <= 1e-12 * static_cast<double>(n),
                          "theta " + num(theta) + " norm drift at step " + std::to_string(n));
            }
        }
    });

    criterion(11, "field evolution equals the path sum at every site, N <= 12, three angles", 30.0, [](Outcome& o) {
        for (double theta : {std::numbers::pi / 4, std::numbers::pi / 6, std::numbers::pi / 3}) {
            const TransferMatrices tm(theta);
            for (Symbol initial : {Symbol::P, Symbol::Q}) {
                SpinorField field = SpinorField::point_source(initial);
                for (std::size_t n = 0; n <= 12; ++n) {
                    for (std::int64_t d = -static_cast<std::int64_t>(n); d <= static_cast<std::int64_t>(n); ++d) {
                        const Spinor s = field.at(LatticeSite{d});
                        const auto kp = path_sum_kernel(initial, {}, Symbol::P, LatticeSite{d}, n, theta);
                        const auto kq = path_sum_kernel(initial, {}, Symbol::Q, LatticeSite{d}, n, theta);
                        o.require(std::abs(kp - s.phi_p) <= 1e-12 && std::abs(kq - s.phi_q) <= 1e-12,
                                  "theta " + num(theta) + " N " + std::to_string(n) + " doubled x " +
                                      std::to_string(d));
                    }
                    field = step_field(field, tm);
                }
            }
        }
    });

    criterion(12, "paths move at |dx/dt| = 1 and the field stays inside |x| <= N/2", 0, [](Outcome& o) {
        for (std::size_t n = 1; n <= 12; ++n) {
            for (std::size_t a = 0; a <= n; ++a) {
                for (const auto& w : enumerate_sequences(a, n - a)) {
                    for (const auto& step : sequence_to_path(w).steps) {
                        o.require(abs(step.dx / step.dt) == 1, "word " + w.str());
                    }
                }
            }
        }
        for (double theta : {0.1, std::numbers::pi / 4, 1.4}) {
            SpinorField field = SpinorField::point_source(Symbol::Q);
            const TransferMatrices tm(theta);
            for (std::int64_t n = 1; n <= 100; ++n) {
                field = step_field(field, tm);
                const auto [lo, hi] = field.support();
                o.require(lo.doubled >= -n && hi.doubled <= n, "support escapes at N = " + std::to_string(n));
            }
        }
    });

    criterion(13, "PQPPQPQ fixture validates and every particle step has a zero side", 0, [](Outcome& o) {
        const auto net = build_free_particle_fixture(4, 3, InfluenceSequence("PQPPQPQ"));
        o.require(validate(net).empty(), "validate() reported violations");
        const auto steps = particle_step_projections(net);
        o.require(steps.size() == 6, "expected 6 steps");
        for (std::size_t k = 0; k < steps.size(); ++k) {
            const auto& s = steps[k];
            o.require((s.dp && *s.dp == 0) || (s.dq && *s.dq == 0), "step " + std::to_string(k + 1));
        }
    });

    criterion(14, "10^5 words of 1000 steps at probP 0.3 give beta within 4 sigma of 0.4", 10.0, [](Outcome& o) {
        const auto s = sample_beta(1000, 0.3, 314159, 100'000);
        o.require(s.expected_beta == 1.0 - 2.0 * 0.3, "expected beta");
        o.require(std::abs(s.mean_beta - 0.4) <= 4.0 * s.sigma_of_mean,
                  "mean " + num(s.mean_beta) + " sigma " + num(s.sigma_of_mean));
    });

    std::printf("%d of 14 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
