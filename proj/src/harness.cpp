#include "rgsslab/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "rgsslab/beam.hpp"
#include "rgsslab/burgers.hpp"
#include "rgsslab/errors.hpp"
#include "rgsslab/nlo.hpp"
#include "rgsslab/ode_embedding.hpp"
#include "rgsslab/parallel.hpp"
#include "rgsslab/plasma.hpp"
#include "rgsslab/rgflow.hpp"
#include "rgsslab/rng.hpp"
#include "rgsslab/special.hpp"

namespace rgsslab::harness {

namespace {

using json = nlohmann::json;
using std::numbers::pi;

struct Outcome {
    std::string probe;
    double measured = 0, reference = 0, residual = 0;
};

using CheckFn = std::function<Outcome(const json& params, std::uint64_t seed)>;

struct CheckDef {
    std::string id;
    double tolerance;
    std::string relation;
    CheckFn run;
    // Empty when the check applies to the given params, else the reason it does not.
    std::function<std::string(const json&)> unavailable;
};

struct KindDef {
    std::string kind;
    std::vector<std::string> required;
    std::function<void(const json&)> validate;
    std::function<std::vector<std::string>(const json&)> defaults;
    std::vector<CheckDef> checks;
};

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorKind::ParseError, what); }

double num(const json& p, const std::string& key) {
    if (!p.contains(key)) parse_fail("missing required key '" + key + "'");
    const auto& v = p.at(key);
    if (!v.is_number()) parse_fail("key '" + key + "' must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) parse_fail("key '" + key + "' must be finite");
    return d;
}

double num_or(const json& p, const std::string& key, double fallback) {
    return p.contains(key) ? num(p, key) : fallback;
}

std::string str(const json& p, const std::string& key) {
    if (!p.contains(key)) parse_fail("missing required key '" + key + "'");
    if (!p.at(key).is_string()) parse_fail("key '" + key + "' must be a string");
    return p.at(key).get<std::string>();
}

std::size_t count_or(const json& p, const std::string& key, std::size_t fallback) {
    const double d = num_or(p, key, static_cast<double>(fallback));
    if (d < 1 || d != std::floor(d) || d > 1e7) parse_fail("key '" + key + "' must be a positive integer");
    return static_cast<std::size_t>(d);
}

std::string label(std::initializer_list<std::pair<const char*, double>> coords) {
    std::string s;
    for (const auto& [name, v] : coords) {
        if (!s.empty()) s += ';';
        s += name;
        s += '=';
        s += format_g(v, 6);
    }
    return s;
}

// Largest entry; NaN entries mark probes outside the check's domain and are skipped. With no
// usable probe the outcome is NaN, which fails.
Outcome worst_of(const std::vector<double>& vals, const std::function<std::string(std::size_t)>& probe,
                 double reference = 0) {
    std::size_t best = vals.size();
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (!std::isnan(vals[i]) && (best == vals.size() || vals[i] > vals[best])) best = i;
    if (best == vals.size()) return {"none", std::nan(""), reference, std::nan("")};
    return {probe(best), vals[best], reference, vals[best] - reference};
}

// Lower-bound checks report threshold/measured, so pass means measured >= threshold.
Outcome at_least(double measured, double threshold, std::string probe) {
    const double r = measured > 0 ? threshold / measured : std::numeric_limits<double>::infinity();
    return {std::move(probe), measured, threshold, r};
}

std::vector<std::string> ids_of(const std::vector<CheckDef>& defs) {
    std::vector<std::string> out;
    for (const auto& d : defs) out.push_back(d.id);
    return out;
}

// ---- rgflow

std::function<double(double)> beta_fn(const json& p) {
    const std::string name = str(p, "beta");
    const double k = num_or(p, "k", 2);
    if (name == "linear") return [k](double g) { return k * g; };
    if (name == "square") return [](double g) { return g * g; };
    if (name == "square_cubic") return [](double g) { return g * g + 0.3 * g * g * g; };
    parse_fail("unknown beta '" + name + "' (linear, square, square_cubic)");
}

KindDef rgflow_kind() {
    KindDef k{"rgflow", {"beta"}, nullptr, nullptr, {}};
    k.validate = [](const json& p) {
        beta_fn(p);
        count_or(p, "samples", 1000);
    };
    auto not_linear = [](const json& p) -> std::string {
        return str(p, "beta") == "linear" ? "" : "automodel requires beta = linear";
    };
    k.checks.push_back({"compose_residual", 1e-8,
                        "|flow(flow(p, l1), l2) - flow(p, l1 + l2)| / max(1, |flow(p, l1 + l2)|)",
                        [](const json& p, std::uint64_t seed) {
                            const auto beta = beta_fn(p);
                            VectorField field;
                            field.add("l", [](const Point&) { return -1.0; });
                            field.add("g", [beta](const Point& q) { return beta(q.at("g")); });
                            const CounterRng rng(seed);
                            const std::size_t n = count_or(p, "samples", 1000);
                            struct Sample {
                                double g, l, l1, l2;
                            };
                            std::vector<Sample> s(n);
                            for (std::uint64_t i = 0; i < n; ++i) {
                                const double g = rng.uniform(0.01, 1.0, 0, 4 * i);
                                // Keeps the quadratic pole at lambda ~ 1/g outside the sample.
                                const double span = std::min(0.2 / g, 2.0);
                                s[i] = {g, rng.uniform(-1, 1, 0, 4 * i + 3), rng.uniform(-span, span, 0, 4 * i + 1),
                                        rng.uniform(-span, span, 0, 4 * i + 2)};
                            }
                            IntegratorConfig cfg;
                            const auto r = map_index<double>(
                                n,
                                [&](std::size_t i) {
                                    const Point start{{"l", s[i].l}, {"g", s[i].g}};
                                    const Point end = flow(field, start, s[i].l1 + s[i].l2, cfg);
                                    const double norm =
                                        std::max({1.0, std::abs(end.at("l")), std::abs(end.at("g"))});
                                    return compose_residual(field, start, s[i].l1, s[i].l2, cfg) / norm;
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) {
                                return label({{"g", s[i].g}, {"l", s[i].l}, {"l1", s[i].l1}, {"l2", s[i].l2}});
                            });
                        },
                        nullptr});
    k.checks.push_back({"automodel", 1e-9, "gbar(x, g) = g x^k for beta = k g, relative",
                        [](const json& p, std::uint64_t) {
                            const double kk = num_or(p, "k", 2);
                            const rgflow::BetaFunction1 b{beta_fn(p)};
                            IntegratorConfig cfg;
                            const std::vector<double> gs{0.01, 0.2, 1.0};
                            const std::size_t nx = 41;
                            auto x_of = [](std::size_t i) { return 0.1 * std::pow(100.0, static_cast<double>(i) / 40); };
                            const auto r = map_index<double>(
                                nx * gs.size(),
                                [&](std::size_t i) {
                                    const double x = x_of(i % nx), g = gs[i / nx];
                                    return std::abs(rgflow::effective_coupling(b, x, g, cfg) / (g * std::pow(x, kk)) - 1);
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) { return label({{"x", x_of(i % nx)}, {"g", gs[i / nx]}}); });
                        },
                        not_linear});
    k.checks.push_back({"functional_equation", 1e-9, "|gbar(x, g) - gbar(x/a, gbar(a, g))| / max(1, |gbar|)",
                        [](const json& p, std::uint64_t seed) {
                            IntegratorConfig cfg;
                            const auto ec = rgflow::make_effective_coupling({beta_fn(p)}, cfg);
                            const CounterRng rng(seed);
                            const std::size_t n = count_or(p, "samples", 1000);
                            std::vector<std::array<double, 3>> s(n);
                            for (std::uint64_t i = 0; i < n; ++i)
                                s[i] = {rng.uniform(0.01, 0.5, 1, 3 * i), std::exp(rng.uniform(-1, 1, 1, 3 * i + 1)),
                                        std::exp(rng.uniform(-1, 1, 1, 3 * i + 2))};
                            const auto r = map_index<double>(
                                n,
                                [&](std::size_t i) {
                                    const auto [g, x, a] = s[i];
                                    const double scale = std::max(1.0, std::abs(ec.gbar(x, g)));
                                    return rgflow::functional_equation_residual(ec, x, a, g) / scale;
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) {
                                return label({{"g", s[i][0]}, {"x", s[i][1]}, {"a", s[i][2]}});
                            });
                        },
                        nullptr});
    k.defaults = [](const json& p) {
        std::vector<std::string> d{"compose_residual", "functional_equation"};
        if (str(p, "beta") == "linear") d.insert(d.begin() + 1, "automodel");
        return d;
    };
    return k;
}

// ---- ode-embedding

KindDef ode_kind() {
    KindDef k{"ode-embedding", {"probes", "margin"}, nullptr, nullptr, {}};
    k.validate = [](const json& p) {
        count_or(p, "probes", 1);
        const double m = num(p, "margin");
        if (m <= 0 || m >= 1) parse_fail("key 'margin' must lie in (0, 1)");
        const double b = num_or(p, "b_max", 0.5);
        if (b <= 0 || b > 1) parse_fail("key 'b_max' must lie in (0, 1]");
    };
    k.checks.push_back({"r1_reconstruction", 1e-7, "|u_R1 / u_direct - 1| on b = c = 0 probes",
                        [](const json& p, std::uint64_t seed) {
                            const auto probes = ode::r1_probes(seed, count_or(p, "probes", 1), num(p, "margin"));
                            IntegratorConfig cfg;
                            const auto r = map_index<double>(
                                probes.size(),
                                [&](std::size_t i) {
                                    const auto& q = probes[i];
                                    const double d = ode::direct_solve(q.rhs, {q.tau, q.x}, q.t, cfg);
                                    return std::abs(ode::reconstruct_via_r1(q.t, {q.tau, q.x}, q.rhs.a, cfg) / d - 1);
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) {
                                const auto& q = probes[i];
                                return label({{"t", q.t}, {"tau", q.tau}, {"x", q.x}, {"a", q.rhs.a}});
                            });
                        },
                        nullptr});
    k.checks.push_back({"fs_residual_r1", 1e-6, "t u^2 - x^2 tau u_x - u_a = 0 on the R1 reconstruction",
                        [](const json& p, std::uint64_t seed) {
                            const auto probes = ode::r1_probes(seed, count_or(p, "probes", 1), num(p, "margin"));
                            IntegratorConfig cfg;
                            NumDiffConfig nd;
                            const auto sol = SolutionSampler::scalar("u", [cfg](const Point& q) {
                                return ode::reconstruct_via_r1(q.at("t"), {q.at("tau"), q.at("x")}, q.at("a"), cfg);
                            });
                            const auto r = map_index<double>(
                                probes.size(),
                                [&](std::size_t i) {
                                    const auto& q = probes[i];
                                    const Point pt{{"t", q.t}, {"tau", q.tau}, {"x", q.x}, {"a", q.rhs.a}, {"b", 0.0}, {"c", 0.0}};
                                    return std::abs(ode::fs_residual_r1(sol, pt, nd));
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) {
                                const auto& q = probes[i];
                                return label({{"t", q.t}, {"tau", q.tau}, {"x", q.x}, {"a", q.rhs.a}});
                            });
                        },
                        nullptr});
    k.checks.push_back({"implicit_reconstruction", 1e-7, "|u_implicit / u_direct - 1| with <1/f>(u) - <1/f>(x) = t - tau",
                        [](const json& p, std::uint64_t seed) {
                            const auto probes = ode::implicit_probes(seed, count_or(p, "probes", 1));
                            IntegratorConfig cfg;
                            const auto r = map_index<double>(
                                probes.size(),
                                [&](std::size_t i) {
                                    const auto& q = probes[i];
                                    const double d = ode::direct_solve(q.rhs, {q.tau, q.x}, q.t, cfg);
                                    return std::abs(ode::reconstruct_implicit(q.rhs, {q.tau, q.x}, q.t) / d - 1);
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) {
                                const auto& q = probes[i];
                                return label({{"t", q.t}, {"tau", q.tau}, {"x", q.x}, {"a", q.rhs.a}, {"b", q.rhs.b}, {"c", q.rhs.c}});
                            });
                        },
                        nullptr});
    k.checks.push_back({"r2_continuation", 1e-6, "|u_R2 - u_direct| for a = 1, 0 < b <= b_max",
                        [](const json& p, std::uint64_t) {
                            const double b_max = num_or(p, "b_max", 0.5);
                            const std::array<std::array<double, 3>, 4> cases{
                                {{0.5, 0.0, 0.8}, {1.0, 0.2, 0.5}, {-0.7, 0.0, 1.0}, {0.3, 1.0, -1.0}}};
                            IntegratorConfig cfg;
                            auto b_of = [b_max](std::size_t i) { return b_max * static_cast<double>(i / 4 + 1) / 4; };
                            const auto r = map_index<double>(
                                16,
                                [&](std::size_t i) {
                                    const auto [x, tau, t] = cases[i % 4];
                                    const double b = b_of(i);
                                    return std::abs(ode::reconstruct_via_r2(t, {tau, x}, b, cfg) -
                                                    ode::direct_solve({1, b, 0}, {tau, x}, t, cfg));
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) {
                                const auto [x, tau, t] = cases[i % 4];
                                return label({{"t", t}, {"tau", tau}, {"x", x}, {"b", b_of(i)}});
                            });
                        },
                        nullptr});
    k.defaults = [](const json&) {
        return std::vector<std::string>{"r1_reconstruction", "fs_residual_r1", "implicit_reconstruction", "r2_continuation"};
    };
    return k;
}

// ---- burgers

Profile1D burgers_profile(const json& p) {
    if (!p.contains("profile")) parse_fail("missing required key 'profile'");
    const auto& pr = p.at("profile");
    if (!pr.is_object()) parse_fail("key 'profile' must be an object with a 'type'");
    const std::string type = str(pr, "type");
    if (type == "gaussian") return gaussian_profile(num_or(pr, "amplitude", 1), num_or(pr, "width", 1));
    if (type == "constant") return constant_profile(num(pr, "c0"));
    if (type == "table") {
        std::vector<double> x, y;
        read_table(str(pr, "path"), x, y);
        return table_profile(x, y);
    }
    parse_fail("unknown profile type '" + type + "' (gaussian, constant, table)");
}

bool constant_type(const json& p) { return p.at("profile").value("type", "") == "constant"; }

burgers::BurgersProblem burgers_problem(const json& p) { return {num(p, "a"), num(p, "nu"), burgers_profile(p)}; }

burgers::QuadratureConfig burgers_quadrature(const json& p) {
    burgers::QuadratureConfig q;
    q.nodes = static_cast<int>(count_or(p, "nodes", 256));
    q.half_width_sigmas = num_or(p, "half_width_sigmas", 10);
    return q;
}

// 5 x 5 (t, x) nodes at a and a/2.
struct BurgersGrid {
    std::vector<double> t{0.1, 0.3, 0.5, 0.7, 1.0}, x{-2.0, -1.0, 0.0, 0.7, 1.5};
    std::size_t size() const { return 2 * t.size() * x.size(); }
    Point at(std::size_t i, double a, double nu) const {
        const double ai = i / (t.size() * x.size()) == 0 ? a : a / 2;
        const std::size_t r = i % (t.size() * x.size());
        return Point{{"t", t[r / x.size()]}, {"x", x[r % x.size()]}, {"a", ai}, {"nu", nu}};
    }
};

CheckFn burgers_fs(bool r5) {
    return [r5](const json& p, std::uint64_t) {
        const auto prob = burgers_problem(p);
        const auto q = burgers_quadrature(p);
        const auto sol = burgers::exact_sampler(prob, q);
        const BurgersGrid grid;
        NumDiffConfig nd;
        const auto r = map_index<double>(
            grid.size(),
            [&](std::size_t i) {
                const Point pt = grid.at(i, prob.a, prob.nu);
                return std::abs(r5 ? burgers::fs_residual_r5(sol, pt, prob, q, nd)
                                   : burgers::fs_residual_r6(sol, pt, prob, q, nd));
            },
            Exec::Parallel);
        return worst_of(r, [&](std::size_t i) {
            const Point pt = grid.at(i, prob.a, prob.nu);
            return label({{"t", pt.at("t")}, {"x", pt.at("x")}, {"a", pt.at("a")}});
        });
    };
}

double fd_error(const burgers::BurgersProblem& prob, const burgers::QuadratureConfig& q, double dx, double t_end,
                const std::vector<double>& ts, double x_half, double x_step, double& scale) {
    const double dt = 0.4 * dx * dx / (2 * prob.nu);
    const auto fd = burgers::fd_oracle(prob, -12, 12, t_end, dx, dt);
    double e = 0;
    scale = 0;
    for (double t : ts)
        for (double x = -x_half; x <= x_half + 1e-9; x += x_step) {
            const double u = burgers::exact_solution(t, x, prob, q);
            e = std::max(e, std::abs(fd.value(t, x) - u));
            scale = std::max(scale, std::abs(u));
        }
    return e;
}

KindDef burgers_kind() {
    KindDef k{"burgers", {"a", "nu", "profile"}, nullptr, nullptr, {}};
    k.validate = [](const json& p) {
        burgers_problem(p).validate();
        burgers_quadrature(p).validate();
        if (num_or(p, "dx", 0.02) <= 0) parse_fail("key 'dx' must be positive");
    };
    k.checks.push_back({"exact_vs_fd", 5e-3, "max |u_exact - u_fd| / max |u_exact| over t <= 1, |x| <= 3",
                        [](const json& p, std::uint64_t) {
                            const auto prob = burgers_problem(p);
                            double scale = 0;
                            const double e = fd_error(prob, burgers_quadrature(p), num_or(p, "dx", 0.02), 1.0,
                                                      {0.1, 0.4, 0.7, 1.0}, 3, 0.3, scale);
                            const double rel = scale > 0 ? e / scale : e;
                            return Outcome{label({{"dx", num_or(p, "dx", 0.02)}}), rel, 0, rel};
                        },
                        nullptr});
    k.checks.push_back({"fd_refinement_order", 0.2, "log2 of the FD error ratio under dx halving (dt ~ dx^2), against 2",
                        [](const json& p, std::uint64_t) {
                            const auto prob = burgers_problem(p);
                            const auto q = burgers_quadrature(p);
                            double s = 0;
                            // Probes sit on nodes of both grids, so interpolation adds nothing.
                            const double e1 = fd_error(prob, q, 0.08, 0.5, {0.5}, 2, 0.08, s);
                            const double e2 = fd_error(prob, q, 0.04, 0.5, {0.5}, 2, 0.08, s);
                            const double order = std::log2(e1 / e2);
                            return Outcome{label({{"t", 0.5}, {"dx", 0.04}}), order, 2, order - 2};
                        },
                        [](const json& p) -> std::string {
                            return constant_type(p) ? "a constant profile has no discretization error" : "";
                        }});
    k.checks.push_back({"fs_residual_r5", 1e-5, "-u_a - u/a + (1/a) exp(-a u/nu) <<f>> = 0 on the exact solution",
                        burgers_fs(true),
                        [](const json& p) -> std::string { return num(p, "a") == 0.0 ? "R5 needs a != 0" : ""; }});
    k.checks.push_back({"fs_residual_r6", 1e-5, "-u_t + exp(-a u/nu) <<a f_x^2 + nu f_xx>> = 0 on the exact solution",
                        burgers_fs(false), nullptr});
    k.checks.push_back({"galilean_shift", 1e-10, "u[f(. - s)](t, x + s) = u[f](t, x), s = 0.75",
                        [](const json& p, std::uint64_t) {
                            const auto prob = burgers_problem(p);
                            const auto q = burgers_quadrature(p);
                            burgers::BurgersProblem moved = prob;
                            moved.f = shifted(prob.f, 0.75);
                            const std::vector<double> ts{0.3, 0.6, 1.0}, xs{-1.0, 0.2, 1.4};
                            const auto r = map_index<double>(
                                9,
                                [&](std::size_t i) {
                                    const double t = ts[i / 3], x = xs[i % 3];
                                    return std::abs(burgers::exact_solution(t, x + 0.75, moved, q) -
                                                    burgers::exact_solution(t, x, prob, q));
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) { return label({{"t", ts[i / 3]}, {"x", xs[i % 3]}}); });
                        },
                        nullptr});
    k.checks.push_back({"constant_exact", 1e-10, "u = c0 for f = c0",
                        [](const json& p, std::uint64_t) {
                            const auto prob = burgers_problem(p);
                            const auto q = burgers_quadrature(p);
                            const double c0 = num(p.at("profile"), "c0");
                            const std::vector<double> ts{0.1, 0.5, 1.0}, xs{-2.0, 0.0, 3.0};
                            const auto r = map_index<double>(
                                9,
                                [&](std::size_t i) {
                                    return std::abs(burgers::exact_solution(ts[i / 3], xs[i % 3], prob, q) - c0);
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) { return label({{"t", ts[i / 3]}, {"x", xs[i % 3]}}); });
                        },
                        [](const json& p) -> std::string { return constant_type(p) ? "" : "needs a constant profile"; }});
    k.defaults = [](const json& p) {
        std::vector<std::string> d;
        if (constant_type(p)) d.push_back("constant_exact");
        d.push_back("exact_vs_fd");
        if (!constant_type(p)) d.push_back("fd_refinement_order");
        if (num(p, "a") != 0.0) d.push_back("fs_residual_r5");
        d.push_back("fs_residual_r6");
        d.push_back("galilean_shift");
        return d;
    };
    return k;
}

// ---- nlo-flat

BeamProfile beam_profile(const json& p) {
    const std::string name = str(p, "profile");
    if (name == "sech2") return sech2_beam();
    if (name == "gaussian") return gaussian_beam();
    parse_fail("unknown beam profile '" + name + "' (sech2, gaussian)");
}

std::vector<nlo::WNPoint> r7_probes(const json& p) {
    const double w_max = num_or(p, "w_max", 0.5);
    std::vector<nlo::WNPoint> out;
    for (int i = 0; i <= 5; ++i)
        for (double n : {0.2, 0.3, 0.4, 0.5, 0.6, 0.7}) out.push_back({w_max * i / 5, n});
    return out;
}

std::vector<nlo::WNPoint> order_probes() {
    std::vector<nlo::WNPoint> out;
    for (double w : {0.1, 0.2, 0.3})
        for (double n : {0.2, 0.4, 0.6}) out.push_back({w, n});
    return out;
}

std::vector<double> r7_relative(const json& p, std::vector<nlo::WNPoint>& probes) {
    probes = r7_probes(p);
    const auto prof = beam_profile(p);
    const double alpha = num(p, "alpha");
    return map_index<double>(
        probes.size(),
        [&](std::size_t i) {
            return nlo::lb_coordinates_r7(nlo::hodograph_point(prof, alpha, probes[i].w, probes[i].n), alpha).relative();
        },
        Exec::Parallel);
}

CheckFn order_slope(nlo::Approx which) {
    return [which](const json& p, std::uint64_t) {
        const double a = num(p, "alpha");
        const auto fit = nlo::order_check(which, gaussian_beam(), {a, a / 2, a / 4}, order_probes());
        return at_least(fit.slope, 1.7, label({{"alpha_max", a}}));
    };
}

KindDef nlo_flat_kind() {
    KindDef k{"nlo-flat", {"alpha", "profile"}, nullptr, nullptr, {}};
    k.validate = [](const json& p) {
        beam_profile(p);
        if (num(p, "alpha") <= 0) parse_fail("key 'alpha' must be positive");
        const double w = num_or(p, "w_max", 0.5);
        if (w <= 0 || w > 0.5) parse_fail("key 'w_max' must lie in (0, 0.5]");
    };
    k.checks.push_back({"r7_residual", 1e-4, "max(|f|, |g|) of R7 on the hodograph solution, relative to the term scale",
                        [](const json& p, std::uint64_t) {
                            std::vector<nlo::WNPoint> pr;
                            const auto r = r7_relative(p, pr);
                            return worst_of(r, [&](std::size_t i) { return label({{"w", pr[i].w}, {"n", pr[i].n}}); });
                        },
                        nullptr});
    k.checks.push_back({"r7_negative_control", 1, "min relative R7 residual >= 1e-2 (reported as 1e-2 / measured)",
                        [](const json& p, std::uint64_t) {
                            std::vector<nlo::WNPoint> pr;
                            const auto r = r7_relative(p, pr);
                            const auto it = std::min_element(r.begin(), r.end());
                            const auto i = static_cast<std::size_t>(it - r.begin());
                            return at_least(*it, 1e-2, label({{"w", pr[i].w}, {"n", pr[i].n}}));
                        },
                        nullptr});
    k.checks.push_back({"order_gauss_a", 1, "log-log slope of the gauss_a residual in alpha >= 1.7 (reported as 1.7 / slope)",
                        order_slope(nlo::Approx::GaussA), nullptr});
    k.checks.push_back({"order_gauss_b", 1, "log-log slope of the gauss_b residual in alpha >= 1.7 (reported as 1.7 / slope)",
                        order_slope(nlo::Approx::GaussB), nullptr});
    k.checks.push_back({"soliton_a_noise_floor", 1e-11, "soliton_a residual stays at roundoff for every alpha",
                        [](const json& p, std::uint64_t) {
                            const double a = num(p, "alpha");
                            const std::vector<double> alphas{a, a / 2, a / 4};
                            const auto probes = order_probes();
                            const auto r = map_index<double>(
                                alphas.size() * probes.size(),
                                [&](std::size_t i) {
                                    const auto& q = probes[i % probes.size()];
                                    const auto c = nlo::approx_coeffs(nlo::Approx::SolitonA, sech2_beam(),
                                                                      alphas[i / probes.size()], q.w, q.n);
                                    return std::max(std::abs(c.f), std::abs(c.g));
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) {
                                const auto& q = probes[i % probes.size()];
                                return label({{"alpha", alphas[i / probes.size()]}, {"w", q.w}, {"n", q.n}});
                            });
                        },
                        nullptr});
    k.defaults = [](const json& p) {
        if (str(p, "profile") == "sech2")
            return std::vector<std::string>{"r7_residual", "soliton_a_noise_floor", "order_gauss_a", "order_gauss_b"};
        return std::vector<std::string>{"r7_negative_control", "order_gauss_a", "order_gauss_b"};
    };
    return k;
}

// ---- nlo-cyl

nlo::BeamBoundary cyl_boundary(const json& p) {
    nlo::BeamBoundary b{beam_profile(p)};
    b.alpha = num(p, "alpha");
    b.beta = num_or(p, "beta", 0);
    b.T = num(p, "T");
    b.nu_geom = 2;
    return b;
}

std::string needs_no_diffraction(const json& p) {
    return num_or(p, "beta", 0) == 0.0 ? "" : "the direct solver needs beta = 0";
}

KindDef nlo_cyl_kind() {
    KindDef k{"nlo-cyl", {"alpha", "T", "profile"}, nullptr, nullptr, {}};
    k.validate = [](const json& p) {
        cyl_boundary(p).validate();
        if (num(p, "T") <= 2) parse_fail("key 'T' must exceed 2 so the probes precede focusing");
    };
    k.checks.push_back({"r9_vs_direct", 1e-5, "max |(v, n)_R9 surface - (v, n)_direct| for t <= 0.92",
                        [](const json& p, std::uint64_t) {
                            const auto b = cyl_boundary(p);
                            const std::vector<double> ts{0.2, 0.5, 0.92}, xs{0.25, 0.5, 1.0, 1.5};
                            const auto r = map_index<double>(
                                ts.size() * xs.size(),
                                [&](std::size_t i) {
                                    const double t = ts[i / xs.size()], x = xs[i % xs.size()];
                                    const auto s = nlo::r9_surface(b, t, x);
                                    const auto d = nlo::direct_nlo_state(b, t, x);
                                    return std::max(std::abs(s.v - d.v), std::abs(s.n - d.n));
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) {
                                return label({{"t", ts[i / xs.size()]}, {"x", xs[i % xs.size()]}});
                            });
                        },
                        needs_no_diffraction});
    k.checks.push_back({"r9_t_coefficient", 1e-12, "the d_t coefficient of R9 equals 1 on the boundary t = 0",
                        [](const json& p, std::uint64_t seed) {
                            const auto b = cyl_boundary(p);
                            const auto f = nlo::r9_field(b);
                            const CounterRng rng(seed);
                            std::vector<double> xs(50);
                            for (std::uint64_t i = 0; i < xs.size(); ++i) xs[i] = rng.uniform(0.05, 2.5, 2, i);
                            const auto r = map_index<double>(
                                xs.size(),
                                [&](std::size_t i) {
                                    const double x = xs[i];
                                    const Point q{{"t", 0.0}, {"x", x}, {"v", b.V(x)}, {"n", b.profile(x)}};
                                    return std::abs(f.coefficient("t", q) - 1);
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) { return label({{"x", xs[i]}}); });
                        },
                        nullptr});
    k.checks.push_back({"direct_residual", 1e-8, "both beam equations vanish on the direct solution",
                        [](const json& p, std::uint64_t) {
                            const auto b = cyl_boundary(p);
                            const auto sol = nlo::direct_nlo_solver(b);
                            NumDiffConfig nd;
                            const std::vector<double> ts{0.2, 0.6}, xs{0.3, 1.0, 1.8};
                            const auto r = map_index<double>(
                                6,
                                [&](std::size_t i) {
                                    const auto [r1, r2] = nlo::beam_residual(b, sol, ts[i / 3], xs[i % 3], nd);
                                    return std::max(std::abs(r1), std::abs(r2));
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) { return label({{"t", ts[i / 3]}, {"x", xs[i % 3]}}); });
                        },
                        needs_no_diffraction});
    k.checks.push_back({"r9_fs_convergence", 1e-4,
                        "canonical R9 residual on its own surface at the finest step; infinite unless each step halving "
                        "cuts it by >= 3",
                        [](const json& p, std::uint64_t) {
                            const auto b = cyl_boundary(p);
                            const auto field = nlo::r9_field(b);
                            const auto sol = nlo::r9_surface_sampler(b);
                            const std::vector<double> hs{2e-2, 1e-2, 5e-3};
                            const auto r = map_index<double>(
                                hs.size(),
                                [&](std::size_t i) {
                                    NumDiffConfig nd;
                                    nd.scheme_order = 2;
                                    nd.base_step = hs[i];
                                    const auto kk = canonical_residual(field, sol, Point{{"t", 0.5}, {"x", 0.9}}, nd);
                                    return std::max(std::abs(kk[0]), std::abs(kk[1]));
                                },
                                Exec::Parallel);
                            const bool converging = r[0] >= 3 * r[1] && r[1] >= 3 * r[2];
                            return Outcome{label({{"t", 0.5}, {"x", 0.9}, {"h", hs[2]}}), r[2], 0,
                                           converging ? r[2] : std::numeric_limits<double>::infinity()};
                        },
                        nullptr});
    k.checks.push_back({"source_axis_consistency", 1e-12,
                        "axis expansion of the source term matches the direct quotient at |chi| = 1e-3",
                        [](const json& p, std::uint64_t) {
                            const auto b = cyl_boundary(p);
                            const std::vector<double> chis{1e-3 * (1 - 1e-9), -1e-3 * (1 - 1e-9)};
                            std::vector<double> r;
                            for (double c : chis) {
                                const auto s = nlo::source_terms(b, c), d = nlo::source_terms_direct(b, c);
                                r.push_back(std::max(std::abs(s.S - d.S), std::abs(s.S_chi - d.S_chi)));
                            }
                            return worst_of(r, [&](std::size_t i) { return label({{"chi", chis[i]}}); });
                        },
                        nullptr});
    k.defaults = [](const json& p) {
        if (num_or(p, "beta", 0) == 0.0)
            return std::vector<std::string>{"r9_t_coefficient", "r9_vs_direct", "direct_residual", "source_axis_consistency"};
        return std::vector<std::string>{"r9_t_coefficient", "r9_fs_convergence", "source_axis_consistency"};
    };
    return k;
}

// ---- plasma

plasma::Regime regime_of(const json& p) {
    const std::string r = str(p, "regime");
    if (r == "cold") return plasma::Regime::Cold;
    if (r == "hot") return plasma::Regime::Hot;
    parse_fail("unknown regime '" + r + "' (cold, hot)");
}

KindDef plasma_kind() {
    KindDef k{"plasma", {"regime", "a"}, nullptr, nullptr, {}};
    k.validate = [](const json& p) {
        regime_of(p);
        if (num(p, "a") < 0) parse_fail("key 'a' must be non-negative");
        num_or(p, "scorer_perturb", 0);
    };
    k.checks.push_back({"pde_residual", 1e-8,
                        "v_t + a v v_x - E = 0 and E_t + a v E_x + v = 0 on the parametric solution, off the fold",
                        [](const json& p, std::uint64_t) {
                            const special::ScorerTable table(num_or(p, "scorer_perturb", 0));
                            const plasma::PlasmaConfig c{regime_of(p), num(p, "a"), &table};
                            const std::size_t nm = 21, nt = 25;
                            auto mu = [](std::size_t i) { return -2 + 0.2 * static_cast<double>(i); };
                            auto tt = [](std::size_t j) { return pi / 12 * static_cast<double>(j); };
                            const auto r = map_index<double>(
                                nm * nt,
                                [&](std::size_t i) {
                                    try {
                                        const auto [r1, r2] = plasma::pde_residual(c, mu(i / nt), tt(i % nt));
                                        return std::max(std::abs(r1), std::abs(r2));
                                    } catch (const Error& e) {
                                        if (e.kind() != ErrorKind::FoldEncountered) throw;
                                        return std::nan("");
                                    }
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) { return label({{"mu", mu(i / nt)}, {"t", tt(i % nt)}}); });
                        },
                        nullptr});
    k.checks.push_back({"fs_residual_r8", 1e-6, "(v_a - E v_x, E_a - E E_x) = 0 on the inverted solution, off the fold",
                        [](const json& p, std::uint64_t) {
                            const special::ScorerTable table(num_or(p, "scorer_perturb", 0));
                            const double a = num(p, "a");
                            const plasma::PlasmaConfig c{regime_of(p), a, &table};
                            const auto sol = plasma::parametric_sampler(c);
                            NumDiffConfig nd;
                            const std::vector<double> xs{-1.5, -0.3, 0.4, 1.2}, ts{0.2, 1.5, 3.0, 4.4};
                            const auto r = map_index<double>(
                                16,
                                [&](std::size_t i) {
                                    try {
                                        const auto [s1, s2] = plasma::fs_residual_r8(
                                            sol, Point{{"x", xs[i / 4]}, {"t", ts[i % 4]}, {"a", a}}, nd);
                                        return std::max(std::abs(s1), std::abs(s2));
                                    } catch (const Error& e) {
                                        if (e.kind() != ErrorKind::FoldEncountered) throw;
                                        return std::nan("");
                                    }
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) { return label({{"x", xs[i / 4]}, {"t", ts[i % 4]}}); });
                        },
                        nullptr});
    k.checks.push_back({"q_hot_vs_contour", 1e-8, "|(pi Ai, pi Gi) - contour quadrature| on mu in [-5, 5]",
                        [](const json& p, std::uint64_t) {
                            const special::ScorerTable table(num_or(p, "scorer_perturb", 0));
                            auto mu = [](std::size_t i) { return -5 + 0.25 * static_cast<double>(i); };
                            const auto r = map_index<double>(
                                41,
                                [&](std::size_t i) {
                                    const auto q = plasma::q_hot(mu(i), table);
                                    return std::max(std::abs(q.q1 - pi * special::airy_ai_contour(mu(i))),
                                                    std::abs(q.q2 - pi * special::scorer_gi_contour(mu(i))));
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) { return label({{"mu", mu(i)}}); });
                        },
                        nullptr});
    k.checks.push_back({"special_vs_series", 1e-9, "|Ai - series| and |Gi - series| on mu in [-5, 5]",
                        [](const json& p, std::uint64_t) {
                            const special::ScorerTable table(num_or(p, "scorer_perturb", 0));
                            auto mu = [](std::size_t i) { return -5 + 0.125 * static_cast<double>(i); };
                            const auto r = map_index<double>(
                                81,
                                [&](std::size_t i) {
                                    const double m = mu(i);
                                    return std::max(std::abs(special::airy_ai(m) - special::airy_ai_maclaurin(m)),
                                                    std::abs(table.gi(m) - special::scorer_gi_maclaurin(m)));
                                },
                                Exec::Parallel);
                            return worst_of(r, [&](std::size_t i) { return label({{"mu", mu(i)}}); });
                        },
                        nullptr});
    k.defaults = [](const json& p) {
        if (regime_of(p) == plasma::Regime::Cold) return std::vector<std::string>{"pde_residual", "fs_residual_r8"};
        return std::vector<std::string>{"special_vs_series", "q_hot_vs_contour", "pde_residual", "fs_residual_r8"};
    };
    return k;
}

const std::vector<KindDef>& registry() {
    static const std::vector<KindDef> kinds{rgflow_kind(), ode_kind(), burgers_kind(), nlo_flat_kind(), nlo_cyl_kind(),
                                            plasma_kind()};
    return kinds;
}

const KindDef* find_kind(const std::string& kind) {
    for (const auto& k : registry())
        if (k.kind == kind) return &k;
    return nullptr;
}

const CheckDef* find_check(const KindDef& k, const std::string& id) {
    for (const auto& c : k.checks)
        if (c.id == id) return &c;
    return nullptr;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::vector<std::string> scenario_kinds() {
    std::vector<std::string> out;
    for (const auto& k : registry()) out.push_back(k.kind);
    return out;
}

std::vector<std::string> check_ids(const std::string& kind) {
    const KindDef* k = find_kind(kind);
    require(k != nullptr, ErrorKind::InvalidArgument, "unknown kind '" + kind + "'");
    return ids_of(k->checks);
}

Scenario parse_scenario(const nlohmann::json& doc) {
    if (!doc.is_object()) parse_fail("scenario must be a JSON object");
    const std::string schema = str(doc, "schema");
    if (schema != kScenarioSchema) parse_fail("unsupported schema '" + schema + "', expected " + kScenarioSchema);
    Scenario s;
    s.kind = str(doc, "kind");
    const KindDef* k = find_kind(s.kind);
    if (!k) parse_fail("unknown kind '" + s.kind + "'");
    s.name = doc.contains("name") ? str(doc, "name") : s.kind;
    if (doc.contains("seed")) {
        const auto& v = doc.at("seed");
        if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
            parse_fail("key 'seed' must be a non-negative integer");
        s.seed = v.get<std::uint64_t>();
    }
    if (doc.contains("output")) s.output = str(doc, "output");
    if (!doc.contains("params")) parse_fail("missing required key 'params'");
    s.params = doc.at("params");
    if (!s.params.is_object()) parse_fail("key 'params' must be an object");
    for (const auto& key : k->required)
        if (!s.params.contains(key)) parse_fail("missing required key '" + key + "' for kind " + s.kind);
    try {
        k->validate(s.params);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        parse_fail(std::string("invalid params: ") + e.what());
    }

    std::vector<CheckSpec> checks;
    if (doc.contains("checks")) {
        const auto& list = doc.at("checks");
        if (!list.is_array()) parse_fail("key 'checks' must be an array");
        for (const auto& item : list) {
            CheckSpec c;
            std::optional<double> tol;
            if (item.is_string()) {
                c.id = item.get<std::string>();
            } else if (item.is_object()) {
                c.id = str(item, "id");
                if (item.contains("tolerance")) {
                    if (!item.at("tolerance").is_number()) parse_fail("tolerance of check '" + c.id + "' must be a number");
                    tol = item.at("tolerance").get<double>();
                }
            } else {
                parse_fail("each check must be an id or an object with 'id'");
            }
            const CheckDef* def = find_check(*k, c.id);
            if (!def) parse_fail("unknown check '" + c.id + "' for kind " + s.kind);
            c.tolerance = tol.value_or(def->tolerance);
            if (!(c.tolerance > 0) || !std::isfinite(c.tolerance))
                parse_fail("tolerance of check '" + c.id + "' must be finite and > 0");
            checks.push_back(c);
        }
    } else {
        for (const auto& id : k->defaults(s.params)) checks.push_back({id, find_check(*k, id)->tolerance});
    }
    if (checks.empty()) parse_fail("scenario selects no checks");
    for (const auto& c : checks) {
        const CheckDef* def = find_check(*k, c.id);
        if (def->unavailable) {
            const std::string why = def->unavailable(s.params);
            if (!why.empty()) parse_fail("check '" + c.id + "' is not available: " + why);
        }
    }
    s.checks = std::move(checks);
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open scenario file " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        parse_fail(path + ": " + e.what());
    }
    return parse_scenario(doc);
}

std::vector<ReportRow> run_scenario(const Scenario& s) {
    const KindDef* k = find_kind(s.kind);
    require(k != nullptr, ErrorKind::InvalidArgument, "unknown kind '" + s.kind + "'");
    std::vector<ReportRow> rows;
    for (const auto& c : s.checks) {
        const CheckDef* def = find_check(*k, c.id);
        require(def != nullptr, ErrorKind::InvalidArgument, "unknown check '" + c.id + "'");
        ReportRow row;
        row.check_id = s.name + "/" + c.id;
        row.tolerance = c.tolerance;
        row.relation = def->relation;
        const auto start = std::chrono::steady_clock::now();
        try {
            const Outcome o = def->run(s.params, s.seed);
            row.probe = o.probe;
            row.measured = o.measured;
            row.reference = o.reference;
            row.residual = o.residual;
        } catch (const std::exception& e) {
            row.probe = "none";
            row.measured = row.residual = std::nan("");
            row.error = e.what();
        }
        row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        row.pass = std::abs(row.residual) <= row.tolerance;
        rows.push_back(std::move(row));
    }
    return rows;
}

bool all_pass(const std::vector<ReportRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

std::vector<Scenario> builtin_suite(const std::string& name, double scorer_perturb) {
    require(name == "quick" || name == "all", ErrorKind::InvalidArgument, "unknown suite '" + name + "' (quick, all)");
    const bool all = name == "all";
    std::vector<json> docs;
    auto add = [&](const std::string& n, const std::string& kind, json params, json checks = nullptr) {
        json d{{"schema", kScenarioSchema}, {"name", n}, {"kind", kind}, {"seed", 20240607}, {"params", std::move(params)}};
        if (!checks.is_null()) d["checks"] = std::move(checks);
        docs.push_back(std::move(d));
    };
    const int samples = all ? 1000 : 200;
    add("rgflow-linear", "rgflow", {{"beta", "linear"}, {"k", 2}, {"samples", samples}});
    add("rgflow-square", "rgflow", {{"beta", "square"}, {"samples", samples}});
    if (all) add("rgflow-square-cubic", "rgflow", {{"beta", "square_cubic"}, {"samples", samples}});
    add("ode", "ode-embedding", {{"probes", all ? 200 : 40}, {"margin", 0.2}, {"b_max", 0.5}});
    const json gauss{{"type", "gaussian"}, {"amplitude", 1}, {"width", 1}};
    if (all) {
        for (double a : {0.5, 1.0})
            for (double nu : {0.25, 0.5})
                add("burgers-a" + format_g(a) + "-nu" + format_g(nu), "burgers", {{"a", a}, {"nu", nu}, {"profile", gauss}});
    } else {
        add("burgers-a1-nu0.5", "burgers", {{"a", 1}, {"nu", 0.5}, {"profile", gauss}});
    }
    add("burgers-constant", "burgers", {{"a", 1}, {"nu", 0.5}, {"profile", {{"type", "constant"}, {"c0", 0.6}}}});
    // The quick suite leaves out the two checks known to fail: order_gauss_b and r9_vs_direct at alpha > 0.
    if (all)
        add("nlo-flat-sech2", "nlo-flat", {{"alpha", 0.1}, {"profile", "sech2"}});
    else
        add("nlo-flat-sech2", "nlo-flat", {{"alpha", 0.1}, {"profile", "sech2"}},
            {"r7_residual", "soliton_a_noise_floor", "order_gauss_a"});
    add("nlo-flat-gaussian", "nlo-flat", {{"alpha", 0.1}, {"profile", "gaussian"}}, json{"r7_negative_control"});
    add("nlo-cyl-geometric", "nlo-cyl", {{"alpha", 0}, {"T", 10}, {"profile", "gaussian"}});
    if (all) {
        add("nlo-cyl-refraction", "nlo-cyl", {{"alpha", 0.05}, {"T", 10}, {"profile", "gaussian"}});
        add("nlo-cyl-diffraction", "nlo-cyl", {{"alpha", 0.05}, {"beta", 0.01}, {"T", 10}, {"profile", "gaussian"}});
    }
    for (double a : all ? std::vector<double>{0.2, 0.5} : std::vector<double>{0.3}) {
        add("plasma-hot-a" + format_g(a), "plasma", {{"regime", "hot"}, {"a", a}, {"scorer_perturb", scorer_perturb}});
        add("plasma-cold-a" + format_g(a), "plasma", {{"regime", "cold"}, {"a", a}});
    }
    std::vector<Scenario> out;
    for (const auto& d : docs) out.push_back(parse_scenario(d));
    return out;
}

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows, bool include_ms) {
    os << "check_id,probe,measured,reference,residual,tolerance,pass,ms\n";
    for (const auto& r : rows)
        os << csv_field(r.check_id) << ',' << csv_field(r.probe) << ',' << format_g(r.measured, 17) << ','
           << format_g(r.reference, 17) << ',' << format_g(r.residual, 17) << ',' << format_g(r.tolerance, 17) << ','
           << (r.pass ? "true" : "false") << ',' << format_g(include_ms ? r.ms : 0.0, 6) << '\n';
}

void write_json(std::ostream& os, const std::vector<ReportRow>& rows, bool include_ms) {
    json out{{"schema", kReportSchema}, {"pass", all_pass(rows)}, {"rows", json::array()}};
    // Non-finite values are written as strings so the report stays valid JSON.
    auto real = [](double v) -> json {
        if (std::isfinite(v)) return v;
        return format_g(v, 17);
    };
    for (const auto& r : rows) {
        json row{{"check_id", r.check_id},         {"probe", r.probe},         {"measured", real(r.measured)},
                 {"reference", real(r.reference)}, {"residual", real(r.residual)}, {"tolerance", real(r.tolerance)},
                 {"pass", r.pass},                 {"ms", include_ms ? r.ms : 0.0}, {"relation", r.relation}};
        if (!r.error.empty()) row["error"] = r.error;
        out["rows"].push_back(std::move(row));
    }
    os << out.dump(2) << '\n';
}

void write_summary(std::ostream& os, const std::vector<ReportRow>& rows) {
    std::size_t width = 8;
    for (const auto& r : rows) width = std::max(width, r.check_id.size());
    std::size_t failed = 0;
    for (const auto& r : rows) {
        failed += r.pass ? 0 : 1;
        os << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.check_id
           << "  residual " << std::setw(24) << format_g(r.residual, 6) << " tol " << std::setw(10)
           << format_g(r.tolerance, 3) << ' ' << format_g(r.ms, 4) << " ms";
        if (!r.error.empty()) os << "  [" << r.error << ']';
        os << '\n';
    }
    os << rows.size() - failed << '/' << rows.size() << " checks passed\n";
}

}  // namespace rgsslab::harness
