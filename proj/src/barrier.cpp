#include "frontgate/barrier.hpp"

#include "frontgate/error.hpp"
#include "frontgate/io.hpp"
#include "frontgate/numerics.hpp"
#include "frontgate/wavespeed.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <ostream>

namespace frontgate {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBetaMargin = 1e-4;
constexpr double kTailCut = 1e-4;
constexpr std::size_t kScanPoints = 64;

double w_step(double alpha, double beta) { return std::min(1e-4, (beta - alpha) / 200.0); }

void check_pair(const ReactionModel& model, double alpha, double beta) {
    if (model.kind() != ReactionKind::bistable || !(model.mass() > 0.0)) {
        fail_config("shooting needs a bistable f with F(1) > 0");
    }
    if (!(alpha > 0.0 && alpha < model.theta_c())) fail_config("shooting: alpha must lie in (0, theta_c)");
    if (!(beta > alpha && beta < 1.0)) fail_config("shooting: need alpha < beta < 1");
}

Bracket coefficient_bracket(const ReactionModel& model, double alpha, double beta, double tol) {
    const double target = model.mass();
    const double step = w_step(alpha, beta);
    auto reaches = [&](double C) { return shoot_w(model, C, alpha, beta, target, step).reached ? 1.0 : -1.0; };
    double hi = 1.0;
    for (int i = 0; reaches(hi) < 0.0; ++i) {
        if (i > 60) fail_numerical("shooting_coefficient: no upper bracket");
        hi *= 2.0;
    }
    return bisect(reaches, 0.0, hi, tol * std::max(1.0, hi));
}

// Half flight time, +inf if the orbit does not hit the level E = 0 before t_max.
double flight_half_length(const ReactionModel& model, double C, double beta, double t_max,
                          const OrbitOptions& opts) {
    const auto orbit = integrate_orbit(model, C, gamma_B_point(model, beta), t_max, opts);
    return orbit.exit == OrbitExit::hit_gamma_A ? 0.5 * orbit.exit_time : kInf;
}

}  // namespace

ShootingPair shooting_pair(const ReactionModel& model, double alpha, double beta, double tol) {
    check_pair(model, alpha, beta);
    const Bracket b = coefficient_bracket(model, alpha, beta, tol);
    const double C = b.mid();
    const auto shot = shoot_w(model, C, alpha, beta, kInf, w_step(alpha, beta));
    if (shot.truncated) fail_numerical("shooting_half_length: w - F vanished before beta");
    return {alpha, beta, C, 0.5 * shot.length};
}

double shooting_coefficient(const ReactionModel& model, double alpha, double beta, double tol) {
    check_pair(model, alpha, beta);
    return coefficient_bracket(model, alpha, beta, tol).mid();
}

double shooting_half_length(const ReactionModel& model, double alpha, double beta, double tol) {
    return shooting_pair(model, alpha, beta, tol).half_length;
}

OrbitOptions barrier_orbit_options(const ReactionModel& model, double coefficient) {
    OrbitOptions opts;
    opts.step = std::min({1e-3, 0.02 / std::max(coefficient, 1e-12), 5e-3 / std::max(model.max_abs_slope(), 1e-12)});
    opts.record = false;
    return opts;
}

double exit_frequency(const ReactionModel& model, double coefficient, double beta) {
    const auto orbit =
        integrate_orbit(model, coefficient, gamma_B_point(model, beta), 400.0, barrier_orbit_options(model, coefficient));
    if (orbit.exit != OrbitExit::hit_gamma_A) {
        fail_infeasible(std::string("exit_frequency: orbit ended by ") + to_string(orbit.exit));
    }
    return orbit.exit_point.x;
}

double half_length_profile(const ReactionModel& model, double coefficient, double beta, double t_max) {
    const double L = flight_half_length(model, coefficient, beta, t_max, barrier_orbit_options(model, coefficient));
    if (!std::isfinite(L)) fail_infeasible("half_length_profile: orbit does not reach E = 0");
    return L;
}

Endpoints limit_endpoints(const ReactionModel& model, double coefficient) {
    if (model.kind() != ReactionKind::bistable || !(model.mass() > 0.0)) {
        fail_config("limit_endpoints needs a bistable f with F(1) > 0");
    }
    const double step = 1e-4 / std::max(1.0, coefficient / 10.0);
    const auto from_zero = shoot_w_from_zero(model, coefficient, 1.0, model.mass(), step);
    const auto from_one = shoot_w_from_one(model, coefficient, step);
    if (!from_zero.reached || !from_one.reached) fail_infeasible("limit_endpoints: C must exceed the wave speed");
    return {from_one.p, from_zero.p};
}

LStarPoint minimal_half_length(const ReactionModel& model, double coefficient, double tol) {
    const double c_star = bistable_speed(model).c;
    if (!(coefficient > c_star * (1.0 + 1e-9))) fail_infeasible("L_star: C must exceed the wave speed");
    const Endpoints ends = limit_endpoints(model, coefficient);
    const double lo = ends.beta + kBetaMargin;
    const double hi = 1.0 - kBetaMargin;
    if (!(lo < hi)) fail_infeasible("L_star: empty beta interval");

    const OrbitOptions opts = barrier_orbit_options(model, coefficient);
    // Values above the best one so far cannot be the minimum; orbits are cut
    // off early once a finite value is known.
    double best = kInf;
    auto cap = [&] { return std::isfinite(best) ? std::min(400.0, 3.0 * best + 1.0) : 400.0; };
    auto profile = [&](double beta) { return flight_half_length(model, coefficient, beta, cap(), opts); };

    std::array<double, kScanPoints> betas{};
    std::size_t arg = kScanPoints;
    for (std::size_t i = 0; i < kScanPoints; ++i) {
        betas[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(kScanPoints - 1);
        const double v = profile(betas[i]);
        if (v < best) {
            best = v;
            arg = i;
        }
    }
    if (arg == kScanPoints) fail_infeasible("L_star: no orbit from the left level reaches E = 0");

    const double a = betas[arg == 0 ? 0 : arg - 1];
    const double b = betas[std::min(arg + 1, kScanPoints - 1)];
    Minimum m = golden_section(profile, a, b, tol);
    if (!(m.value <= best)) m = {betas[arg], best};

    LStarPoint out;
    out.coefficient = coefficient;
    out.half_length = m.value;
    out.beta = m.x;
    out.alpha = exit_frequency(model, coefficient, m.x);
    return out;
}

Endpoints minimizing_endpoints(const ReactionModel& model, double coefficient) {
    const auto p = minimal_half_length(model, coefficient);
    return {p.alpha, p.beta};
}

double minimal_coefficient(const ReactionModel& model, double half_length, double tol) {
    if (!(half_length > 0.0)) fail_config("C_star: L must be positive");
    const double c_star = bistable_speed(model).c;
    auto L_of = [&](double C) {
        try {
            return minimal_half_length(model, C, 1e-9).half_length;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::infeasible) return kInf;
            throw;
        }
    };
    double hi = std::max(2.0 * c_star, 1.0);
    for (int i = 0; L_of(hi) > half_length; ++i) {
        if (i > 40) fail_numerical("C_star: no upper bracket");
        hi *= 2.0;
    }
    double lo = c_star + 0.5 * (hi - c_star);
    for (int i = 0; L_of(lo) < half_length; ++i) {
        if (i > 60) fail_numerical("C_star: no lower bracket");
        lo = c_star + 0.5 * (lo - c_star);
    }
    const Bracket b = bisect([&](double C) { return half_length - L_of(C); }, lo, hi, tol * hi);
    return b.mid();
}

LStarCurve lstar_curve(const ReactionModel& model, const std::vector<double>& coefficients, ExecPolicy policy,
                       double tol) {
    const std::size_t n = coefficients.size();
    LStarCurve curve;
    curve.coefficient = coefficients;
    curve.half_length.assign(n, 0.0);
    curve.beta.assign(n, 0.0);
    curve.alpha.assign(n, 0.0);
    for_each_index(n, policy, [&](std::size_t i) {
        const auto p = minimal_half_length(model, coefficients[i], tol);
        curve.half_length[i] = p.half_length;
        curve.beta[i] = p.beta;
        curve.alpha[i] = p.alpha;
    });
    return curve;
}

const char* to_string(BarrierKind kind) {
    switch (kind) {
        case BarrierKind::minimal: return "minimal";
        case BarrierKind::maximal: return "maximal";
        case BarrierKind::other: return "other";
    }
    return "unknown";
}

double BarrierSolution::operator()(double xq) const {
    if (x.empty() || xq < x.front()) return 1.0;
    if (xq > x.back()) return 0.0;
    return interpolate(x, p, xq);
}

BarrierSolution reconstruct_barrier(const ReactionModel& model, double coefficient, double beta) {
    OrbitOptions opts = barrier_orbit_options(model, coefficient);
    opts.record = true;
    const auto orbit = integrate_orbit(model, coefficient, gamma_B_point(model, beta), 1e4, opts);
    if (orbit.exit != OrbitExit::hit_gamma_A) fail_infeasible("reconstruct_barrier: orbit does not reach E = 0");
    const double L = 0.5 * orbit.exit_time;

    BarrierSolution sol;
    sol.pair = {orbit.exit_point.x, beta, coefficient, L};

    // Outer equation -p'' = f, p' = q.
    auto rhs = [&](const std::array<double, 2>& s) -> std::array<double, 2> { return {s[1], -model(s[0])}; };
    const double h = std::min(1e-3, 5e-3 / std::max(model.max_abs_slope(), 1e-12));
    const std::size_t max_steps = static_cast<std::size_t>(1e4 / h);

    std::vector<std::array<double, 3>> left;  // (x, p, q), built outward from x = -L
    {
        std::array<double, 2> s{orbit.samples.front().pt.x, orbit.samples.front().pt.y};
        double xpos = -L;
        for (std::size_t i = 0; i < max_steps && s[0] < 1.0 - kTailCut && s[1] < 0.0; ++i) {
            s = rk4_step<2>(rhs, s, -h);
            xpos -= h;
            left.push_back({xpos, s[0], s[1]});
        }
    }
    for (auto it = left.rbegin(); it != left.rend(); ++it) {
        sol.x.push_back((*it)[0]);
        sol.p.push_back((*it)[1]);
        sol.dp.push_back((*it)[2]);
    }
    for (const auto& smp : orbit.samples) {
        const double xpos = smp.t - L;
        if (!sol.x.empty() && xpos <= sol.x.back()) continue;
        sol.x.push_back(xpos);
        sol.p.push_back(smp.pt.x);
        sol.dp.push_back(smp.pt.y);
    }
    {
        std::array<double, 2> s{orbit.exit_point.x, orbit.exit_point.y};
        double xpos = sol.x.back();
        for (std::size_t i = 0; i < max_steps && s[0] > kTailCut && s[1] < 0.0; ++i) {
            s = rk4_step<2>(rhs, s, h);
            xpos += h;
            sol.x.push_back(xpos);
            sol.p.push_back(s[0]);
            sol.dp.push_back(s[1]);
        }
    }
    return sol;
}

BarrierSet enumerate_barriers(const ReactionModel& model, double coefficient, double half_length, double tol) {
    BarrierSet set;
    set.threshold = minimal_half_length(model, coefficient);
    const double Ls = set.threshold.half_length;
    if (half_length < Ls * (1.0 - 1e-9)) {
        set.reason = "no_barrier";
        return set;
    }
    if (half_length <= Ls * (1.0 + 1e-6)) {
        set.solutions.push_back(reconstruct_barrier(model, coefficient, set.threshold.beta));
        set.solutions.back().kind = BarrierKind::minimal;
        return set;
    }

    const Endpoints ends = limit_endpoints(model, coefficient);
    const OrbitOptions opts = barrier_orbit_options(model, coefficient);
    const double t_max = std::max(400.0, 4.0 * half_length + 10.0);
    auto excess = [&](double beta) { return flight_half_length(model, coefficient, beta, t_max, opts) - half_length; };
    const double b0 = set.threshold.beta;

    std::vector<double> betas;
    // Left of the minimiser: approach beta_C until the profile exceeds L.
    for (double d = kBetaMargin; d > 1e-13; d *= 0.1) {
        const double b = ends.beta + d;
        if (b >= b0) continue;
        if (excess(b) > 0.0) {
            betas.push_back(bisect(excess, b, b0, tol).mid());
            break;
        }
    }
    for (double d = kBetaMargin; d > 1e-13; d *= 0.1) {
        const double b = 1.0 - d;
        if (b <= b0) continue;
        if (excess(b) > 0.0) {
            betas.push_back(bisect(excess, b0, b, tol).mid());
            break;
        }
    }
    if (betas.empty()) fail_numerical("enumerate_barriers: no bracket on either side of the minimiser");

    for (double b : betas) set.solutions.push_back(reconstruct_barrier(model, coefficient, b));
    set.solutions.front().kind = BarrierKind::minimal;
    if (set.solutions.size() > 1) set.solutions.back().kind = BarrierKind::maximal;
    return set;
}

double left_tail_offset(const ReactionModel& model, double beta, double p) {
    if (!(p >= beta && p < 1.0)) fail_config("left_tail_offset: need beta <= p < 1");
    const double F1 = model.mass();
    return integrate([&](double q) { return 1.0 / std::sqrt(2.0 * (F1 - model.potential(q))); }, beta, p, 1e-9);
}

double right_tail_offset(const ReactionModel& model, double alpha, double p) {
    if (!(p > 0.0 && p <= alpha)) fail_config("right_tail_offset: need 0 < p <= alpha");
    return integrate([&](double q) { return 1.0 / std::sqrt(-2.0 * model.potential(q)); }, p, alpha, 1e-9);
}

double barrier_residual(const ReactionModel& model, const BarrierSolution& sol) {
    const double L = sol.pair.half_length;
    const double C = sol.pair.coefficient;
    auto straddles = [](double a, double b, double edge) { return a <= edge + 1e-9 && b >= edge - 1e-9; };
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < sol.x.size(); ++i) {
        const double xa = sol.x[i - 1];
        const double xb = sol.x[i + 1];
        if (straddles(xa, xb, -L) || straddles(xa, xb, L)) continue;
        const double h0 = sol.x[i] - xa;
        const double h1 = xb - sol.x[i];
        const double d2 = 2.0 * (h0 * sol.p[i + 1] - (h0 + h1) * sol.p[i] + h1 * sol.p[i - 1]) / (h0 * h1 * (h0 + h1));
        const double chi = (sol.x[i] > -L && sol.x[i] < L) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(-d2 - C * chi * sol.dp[i] - model(sol.p[i])));
    }
    return worst;
}

double critical_jump(const ReactionModel& model) {
    if (model.kind() != ReactionKind::bistable || !(model.mass() > 0.0)) {
        fail_config("critical_jump needs a bistable f with F(1) > 0");
    }
    return std::pow(1.0 - model.mass() / model.potential(model.theta()), 0.25);
}

double local_barrier_exponent(const ReactionModel& model, double alpha0) {
    const double F = model.potential(alpha0);
    if (!(alpha0 > 0.0) || !(F < 0.0)) fail_config("local_barrier_exponent: need F(alpha0) < 0");
    return 0.25 * std::log(1.0 - model.mass() / F);
}

void write_csv(std::ostream& os, const LStarCurve& curve) {
    os << "C,L_star,4CL_star,beta_star,alpha_star\n";
    for (std::size_t i = 0; i < curve.coefficient.size(); ++i) {
        const double C = curve.coefficient[i];
        const std::array<double, 5> row{C, curve.half_length[i], 4.0 * C * curve.half_length[i], curve.beta[i],
                                        curve.alpha[i]};
        os << csv_row(row) << '\n';
    }
}

void write_csv(std::ostream& os, const BarrierSolution& solution) {
    os << "x,p\n";
    for (std::size_t i = 0; i < solution.x.size(); ++i) {
        const std::array<double, 2> row{solution.x[i], solution.p[i]};
        os << csv_row(row) << '\n';
    }
}

}  // namespace frontgate
