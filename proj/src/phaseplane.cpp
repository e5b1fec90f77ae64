#include "frontgate/phaseplane.hpp"

#include "frontgate/error.hpp"
#include "frontgate/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <ostream>

namespace frontgate {

double energy(const ReactionModel& model, PhasePoint pt) { return 0.5 * pt.y * pt.y + model.potential(pt.x); }

PhasePoint gamma_B_point(const ReactionModel& model, double beta) {
    const double gap = model.mass() - model.potential(beta);
    if (gap < -1e-14) fail_config("gamma_B_point: F(beta) exceeds F(1)");
    return {beta, -std::sqrt(2.0 * std::max(gap, 0.0))};
}

PhasePoint gamma_A_point(const ReactionModel& model, double alpha) {
    const double F = model.potential(alpha);
    if (F > 1e-14) fail_config("gamma_A_point: F(alpha) must be non-positive");
    return {alpha, -std::sqrt(-2.0 * std::min(F, 0.0))};
}

const char* to_string(OrbitExit exit) {
    switch (exit) {
        case OrbitExit::hit_gamma_A: return "hit_gamma_A";
        case OrbitExit::left_unit_box: return "left_unit_box";
        case OrbitExit::turned_back: return "turned_back";
        case OrbitExit::max_time: return "max_time";
    }
    return "unknown";
}

namespace {

using State2 = std::array<double, 2>;

// Event functions are positive "inside"; an event fires when one goes from > 0 to <= 0.
constexpr std::size_t kEvents = 4;

}  // namespace

Orbit integrate_orbit(const ReactionModel& model, double coefficient, PhasePoint start, double t_max,
                      const OrbitOptions& options) {
    if (!(coefficient >= 0.0)) fail_config("integrate_orbit: C must be non-negative");
    if (!(options.step > 0.0) || options.step > 1e-2 / std::max(model.max_abs_slope(), 1e-300)) {
        fail_config("integrate_orbit: step exceeds 1e-2 / max|f'|");
    }
    const double C = coefficient;
    const double theta_c = model.theta_c();
    const bool watch_A = !std::isnan(theta_c);

    auto rhs = [&](const State2& s) -> State2 { return {s[1], -C * s[1] - model(s[0])}; };
    auto events = [&](const State2& s) -> std::array<double, kEvents> {
        return {watch_A ? 0.5 * s[1] * s[1] + model.potential(s[0]) : 1.0, s[0], 1.0 - s[0], -s[1]};
    };

    Orbit orbit;
    orbit.coefficient = C;
    State2 y{start.x, start.y};
    double t = 0.0;
    if (options.record) orbit.samples.push_back({0.0, start});
    auto ev = events(y);

    while (t < t_max) {
        const double h = std::min(options.step, t_max - t);
        const State2 next = rk4_step<2>(rhs, y, h);
        const auto ev_next = events(next);

        double best_tau = std::numeric_limits<double>::infinity();
        std::size_t best = kEvents;
        for (std::size_t k = 0; k < kEvents; ++k) {
            if (!(ev[k] > 0.0 && ev_next[k] <= 0.0)) continue;
            double lo = 0.0;
            double hi = h;
            while (hi - lo > options.event_tol) {
                const double mid = 0.5 * (lo + hi);
                if (events(rk4_step<2>(rhs, y, mid))[k] > 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
                if (mid == lo && mid == hi) break;
            }
            if (k == 0) {
                const double x = rk4_step<2>(rhs, y, hi)[0];
                if (!(x > 0.0 && x <= theta_c)) continue;
            }
            if (hi < best_tau) {
                best_tau = hi;
                best = k;
            }
        }

        if (best != kEvents) {
            const State2 hit = rk4_step<2>(rhs, y, best_tau);
            orbit.exit = best == 0 ? OrbitExit::hit_gamma_A
                         : best == 3 ? OrbitExit::turned_back
                                     : OrbitExit::left_unit_box;
            orbit.exit_time = t + best_tau;
            orbit.exit_point = {hit[0], hit[1]};
            if (options.record) orbit.samples.push_back({orbit.exit_time, orbit.exit_point});
            return orbit;
        }

        y = next;
        ev = ev_next;
        t += h;
        if (!std::isfinite(y[0]) || !std::isfinite(y[1])) fail_numerical("integrate_orbit: non-finite state");
        if (options.record) orbit.samples.push_back({t, {y[0], y[1]}});
    }
    orbit.exit = OrbitExit::max_time;
    orbit.exit_time = t;
    orbit.exit_point = {y[0], y[1]};
    return orbit;
}

namespace {

using State3 = std::array<double, 3>;  // (p, w, length)

// Integrates w' = C sqrt(2 (w - F)) in the direction `dir` (+1 or -1 in p) from
// (p0, w0) towards p_end, stopping when w crosses `target` (upwards for dir = +1,
// downwards for dir = -1) or w - F vanishes. Steps grow geometrically away
// from `singular` (NaN when the start is regular).
WShot march_w(const ReactionModel& model, double C, double p0, double w0, double p_end, double target, int dir,
              double step, WProfile* record, double singular = std::numeric_limits<double>::quiet_NaN()) {
    if (!(step > 0.0)) fail_config("w-equation step must be positive");
    const double s = static_cast<double>(dir);
    auto rhs = [&](const State3& y) -> State3 {
        const double root = std::sqrt(2.0 * std::max(y[1] - model.potential(y[0]), 0.0));
        const double inv = root > 0.0 ? 1.0 / root : 0.0;
        return {s, s * C * root, inv};
    };
    auto crossed = [&](double w) { return dir > 0 ? w >= target : w <= target; };
    auto gap = [&](const State3& y) { return y[1] - model.potential(y[0]); };
    auto push = [&](const State3& y) {
        if (!record) return;
        record->p.push_back(y[0]);
        record->w.push_back(y[1]);
        record->length.push_back(y[2]);
        record->y.push_back(-std::sqrt(2.0 * std::max(gap(y), 0.0)));
    };

    State3 y{p0, w0, 0.0};
    push(y);
    WShot shot;
    while (s * (p_end - y[0]) > 0.0) {
        double h = std::min(step, s * (p_end - y[0]));
        if (!std::isnan(singular)) h = std::min(h, 0.05 * std::abs(y[0] - singular));
        // d(rhs)/dw = C / sqrt(2 (w - F)): keep RK4 inside its stability region.
        if (C > 0.0) h = std::min(h, std::max(0.5 * std::sqrt(2.0 * std::max(gap(y), 0.0)) / C, 1e-12));
        const bool last = h == s * (p_end - y[0]);
        State3 next = rk4_step<3>(rhs, y, h);
        if (last) next[0] = p_end;

        if (crossed(next[1])) {
            double lo = 0.0;
            double hi = h;
            for (int i = 0; i < 80 && hi - lo > 1e-15; ++i) {
                const double mid = 0.5 * (lo + hi);
                if (crossed(rk4_step<3>(rhs, y, mid)[1])) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            const State3 hit = rk4_step<3>(rhs, y, hi);
            if (gap(hit) > 0.0) {
                push(hit);
                shot.reached = true;
                shot.p = hit[0];
                shot.w = hit[1];
                shot.length = hit[2];
                return shot;
            }
        }
        if (gap(next) <= 0.0 || !std::isfinite(next[1])) {
            push(next);
            shot.truncated = true;
            shot.p = next[0];
            shot.w = next[1];
            shot.length = next[2];
            return shot;
        }
        y = next;
        push(y);
    }
    shot.p = y[0];
    shot.w = y[1];
    shot.length = y[2];
    return shot;
}

void check_alpha(const ReactionModel& model, double alpha, double p_end) {
    if (!(alpha > 0.0) || !(model.potential(alpha) < 0.0)) {
        fail_config("w-equation: alpha must lie in (0, theta_c)");
    }
    if (!(p_end > alpha) || p_end > 1.0) fail_config("w-equation: need alpha < p_end <= 1");
}

}  // namespace

WProfile solve_w(const ReactionModel& model, double coefficient, double alpha, double p_end,
                 const WOptions& options) {
    check_alpha(model, alpha, p_end);
    WProfile profile;
    profile.alpha = alpha;
    profile.coefficient = coefficient;
    const auto shot = march_w(model, coefficient, alpha, 0.0, p_end, std::numeric_limits<double>::infinity(), +1,
                              options.step, options.record ? &profile : nullptr);
    if (!options.record) {
        profile.p = {alpha, shot.p};
        profile.w = {0.0, shot.w};
        profile.length = {0.0, shot.length};
        profile.y = {-std::sqrt(-2.0 * model.potential(alpha)),
                     -std::sqrt(2.0 * std::max(shot.w - model.potential(shot.p), 0.0))};
    }
    profile.truncated = shot.truncated;
    return profile;
}

WShot shoot_w(const ReactionModel& model, double coefficient, double alpha, double p_end, double target,
              double step) {
    check_alpha(model, alpha, p_end);
    return march_w(model, coefficient, alpha, 0.0, p_end, target, +1, step, nullptr);
}

WShot shoot_w_from_zero(const ReactionModel& model, double coefficient, double p_end, double target, double step,
                        double offset) {
    const double C = coefficient;
    const double disc = C * C - 4.0 * model.derivative(0.0);
    if (disc < 0.0) fail_config("singular start at 0 needs C^2 >= 4 f'(0)");
    const double a = (C * C + C * std::sqrt(disc)) / 4.0;
    return march_w(model, C, offset, a * offset * offset, p_end, target, +1, step, nullptr, 0.0);
}

WShot shoot_w_from_one(const ReactionModel& model, double coefficient, double step, double offset) {
    const double C = coefficient;
    const double disc = C * C - 4.0 * model.derivative(1.0);
    if (disc < 0.0) fail_config("singular start at 1 needs C^2 >= 4 f'(1)");
    const double b = (-C * C + C * std::sqrt(disc)) / 4.0;
    return march_w(model, C, 1.0 - offset, model.mass() - b * offset * offset, 0.0, 0.0, -1, step, nullptr, 1.0);
}

void write_csv(std::ostream& os, const Orbit& orbit) {
    os << "t,X,Y\n";
    for (const auto& s : orbit.samples) {
        const std::array<double, 3> row{s.t, s.pt.x, s.pt.y};
        os << csv_row(row) << '\n';
    }
}

void write_csv(std::ostream& os, const WProfile& profile) {
    os << "p,w,Y\n";
    for (std::size_t i = 0; i < profile.p.size(); ++i) {
        const std::array<double, 3> row{profile.p[i], profile.w[i], profile.y[i]};
        os << csv_row(row) << '\n';
    }
}

}  // namespace frontgate
