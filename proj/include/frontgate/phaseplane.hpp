#pragma once

#include "frontgate/reaction.hpp"

#include <iosfwd>
#include <vector>

namespace frontgate {

/// A point (X, Y) = (p, p') of the standing-wave phase plane.
struct PhasePoint {
    double x = 0.0;
    double y = 0.0;
};

/// E(X, Y) = Y^2 / 2 + F(X). Non-increasing along orbits of X' = Y, Y' = -C Y - f(X) when C >= 0.
double energy(const ReactionModel& model, PhasePoint pt);

/// Point of the level set E = F(1) below the axis: (beta, -sqrt(2 (F(1) - F(beta)))).
PhasePoint gamma_B_point(const ReactionModel& model, double beta);

/// Point of the level set E = 0 below the axis: (alpha, -sqrt(-2 F(alpha))), alpha in (0, theta_c].
PhasePoint gamma_A_point(const ReactionModel& model, double alpha);

enum class OrbitExit {
    hit_gamma_A,    ///< energy crossed 0 with X in (0, theta_c]
    left_unit_box,  ///< X dropped to 0 or reached 1
    turned_back,    ///< Y became non-negative
    max_time,       ///< t_max reached without another event
};

const char* to_string(OrbitExit exit);

struct OrbitSample {
    double t = 0.0;
    PhasePoint pt;
};

struct Orbit {
    double coefficient = 0.0;
    std::vector<OrbitSample> samples;  ///< every accepted step, last one at the exit time
    OrbitExit exit = OrbitExit::max_time;
    double exit_time = 0.0;
    PhasePoint exit_point;
};

struct OrbitOptions {
    double step = 1e-3;        ///< fixed RK4 step in t
    double event_tol = 1e-12;  ///< bisection tolerance on crossing times
    bool record = true;        ///< keep every step in Orbit::samples
};

/// Integrates X' = Y, Y' = -C Y - f(X) from `start` until the first event
/// (see OrbitExit) or t_max. Throws Error(config) for C < 0 or a step larger
/// than 1e-2 / max|f'|.
Orbit integrate_orbit(const ReactionModel& model, double coefficient, PhasePoint start, double t_max,
                      const OrbitOptions& options = {});

/// Solution of w' = C sqrt(2 (w - F)) on a p-grid, together with the running
/// integral of 1 / sqrt(2 (w - F)) (the spatial length covered so far).
struct WProfile {
    double alpha = 0.0;
    double coefficient = 0.0;
    std::vector<double> p;
    std::vector<double> w;
    std::vector<double> length;
    std::vector<double> y;  ///< phase-plane slope -sqrt(2 (w - F)) at each p
    bool truncated = false;  ///< w - F reached 0 before p_end
    double end() const { return p.empty() ? alpha : p.back(); }
};

struct WOptions {
    double step = 1e-4;  ///< fixed RK4 step in p
    bool record = true;
};

/// Solves w' = C sqrt(2 (w - F)), w(alpha) = 0, on [alpha, p_end].
/// Requires 0 < alpha < theta_c and alpha < p_end <= 1.
WProfile solve_w(const ReactionModel& model, double coefficient, double alpha, double p_end,
                 const WOptions& options = {});

/// Outcome of an integration of the w-equation that is only interested in where
/// w meets a target level.
struct WShot {
    bool truncated = false;  ///< w - F reached 0 first
    bool reached = false;    ///< w reached the target before p_end
    double p = 0.0;          ///< where the integration stopped
    double w = 0.0;          ///< w there
    double length = 0.0;     ///< int dp / sqrt(2 (w - F)) up to p
};

/// Integrates from w(alpha) = 0 towards p_end, stopping early when w reaches `target`.
WShot shoot_w(const ReactionModel& model, double coefficient, double alpha, double p_end, double target,
              double step = 1e-4);

/// Integrates from the singular point (0, 0) along w ~ a p^2,
/// a = (C^2 + C sqrt(C^2 - 4 f'(0))) / 4, towards p_end, stopping when w reaches `target`.
WShot shoot_w_from_zero(const ReactionModel& model, double coefficient, double p_end, double target,
                        double step = 1e-4, double offset = 1e-6);

/// Integrates backwards from the singular point (1, F(1)) along w ~ F(1) - b (1 - p)^2,
/// b = (-C^2 + C sqrt(C^2 - 4 f'(1))) / 4, towards decreasing p, stopping when w reaches 0.
WShot shoot_w_from_one(const ReactionModel& model, double coefficient, double step = 1e-4, double offset = 1e-6);

/// CSV (t_or_p, X_or_w, Y) writers for plotting.
void write_csv(std::ostream& os, const Orbit& orbit);
void write_csv(std::ostream& os, const WProfile& profile);

}  // namespace frontgate
