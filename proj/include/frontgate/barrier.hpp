#pragma once

#include "frontgate/exec.hpp"
#include "frontgate/phaseplane.hpp"
#include "frontgate/reaction.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace frontgate {

/// Entry value beta on the left level E = F(1), exit value alpha on E = 0, and
/// the coefficient / half-length of the interval problem joining them.
struct ShootingPair {
    double alpha = 0.0;
    double beta = 0.0;
    double coefficient = 0.0;
    double half_length = 0.0;
};

/// The unique C for which the w-equation started at w(alpha) = 0 reaches F(1) exactly at beta.
/// Requires 0 < alpha < theta_c and alpha < beta < 1.
double shooting_coefficient(const ReactionModel& model, double alpha, double beta, double tol = 1e-10);

/// Half-length: 1/2 int_alpha^beta dp / sqrt(2 (w - F)) at C = shooting_coefficient(alpha, beta).
double shooting_half_length(const ReactionModel& model, double alpha, double beta, double tol = 1e-10);

/// Both of the above from a single bisection.
ShootingPair shooting_pair(const ReactionModel& model, double alpha, double beta, double tol = 1e-10);

/// Orbit options used for barrier work at coefficient C: step 1e-3, shortened for large C or stiff f.
OrbitOptions barrier_orbit_options(const ReactionModel& model, double coefficient);

/// Abscissa where the orbit from gamma_B_point(beta) hits the level E = 0.
/// Throws Error(infeasible) when the orbit leaves by another exit.
double exit_frequency(const ReactionModel& model, double coefficient, double beta);

/// Half the flight time from gamma_B_point(beta) to the level E = 0.
/// Throws Error(infeasible) when that level is not reached within t_max.
double half_length_profile(const ReactionModel& model, double coefficient, double beta, double t_max = 400.0);

struct Endpoints {
    double alpha = 0.0;
    double beta = 0.0;
};

/// (alpha_C, beta_C): the w-problems issued from the singular points (1, F(1)) and (0, 0).
/// Requires C > c_*(f); throws Error(infeasible) otherwise.
Endpoints limit_endpoints(const ReactionModel& model, double coefficient);

struct LStarPoint {
    double coefficient = 0.0;
    double half_length = 0.0;  ///< L_*(C)
    double beta = 0.0;         ///< minimiser beta_*
    double alpha = 0.0;        ///< exit_frequency at beta_*
};

/// L_*(C) = min over beta in (beta_C, 1) of half_length_profile: 64-point scan, then golden section.
LStarPoint minimal_half_length(const ReactionModel& model, double coefficient, double tol = 1e-7);

/// (alpha_*, beta_*) at coefficient C.
Endpoints minimizing_endpoints(const ReactionModel& model, double coefficient);

/// The C with L_*(C) = L, by bisection (L_* is decreasing).
double minimal_coefficient(const ReactionModel& model, double half_length, double tol = 1e-8);

struct LStarCurve {
    std::vector<double> coefficient;
    std::vector<double> half_length;
    std::vector<double> beta;
    std::vector<double> alpha;
};

/// minimal_half_length over a list of coefficients. Result order follows `coefficients`.
LStarCurve lstar_curve(const ReactionModel& model, const std::vector<double>& coefficients,
                       ExecPolicy policy = ExecPolicy::parallel, double tol = 1e-7);

enum class BarrierKind { minimal, maximal, other };
const char* to_string(BarrierKind kind);

/// A standing front of -p'' - C chi_[-L,L] p' = f(p) sampled on a truncated line.
struct BarrierSolution {
    ShootingPair pair;
    std::vector<double> x;
    std::vector<double> p;
    std::vector<double> dp;
    BarrierKind kind = BarrierKind::other;

    /// Linear interpolation of p; 1 to the left and 0 to the right of the samples.
    double operator()(double xq) const;
};

struct BarrierSet {
    std::vector<BarrierSolution> solutions;  ///< ordered by increasing beta
    LStarPoint threshold;
    std::string reason;                       ///< "no_barrier" when empty
};

/// All (C, L)-barriers found by bisection of half_length_profile = L on each side
/// of the minimiser, with tails reconstructed down to 1e-4 from the limits.
BarrierSet enumerate_barriers(const ReactionModel& model, double coefficient, double half_length,
                              double tol = 1e-10);

/// Reconstructs the profile for entry value beta at coefficient C.
BarrierSolution reconstruct_barrier(const ReactionModel& model, double coefficient, double beta);

/// Distance from x = -L to where the left tail equals p in (beta, 1):
/// int_beta^p dq / sqrt(2 (F(1) - F(q))).
double left_tail_offset(const ReactionModel& model, double beta, double p);

/// Distance from x = L to where the right tail equals p in (0, alpha):
/// int_p^alpha dq / sqrt(-2 F(q)).
double right_tail_offset(const ReactionModel& model, double alpha, double p);

/// max over interior samples of |-p'' - C chi p' - f(p)|, skipping the two samples
/// next to x = -L and x = L where p'' jumps.
double barrier_residual(const ReactionModel& model, const BarrierSolution& solution);

/// (1 - F(1) / F(theta))^(1/4).
double critical_jump(const ReactionModel& model);

/// 1/4 log(1 - F(1) / F(alpha0)) for 0 < alpha0 < theta_c.
double local_barrier_exponent(const ReactionModel& model, double alpha0);

void write_csv(std::ostream& os, const LStarCurve& curve);
void write_csv(std::ostream& os, const BarrierSolution& solution);

}  // namespace frontgate
