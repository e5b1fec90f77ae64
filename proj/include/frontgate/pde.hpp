#pragma once

#include "frontgate/exec.hpp"
#include "frontgate/propagule.hpp"
#include "frontgate/reaction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace frontgate {

struct Grid1D {
    double x_min = -20.0;
    double x_max = 20.0;
    double dx = 0.1;

    /// Throws Error(config) unless dx > 0 and the grid has at least 16 points.
    static Grid1D make(double x_min, double x_max, double dx);

    std::size_t size() const;
    double x(std::size_t i) const { return x_min + dx * static_cast<double>(i); }
    std::vector<double> points() const;
};

/// Advection coefficient eta(x) of p_t = p_xx + eta p_x + f(p), eta = 2 d/dx log N.
struct GradientProfile {
    enum class Kind { none, interval_constant, parabolic, sampled };

    Kind kind = Kind::none;
    double coefficient = 0.0;  ///< C
    double half_length = 0.0;  ///< L
    bool printed_sign = false; ///< parabolic only: 4C (x - L)(x + L) / L^2 instead of 4C (L^2 - x^2) / L^2
    std::vector<double> xs;
    std::vector<double> values;

    static GradientProfile none();
    /// C on [-L, L], 0 elsewhere.
    static GradientProfile interval_constant(double C, double L);
    /// 4C (L^2 - x^2) / L^2 on [-L, L] (peak 4C at 0).
    static GradientProfile parabolic(double C, double L, bool printed_sign = false);
    /// Linear interpolation of samples, 0 outside them.
    static GradientProfile sampled(std::vector<double> xs, std::vector<double> values);

    double operator()(double x) const;
    /// Smallest R with eta = 0 outside [-R, R].
    double support_radius() const;
};

struct InitialDatum {
    enum class Kind { front, heaviside, propagule, sampled };

    Kind kind = Kind::front;
    double position = -14.0;  ///< front / heaviside edge, propagule centre
    Propagule bubble;
    std::vector<double> xs;
    std::vector<double> values;

    /// 1 left of x0, 0 right of it, joined by a linear ramp over one cell.
    static InitialDatum front(double x0);
    /// 1 for x <= x0, 0 beyond (no ramp).
    static InitialDatum heaviside(double x0);
    static InitialDatum propagule(Propagule bubble, double center = 0.0);
    static InitialDatum sampled(std::vector<double> xs, std::vector<double> values);

    std::vector<double> evaluate(const Grid1D& grid) const;
};

enum class Outcome { blocked, propagated, undecided };
const char* to_string(Outcome outcome);

struct SimulationOptions {
    double dt = 0.05;
    double T = 400.0;
    double snapshot_every = 1.0;
    std::optional<double> probe_x;  ///< default: 2 right of the gradient support
    double window = 0.2;            ///< fraction of T used to decide that the front stopped
    ExecPolicy policy = ExecPolicy::serial;
};

struct Snapshot {
    double t = 0.0;
    std::vector<double> field;
};

struct SimulationResult {
    Grid1D grid;
    std::vector<Snapshot> snapshots;  ///< frequency field; first at t = 0, last at T
    std::vector<double> front_times;
    std::vector<double> front_positions;  ///< NaN where the field does not cross 0.5
    std::vector<double> final_field;
    std::vector<double> final_density_infected;    ///< two-population runs only
    std::vector<double> final_density_uninfected;  ///< two-population runs only
    double min_value = 0.0;  ///< extremes over all steps
    double max_value = 0.0;
    double probe_x = 0.0;
    double window = 0.2;
    Outcome outcome = Outcome::undecided;
    bool front_undefined = false;
};

/// Rightmost linearly interpolated crossing of `level`; nullopt when there is none.
std::optional<double> front_position(const std::vector<double>& field, const Grid1D& grid, double level = 0.5);

struct Classification {
    Outcome outcome = Outcome::undecided;
    bool front_undefined = false;
};

/// Propagated if p(T, probe_x) > 0.9; Blocked if the front moved less than dx over
/// the last `window` fraction of T and p(T, probe_x) < 0.1; Undecided otherwise.
/// A field without any crossing counts as not moving (front_undefined is set).
Classification classify_outcome(const SimulationResult& result, double probe_x, double window = 0.2);

/// Implicit Euler for diffusion + centred advection, explicit reaction, zero-flux ends.
SimulationResult simulate_heterogeneous(const ReactionModel& model, const GradientProfile& eta,
                                        const InitialDatum& init, const Grid1D& grid,
                                        const SimulationOptions& options = {});

/// p_t = p_xx + 2 (h'/h)(p) p_x^2 + f(p): implicit diffusion, explicit reaction and gradient term.
SimulationResult simulate_frequency_law(const ReactionModel& model, const FrequencyLaw& law,
                                        const InitialDatum& init, const Grid1D& grid,
                                        const SimulationOptions& options = {});

/// Infected / uninfected densities with fecundity sigma_Fu / eps and capacity K / eps.
/// `capacity` holds K at the grid points. `init` is the infected fraction; each
/// population starts at its own equilibrium density scaled by that fraction.
SimulationResult simulate_two_population(const WolbachiaParams& params, const std::vector<double>& capacity,
                                         const InitialDatum& init, const Grid1D& grid,
                                         const SimulationOptions& options = {});

/// K(x) = K_L exp(C min((x + L)_+, 2L)).
std::vector<double> exponential_ramp_capacity(const Grid1D& grid, double K_L, double C, double L);

/// Factored tridiagonal system (Thomas algorithm) with fixed coefficients.
class TridiagonalSolver {
public:
    TridiagonalSolver(std::vector<double> lower, std::vector<double> diag, std::vector<double> upper);
    /// Solves in place.
    void solve(std::vector<double>& rhs) const;
    std::size_t size() const { return denom_.size(); }

private:
    std::vector<double> lower_;
    std::vector<double> upper_prime_;
    std::vector<double> denom_;
};

/// Builds I - dt (D2 + eta D1) with zero-flux ghost points.
TridiagonalSolver implicit_operator(const Grid1D& grid, const std::vector<double>& eta, double dt);

/// Kernels of one explicit step; `policy` selects the serial reference or the OpenMP loop.
void reaction_step(const ReactionModel& model, const std::vector<double>& p, double dt, std::vector<double>& out,
                   ExecPolicy policy);
void gradient_term_step(const FrequencyLaw& law, const std::vector<double>& p, double dx, double dt,
                        std::vector<double>& out, ExecPolicy policy);

}  // namespace frontgate
