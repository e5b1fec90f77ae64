#pragma once

#include "frontgate/numerics.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace frontgate {

enum class ReactionKind { bistable, monostable };

/// Biological parameters of the Wolbachia infection model.
struct WolbachiaParams {
    double d_s = 1.0;       ///< reaction rate scale
    double s_f = 0.1;       ///< fecundity reduction of infected females, in [0, 1)
    double s_h = 0.8;       ///< cytoplasmic incompatibility level, in (0, 1]
    double delta = 1.25;    ///< death-rate ratio infected / uninfected
    double d_u = 1.0;       ///< death rate of uninfected individuals
    double sigma_Fu = 1.0;  ///< fecundity scale
    double eps = 0.1;       ///< large-population smallness parameter

    /// delta*s_h - delta + 1 - s_f; positive iff the reduced frequency equation is bistable.
    double bistability_margin() const { return delta * s_h - delta + 1.0 - s_f; }

    /// s_h p^2 - (s_f + s_h) p + 1, the shared denominator of f, h and h0.
    double birth_factor(double p) const { return s_h * p * p - (s_f + s_h) * p + 1.0; }

    /// Throws Error(config) if a rate is non-positive, a fraction is out of range
    /// or the bistability condition fails.
    void validate() const;
};

/// A reaction term f on [0, 1] with f(0) = f(1) = 0, its potential F(x) = int_0^x f,
/// and the derived thresholds theta (interior zero of f) and theta_c (zero of F in (theta, 1)).
///
/// Outside [0, 1] f is continued by negative linear tails, so that 0 and 1 stay
/// attracting for orbits that overshoot slightly.
///
/// Immutable; copies share state.
class ReactionModel {
public:
    /// Generic model from a callable. `slope` may be empty, in which case f' is
    /// approximated by central differences. The kind is detected from the sign
    /// pattern of f on (0, 1).
    static ReactionModel from_function(std::string name, std::function<double(double)> rate,
                                       std::function<double(double)> slope = {});

    double operator()(double u) const;
    double derivative(double u) const;
    double potential(double u) const;

    ReactionKind kind() const;
    const std::string& name() const;

    /// Interior zero of f (bistable only, NaN otherwise).
    double theta() const;
    /// Zero of F in (theta, 1); NaN when F(1) <= 0.
    double theta_c() const;
    /// F(1).
    double mass() const;
    /// True for a bistable f with |F(1)| below 1e-12 (balanced case).
    bool degenerate() const;

    /// sup of f' over [0, 1] and sup of |f'| over [0, 1] (sampled on 2001 points).
    double max_slope() const;
    double max_abs_slope() const;

    /// u -> -f(1 - u): swaps the roles of the two stable states and flips the sign of F(1).
    ReactionModel reflected() const;

    struct State;

private:
    explicit ReactionModel(std::shared_ptr<const State> state) : state_(std::move(state)) {}

    std::shared_ptr<const State> state_;

    friend ReactionModel make_cubic(double theta);
    friend ReactionModel make_logistic(double r);
    friend ReactionModel make_wolbachia_f(const WolbachiaParams& params);
};

/// f(u) = u (1 - u) (u - theta), theta in (0, 1).
ReactionModel make_cubic(double theta);

/// f(u) = r u (1 - u), r > 0 (monostable).
ReactionModel make_logistic(double r);

/// Frequency reaction term of the Wolbachia model:
/// f(p) = d_s p (-s_h delta p^2 + (delta(1+s_h) - (1-s_f)) p + (1-s_f) - delta) / (s_h p^2 - (s_f+s_h) p + 1).
ReactionModel make_wolbachia_f(const WolbachiaParams& params);

/// F(x) = int_0^x f(s) ds.
double potential(const ReactionModel& model, double x);

/// A positive population-per-frequency law h on [0, 1]. Arguments are clamped to [0, 1].
class FrequencyLaw {
public:
    /// h == value.
    static FrequencyLaw constant(double value = 1.0);

    FrequencyLaw(std::string name, std::function<double(double)> h, std::function<double(double)> slope,
                 std::optional<double> turning_point = std::nullopt, bool constant = false);

    double operator()(double p) const;
    double derivative(double p) const;
    const std::string& name() const { return name_; }

    /// int_0^1 h^2.
    double square_integral() const { return square_integral_; }
    bool is_normalized(double tol = 1e-10) const;
    bool is_constant() const { return constant_; }

    /// h / sqrt(int h^2). Returns *this unchanged when already normalized.
    FrequencyLaw normalized() const;

    /// Unique zero of h' in [0, 1] where h' changes sign, if known.
    std::optional<double> turning_point() const { return turning_point_; }

private:
    std::string name_;
    std::function<double(double)> h_;
    std::function<double(double)> slope_;
    std::optional<double> turning_point_;
    bool constant_ = false;
    double square_integral_ = 1.0;
};

/// h(p) = 1 - eps (d_u / sigma_Fu) ((delta - 1) p + 1) / (s_h p^2 - (s_f + s_h) p + 1), un-normalized.
FrequencyLaw make_wolbachia_h(const WolbachiaParams& params);

/// H(x) = int_0^x h^2 for a normalized law: an increasing bijection of [0, 1].
class VariableChange {
public:
    explicit VariableChange(const FrequencyLaw& law);

    double operator()(double x) const;
    double inverse(double y) const;
    const FrequencyLaw& law() const { return law_; }

private:
    FrequencyLaw law_;
    std::shared_ptr<const AntiderivativeTable> table_;
};

struct ReducedProblem {
    ReactionModel reaction;  ///< g with g(H(x)) = f(x) h^2(x)
    VariableChange map;      ///< H
};

/// Reduces the frequency-dependent equation with law h to a homogeneous
/// reaction-diffusion equation for y = H(p). Requires a normalized law.
ReducedProblem change_of_variable(const ReactionModel& model, const FrequencyLaw& law);

/// int_0^1 f h^4; its sign is the sign of the bistable wave speed of the
/// frequency-dependent equation.
double speed_sign_integral(const ReactionModel& model, const FrequencyLaw& law);

/// Large-population limit density h0(p) = d_u (delta p + 1 - p) / (F_u ((1 - s_f) p + (1 - p)(1 - s_h p)))
/// with F_u = sigma_Fu.
double wolbachia_h0(const WolbachiaParams& params, double p);

}  // namespace frontgate
