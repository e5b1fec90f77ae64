#pragma once

#include "frontgate/reaction.hpp"

#include <iosfwd>
#include <memory>
#include <vector>

namespace frontgate {

/// Weighted potential Fw(p) = int_0^p f h^4, with its zero in (theta, 1).
class WeightedPotential {
public:
    WeightedPotential(const ReactionModel& model, const FrequencyLaw& law);

    double operator()(double p) const;
    /// Fw(a) - Fw(b), accurate also when |a - b| is small.
    double difference(double a, double b) const;
    /// Fw(a) - Fw(a - depth), integrating over the depth for short drops.
    double drop(double a, double depth) const;
    /// Zero of Fw in (theta, 1); NaN when Fw(1) <= 0.
    double threshold() const { return threshold_; }
    /// f h^4.
    double density(double p) const;

private:
    ReactionModel model_;
    FrequencyLaw law_;
    std::shared_ptr<const AntiderivativeTable> table_;  // null for constant h
    double threshold_;
};

/// Compactly supported radial sub-solution with peak alpha.
struct Propagule {
    double alpha = 0.0;
    double half_length = 0.0;
    std::vector<double> x;  ///< symmetric samples on [-L, L]
    std::vector<double> v;

    /// Interpolated value; 0 outside the support.
    double operator()(double xq) const;
};

/// L_alpha = int_0^alpha h^2 / sqrt(2 (Fw(alpha) - Fw(p))) dp. Requires threshold < alpha < 1.
double bubble_length(const ReactionModel& model, const FrequencyLaw& law, double alpha);

/// The profile p' = -sqrt(2 (Fw(alpha) - Fw(p))) / h(p)^2, p(0) = alpha, sampled
/// uniformly in x with n_samples points on [0, L] and mirrored.
Propagule bubble_profile(const ReactionModel& model, const FrequencyLaw& law, double alpha,
                         std::size_t n_samples = 2048);

void write_csv(std::ostream& os, const Propagule& propagule);

}  // namespace frontgate
