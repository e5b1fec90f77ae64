#pragma once

#include "frontgate/numerics.hpp"
#include "frontgate/reaction.hpp"

namespace frontgate {

struct SpeedResult {
    double c = 0.0;
    double residual = 0.0;  ///< |w(1) - F(1)| at the upper end of the final bracket
    Bracket bracket{0.0, 0.0};
};

/// Speed c_* of the decreasing travelling wave 1 -> 0 of a bistable f with F(1) > 0.
/// Bisection on c of the degenerate w-problem w(0) = 0, w(1) = F(1).
SpeedResult bistable_speed(const ReactionModel& model, double tol = 1e-10);

/// 2 sqrt(f'(0)) for a monostable f.
double kpp_min_speed(const ReactionModel& model);

}  // namespace frontgate
