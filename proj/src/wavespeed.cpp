#include "frontgate/wavespeed.hpp"

#include "frontgate/error.hpp"
#include "frontgate/phaseplane.hpp"

#include <cmath>
#include <limits>

namespace frontgate {

namespace {

// Negative when w - F vanishes before p = 1 (c too small), otherwise w(1) - F(1).
double defect(const ReactionModel& model, double c) {
    const auto shot = shoot_w_from_zero(model, c, 1.0, std::numeric_limits<double>::infinity());
    if (shot.truncated) return -1.0;
    return shot.w - model.mass();
}

}  // namespace

SpeedResult bistable_speed(const ReactionModel& model, double tol) {
    if (model.kind() != ReactionKind::bistable) fail_config("bistable_speed: reaction is not bistable");
    if (model.degenerate()) fail_infeasible("degenerate F(1)=0: the wave is standing");
    if (model.mass() < 0.0) fail_infeasible("bistable_speed: F(1) < 0, reflect the model first");

    double hi = 2.0 * std::sqrt(std::max(model.max_slope(), 1e-12));
    int grow = 0;
    while (defect(model, hi) < 0.0) {
        if (++grow > 30) fail_numerical("bistable_speed: no upper bracket");
        hi *= 2.0;
    }
    auto f = [&](double c) { return defect(model, c); };
    SpeedResult out;
    out.bracket = bisect(f, 0.0, hi, tol);
    out.c = out.bracket.mid();
    out.residual = std::abs(defect(model, out.bracket.hi));
    return out;
}

double kpp_min_speed(const ReactionModel& model) {
    const double slope = model.derivative(0.0);
    if (!(slope > 0.0)) fail_config("kpp_min_speed: f'(0) must be positive");
    return 2.0 * std::sqrt(slope);
}

}  // namespace frontgate
