#include "frontgate/reaction.hpp"

#include "frontgate/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace frontgate {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kSlopeSamples = 2001;
constexpr std::size_t kTableNodes = 4097;

}  // namespace

struct ReactionModel::State {
    std::string name;
    std::function<double(double)> rate;       // f on [0, 1]
    std::function<double(double)> slope;      // f' on [0, 1]
    std::function<double(double)> potential;  // F on [0, 1]
    ReactionKind kind = ReactionKind::bistable;
    double theta = kNaN;
    double theta_c = kNaN;
    double mass = 0.0;
    double tail0 = 1.0;  // f(u) = tail0 * u for u < 0
    double tail1 = 1.0;  // f(u) = -tail1 * (u - 1) for u > 1
    double max_slope = 0.0;
    double max_abs_slope = 0.0;
};

namespace {

using State = ReactionModel::State;

// Fills everything that can be derived from rate/slope/potential. `theta` and
// `theta_c` are only searched for when still NaN.
void finalize(State& s, std::optional<ReactionKind> kind) {
    if (!kind) {
        int sign_changes = 0;
        bool starts_negative = false;
        double prev = 0.0;
        for (std::size_t i = 1; i < kSlopeSamples - 1; ++i) {
            const double u = static_cast<double>(i) / static_cast<double>(kSlopeSamples - 1);
            const double v = s.rate(u);
            if (i == 1) {
                starts_negative = v < 0.0;
            } else if ((v < 0.0) != (prev < 0.0)) {
                ++sign_changes;
            }
            prev = v;
        }
        if (sign_changes == 0 && !starts_negative) {
            kind = ReactionKind::monostable;
        } else if (sign_changes == 1 && starts_negative) {
            kind = ReactionKind::bistable;
        } else {
            fail_config("reaction '" + s.name + "' is neither bistable nor monostable on (0, 1)");
        }
    }
    s.kind = *kind;

    if (s.kind == ReactionKind::bistable && std::isnan(s.theta)) {
        double lo = 0.0;
        for (std::size_t i = 1; i < kSlopeSamples; ++i) {
            const double u = static_cast<double>(i) / static_cast<double>(kSlopeSamples - 1);
            if (s.rate(u) >= 0.0) {
                lo = static_cast<double>(i - 1) / static_cast<double>(kSlopeSamples - 1);
                s.theta = bisect(s.rate, std::max(lo, 1e-300), u, 1e-15).mid();
                break;
            }
        }
    }

    s.mass = s.potential(1.0);
    if (s.kind == ReactionKind::bistable && std::isnan(s.theta_c) && s.mass > 1e-12) {
        s.theta_c = bisect(s.potential, s.theta, 1.0, 1e-15).mid();
    }

    const double d0 = s.slope(0.0);
    const double d1 = s.slope(1.0);
    s.tail0 = std::abs(d0) > 0.0 ? std::abs(d0) : 1.0;
    s.tail1 = std::abs(d1) > 0.0 ? std::abs(d1) : 1.0;

    s.max_slope = -std::numeric_limits<double>::infinity();
    s.max_abs_slope = 0.0;
    for (std::size_t i = 0; i < kSlopeSamples; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(kSlopeSamples - 1);
        const double d = s.slope(u);
        s.max_slope = std::max(s.max_slope, d);
        s.max_abs_slope = std::max(s.max_abs_slope, std::abs(d));
    }
}

std::function<double(double)> central_difference(std::function<double(double)> f) {
    return [f = std::move(f)](double u) {
        const double h = 1e-6;
        const double a = std::max(0.0, u - h);
        const double b = std::min(1.0, u + h);
        return (f(b) - f(a)) / (b - a);
    };
}

std::function<double(double)> tabulated_potential(const std::function<double(double)>& rate) {
    auto table = std::make_shared<const AntiderivativeTable>(rate, 0.0, 1.0, kTableNodes);
    return [table](double u) { return (*table)(u); };
}

}  // namespace

ReactionModel ReactionModel::from_function(std::string name, std::function<double(double)> rate,
                                           std::function<double(double)> slope) {
    if (!rate) fail_config("reaction function is empty");
    auto s = std::make_shared<State>();
    s->name = std::move(name);
    s->rate = std::move(rate);
    s->slope = slope ? std::move(slope) : central_difference(s->rate);
    s->potential = tabulated_potential(s->rate);
    finalize(*s, std::nullopt);
    return ReactionModel(std::move(s));
}

double ReactionModel::operator()(double u) const {
    const auto& s = *state_;
    if (u < 0.0) return s.tail0 * u;
    if (u > 1.0) return -s.tail1 * (u - 1.0);
    return s.rate(u);
}

double ReactionModel::derivative(double u) const {
    const auto& s = *state_;
    if (u < 0.0) return s.tail0;
    if (u > 1.0) return -s.tail1;
    return s.slope(u);
}

double ReactionModel::potential(double u) const {
    const auto& s = *state_;
    if (u < 0.0) return 0.5 * s.tail0 * u * u;
    if (u > 1.0) return s.mass - 0.5 * s.tail1 * (u - 1.0) * (u - 1.0);
    return s.potential(u);
}

ReactionKind ReactionModel::kind() const { return state_->kind; }
const std::string& ReactionModel::name() const { return state_->name; }
double ReactionModel::theta() const { return state_->theta; }
double ReactionModel::theta_c() const { return state_->theta_c; }
double ReactionModel::mass() const { return state_->mass; }
bool ReactionModel::degenerate() const {
    return state_->kind == ReactionKind::bistable && std::abs(state_->mass) < 1e-12;
}
double ReactionModel::max_slope() const { return state_->max_slope; }
double ReactionModel::max_abs_slope() const { return state_->max_abs_slope; }

ReactionModel ReactionModel::reflected() const {
    auto self = *this;
    return from_function(
        name() + ":reflected", [self](double u) { return -self(1.0 - u); },
        [self](double u) { return self.derivative(1.0 - u); });
}

ReactionModel make_cubic(double theta) {
    if (!(theta > 0.0 && theta < 1.0)) fail_config("cubic threshold theta must lie in (0, 1)");
    auto s = std::make_shared<State>();
    s->name = "cubic";
    s->rate = [theta](double u) { return u * (1.0 - u) * (u - theta); };
    s->slope = [theta](double u) { return -3.0 * u * u + 2.0 * (1.0 + theta) * u - theta; };
    s->potential = [theta](double u) {
        const double u2 = u * u;
        return -0.25 * u2 * u2 + (1.0 + theta) * u2 * u / 3.0 - 0.5 * theta * u2;
    };
    s->theta = theta;
    // F(x) = -(x^2/12) (3x^2 - 4(1+theta)x + 6 theta): theta_c is the smaller root of the quadratic.
    const double disc = 16.0 * (1.0 + theta) * (1.0 + theta) - 72.0 * theta;
    if (disc >= 0.0) s->theta_c = (4.0 * (1.0 + theta) - std::sqrt(disc)) / 6.0;
    finalize(*s, ReactionKind::bistable);
    if (s->mass <= 1e-12) s->theta_c = kNaN;
    return ReactionModel(std::move(s));
}

ReactionModel make_logistic(double r) {
    if (!(r > 0.0)) fail_config("logistic rate must be positive");
    auto s = std::make_shared<State>();
    s->name = "logistic";
    s->rate = [r](double u) { return r * u * (1.0 - u); };
    s->slope = [r](double u) { return r * (1.0 - 2.0 * u); };
    s->potential = [r](double u) { return r * (0.5 * u * u - u * u * u / 3.0); };
    finalize(*s, ReactionKind::monostable);
    return ReactionModel(std::move(s));
}

void WolbachiaParams::validate() const {
    if (!(d_s > 0.0 && d_u > 0.0 && sigma_Fu > 0.0 && delta > 0.0)) fail_config("Wolbachia rates must be positive");
    if (!(s_f >= 0.0 && s_f < 1.0)) fail_config("s_f must lie in [0, 1)");
    if (!(s_h > 0.0 && s_h <= 1.0)) fail_config("s_h must lie in (0, 1]");
    if (!(eps >= 0.0)) fail_config("eps must be non-negative");
    if (!(bistability_margin() > 0.0)) fail_config("bistability condition delta*s_h - delta + 1 - s_f > 0 violated");
    // Minimum of the birth factor on [0, 1].
    const double vertex = std::clamp((s_f + s_h) / (2.0 * s_h), 0.0, 1.0);
    if (!(birth_factor(vertex) > 0.0 && birth_factor(0.0) > 0.0 && birth_factor(1.0) > 0.0)) {
        fail_config("denominator s_h p^2 - (s_f + s_h) p + 1 vanishes on [0, 1]");
    }
}

ReactionModel make_wolbachia_f(const WolbachiaParams& params) {
    params.validate();
    const WolbachiaParams w = params;
    auto numerator = [w](double p) {
        return -w.s_h * w.delta * p * p + (w.delta * (1.0 + w.s_h) - (1.0 - w.s_f)) * p + (1.0 - w.s_f) - w.delta;
    };
    auto numerator_slope = [w](double p) {
        return -2.0 * w.s_h * w.delta * p + (w.delta * (1.0 + w.s_h) - (1.0 - w.s_f));
    };
    if (!(numerator(0.0) < 0.0)) fail_config("Wolbachia parameters give a monostable reaction (delta + s_f <= 1)");

    auto s = std::make_shared<State>();
    s->name = "wolbachia";
    s->rate = [w, numerator](double p) { return w.d_s * p * numerator(p) / w.birth_factor(p); };
    s->slope = [w, numerator, numerator_slope](double p) {
        const double d = w.birth_factor(p);
        const double dd = 2.0 * w.s_h * p - (w.s_f + w.s_h);
        const double n = numerator(p);
        return w.d_s * ((n + p * numerator_slope(p)) * d - p * n * dd) / (d * d);
    };
    s->potential = tabulated_potential(s->rate);
    // The numerator vanishes at 1; its other root is the threshold.
    s->theta = bisect(numerator, 0.0, 1.0 - 1e-9, 1e-15).mid();
    finalize(*s, ReactionKind::bistable);
    return ReactionModel(std::move(s));
}

double potential(const ReactionModel& model, double x) { return model.potential(x); }

// ---------------------------------------------------------------------------

FrequencyLaw FrequencyLaw::constant(double value) {
    if (!(value > 0.0)) fail_config("constant frequency law must be positive");
    return FrequencyLaw(
        value == 1.0 ? "constant" : "constant:" + std::to_string(value), [value](double) { return value; },
        [](double) { return 0.0; }, std::nullopt, true);
}

FrequencyLaw::FrequencyLaw(std::string name, std::function<double(double)> h, std::function<double(double)> slope,
                           std::optional<double> turning_point, bool constant)
    : name_(std::move(name)),
      h_(std::move(h)),
      slope_(std::move(slope)),
      turning_point_(turning_point),
      constant_(constant) {
    for (int i = 0; i <= 1000; ++i) {
        const double p = i / 1000.0;
        if (!(h_(p) > 0.0)) fail_config("frequency law '" + name_ + "' is not positive on [0, 1]");
    }
    square_integral_ = constant_ ? h_(0.0) * h_(0.0) : integrate([this](double p) { return h_(p) * h_(p); }, 0.0, 1.0, 1e-13);
}

double FrequencyLaw::operator()(double p) const { return h_(std::clamp(p, 0.0, 1.0)); }
double FrequencyLaw::derivative(double p) const { return slope_(std::clamp(p, 0.0, 1.0)); }

bool FrequencyLaw::is_normalized(double tol) const { return std::abs(square_integral_ - 1.0) <= tol; }

FrequencyLaw FrequencyLaw::normalized() const {
    if (is_normalized(1e-14)) return *this;
    const double scale = 1.0 / std::sqrt(square_integral_);
    auto h = h_;
    auto slope = slope_;
    return FrequencyLaw(
        name_, [h, scale](double p) { return scale * h(p); }, [slope, scale](double p) { return scale * slope(p); },
        turning_point_, constant_);
}

FrequencyLaw make_wolbachia_h(const WolbachiaParams& params) {
    params.validate();
    const WolbachiaParams w = params;
    const double k = w.eps * w.d_u / w.sigma_Fu;
    auto h = [w, k](double p) { return 1.0 - k * ((w.delta - 1.0) * p + 1.0) / w.birth_factor(p); };
    auto slope = [w, k](double p) {
        const double d = w.birth_factor(p);
        return k * ((w.delta - 1.0) * w.s_h * p * p + 2.0 * w.s_h * p - (w.delta - 1.0 + w.s_f + w.s_h)) / (d * d);
    };
    std::optional<double> turning;
    if (k > 0.0) {
        if (w.delta == 1.0) {
            turning = 0.5 + w.s_f / (2.0 * w.s_h);
        } else {
            const double dm = w.delta - 1.0;
            turning = (-1.0 + std::sqrt(1.0 + dm * ((dm + w.s_f) / w.s_h + 1.0))) / dm;
        }
    }
    return FrequencyLaw("wolbachia", h, slope, turning, k == 0.0);
}

VariableChange::VariableChange(const FrequencyLaw& law)
    : law_(law),
      table_(std::make_shared<const AntiderivativeTable>(
          [law](double x) { return law(x) * law(x); }, 0.0, 1.0, kTableNodes)) {}

double VariableChange::operator()(double x) const {
    if (law_.is_constant()) return law_(0.0) * law_(0.0) * x;
    return (*table_)(x);
}

double VariableChange::inverse(double y) const {
    if (law_.is_constant()) return y / (law_(0.0) * law_(0.0));
    const double total = (*table_)(1.0);
    if (y <= 0.0) return y / (law_(0.0) * law_(0.0));
    if (y >= total) return 1.0 + (y - total) / (law_(1.0) * law_(1.0));
    // Bracketed Newton on the increasing map.
    double lo = 0.0;
    double hi = 1.0;
    double x = y / total;
    for (int it = 0; it < 100; ++it) {
        const double r = (*this)(x) - y;
        if (r > 0.0) {
            hi = x;
        } else {
            lo = x;
        }
        const double h = law_(x);
        double next = x - r / (h * h);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 1e-16) {
            x = next;
            break;
        }
        x = next;
    }
    return x;
}

ReducedProblem change_of_variable(const ReactionModel& model, const FrequencyLaw& law) {
    if (!law.is_normalized()) fail_config("change of variable requires a normalized frequency law");
    VariableChange map(law);
    if (law.is_constant()) return {model, map};
    auto rate = [model, map](double y) {
        const double x = map.inverse(y);
        const double h = map.law()(x);
        return model(x) * h * h;
    };
    auto slope = [model, map](double y) {
        const double x = map.inverse(y);
        const auto& h = map.law();
        return model.derivative(x) + 2.0 * model(x) * h.derivative(x) / h(x);
    };
    return {ReactionModel::from_function(model.name() + "|" + law.name(), rate, slope), map};
}

double speed_sign_integral(const ReactionModel& model, const FrequencyLaw& law) {
    return integrate(
        [&](double p) {
            const double h = law(p);
            return model(p) * h * h * h * h;
        },
        0.0, 1.0);
}

double wolbachia_h0(const WolbachiaParams& params, double p) {
    const double denom = params.sigma_Fu * params.birth_factor(p);
    if (!(denom > 0.0)) fail_config("h0 denominator vanishes");
    return params.d_u * (params.delta * p + 1.0 - p) / denom;
}

}  // namespace frontgate
