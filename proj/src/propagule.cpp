#include "frontgate/propagule.hpp"

#include "frontgate/error.hpp"
#include "frontgate/io.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <ostream>

namespace frontgate {

namespace {

constexpr std::size_t kTableNodes = 4097;
constexpr std::size_t kPanels = 4096;
// Below this interval length Fw differences are integrated directly.
constexpr double kShortInterval = 1e-2;

}  // namespace

WeightedPotential::WeightedPotential(const ReactionModel& model, const FrequencyLaw& law)
    : model_(model), law_(law), threshold_(std::numeric_limits<double>::quiet_NaN()) {
    if (model.kind() != ReactionKind::bistable) fail_config("weighted potential needs a bistable f");
    if (!law.is_constant()) {
        auto g = [model, law](double p) {
            const double h2 = law(p) * law(p);
            return model(p) * h2 * h2;
        };
        table_ = std::make_shared<const AntiderivativeTable>(g, 0.0, 1.0, kTableNodes);
    }
    if ((*this)(1.0) > 0.0) {
        threshold_ = bisect([this](double p) { return (*this)(p); }, model.theta(), 1.0, 1e-15).mid();
    }
}

double WeightedPotential::density(double p) const {
    const double h2 = law_(p) * law_(p);
    return model_(p) * h2 * h2;
}

double WeightedPotential::operator()(double p) const {
    if (!table_) {
        const double h2 = law_(0.0) * law_(0.0);
        return h2 * h2 * model_.potential(p);
    }
    return (*table_)(p);
}

double WeightedPotential::drop(double a, double depth) const {
    if (depth < kShortInterval) return kronrod15([&](double u) { return density(a - u); }, 0.0, depth);
    return (*this)(a) - (*this)(a - depth);
}

double WeightedPotential::difference(double a, double b) const {
    if (std::abs(a - b) < kShortInterval) return kronrod15([this](double p) { return density(p); }, b, a);
    return (*this)(a) - (*this)(b);
}

double Propagule::operator()(double xq) const {
    if (x.empty() || xq < x.front() || xq > x.back()) return 0.0;
    return interpolate(x, v, xq);
}

namespace {

struct BubbleIntegrand {
    const WeightedPotential& Fw;
    const FrequencyLaw& law;
    double alpha;
    double operator()(double s) const {
        const double depth = s * s;
        const double p = alpha - depth;
        const double gap = Fw.drop(alpha, depth);
        if (!(gap > 0.0)) fail_infeasible("bubble: Fw(alpha) - Fw(p) is not positive; alpha below threshold");
        const double h = law(p);
        return 2.0 * s * h * h / std::sqrt(2.0 * gap);
    }
};

void check_alpha(const WeightedPotential& Fw, double alpha) {
    const double t = Fw.threshold();
    if (std::isnan(t)) fail_infeasible("bubble: int_0^1 f h^4 <= 0, no propagule exists");
    if (!(alpha > t && alpha < 1.0)) fail_infeasible("bubble: alpha must lie in (theta_c, 1)");
}

}  // namespace

double bubble_length(const ReactionModel& model, const FrequencyLaw& law, double alpha) {
    const WeightedPotential Fw(model, law);
    check_alpha(Fw, alpha);
    const BubbleIntegrand g{Fw, law, alpha};
    // The integrand is smooth in s but has short scales at both ends: s ~ sqrt(1 - alpha)
    // near s = 0, and near s = sqrt(alpha) (p = 0) when Fw(alpha) is small, i.e. alpha
    // close to the threshold. Geometric pieces towards both ends, each by fixed-order
    // Gauss-Legendre, with the 20-point rule as error check.
    double total = 0.0;
    double defect = 0.0;
    auto piece = [&](double lo, double hi) {
        const double fine = boost::math::quadrature::gauss<double, 30>::integrate(g, lo, hi);
        const double coarse = boost::math::quadrature::gauss<double, 20>::integrate(g, lo, hi);
        total += fine;
        defect += std::abs(fine - coarse);
    };
    const double s_max = std::sqrt(alpha);
    double hi = 0.5 * s_max;
    for (int k = 0; k <= 48; ++k) {
        const double lo = k == 48 ? 0.0 : 0.5 * hi;
        piece(lo, hi);
        hi = lo;
    }
    double gap = 0.5 * s_max;  // distance to s_max
    for (int k = 0; k <= 48; ++k) {
        const double next = k == 48 ? 0.0 : 0.5 * gap;
        piece(s_max - gap, s_max - next);
        gap = next;
    }
    if (!(defect <= 1e-10 * std::max(1.0, total))) fail_numerical("bubble_length: quadrature did not converge");
    return total;
}

Propagule bubble_profile(const ReactionModel& model, const FrequencyLaw& law, double alpha, std::size_t n_samples) {
    if (n_samples < 2) fail_config("bubble_profile: need at least 2 samples");
    const WeightedPotential Fw(model, law);
    check_alpha(Fw, alpha);
    const BubbleIntegrand g{Fw, law, alpha};

    // x(s) for p = alpha - s^2 on a fine s-grid, then inverted.
    const double s_max = std::sqrt(alpha);
    std::vector<double> s(kPanels + 1);
    std::vector<double> xs(kPanels + 1, 0.0);
    for (std::size_t k = 0; k <= kPanels; ++k) s[k] = s_max * static_cast<double>(k) / static_cast<double>(kPanels);
    for (std::size_t k = 1; k <= kPanels; ++k) xs[k] = xs[k - 1] + kronrod15(g, s[k - 1], s[k]);
    const double L = xs.back();

    Propagule out;
    out.alpha = alpha;
    out.half_length = L;
    std::vector<double> half(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double xq = L * static_cast<double>(i) / static_cast<double>(n_samples - 1);
        const double si = interpolate(xs, s, xq);
        half[i] = i + 1 == n_samples ? 0.0 : std::max(alpha - si * si, 0.0);
    }
    out.x.reserve(2 * n_samples - 1);
    out.v.reserve(2 * n_samples - 1);
    for (std::size_t i = n_samples; i-- > 1;) {
        out.x.push_back(-L * static_cast<double>(i) / static_cast<double>(n_samples - 1));
        out.v.push_back(half[i]);
    }
    for (std::size_t i = 0; i < n_samples; ++i) {
        out.x.push_back(L * static_cast<double>(i) / static_cast<double>(n_samples - 1));
        out.v.push_back(half[i]);
    }
    return out;
}

void write_csv(std::ostream& os, const Propagule& propagule) {
    os << "x,v\n";
    for (std::size_t i = 0; i < propagule.x.size(); ++i) {
        const std::array<double, 2> row{propagule.x[i], propagule.v[i]};
        os << csv_row(row) << '\n';
    }
}

}  // namespace frontgate
