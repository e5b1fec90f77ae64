#include "frontgate/numerics.hpp"

#include "frontgate/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace frontgate {

namespace {
using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
}

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol) {
    if (a == b) return 0.0;
    double error = 0.0;
    double l1 = 0.0;
    // Boost only takes a relative tolerance; derive it from abs_tol and a one-panel
    // estimate of int |f| so that small pieces are not refined into rounding noise.
    const double scale = std::abs(Kronrod::integrate([&](double x) { return std::abs(f(x)); }, a, b, 0, 0.0));
    const double rel = std::clamp(abs_tol / std::max(scale, 1e-300), 1e-13, 1e-6);
    const double value = Kronrod::integrate(f, a, b, 15, rel, &error, &l1);
    if (!std::isfinite(value) || error > std::max(abs_tol, 1e-9 * l1)) {
        std::ostringstream msg;
        msg << "quadrature did not converge on [" << a << ", " << b << "]: value " << value << ", error estimate "
            << error;
        fail_numerical(msg.str());
    }
    return value;
}

double kronrod15(const std::function<double(double)>& f, double a, double b) {
    if (a == b) return 0.0;
    return Kronrod::integrate(f, a, b, 0, 0.0);
}

Bracket bisect(const std::function<double(double)>& f, double lo, double hi, double tol, std::size_t max_iter) {
    const bool lo_positive = f(lo) >= 0.0;
    const bool hi_positive = f(hi) >= 0.0;
    if (lo_positive == hi_positive) fail_numerical("bisection bracket does not straddle a sign change");
    Bracket b{lo, hi};
    for (std::size_t it = 0; it < max_iter && b.width() > tol; ++it) {
        const double m = b.mid();
        if ((f(m) >= 0.0) == lo_positive) {
            b.lo = m;
        } else {
            b.hi = m;
        }
    }
    if (b.width() > tol) fail_numerical("bisection did not reach the requested tolerance");
    return b;
}

Minimum golden_section(const std::function<double(double)>& f, double lo, double hi, double tol,
                       std::size_t max_iter) {
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (std::size_t it = 0; it < max_iter && (b - a) > tol; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    return fc < fd ? Minimum{c, fc} : Minimum{d, fd};
}

AntiderivativeTable::AntiderivativeTable(std::function<double(double)> g, double a, double b, std::size_t nodes)
    : g_(std::move(g)), a_(a), b_(b) {
    if (nodes < 2 || !(b > a)) fail_config("antiderivative table needs at least two nodes on a non-empty interval");
    h_ = (b_ - a_) / static_cast<double>(nodes - 1);
    values_.resize(nodes);
    slopes_.resize(nodes);
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) {
        const double x = a_ + h_ * static_cast<double>(i);
        if (i > 0) acc += kronrod15(g_, x - h_, x);
        values_[i] = acc;
        slopes_[i] = g_(x);
    }
}

double AntiderivativeTable::operator()(double x) const {
    if (x <= a_) return values_.front() + (x - a_) * slopes_.front();
    if (x >= b_) return values_.back() + (x - b_) * slopes_.back();
    const double s = (x - a_) / h_;
    const auto i = std::min(static_cast<std::size_t>(s), values_.size() - 2);
    const double t = s - static_cast<double>(i);
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * values_[i] + h10 * h_ * slopes_[i] + h01 * values_[i + 1] + h11 * h_ * slopes_[i + 1];
}

double interpolate(std::span<const double> xs, std::span<const double> ys, double x) {
    if (xs.empty()) return 0.0;
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const auto i = static_cast<std::size_t>(it - xs.begin());
    const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}

}  // namespace frontgate
