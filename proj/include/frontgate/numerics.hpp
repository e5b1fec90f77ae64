#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace frontgate {

/// Adaptive Gauss-Kronrod (7/15) integral of `f` over [a, b].
/// Throws Error(numerical) when the error estimate exceeds `abs_tol` after refinement.
double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol = 1e-10);

/// One non-adaptive 15-point Kronrod panel. Used for short intervals where
/// differences of tabulated antiderivatives would cancel.
double kronrod15(const std::function<double(double)>& f, double a, double b);

struct Bracket {
    double lo;
    double hi;
    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
};

/// Bisection on the sign of `f`. Requires f(lo) and f(hi) of opposite signs
/// (zero counts as positive). Stops once the bracket is narrower than `tol`.
Bracket bisect(const std::function<double(double)>& f, double lo, double hi, double tol,
               std::size_t max_iter = 200);

struct Minimum {
    double x;
    double value;
};

/// Golden-section search for the minimum of a unimodal `f` on [lo, hi].
Minimum golden_section(const std::function<double(double)>& f, double lo, double hi, double tol,
                       std::size_t max_iter = 200);

/// Piecewise cubic Hermite table of an antiderivative G with known derivative g.
/// Nodes are uniform on [a, b]; G is accumulated by adaptive quadrature of g.
class AntiderivativeTable {
public:
    AntiderivativeTable() = default;
    AntiderivativeTable(std::function<double(double)> g, double a, double b, std::size_t nodes);

    double operator()(double x) const;
    double lower() const { return a_; }
    double upper() const { return b_; }
    double total() const { return values_.empty() ? 0.0 : values_.back(); }

private:
    std::function<double(double)> g_;
    double a_ = 0.0;
    double b_ = 1.0;
    double h_ = 1.0;
    std::vector<double> values_;
    std::vector<double> slopes_;
};

/// Classical fourth-order Runge-Kutta step for an N-dimensional autonomous system.
template <std::size_t N, typename Rhs>
std::array<double, N> rk4_step(const Rhs& rhs, const std::array<double, N>& y, double h) {
    auto axpy = [](const std::array<double, N>& a, const std::array<double, N>& b, double s) {
        std::array<double, N> r{};
        for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + s * b[i];
        return r;
    };
    const auto k1 = rhs(y);
    const auto k2 = rhs(axpy(y, k1, 0.5 * h));
    const auto k3 = rhs(axpy(y, k2, 0.5 * h));
    const auto k4 = rhs(axpy(y, k3, h));
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

/// Linear interpolation on increasing abscissae; clamps outside the range.
double interpolate(std::span<const double> xs, std::span<const double> ys, double x);

}  // namespace frontgate
