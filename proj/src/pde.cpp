#include "frontgate/pde.hpp"

#include "frontgate/error.hpp"
#include "frontgate/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace frontgate {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

Grid1D Grid1D::make(double x_min, double x_max, double dx) {
    if (!(dx > 0.0) || !(x_max > x_min)) fail_config("grid: need dx > 0 and x_max > x_min");
    Grid1D g{x_min, x_max, dx};
    if (g.size() < 16) fail_config("grid: fewer than 16 points");
    return g;
}

std::size_t Grid1D::size() const { return static_cast<std::size_t>(std::llround((x_max - x_min) / dx)) + 1; }

std::vector<double> Grid1D::points() const {
    std::vector<double> xs(size());
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = x(i);
    return xs;
}

GradientProfile GradientProfile::none() { return {}; }

GradientProfile GradientProfile::interval_constant(double C, double L) {
    if (!(C >= 0.0) || !(L > 0.0)) fail_config("interval_constant gradient needs C >= 0 and L > 0");
    GradientProfile g;
    g.kind = Kind::interval_constant;
    g.coefficient = C;
    g.half_length = L;
    return g;
}

GradientProfile GradientProfile::parabolic(double C, double L, bool printed_sign) {
    if (!(C >= 0.0) || !(L > 0.0)) fail_config("parabolic gradient needs C >= 0 and L > 0");
    GradientProfile g;
    g.kind = Kind::parabolic;
    g.coefficient = C;
    g.half_length = L;
    g.printed_sign = printed_sign;
    return g;
}

GradientProfile GradientProfile::sampled(std::vector<double> xs, std::vector<double> values) {
    if (xs.size() != values.size() || xs.size() < 2) fail_config("sampled gradient needs matching x/value lists");
    if (!std::is_sorted(xs.begin(), xs.end())) fail_config("sampled gradient abscissae must increase");
    GradientProfile g;
    g.kind = Kind::sampled;
    g.xs = std::move(xs);
    g.values = std::move(values);
    return g;
}

double GradientProfile::operator()(double x) const {
    switch (kind) {
        case Kind::none: return 0.0;
        case Kind::interval_constant: return std::abs(x) <= half_length ? coefficient : 0.0;
        case Kind::parabolic: {
            if (std::abs(x) > half_length) return 0.0;
            const double bump = 4.0 * coefficient * (half_length * half_length - x * x) / (half_length * half_length);
            return printed_sign ? -bump : bump;
        }
        case Kind::sampled:
            if (x < xs.front() || x > xs.back()) return 0.0;
            return interpolate(xs, values, x);
    }
    return 0.0;
}

double GradientProfile::support_radius() const {
    switch (kind) {
        case Kind::none: return 0.0;
        case Kind::interval_constant:
        case Kind::parabolic: return half_length;
        case Kind::sampled: {
            double r = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                if (values[i] != 0.0) {
                    const double lo = i > 0 ? xs[i - 1] : xs[i];
                    const double hi = i + 1 < xs.size() ? xs[i + 1] : xs[i];
                    r = std::max({r, std::abs(lo), std::abs(hi)});
                }
            }
            return r;
        }
    }
    return 0.0;
}

InitialDatum InitialDatum::front(double x0) {
    InitialDatum d;
    d.kind = Kind::front;
    d.position = x0;
    return d;
}

InitialDatum InitialDatum::heaviside(double x0) {
    InitialDatum d;
    d.kind = Kind::heaviside;
    d.position = x0;
    return d;
}

InitialDatum InitialDatum::propagule(Propagule bubble, double center) {
    InitialDatum d;
    d.kind = Kind::propagule;
    d.bubble = std::move(bubble);
    d.position = center;
    return d;
}

InitialDatum InitialDatum::sampled(std::vector<double> xs, std::vector<double> values) {
    if (xs.size() != values.size() || xs.size() < 2) fail_config("sampled datum needs matching x/value lists");
    if (!std::is_sorted(xs.begin(), xs.end())) fail_config("sampled datum abscissae must increase");
    for (double v : values) {
        if (!(v >= 0.0 && v <= 1.0)) fail_config("sampled datum values must lie in [0, 1]");
    }
    InitialDatum d;
    d.kind = Kind::sampled;
    d.xs = std::move(xs);
    d.values = std::move(values);
    return d;
}

std::vector<double> InitialDatum::evaluate(const Grid1D& grid) const {
    std::vector<double> u(grid.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double x = grid.x(i);
        switch (kind) {
            case Kind::front: u[i] = std::clamp((position + grid.dx - x) / grid.dx, 0.0, 1.0); break;
            case Kind::heaviside: u[i] = x <= position ? 1.0 : 0.0; break;
            case Kind::propagule: u[i] = bubble(x - position); break;
            case Kind::sampled: u[i] = interpolate(xs, values, x); break;
        }
    }
    return u;
}

const char* to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::blocked: return "Blocked";
        case Outcome::propagated: return "Propagated";
        case Outcome::undecided: return "Undecided";
    }
    return "unknown";
}

std::optional<double> front_position(const std::vector<double>& field, const Grid1D& grid, double level) {
    for (std::size_t i = field.size(); i-- > 1;) {
        const double b = field[i] - level;
        const double a = field[i - 1] - level;
        if (b == 0.0) return grid.x(i);
        if ((a < 0.0) != (b < 0.0)) {
            const double t = a / (a - b);
            return grid.x(i - 1) + t * grid.dx;
        }
    }
    if (!field.empty() && field.front() == level) return grid.x(0);
    return std::nullopt;
}

Classification classify_outcome(const SimulationResult& result, double probe_x, double window) {
    Classification c;
    const auto xs = result.grid.points();
    const double probe = interpolate(xs, result.final_field, probe_x);
    if (probe > 0.9) {
        c.outcome = Outcome::propagated;
        return c;
    }
    const double T = result.front_times.empty() ? 0.0 : result.front_times.back();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    std::size_t defined = 0;
    std::size_t undefined = 0;
    for (std::size_t k = 0; k < result.front_times.size(); ++k) {
        if (result.front_times[k] < T * (1.0 - window) - 1e-12) continue;
        const double x = result.front_positions[k];
        if (std::isnan(x)) {
            ++undefined;
        } else {
            ++defined;
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    }
    const bool still = (defined == 0 && undefined > 0) || (undefined == 0 && defined > 0 && hi - lo < result.grid.dx);
    c.front_undefined = defined == 0;
    c.outcome = still && probe < 0.1 ? Outcome::blocked : Outcome::undecided;
    return c;
}

TridiagonalSolver::TridiagonalSolver(std::vector<double> lower, std::vector<double> diag, std::vector<double> upper)
    : lower_(std::move(lower)), upper_prime_(diag.size()), denom_(diag.size()) {
    const std::size_t n = diag.size();
    if (n == 0 || lower_.size() != n || upper.size() != n) fail_config("tridiagonal: size mismatch");
    denom_[0] = diag[0];
    upper_prime_[0] = upper[0] / denom_[0];
    for (std::size_t i = 1; i < n; ++i) {
        denom_[i] = diag[i] - lower_[i] * upper_prime_[i - 1];
        if (denom_[i] == 0.0) fail_numerical("tridiagonal: zero pivot");
        upper_prime_[i] = upper[i] / denom_[i];
    }
}

void TridiagonalSolver::solve(std::vector<double>& rhs) const {
    const std::size_t n = denom_.size();
    rhs[0] /= denom_[0];
    for (std::size_t i = 1; i < n; ++i) rhs[i] = (rhs[i] - lower_[i] * rhs[i - 1]) / denom_[i];
    for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= upper_prime_[i] * rhs[i + 1];
}

TridiagonalSolver implicit_operator(const Grid1D& grid, const std::vector<double>& eta, double dt) {
    const std::size_t n = grid.size();
    const double r = dt / (grid.dx * grid.dx);
    std::vector<double> lower(n, 0.0), diag(n, 1.0 + 2.0 * r), upper(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double a = dt * eta[i] / (2.0 * grid.dx);
        lower[i] = -r + a;
        upper[i] = -r - a;
    }
    // Ghost points p_{-1} = p_1 and p_n = p_{n-2}: the centred first difference vanishes.
    upper[0] = -2.0 * r;
    lower[n - 1] = -2.0 * r;
    return TridiagonalSolver(std::move(lower), std::move(diag), std::move(upper));
}

void reaction_step(const ReactionModel& model, const std::vector<double>& p, double dt, std::vector<double>& out,
                   ExecPolicy policy) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(p.size());
    out.resize(p.size());
    if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = p[i] + dt * model(p[i]);
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = p[i] + dt * model(p[i]);
    }
}

void gradient_term_step(const FrequencyLaw& law, const std::vector<double>& p, double dx, double dt,
                        std::vector<double>& out, ExecPolicy policy) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(p.size());
    auto term = [&](std::ptrdiff_t i) {
        const double px = (p[i + 1] - p[i - 1]) / (2.0 * dx);
        return dt * 2.0 * law.derivative(p[i]) / law(p[i]) * px * px;
    };
    if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 1; i < n - 1; ++i) out[i] += term(i);
    } else {
        for (std::ptrdiff_t i = 1; i < n - 1; ++i) out[i] += term(i);
    }
}

namespace {

struct Timeline {
    std::size_t steps = 0;
    std::size_t snapshot_stride = 1;
};

Timeline timeline(const SimulationOptions& opt) {
    if (!(opt.dt > 0.0) || opt.dt > 0.5) fail_config("simulation: need 0 < dt <= 0.5");
    if (!(opt.T > 0.0)) fail_config("simulation: T must be positive");
    if (!(opt.snapshot_every > 0.0)) fail_config("simulation: snapshot_every must be positive");
    if (!(opt.window > 0.0 && opt.window <= 1.0)) fail_config("simulation: window must lie in (0, 1]");
    Timeline tl;
    tl.steps = static_cast<std::size_t>(std::llround(opt.T / opt.dt));
    tl.snapshot_stride = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(opt.snapshot_every / opt.dt)));
    return tl;
}

void check_reaction_bound(const ReactionModel& model, double dt) {
    if (!(dt * model.max_abs_slope() < 1.0)) fail_config("simulation: dt * sup|f'| must be below 1");
}

// Shared driver: `advance` maps the frequency field from step k to k+1 and
// returns it; recording, extremes and classification are handled here.
SimulationResult run(const Grid1D& grid, const SimulationOptions& opt, double support, std::vector<double> p,
                     const std::function<const std::vector<double>&()>& advance) {
    const Timeline tl = timeline(opt);
    SimulationResult res;
    res.grid = grid;
    res.window = opt.window;
    res.probe_x = opt.probe_x.value_or(std::min(support + 2.0, grid.x_max - grid.dx));
    res.min_value = *std::min_element(p.begin(), p.end());
    res.max_value = *std::max_element(p.begin(), p.end());

    auto record = [&](double t, const std::vector<double>& field) {
        res.snapshots.push_back({t, field});
        res.front_times.push_back(t);
        res.front_positions.push_back(front_position(field, grid).value_or(kNaN));
    };
    record(0.0, p);
    for (std::size_t k = 1; k <= tl.steps; ++k) {
        const std::vector<double>& next = advance();
        const auto [mn, mx] = std::minmax_element(next.begin(), next.end());
        res.min_value = std::min(res.min_value, *mn);
        res.max_value = std::max(res.max_value, *mx);
        if (!std::isfinite(*mn) || !std::isfinite(*mx)) fail_numerical("simulation: non-finite field");
        if (k % tl.snapshot_stride == 0 || k == tl.steps) record(static_cast<double>(k) * opt.dt, next);
    }
    res.final_field = res.snapshots.back().field;
    const auto c = classify_outcome(res, res.probe_x, opt.window);
    res.outcome = c.outcome;
    res.front_undefined = c.front_undefined;
    return res;
}

}  // namespace

SimulationResult simulate_heterogeneous(const ReactionModel& model, const GradientProfile& eta,
                                        const InitialDatum& init, const Grid1D& grid,
                                        const SimulationOptions& options) {
    check_reaction_bound(model, options.dt);
    const double support = eta.support_radius();
    if (eta.kind != GradientProfile::Kind::none &&
        (support + 5.0 > -grid.x_min + 1e-9 || support + 5.0 > grid.x_max + 1e-9)) {
        fail_config("simulation: gradient support needs a margin of 5 inside the grid");
    }
    std::vector<double> coeff(grid.size());
    for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] = eta(grid.x(i));
    const TridiagonalSolver solver = implicit_operator(grid, coeff, options.dt);

    std::vector<double> p = init.evaluate(grid);
    std::vector<double> work;
    auto advance = [&]() -> const std::vector<double>& {
        reaction_step(model, p, options.dt, work, options.policy);
        solver.solve(work);
        p.swap(work);
        return p;
    };
    return run(grid, options, support, p, advance);
}

SimulationResult simulate_frequency_law(const ReactionModel& model, const FrequencyLaw& law,
                                        const InitialDatum& init, const Grid1D& grid,
                                        const SimulationOptions& options) {
    check_reaction_bound(model, options.dt);
    const std::vector<double> zero(grid.size(), 0.0);
    const TridiagonalSolver solver = implicit_operator(grid, zero, options.dt);

    std::vector<double> p = init.evaluate(grid);
    std::vector<double> work;
    auto advance = [&]() -> const std::vector<double>& {
        reaction_step(model, p, options.dt, work, options.policy);
        if (!law.is_constant()) gradient_term_step(law, p, grid.dx, options.dt, work, options.policy);
        solver.solve(work);
        p.swap(work);
        return p;
    };
    return run(grid, options, 0.0, p, advance);
}

std::vector<double> exponential_ramp_capacity(const Grid1D& grid, double K_L, double C, double L) {
    if (!(K_L > 0.0) || !(L > 0.0)) fail_config("capacity: need K_L > 0 and L > 0");
    std::vector<double> K(grid.size());
    for (std::size_t i = 0; i < K.size(); ++i) {
        K[i] = K_L * std::exp(C * std::min(std::max(grid.x(i) + L, 0.0), 2.0 * L));
    }
    return K;
}

SimulationResult simulate_two_population(const WolbachiaParams& params, const std::vector<double>& capacity,
                                         const InitialDatum& init, const Grid1D& grid,
                                         const SimulationOptions& options) {
    const std::size_t n = grid.size();
    if (capacity.size() != n) fail_config("two-population: capacity must have one value per grid point");
    for (double k : capacity) {
        if (!(k > 0.0)) fail_config("two-population: capacity must be positive");
    }
    const double eps = params.eps;
    if (!(eps > 0.0)) fail_config("two-population: eps must be positive");
    const double Fu = params.sigma_Fu / eps;
    const double du = params.d_u;
    const double Fi = (1.0 - params.s_f) * Fu;
    const double di = params.delta * du;
    if (!(Fi > di) || !(Fu > du)) fail_config("two-population: fecundity too small for positive equilibria");
    if (!(options.dt * std::max(Fu, di) < 0.5)) fail_config("two-population: dt * sigma_Fu / eps must be below 1/2");

    // Single-population equilibria at capacity K / eps.
    std::vector<double> Ki(n), Ku(n), cap(n);
    for (std::size_t i = 0; i < n; ++i) {
        cap[i] = capacity[i] / eps;
        Ki[i] = cap[i] * (1.0 - di / Fi);
        Ku[i] = cap[i] * (1.0 - du / Fu);
    }
    const std::vector<double> frac = init.evaluate(grid);
    std::vector<double> ni(n), nu(n);
    for (std::size_t i = 0; i < n; ++i) {
        ni[i] = frac[i] * Ki[i];
        nu[i] = (1.0 - frac[i]) * Ku[i];
    }
    auto fraction = [](double a, double b) { return a + b > 0.0 ? a / (a + b) : 0.0; };
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = fraction(ni[i], nu[i]);

    const std::vector<double> zero(n, 0.0);
    const TridiagonalSolver solver = implicit_operator(grid, zero, options.dt);
    const double dt = options.dt;
    const double sh = params.s_h;
    std::vector<double> wi(n), wu(n);
    auto advance = [&]() -> const std::vector<double>& {
        auto body = [&](std::ptrdiff_t i) {
            const double N = ni[i] + nu[i];
            const double q = fraction(ni[i], nu[i]);
            const double room = 1.0 - N / cap[i];
            wi[i] = ni[i] + dt * (Fi * ni[i] * room - di * ni[i]);
            wu[i] = nu[i] + dt * (Fu * nu[i] * (1.0 - sh * q) * room - du * nu[i]);
        };
        const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(n);
        if (options.policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(static)
            for (std::ptrdiff_t i = 0; i < m; ++i) body(i);
        } else {
            for (std::ptrdiff_t i = 0; i < m; ++i) body(i);
        }
        solver.solve(wi);
        solver.solve(wu);
        ni.swap(wi);
        nu.swap(wu);
        for (std::size_t i = 0; i < n; ++i) {
            if (ni[i] < -1e-9 || nu[i] < -1e-9) fail_numerical("two-population: negative density");
            p[i] = fraction(std::max(ni[i], 0.0), std::max(nu[i], 0.0));
        }
        return p;
    };
    // The capacity has no declared support: probe 2 right of where K stops varying.
    double edge = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        if (capacity[i] != capacity[i - 1]) edge = grid.x(i);
    }
    auto res = run(grid, options, edge, p, advance);
    res.final_density_infected = ni;
    res.final_density_uninfected = nu;
    return res;
}

}  // namespace frontgate
