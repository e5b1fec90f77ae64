#include "frontgate/error.hpp"
#include "frontgate/pde.hpp"
#include "frontgate/wavespeed.hpp"

#include <doctest.h>

#include <cmath>

using namespace frontgate;

namespace {

// Slope of a least-squares line through the front positions with t >= t0.
double front_speed(const SimulationResult& r, double t0) {
    double st = 0, sx = 0, stt = 0, stx = 0;
    int n = 0;
    for (std::size_t k = 0; k < r.front_times.size(); ++k) {
        const double t = r.front_times[k];
        const double x = r.front_positions[k];
        if (t < t0 || std::isnan(x)) continue;
        st += t;
        sx += x;
        stt += t * t;
        stx += t * x;
        ++n;
    }
    return (n * stx - st * sx) / (n * stt - st * st);
}

}  // namespace

TEST_CASE("grid") {
    const auto g = Grid1D::make(-20.0, 20.0, 0.1);
    CHECK(g.size() == 401);
    CHECK(g.x(400) == doctest::Approx(20.0));
    CHECK_THROWS_AS(Grid1D::make(0.0, 1.0, 0.5), Error);
    CHECK_THROWS_AS(Grid1D::make(0.0, 1.0, -0.1), Error);
}

TEST_CASE("gradient profiles") {
    const auto c = GradientProfile::interval_constant(2.0, 0.5);
    CHECK(c(0.0) == 2.0);
    CHECK(c(0.6) == 0.0);
    CHECK(c.support_radius() == doctest::Approx(0.5));
    const auto p = GradientProfile::parabolic(0.5, 6.0);
    CHECK(p(0.0) == doctest::Approx(2.0));
    CHECK(p(6.0) == doctest::Approx(0.0));
    CHECK(p(3.0) == doctest::Approx(1.5));
    CHECK(GradientProfile::parabolic(0.5, 6.0, true)(0.0) == doctest::Approx(-2.0));
    const auto s = GradientProfile::sampled({-1.0, 0.0, 1.0}, {0.0, 1.0, 0.0});
    CHECK(s(0.5) == doctest::Approx(0.5));
    CHECK(s(2.0) == 0.0);
    CHECK_THROWS_AS(GradientProfile::interval_constant(-1.0, 1.0), Error);
}

TEST_CASE("initial data") {
    const auto g = Grid1D::make(-1.0, 1.0, 0.1);
    const auto front = InitialDatum::front(0.0).evaluate(g);
    CHECK(front[0] == 1.0);
    CHECK(front[10] == doctest::Approx(1.0));  // x = 0
    CHECK(front[11] == doctest::Approx(0.0));
    const auto step = InitialDatum::heaviside(0.0).evaluate(g);
    CHECK(step[10] == 1.0);
    CHECK(step[11] == 0.0);
}

TEST_CASE("front position") {
    const auto g = Grid1D::make(-5.0, 5.0, 0.5);
    std::vector<double> field(g.size());
    for (std::size_t i = 0; i < field.size(); ++i) field[i] = g.x(i) < 0.0 ? 1.0 : (g.x(i) == 0.0 ? 0.5 : 0.0);
    CHECK(*front_position(field, g) == doctest::Approx(0.0));
    // Translation by whole cells shifts the position by the same amount.
    std::vector<double> tanh_field(g.size()), shifted(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        tanh_field[i] = 0.5 * (1.0 - std::tanh(g.x(i) - 0.3));
        shifted[i] = 0.5 * (1.0 - std::tanh(g.x(i) - 1.3));
    }
    CHECK(*front_position(shifted, g) - *front_position(tanh_field, g) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(front_position(std::vector<double>(g.size(), 0.0), g).has_value());
}

TEST_CASE("classification of trivial fields") {
    SimulationResult r;
    r.grid = Grid1D::make(-5.0, 5.0, 0.1);
    r.front_times = {0.0, 1.0, 2.0};
    r.front_positions = {NAN, NAN, NAN};
    r.final_field.assign(r.grid.size(), 0.0);
    auto c = classify_outcome(r, 3.0);
    CHECK(c.outcome == Outcome::blocked);
    CHECK(c.front_undefined);
    r.final_field.assign(r.grid.size(), 1.0);
    CHECK(classify_outcome(r, 3.0).outcome == Outcome::propagated);
}

TEST_CASE("tridiagonal solver") {
    TridiagonalSolver s({0.0, 1.0, 1.0, 1.0}, {4.0, 4.0, 4.0, 4.0}, {1.0, 1.0, 1.0, 0.0});
    std::vector<double> x{1.0, 2.0, 3.0, 4.0};
    std::vector<double> b{4 * 1 + 2, 1 + 4 * 2 + 3, 2 + 4 * 3 + 4, 3 + 4 * 4};
    s.solve(b);
    for (int i = 0; i < 4; ++i) CHECK(b[i] == doctest::Approx(x[i]).epsilon(1e-14));
}

TEST_CASE("serial and parallel kernels agree bitwise") {
    const auto f = make_wolbachia_f(WolbachiaParams{});
    const auto law = make_wolbachia_h(WolbachiaParams{}).normalized();
    std::vector<double> p(5000);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = 0.5 * (1.0 + std::sin(0.01 * static_cast<double>(i)));
    std::vector<double> a, b;
    reaction_step(f, p, 0.05, a, ExecPolicy::serial);
    reaction_step(f, p, 0.05, b, ExecPolicy::parallel);
    CHECK(a == b);
    gradient_term_step(law, p, 0.1, 0.05, a, ExecPolicy::serial);
    gradient_term_step(law, p, 0.1, 0.05, b, ExecPolicy::parallel);
    CHECK(a == b);
}

TEST_CASE("homogeneous front travels at c_*") {
    const auto f = make_cubic(0.25);
    SimulationOptions opt;
    opt.T = 60.0;
    opt.dt = 0.02;
    const auto r = simulate_heterogeneous(f, GradientProfile::none(), InitialDatum::front(-14.0),
                                          Grid1D::make(-20.0, 20.0, 0.05), opt);
    const double c = front_speed(r, 20.0);
    CHECK(std::abs(c - bistable_speed(f).c) / bistable_speed(f).c < 0.05);
    CHECK(r.min_value >= -1e-9);
    CHECK(r.max_value <= 1.0 + 1e-9);
    CHECK(r.snapshots.size() == 61);

    // Halving dx and dt moves the speed by less than 2%.
    SimulationOptions fine = opt;
    fine.dt = 0.01;
    const auto rf = simulate_heterogeneous(f, GradientProfile::none(), InitialDatum::front(-14.0),
                                           Grid1D::make(-20.0, 20.0, 0.025), fine);
    CHECK(std::abs(front_speed(rf, 20.0) - c) / c < 0.02);
}

TEST_CASE("h = 1 frequency law reproduces the homogeneous run") {
    const auto f = make_cubic(0.25);
    SimulationOptions opt;
    opt.T = 20.0;
    const auto g = Grid1D::make(-20.0, 20.0, 0.1);
    const auto a = simulate_heterogeneous(f, GradientProfile::none(), InitialDatum::front(-14.0), g, opt);
    const auto b = simulate_frequency_law(f, FrequencyLaw::constant(), InitialDatum::front(-14.0), g, opt);
    double diff = 0.0;
    for (std::size_t i = 0; i < a.final_field.size(); ++i) diff = std::max(diff, std::abs(a.final_field[i] - b.final_field[i]));
    CHECK(diff < 1e-10);
}

TEST_CASE("serial and parallel runs agree") {
    const auto f = make_cubic(0.25);
    SimulationOptions opt;
    opt.T = 20.0;
    const auto g = Grid1D::make(-20.0, 20.0, 0.1);
    const auto a = simulate_heterogeneous(f, GradientProfile::interval_constant(1.0, 1.0), InitialDatum::front(-14.0), g, opt);
    opt.policy = ExecPolicy::parallel;
    const auto b = simulate_heterogeneous(f, GradientProfile::interval_constant(1.0, 1.0), InitialDatum::front(-14.0), g, opt);
    CHECK(a.final_field == b.final_field);
}

TEST_CASE("simulation preconditions") {
    const auto f = make_cubic(0.25);
    const auto g = Grid1D::make(-20.0, 20.0, 0.1);
    SimulationOptions opt;
    opt.dt = 0.6;
    CHECK_THROWS_AS(simulate_heterogeneous(f, GradientProfile::none(), InitialDatum::front(-14.0), g, opt), Error);
    CHECK_THROWS_AS(simulate_heterogeneous(f, GradientProfile::interval_constant(1.0, 18.0), InitialDatum::front(-14.0), g),
                    Error);
}

TEST_CASE("two-population model") {
    WolbachiaParams p;
    const auto g = Grid1D::make(-20.0, 20.0, 0.1);
    SimulationOptions opt;
    opt.dt = 0.01;
    opt.T = 100.0;
    const auto flat = simulate_two_population(p, std::vector<double>(g.size(), 1.0), InitialDatum::front(-14.0), g, opt);
    CHECK(flat.outcome == Outcome::propagated);
    CHECK(flat.min_value >= -1e-9);
    for (double n : flat.final_density_infected) CHECK(n >= -1e-9);

    const auto K = exponential_ramp_capacity(g, 1.0, 0.2, 4.0);
    CHECK(K.front() == doctest::Approx(1.0));
    CHECK(K.back() == doctest::Approx(std::exp(1.6)));
    CHECK_THROWS_AS(simulate_two_population(p, std::vector<double>(g.size(), -1.0), InitialDatum::front(-14.0), g, opt),
                    Error);
}
