#include "frontgate/error.hpp"
#include "frontgate/propagule.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace frontgate;

// tests/oracles/propagule_oracle.py
constexpr double kThetaC = 0.3923747814892349;
constexpr double kL08 = 4.570498482422284;
constexpr double kLNear = 8.498772752435546;   // alpha = theta_c + 0.01
constexpr double kLNearer = 11.10999232866289;  // alpha = theta_c + 0.001
constexpr double kL08Wol = 4.687235595531661;  // cubic f, normalized Wolbachia h

TEST_CASE("weighted potential reduces to F for h = 1") {
    const auto f = make_cubic(0.25);
    const WeightedPotential w(f, FrequencyLaw::constant());
    CHECK(w.threshold() == doctest::Approx(kThetaC).epsilon(1e-12));
    for (double p : {0.1, 0.5, 0.9}) CHECK(w(p) == doctest::Approx(f.potential(p)).epsilon(1e-12));
    CHECK(w.drop(0.8, 1e-9) == doctest::Approx(f(0.8) * 1e-9).epsilon(1e-6));
}

TEST_CASE("bubble length against the oracle") {
    const auto f = make_cubic(0.25);
    const auto one = FrequencyLaw::constant();
    CHECK(bubble_length(f, one, 0.8) == doctest::Approx(kL08).epsilon(1e-10));
    CHECK(bubble_length(f, one, kThetaC + 0.01) == doctest::Approx(kLNear).epsilon(1e-9));
    CHECK(bubble_length(f, one, kThetaC + 0.001) == doctest::Approx(kLNearer).epsilon(1e-9));
    const auto h = make_wolbachia_h(WolbachiaParams{}).normalized();
    CHECK(bubble_length(f, h, 0.8) == doctest::Approx(kL08Wol).epsilon(1e-9));
    CHECK_THROWS_AS(bubble_length(f, one, 0.3), Error);
}

TEST_CASE("L_alpha grows as alpha decreases towards the threshold") {
    const auto f = make_cubic(0.25);
    const auto one = FrequencyLaw::constant();
    double prev = 0.0;
    for (double a : {0.8, 0.6, 0.45, kThetaC + 0.01, kThetaC + 0.001}) {
        const double L = bubble_length(f, one, a);
        CHECK(L > prev);
        prev = L;
    }
}

TEST_CASE("bubble profile") {
    const auto f = make_cubic(0.25);
    const auto b = bubble_profile(f, FrequencyLaw::constant(), 0.8, 512);
    CHECK(b.half_length == doctest::Approx(kL08).epsilon(1e-9));
    CHECK(b.x.front() == doctest::Approx(-kL08).epsilon(1e-12));
    CHECK(b.x.back() == doctest::Approx(kL08).epsilon(1e-12));
    CHECK(b(0.0) == doctest::Approx(0.8).epsilon(1e-9));
    CHECK(b(b.half_length) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(b(b.half_length + 1.0) == 0.0);
    CHECK(b(1.3) == doctest::Approx(b(-1.3)).epsilon(1e-12));
    // Sub-solution check: -v'' - f(v) <= 0 in the interior (here = 0 up to discretisation).
    for (std::size_t i = 1; i + 1 < b.x.size(); ++i) {
        const double dx = b.x[i + 1] - b.x[i];
        if (std::abs(b.x[i]) > b.half_length - 0.2) continue;
        const double d2 = (b.v[i + 1] - 2.0 * b.v[i] + b.v[i - 1]) / (dx * dx);
        CHECK(std::abs(d2 + f(b.v[i])) < 1e-3);
    }
    std::ostringstream os;
    write_csv(os, b);
    CHECK(os.str().rfind("x,v\n", 0) == 0);
}
