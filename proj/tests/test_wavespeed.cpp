#include "frontgate/error.hpp"
#include "frontgate/wavespeed.hpp"

#include <doctest.h>

#include <cmath>

using namespace frontgate;

TEST_CASE("cubic speed matches (1 - 2 theta) / sqrt 2") {
    for (double theta : {0.1, 0.2, 0.25, 0.3, 0.4}) {
        const auto s = bistable_speed(make_cubic(theta));
        CHECK(s.c == doctest::Approx((1.0 - 2.0 * theta) / std::sqrt(2.0)).epsilon(1e-7));
        CHECK(s.bracket.width() <= 1e-9);
    }
}

TEST_CASE("wolbachia speed against the oracle") {
    const auto s = bistable_speed(make_wolbachia_f(WolbachiaParams{}));
    CHECK(s.c == doctest::Approx(0.25406222637037135).epsilon(1e-6));
}

TEST_CASE("speed scales with sqrt(d_s)") {
    WolbachiaParams p;
    p.d_s = 4.0;
    const double c4 = bistable_speed(make_wolbachia_f(p)).c;
    CHECK(c4 == doctest::Approx(2.0 * 0.25406222637037135).epsilon(1e-6));
}

TEST_CASE("speed errors") {
    CHECK_THROWS_AS(bistable_speed(make_cubic(0.5)), Error);
    try {
        bistable_speed(make_cubic(0.5));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::infeasible);
        CHECK(std::string(e.what()).find("degenerate F(1)=0") != std::string::npos);
    }
    CHECK_THROWS_AS(bistable_speed(make_cubic(0.7)), Error);
    CHECK_THROWS_AS(bistable_speed(make_logistic(1.0)), Error);
}

TEST_CASE("KPP minimal speed") {
    CHECK(kpp_min_speed(make_logistic(1.0)) == doctest::Approx(2.0));
    CHECK(kpp_min_speed(make_logistic(0.25)) == doctest::Approx(1.0));
}
