#include "frontgate/commands.hpp"
#include "frontgate/config.hpp"
#include "frontgate/error.hpp"
#include "frontgate/recipes.hpp"

#include <doctest.h>

using namespace frontgate;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::numerical;
}

}  // namespace

TEST_CASE("models") {
    CHECK(parse_model(Json::parse(R"({"kind": "cubic", "theta": 0.3})")).theta() == doctest::Approx(0.3));
    const auto w = parse_model(Json::parse(R"({"kind": "wolbachia", "delta": 1.2})"));
    CHECK(w.theta() == doctest::Approx(0.3 / 0.96).epsilon(1e-12));
    CHECK(kind_of([] { parse_model(Json::parse(R"({"kind": "cubic", "thet": 0.3})")); }) == ErrorKind::config);
    CHECK(kind_of([] { parse_model(Json::parse(R"({"kind": "quartic"})")); }) == ErrorKind::config);
    CHECK(kind_of([] { parse_model(Json::parse(R"({"kind": "cubic", "theta": "x"})")); }) == ErrorKind::config);
}

TEST_CASE("simulation configs") {
    const auto s = parse_simulation(Json::parse(R"({
        "model": {"kind": "cubic"},
        "gradient": {"kind": "interval_constant", "C": 1, "L": 0.5},
        "init": {"kind": "heaviside", "x0": -3},
        "grid": {"x_min": -10, "x_max": 10, "dx": 0.05},
        "dt": 0.02, "T": 5, "probe_x": 4
    })"));
    CHECK(s.grid.size() == 401);
    CHECK(s.gradient(0.2) == 1.0);
    CHECK(s.init.kind == InitialDatum::Kind::heaviside);
    CHECK(*s.options.probe_x == 4.0);

    CHECK(kind_of([] { parse_simulation(Json::parse(R"({"model": {"kind": "cubic"}, "extra": 1})")); }) ==
          ErrorKind::config);
    CHECK(kind_of([] {
              parse_simulation(Json::parse(R"({"model": {"kind": "cubic"}, "init": {"kind": "front", "x": 1}})"));
          }) == ErrorKind::config);
    CHECK(kind_of([] {
              parse_simulation(Json::parse(R"({"equation": "two_population", "model": {"kind": "cubic"}})"));
          }) == ErrorKind::config);
    CHECK(kind_of([] { parse_config("{not json"); }) == ErrorKind::config);
    CHECK(kind_of([] { parse_config("[1, 2]"); }) == ErrorKind::config);
}

TEST_CASE("config hash ignores key order") {
    CHECK(config_hash(Json::parse(R"({"a": 1, "b": 2})")) == config_hash(Json::parse(R"({"b": 2, "a": 1})")));
    CHECK(config_hash(Json::parse(R"({"a": 1})")) != config_hash(Json::parse(R"({"a": 2})")));
}

TEST_CASE("commands") {
    const auto speed = run_speed(Json::parse(R"({"model": {"kind": "cubic", "theta": 0.25}})"));
    CHECK(speed.summary["c_star"].get<double>() == doctest::Approx(0.353553).epsilon(1e-6));
    const auto back = run_speed(Json::parse(R"({"model": {"kind": "cubic", "theta": 0.75}})"));
    CHECK(back.summary["c_star"].get<double>() == doctest::Approx(-0.353553).epsilon(1e-6));
    CHECK(kind_of([] { run_speed(Json::parse(R"({"model": {"kind": "cubic", "theta": 0.5}})")); }) ==
          ErrorKind::infeasible);

    const auto jump = run_jump(Json::parse(R"({"model": {"kind": "cubic"}})"));
    CHECK(jump.summary["critical_jump"].get<double>() == doctest::Approx(2.0956026170).epsilon(1e-9));

    CHECK(kind_of([] { run_barrier(Json::parse(R"({"model": {"kind": "cubic"}, "C": 1, "L": 0.5})")); }) ==
          ErrorKind::infeasible);
    const auto barrier = run_barrier(Json::parse(R"({"model": {"kind": "cubic"}, "C": 1, "L": 1.2})"));
    CHECK(barrier.summary["barriers"].size() == 2);

    const auto prop = run_propagule(Json::parse(R"({"model": {"kind": "cubic"}, "alpha": 0.8, "samples": 256})"));
    CHECK(prop.summary["L_alpha"].get<double>() == doctest::Approx(4.570498482422284).epsilon(1e-9));

    CHECK(kind_of([] {
              run_lstar_curve(Json::parse(R"({"model": {"kind": "cubic"}, "C_min": 0.2, "C_max": 2, "steps": 3})"));
          }) == ErrorKind::config);
    const auto curve =
        run_lstar_curve(Json::parse(R"({"model": {"kind": "cubic"}, "C_min": 0.5, "C_max": 5, "steps": 4})"));
    CHECK(curve.files.front().contents.rfind("C,L_star,4CL_star,beta_star,alpha_star\n", 0) == 0);

    const auto sign = run_sign_curve(Json::parse(R"({"steps": 65})"));
    REQUIRE(sign.summary["negative_interval"].is_array());
    REQUIRE(sign.summary["sign_changes"].size() == 1);
    CHECK(sign.summary["sign_changes"][0].get<double>() == doctest::Approx(0.47905681656087756).epsilon(1e-8));
    CHECK(sign.summary["negative_interval"][1].get<double>() == doctest::Approx(0.64));
    CHECK(sign.summary["eps_bound"].get<double>() == doctest::Approx(0.647612969884208).epsilon(1e-9));
    CHECK(manifest_json(sign) == manifest_json(run_sign_curve(Json::parse(R"({"steps": 65})"))));
    CHECK(kind_of([] { run_sign_curve(Json::parse(R"({"eps_max": 0.65})")); }) == ErrorKind::config);
}

TEST_CASE("recipes") {
    CHECK(builtin_recipes().size() == 11);
    CHECK(kind_of([] { find_recipe("fig9"); }) == ErrorKind::config);
    const auto r = run_figures(std::vector<std::string>{"fig2_left"});
    CHECK(r.summary["fig2_left"]["summary"]["outcome"] == "Blocked");
    bool has_pgm = false;
    for (const auto& a : r.files) {
        if (a.name == "fig2_left/heatmap.pgm") {
            has_pgm = true;
            CHECK(a.contents.rfind("P5\n# frontgate config sha256 ", 0) == 0);
        }
    }
    CHECK(has_pgm);
}
