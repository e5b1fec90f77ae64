#include "frontgate/commands.hpp"

#include "frontgate/barrier.hpp"
#include "frontgate/error.hpp"
#include "frontgate/io.hpp"
#include "frontgate/propagule.hpp"
#include "frontgate/wavespeed.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace frontgate {

namespace {

Report make_report(const std::string& command, const Json& config) {
    Report r;
    r.command = command;
    r.config_sha256 = config_hash(config);
    return r;
}

void add_json(Report& r, const std::string& name, const Json& j) { r.files.push_back({name, j.dump(2) + "\n"}); }

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

// Model-only configs: {"model": {...}}.
ReactionModel model_only(const Json& config, const std::string& context) {
    ObjectReader r(config, context);
    const ReactionModel model = parse_model(r.object("model"));
    r.finish();
    return model;
}

std::vector<double> coefficient_range(double lo, double hi, std::size_t steps, const std::string& spacing) {
    if (steps < 2) fail_config("steps must be at least 2");
    if (!(hi > lo)) fail_config("C_max must exceed C_min");
    std::vector<double> out(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
        if (spacing == "log") {
            out[i] = lo * std::pow(hi / lo, t);
        } else if (spacing == "linear") {
            out[i] = lo + t * (hi - lo);
        } else {
            fail_config("spacing must be log or linear, got '" + spacing + "'");
        }
    }
    out.back() = hi;
    return out;
}

}  // namespace

std::string manifest_json(const Report& report) {
    Json m;
    m["command"] = report.command;
    m["version"] = FRONTGATE_VERSION;
    m["config_sha256"] = report.config_sha256;
    Json files = Json::array();
    for (const auto& a : report.files) {
        files.push_back({{"name", a.name}, {"sha256", sha256_hex(a.contents)}, {"bytes", a.contents.size()}});
    }
    m["files"] = files;
    m["summary"] = report.summary;
    return m.dump(2) + "\n";
}

void write_report(const Report& report, const std::string& directory) {
    const std::filesystem::path dir(directory);
    for (const auto& a : report.files) write_file(dir / a.name, a.contents);
    write_file(dir / "manifest.json", manifest_json(report));
}

Report run_speed(const Json& config) {
    const ReactionModel model = model_only(config, "speed");
    Report r = make_report("speed", config);
    Json out;
    out["model"] = model.name();
    if (model.kind() == ReactionKind::monostable) {
        out["kind"] = "monostable";
        out["c_star"] = kpp_min_speed(model);
        out["residual"] = 0.0;
    } else {
        if (model.degenerate()) fail_infeasible("degenerate F(1)=0: the wave is standing");
        // The solver handles F(1) > 0; otherwise the wave moves the other way.
        const bool reversed = model.mass() < 0.0;
        const SpeedResult s = bistable_speed(reversed ? model.reflected() : model);
        out["kind"] = "bistable";
        out["c_star"] = reversed ? -s.c : s.c;
        out["residual"] = s.residual;
        out["F1"] = model.mass();
    }
    r.summary = out;
    add_json(r, "speed.json", out);
    return r;
}

Report run_theta_c(const Json& config) {
    const ReactionModel model = model_only(config, "theta-c");
    if (model.kind() != ReactionKind::bistable) fail_config("theta-c needs a bistable model");
    Report r = make_report("theta-c", config);
    Json out;
    out["theta"] = model.theta();
    out["theta_c"] = finite_or_null(model.theta_c());
    out["F1"] = model.mass();
    out["F_theta"] = model.potential(model.theta());
    r.summary = out;
    add_json(r, "theta_c.json", out);
    return r;
}

Report run_sign_curve(const Json& config) {
    ObjectReader rd(config, "sign-curve");
    WolbachiaParams params;
    if (const Json* p = rd.optional_object("params")) {
        ObjectReader pr(*p, "params");
        params = parse_wolbachia_params(pr);
        pr.finish();
    }
    const double lo = rd.number("eps_min", 0.0);
    const double hi = rd.number("eps_max", 0.64);
    const std::size_t steps = rd.count("steps", 129);
    const bool parallel = rd.boolean("parallel", true);
    rd.finish();
    if (!(lo >= 0.0) || !(hi > lo) || steps < 2) fail_config("need 0 <= eps_min < eps_max and steps >= 2");
    // h_eps = 1 - eps h0 stays positive only for eps < 1 / max h0.
    int best = 0;
    for (int i = 1; i <= 1000; ++i) {
        if (wolbachia_h0(params, i / 1000.0) > wolbachia_h0(params, best / 1000.0)) best = i;
    }
    const auto peak = golden_section([&](double p) { return -wolbachia_h0(params, p); }, std::max(0, best - 1) / 1000.0,
                                     std::min(1000, best + 1) / 1000.0, 1e-12);
    const double eps_bound = -1.0 / peak.value;
    if (!(hi < eps_bound)) {
        std::ostringstream msg;
        msg << "eps_max = " << hi << " makes h_eps non-positive; need eps_max < " << eps_bound;
        fail_config(msg.str());
    }

    const ReactionModel model = make_wolbachia_f(params);
    auto value = [&](double eps) {
        WolbachiaParams p = params;
        p.eps = eps;
        return speed_sign_integral(model, make_wolbachia_h(p));
    };
    const auto eps = coefficient_range(lo, hi, steps, "linear");
    std::vector<double> values(steps);
    for_each_index(steps, parallel ? ExecPolicy::parallel : ExecPolicy::serial,
                   [&](std::size_t i) { values[i] = value(eps[i]); });

    Report r = make_report("sign-curve", config);
    std::ostringstream csv;
    csv << "eps,integral\n";
    for (std::size_t i = 0; i < steps; ++i) {
        const std::array<double, 2> row{eps[i], values[i]};
        csv << csv_row(row) << '\n';
    }
    r.files.push_back({"sign_curve.csv", csv.str()});

    Json roots = Json::array();
    for (std::size_t i = 0; i + 1 < steps; ++i) {
        if ((values[i] >= 0.0) != (values[i + 1] >= 0.0)) {
            roots.push_back(bisect(value, eps[i], eps[i + 1], 1e-10).mid());
        }
    }
    // First run of negative samples, with refined ends (or the range ends).
    Json out;
    out["sign_changes"] = roots;
    out["eps_bound"] = eps_bound;
    out["negative_interval"] = nullptr;
    const auto first_negative = std::find_if(values.begin(), values.end(), [](double v) { return v < 0.0; });
    if (first_negative != values.end()) {
        const auto i0 = static_cast<std::size_t>(first_negative - values.begin());
        std::size_t i1 = i0;
        while (i1 + 1 < steps && values[i1 + 1] < 0.0) ++i1;
        const double left = i0 == 0 ? eps[0] : bisect(value, eps[i0 - 1], eps[i0], 1e-10).mid();
        const double right = i1 + 1 == steps ? eps[i1] : bisect(value, eps[i1], eps[i1 + 1], 1e-10).mid();
        out["negative_interval"] = {left, right};
    }
    const auto min_it = std::min_element(values.begin(), values.end());
    out["min_value"] = *min_it;
    out["argmin_eps"] = eps[static_cast<std::size_t>(min_it - values.begin())];
    r.summary = out;
    add_json(r, "sign_curve.json", out);
    return r;
}

Report run_barrier(const Json& config) {
    ObjectReader rd(config, "barrier");
    const ReactionModel model = parse_model(rd.object("model"));
    const double C = rd.number("C");
    const double L = rd.number("L");
    rd.finish();
    if (!(C > 0.0) || !(L > 0.0)) fail_config("barrier needs C > 0 and L > 0");
    const BarrierSet set = enumerate_barriers(model, C, L);
    if (set.solutions.empty()) {
        std::ostringstream msg;
        msg << "no barrier: L = " << L << " < L_*(C) = " << set.threshold.half_length;
        fail_infeasible(msg.str());
    }
    Report r = make_report("barrier", config);
    Json list = Json::array();
    for (std::size_t i = 0; i < set.solutions.size(); ++i) {
        const auto& s = set.solutions[i];
        std::ostringstream csv;
        write_csv(csv, s);
        const std::string name = "barrier_" + std::to_string(i) + ".csv";
        r.files.push_back({name, csv.str()});
        list.push_back({{"file", name},
                        {"kind", to_string(s.kind)},
                        {"alpha", s.pair.alpha},
                        {"beta", s.pair.beta},
                        {"residual", barrier_residual(model, s)}});
    }
    Json out;
    out["C"] = C;
    out["L"] = L;
    out["L_star"] = set.threshold.half_length;
    out["barriers"] = list;
    r.summary = out;
    add_json(r, "barrier.json", out);
    return r;
}

Report run_lstar_curve(const Json& config) {
    ObjectReader rd(config, "lstar-curve");
    const ReactionModel model = parse_model(rd.object("model"));
    std::vector<double> Cs;
    if (rd.has("C")) {
        Cs = rd.numbers("C");
    } else {
        const double lo = rd.number("C_min");
        const double hi = rd.number("C_max");
        const std::size_t steps = rd.count("steps", 30);
        Cs = coefficient_range(lo, hi, steps, rd.string("spacing", "log"));
    }
    const double tol = rd.number("tol", 1e-7);
    const bool with_log_excess = rd.boolean("log_excess", false);
    rd.finish();
    if (Cs.empty()) fail_config("lstar-curve needs at least one C");
    if (model.kind() != ReactionKind::bistable || !(model.mass() > 0.0)) {
        fail_config("lstar-curve needs a bistable model with F(1) > 0");
    }
    const double c_star = bistable_speed(model).c;
    for (double C : Cs) {
        if (!(C > c_star)) {
            std::ostringstream msg;
            msg << "C = " << C << " is not above c_* = " << c_star;
            fail_config(msg.str());
        }
    }
    const LStarCurve curve = lstar_curve(model, Cs, ExecPolicy::parallel, tol);
    const double limit = std::log(1.0 - model.mass() / model.potential(model.theta()));

    Report r = make_report("lstar-curve", config);
    std::ostringstream csv;
    write_csv(csv, curve);
    r.files.push_back({"lstar_curve.csv", csv.str()});
    if (with_log_excess) {
        std::ostringstream ex;
        ex << "C,4CL_star,log_excess\n";
        for (std::size_t i = 0; i < Cs.size(); ++i) {
            const double v = 4.0 * Cs[i] * curve.half_length[i];
            const std::array<double, 3> row{Cs[i], v, v > limit ? std::log(v - limit) : std::nan("")};
            ex << csv_row(row) << '\n';
        }
        r.files.push_back({"log_excess.csv", ex.str()});
    }
    Json out;
    out["c_star"] = c_star;
    out["limit_4CL"] = limit;
    out["points"] = Cs.size();
    out["last_4CL"] = 4.0 * Cs.back() * curve.half_length.back();
    r.summary = out;
    add_json(r, "lstar_curve.json", out);
    return r;
}

Report run_cstar(const Json& config) {
    ObjectReader rd(config, "cstar");
    const ReactionModel model = parse_model(rd.object("model"));
    const double L = rd.number("L");
    rd.finish();
    if (!(L > 0.0)) fail_config("cstar needs L > 0");
    Report r = make_report("cstar", config);
    Json out;
    out["L"] = L;
    out["C_star"] = minimal_coefficient(model, L);
    r.summary = out;
    add_json(r, "cstar.json", out);
    return r;
}

Report run_jump(const Json& config) {
    const ReactionModel model = model_only(config, "jump");
    Report r = make_report("jump", config);
    Json out;
    out["critical_jump"] = critical_jump(model);
    r.summary = out;
    add_json(r, "jump.json", out);
    return r;
}

Report run_propagule(const Json& config) {
    ObjectReader rd(config, "propagule");
    const ReactionModel model = parse_model(rd.object("model"));
    const FrequencyLaw law = rd.has("law") ? parse_law(rd.object("law")) : FrequencyLaw::constant();
    const double alpha = rd.number("alpha");
    const std::size_t samples = rd.count("samples", 2048);
    rd.finish();
    const Propagule bubble = bubble_profile(model, law, alpha, samples);
    Report r = make_report("propagule", config);
    std::ostringstream csv;
    write_csv(csv, bubble);
    r.files.push_back({"propagule.csv", csv.str()});
    Json out;
    out["alpha"] = alpha;
    out["L_alpha"] = bubble.half_length;
    out["threshold"] = WeightedPotential(model, law).threshold();
    r.summary = out;
    add_json(r, "propagule.json", out);
    return r;
}

Report run_simulate(const Json& config) {
    const SimulationSetup s = parse_simulation(config);
    SimulationResult result;
    switch (s.equation) {
        case Equation::heterogeneous:
            result = simulate_heterogeneous(s.model, s.gradient, s.init, s.grid, s.options);
            break;
        case Equation::frequency_law:
            result = simulate_frequency_law(s.model, s.law, s.init, s.grid, s.options);
            break;
        case Equation::two_population:
            result = simulate_two_population(s.wolbachia, s.capacity, s.init, s.grid, s.options);
            break;
    }
    Report r = make_report("simulate", config);

    const auto xs = s.grid.points();
    std::ostringstream csv;
    csv << "t";
    for (double x : xs) csv << ',' << format_double(x);
    csv << '\n';
    std::vector<std::vector<double>> rows;
    for (const auto& snap : result.snapshots) {
        csv << format_double(snap.t) << ',' << csv_row(snap.field) << '\n';
        rows.push_back(snap.field);
    }
    r.files.push_back({"snapshots.csv", csv.str()});
    // Time runs upwards in the image.
    std::reverse(rows.begin(), rows.end());
    r.files.push_back({"heatmap.pgm", encode_pgm(rows, "frontgate config sha256 " + r.config_sha256)});

    std::ostringstream front;
    front << "t,front\n";
    for (std::size_t i = 0; i < result.front_times.size(); ++i) {
        const std::array<double, 2> row{result.front_times[i], result.front_positions[i]};
        front << csv_row(row) << '\n';
    }
    r.files.push_back({"front.csv", front.str()});

    Json out;
    out["outcome"] = to_string(result.outcome);
    out["front_undefined"] = result.front_undefined;
    out["probe_x"] = result.probe_x;
    out["final_front"] = finite_or_null(result.front_positions.empty() ? std::nan("") : result.front_positions.back());
    out["min_value"] = result.min_value;
    out["max_value"] = result.max_value;
    out["steps"] = std::llround(s.options.T / s.options.dt);
    out["dt"] = s.options.dt;
    out["dx"] = s.grid.dx;
    r.summary = out;
    add_json(r, "outcome.json", out);
    return r;
}

Report run_command(const std::string& name, const Json& config) {
    if (name == "speed") return run_speed(config);
    if (name == "theta-c") return run_theta_c(config);
    if (name == "sign-curve") return run_sign_curve(config);
    if (name == "barrier") return run_barrier(config);
    if (name == "lstar-curve") return run_lstar_curve(config);
    if (name == "cstar") return run_cstar(config);
    if (name == "jump") return run_jump(config);
    if (name == "propagule") return run_propagule(config);
    if (name == "simulate") return run_simulate(config);
    fail_config("unknown command '" + name + "'");
}

}  // namespace frontgate
