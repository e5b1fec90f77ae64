#include "frontgate/recipes.hpp"

#include "frontgate/error.hpp"

namespace frontgate {

namespace {

// Figs. 2-3: s_h 0.8, delta 1.2 (c_* ~ 0.308). The default delta = 1.25 blocks every panel.
Json fig23_model() { return {{"kind", "wolbachia"}, {"s_h", 0.8}, {"delta", 1.2}}; }

// Fig. 4: same f on a faster reaction time scale (c_* ~ 1.07), so the peak-0.8 parabola is passable.
Json fig4_model() { return {{"kind", "wolbachia"}, {"s_h", 0.8}, {"delta", 1.2}, {"d_s", 12.0}}; }

Json interval_run(double C, double L, const Json& init) {
    return {{"model", fig23_model()},
            {"gradient", {{"kind", "interval_constant"}, {"C", C}, {"L", L}}},
            {"init", init}};
}

Json parabolic_run(double C) {
    return {{"model", fig4_model()},
            {"gradient", {{"kind", "parabolic"}, {"C", C}, {"L", 6.0}}},
            {"init", {{"kind", "front"}, {"x0", -14.0}}},
            {"dt", 0.004}};
}

Json two_population_run(double C) {
    return {{"equation", "two_population"},
            {"model", {{"kind", "wolbachia"}}},
            {"capacity", {{"kind", "exponential_ramp"}, {"K_L", 1.0}, {"C", C}, {"L", 4.0}}},
            {"init", {{"kind", "front"}, {"x0", -14.0}}},
            {"dt", 0.01}};
}

Json lstar_run(bool log_excess) {
    return {{"model", {{"kind", "wolbachia"}}},
            {"C_min", 0.28},
            {"C_max", 20.0},
            {"steps", 40},
            {"spacing", "log"},
            {"log_excess", log_excess}};
}

std::vector<Recipe> make_recipes() {
    const Json front = {{"kind", "front"}, {"x0", -14.0}};
    return {
        {"fig1", "sign-curve", "eps -> int f h_eps^4 (sign of the wave speed)",
         {{"eps_min", 0.0}, {"eps_max", 0.64}, {"steps", 129}}},
        {"fig2_left", "simulate", "blocking with L=0.5, C=2", interval_run(2.0, 0.5, front)},
        {"fig2_right", "simulate", "propagation with L=0.5, C=1", interval_run(1.0, 0.5, front)},
        {"fig3_left", "simulate", "blocking, Heaviside datum at -15 (C=0.35, L=3)",
         interval_run(0.35, 3.0, {{"kind", "heaviside"}, {"x0", -15.0}})},
        {"fig3_right", "simulate", "propagation, Heaviside datum at 2 (C=0.35, L=3)",
         interval_run(0.35, 3.0, {{"kind", "heaviside"}, {"x0", 2.0}})},
        {"fig4_left", "simulate", "blocking, parabolic gradient L=6, C=0.5", parabolic_run(0.5)},
        {"fig4_right", "simulate", "propagation, parabolic gradient L=6, C=0.2", parabolic_run(0.2)},
        {"fig5", "lstar-curve", "C -> L_*(C)", lstar_run(false)},
        {"fig6", "lstar-curve", "4 C L_*(C) and its log excess over the limit", lstar_run(true)},
        {"fig2pop_left", "simulate", "two-population model, blocking for C=0.2", two_population_run(0.2)},
        {"fig2pop_right", "simulate", "two-population model, propagation for C=0.1", two_population_run(0.1)},
    };
}

}  // namespace

const std::vector<Recipe>& builtin_recipes() {
    static const std::vector<Recipe> recipes = make_recipes();
    return recipes;
}

const Recipe& find_recipe(const std::string& name) {
    for (const auto& r : builtin_recipes()) {
        if (r.name == name) return r;
    }
    fail_config("unknown recipe '" + name + "'");
}

Report run_figures(const std::vector<std::string>& names, ExecPolicy policy) {
    std::vector<const Recipe*> selected;
    if (names.empty()) {
        for (const auto& r : builtin_recipes()) selected.push_back(&r);
    } else {
        for (const auto& n : names) selected.push_back(&find_recipe(n));
    }

    std::vector<Report> reports(selected.size());
    for_each_index(selected.size(), policy,
                   [&](std::size_t i) { reports[i] = run_command(selected[i]->command, selected[i]->config); });

    Json request = Json::array();
    for (const auto* r : selected) request.push_back(r->name);
    Report out;
    out.command = "figures";
    out.config_sha256 = config_hash(Json{{"recipes", request}});
    for (std::size_t i = 0; i < selected.size(); ++i) {
        const Recipe& recipe = *selected[i];
        out.files.push_back({recipe.name + "/config.json", recipe.config.dump(2) + "\n"});
        for (auto& a : reports[i].files) out.files.push_back({recipe.name + "/" + a.name, std::move(a.contents)});
        out.summary[recipe.name] = {{"command", recipe.command},
                                    {"caption", recipe.caption},
                                    {"config_sha256", reports[i].config_sha256},
                                    {"summary", reports[i].summary}};
    }
    return out;
}

Report run_figures(const Json& config, ExecPolicy policy) {
    ObjectReader r(config, "figures");
    std::vector<std::string> names;
    if (r.has("recipes")) names = r.strings("recipes");
    r.finish();
    return run_figures(names, policy);
}

}  // namespace frontgate
