// frontgate command-line front end.
//
//   frontgate <command> --config run.json [--out dir] [--threads n]
//   frontgate figures [--recipe fig2_left ...] [--out dir]
//
// Exit codes: 0 ok, 2 bad configuration, 3 infeasible (no barrier, ...), 4 numerical failure.

#include "frontgate/commands.hpp"
#include "frontgate/error.hpp"
#include "frontgate/recipes.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <iostream>

namespace {

int exit_code(frontgate::ErrorKind kind) {
    switch (kind) {
        case frontgate::ErrorKind::config: return 2;
        case frontgate::ErrorKind::infeasible: return 3;
        case frontgate::ErrorKind::numerical: return 4;
    }
    return 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Blocking and propagation of bistable fronts in population gradients"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    int threads = 0;
    bool seedless = false;
    std::vector<std::string> recipes;

    app.add_option("--out", out_dir, "output directory (FRONTGATE_OUT overrides)");
    app.add_option("--threads", threads, "worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
    app.add_flag("--seedless", seedless, "reserved; every computation is deterministic");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"speed", "bistable wave speed c_* (or the KPP minimal speed)"},
        {"theta-c", "theta and the zero theta_c of F"},
        {"sign-curve", "eps -> int f h_eps^4 for the Wolbachia law"},
        {"barrier", "all (C, L) barriers"},
        {"lstar-curve", "C -> L_*(C) with alpha_*, beta_*"},
        {"cstar", "C_*(L), inverse of L_*"},
        {"jump", "critical jump (1 - F(1)/F(theta))^(1/4)"},
        {"propagule", "compactly supported sub-solution v_alpha"},
        {"simulate", "PDE run with heatmap, snapshots and outcome"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--config", config_path, "JSON configuration")->required()->check(CLI::ExistingFile);
        sub->fallthrough();
    }
    auto* figures = app.add_subcommand("figures", "run the built-in figure recipes");
    figures->add_option("--config", config_path, "JSON {\"recipes\": [...]}")->check(CLI::ExistingFile);
    figures->add_option("--recipe", recipes, "recipe name (repeatable; default all)");
    figures->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (const char* env = std::getenv("FRONTGATE_OUT"); env && *env) out_dir = env;
    if (threads > 0) omp_set_num_threads(threads);
    (void)seedless;

    try {
        const CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        frontgate::Report report;
        if (name == "figures") {
            if (!config_path.empty()) {
                if (!recipes.empty()) frontgate::fail_config("give either --config or --recipe, not both");
                report = frontgate::run_figures(frontgate::load_config(config_path));
            } else {
                report = frontgate::run_figures(recipes);
            }
        } else {
            report = frontgate::run_command(name, frontgate::load_config(config_path));
        }
        frontgate::write_report(report, out_dir);
        std::cout << report.summary.dump(2) << '\n';
        return 0;
    } catch (const frontgate::Error& e) {
        std::cerr << "frontgate: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "frontgate: " << e.what() << '\n';
        return 4;
    }
}
