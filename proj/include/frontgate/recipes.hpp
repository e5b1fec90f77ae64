#pragma once

#include "frontgate/commands.hpp"

#include <string>
#include <vector>

namespace frontgate {

/// A built-in figure reproduction: a subcommand and its configuration.
struct Recipe {
    std::string name;
    std::string command;
    std::string caption;
    Json config;
};

/// fig1, fig2_left ... fig2pop_right, fig5, fig6; fixed order.
const std::vector<Recipe>& builtin_recipes();
const Recipe& find_recipe(const std::string& name);

/// Runs the selected recipes (all when `names` is empty) concurrently. Each recipe's
/// files are placed under "<name>/"; report order follows the recipe order.
Report run_figures(const std::vector<std::string>& names, ExecPolicy policy = ExecPolicy::parallel);

/// {"recipes": [names]} or {}.
Report run_figures(const Json& config, ExecPolicy policy = ExecPolicy::parallel);

}  // namespace frontgate
