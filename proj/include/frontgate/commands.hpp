#pragma once

#include "frontgate/config.hpp"

#include <string>
#include <vector>

namespace frontgate {

struct Artifact {
    std::string name;  ///< path relative to the output directory
    std::string contents;
};

/// Output of one command, held in memory until the caller writes it.
struct Report {
    std::string command;
    std::string config_sha256;
    std::vector<Artifact> files;
    Json summary = Json::object();
};

/// Deterministic manifest: command, version, config hash, per-file SHA-256 and sizes, summary.
std::string manifest_json(const Report& report);

/// Writes every artifact and manifest.json under `directory`.
void write_report(const Report& report, const std::string& directory);

Report run_speed(const Json& config);
Report run_theta_c(const Json& config);
Report run_sign_curve(const Json& config);
Report run_barrier(const Json& config);
Report run_lstar_curve(const Json& config);
Report run_cstar(const Json& config);
Report run_jump(const Json& config);
Report run_propagule(const Json& config);
Report run_simulate(const Json& config);

/// Dispatch by subcommand name (everything except "figures").
Report run_command(const std::string& name, const Json& config);

}  // namespace frontgate
