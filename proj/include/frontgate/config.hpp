#pragma once

#include "frontgate/pde.hpp"
#include "frontgate/reaction.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace frontgate {

using Json = nlohmann::json;

/// Strict view of a JSON object: every key must be read before finish(),
/// otherwise Error(config) names the leftovers.
class ObjectReader {
public:
    ObjectReader(const Json& object, std::string context);

    bool has(const std::string& key) const;
    double number(const std::string& key);
    double number(const std::string& key, double fallback);
    std::optional<double> optional_number(const std::string& key);
    std::size_t count(const std::string& key, std::size_t fallback);
    std::string string(const std::string& key);
    std::string string(const std::string& key, const std::string& fallback);
    bool boolean(const std::string& key, bool fallback);
    std::vector<double> numbers(const std::string& key);
    std::vector<std::string> strings(const std::string& key);
    const Json& object(const std::string& key);
    const Json* optional_object(const std::string& key);

    void finish() const;

private:
    const Json& at(const std::string& key);

    const Json& json_;
    std::string context_;
    std::set<std::string> seen_;
};

/// Parses text; Error(config) on syntax errors or a non-object top level.
Json parse_config(const std::string& text);
Json load_config(const std::string& path);

/// {"kind": "cubic", "theta"} | {"kind": "logistic", "r"} | {"kind": "wolbachia", params...}
ReactionModel parse_model(const Json& spec);
WolbachiaParams parse_wolbachia_params(ObjectReader& reader);

/// {"kind": "constant", "value"} | {"kind": "wolbachia", "normalize", params...}
FrequencyLaw parse_law(const Json& spec);

/// {"kind": "none"} | {"kind": "interval_constant", "C", "L"} |
/// {"kind": "parabolic", "C", "L", "printed_sign"} | {"kind": "sampled", "x", "values"}
GradientProfile parse_gradient(const Json& spec);

/// {"kind": "front"|"heaviside", "x0"} | {"kind": "propagule", "alpha", "center", "samples"} |
/// {"kind": "sampled", "x", "values"}. A propagule is built from `model` and `law`.
InitialDatum parse_init(const Json& spec, const ReactionModel& model, const FrequencyLaw& law);

Grid1D parse_grid(const Json& spec);

enum class Equation { heterogeneous, frequency_law, two_population };

/// Everything needed for one PDE run.
struct SimulationSetup {
    Equation equation = Equation::heterogeneous;
    ReactionModel model = make_cubic(0.25);
    WolbachiaParams wolbachia;  ///< two-population runs
    FrequencyLaw law = FrequencyLaw::constant();
    GradientProfile gradient;
    std::vector<double> capacity;  ///< two-population runs, sampled on the grid
    InitialDatum init;
    Grid1D grid;
    SimulationOptions options;
};

SimulationSetup parse_simulation(const Json& config);

/// SHA-256 of the canonical (sorted-key, compact) dump.
std::string config_hash(const Json& config);

}  // namespace frontgate
