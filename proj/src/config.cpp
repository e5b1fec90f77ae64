#include "frontgate/config.hpp"

#include "frontgate/error.hpp"
#include "frontgate/io.hpp"

#include <fstream>
#include <sstream>

namespace frontgate {

ObjectReader::ObjectReader(const Json& object, std::string context) : json_(object), context_(std::move(context)) {
    if (!json_.is_object()) fail_config(context_ + ": expected a JSON object");
}

bool ObjectReader::has(const std::string& key) const { return json_.contains(key); }

const Json& ObjectReader::at(const std::string& key) {
    seen_.insert(key);
    auto it = json_.find(key);
    if (it == json_.end()) fail_config(context_ + ": missing key '" + key + "'");
    return *it;
}

double ObjectReader::number(const std::string& key) {
    const Json& v = at(key);
    if (!v.is_number()) fail_config(context_ + "." + key + ": expected a number");
    return v.get<double>();
}

double ObjectReader::number(const std::string& key, double fallback) {
    return has(key) ? number(key) : fallback;
}

std::optional<double> ObjectReader::optional_number(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return number(key);
}

std::size_t ObjectReader::count(const std::string& key, std::size_t fallback) {
    if (!has(key)) return fallback;
    const Json& v = at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        fail_config(context_ + "." + key + ": expected a non-negative integer");
    }
    return static_cast<std::size_t>(v.get<long long>());
}

std::string ObjectReader::string(const std::string& key) {
    const Json& v = at(key);
    if (!v.is_string()) fail_config(context_ + "." + key + ": expected a string");
    return v.get<std::string>();
}

std::string ObjectReader::string(const std::string& key, const std::string& fallback) {
    return has(key) ? string(key) : fallback;
}

bool ObjectReader::boolean(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const Json& v = at(key);
    if (!v.is_boolean()) fail_config(context_ + "." + key + ": expected true or false");
    return v.get<bool>();
}

std::vector<double> ObjectReader::numbers(const std::string& key) {
    const Json& v = at(key);
    if (!v.is_array()) fail_config(context_ + "." + key + ": expected an array of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
        if (!e.is_number()) fail_config(context_ + "." + key + ": expected an array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

std::vector<std::string> ObjectReader::strings(const std::string& key) {
    const Json& v = at(key);
    if (!v.is_array()) fail_config(context_ + "." + key + ": expected an array of strings");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string()) fail_config(context_ + "." + key + ": expected an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

const Json& ObjectReader::object(const std::string& key) {
    const Json& v = at(key);
    if (!v.is_object()) fail_config(context_ + "." + key + ": expected an object");
    return v;
}

const Json* ObjectReader::optional_object(const std::string& key) {
    if (!has(key)) return nullptr;
    return &object(key);
}

void ObjectReader::finish() const {
    std::string unknown;
    for (auto it = json_.begin(); it != json_.end(); ++it) {
        if (!seen_.count(it.key())) unknown += (unknown.empty() ? "" : ", ") + it.key();
    }
    if (!unknown.empty()) fail_config(context_ + ": unknown key(s) " + unknown);
}

Json parse_config(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail_config(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) fail_config("configuration must be a JSON object");
    return j;
}

Json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_config("cannot read config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

WolbachiaParams parse_wolbachia_params(ObjectReader& r) {
    WolbachiaParams p;
    p.d_s = r.number("d_s", p.d_s);
    p.s_f = r.number("s_f", p.s_f);
    p.s_h = r.number("s_h", p.s_h);
    p.delta = r.number("delta", p.delta);
    p.d_u = r.number("d_u", p.d_u);
    p.sigma_Fu = r.number("sigma_Fu", p.sigma_Fu);
    p.eps = r.number("eps", p.eps);
    p.validate();
    return p;
}

namespace {

std::pair<ReactionModel, std::optional<WolbachiaParams>> model_and_params(const Json& spec) {
    ObjectReader r(spec, "model");
    const std::string kind = r.string("kind");
    if (kind == "cubic") {
        const double theta = r.number("theta", 0.25);
        r.finish();
        return {make_cubic(theta), std::nullopt};
    }
    if (kind == "logistic") {
        const double rate = r.number("r", 1.0);
        r.finish();
        return {make_logistic(rate), std::nullopt};
    }
    if (kind == "wolbachia") {
        const WolbachiaParams p = parse_wolbachia_params(r);
        r.finish();
        return {make_wolbachia_f(p), p};
    }
    fail_config("model.kind must be cubic, logistic or wolbachia, got '" + kind + "'");
}

}  // namespace

ReactionModel parse_model(const Json& spec) { return model_and_params(spec).first; }

FrequencyLaw parse_law(const Json& spec) {
    ObjectReader r(spec, "law");
    const std::string kind = r.string("kind");
    if (kind == "constant") {
        const double value = r.number("value", 1.0);
        r.finish();
        if (!(value > 0.0)) fail_config("law.value must be positive");
        return FrequencyLaw::constant(value);
    }
    if (kind == "wolbachia") {
        const bool normalize = r.boolean("normalize", true);
        const WolbachiaParams p = parse_wolbachia_params(r);
        r.finish();
        FrequencyLaw law = make_wolbachia_h(p);
        return normalize ? law.normalized() : law;
    }
    fail_config("law.kind must be constant or wolbachia, got '" + kind + "'");
}

GradientProfile parse_gradient(const Json& spec) {
    ObjectReader r(spec, "gradient");
    const std::string kind = r.string("kind");
    GradientProfile g;
    if (kind == "none") {
        g = GradientProfile::none();
    } else if (kind == "interval_constant") {
        const double C = r.number("C");
        const double L = r.number("L");
        g = GradientProfile::interval_constant(C, L);
    } else if (kind == "parabolic") {
        const double C = r.number("C");
        const double L = r.number("L");
        const bool printed = r.boolean("printed_sign", false);
        g = GradientProfile::parabolic(C, L, printed);
    } else if (kind == "sampled") {
        auto xs = r.numbers("x");
        auto values = r.numbers("values");
        g = GradientProfile::sampled(std::move(xs), std::move(values));
    } else {
        fail_config("gradient.kind must be none, interval_constant, parabolic or sampled, got '" + kind + "'");
    }
    r.finish();
    return g;
}

InitialDatum parse_init(const Json& spec, const ReactionModel& model, const FrequencyLaw& law) {
    ObjectReader r(spec, "init");
    const std::string kind = r.string("kind");
    InitialDatum d;
    if (kind == "front") {
        d = InitialDatum::front(r.number("x0", -14.0));
    } else if (kind == "heaviside") {
        d = InitialDatum::heaviside(r.number("x0"));
    } else if (kind == "propagule") {
        const double alpha = r.number("alpha");
        const double center = r.number("center", 0.0);
        const std::size_t samples = r.count("samples", 2048);
        r.finish();
        return InitialDatum::propagule(bubble_profile(model, law, alpha, samples), center);
    } else if (kind == "sampled") {
        auto xs = r.numbers("x");
        auto values = r.numbers("values");
        d = InitialDatum::sampled(std::move(xs), std::move(values));
    } else {
        fail_config("init.kind must be front, heaviside, propagule or sampled, got '" + kind + "'");
    }
    r.finish();
    return d;
}

Grid1D parse_grid(const Json& spec) {
    ObjectReader r(spec, "grid");
    const double x_min = r.number("x_min", -20.0);
    const double x_max = r.number("x_max", 20.0);
    const double dx = r.number("dx", 0.1);
    r.finish();
    return Grid1D::make(x_min, x_max, dx);
}

SimulationSetup parse_simulation(const Json& config) {
    ObjectReader r(config, "simulate");
    SimulationSetup s;
    const std::string equation = r.string("equation", "heterogeneous");
    if (equation == "heterogeneous") {
        s.equation = Equation::heterogeneous;
    } else if (equation == "frequency_law") {
        s.equation = Equation::frequency_law;
    } else if (equation == "two_population") {
        s.equation = Equation::two_population;
    } else {
        fail_config("equation must be heterogeneous, frequency_law or two_population, got '" + equation + "'");
    }

    auto [model, params] = model_and_params(r.object("model"));
    s.model = model;
    if (params) s.wolbachia = *params;
    if (const Json* law = r.optional_object("law")) s.law = parse_law(*law);
    if (const Json* grid = r.optional_object("grid")) {
        s.grid = parse_grid(*grid);
    } else {
        s.grid = Grid1D::make(-20.0, 20.0, 0.1);
    }
    if (const Json* gradient = r.optional_object("gradient")) s.gradient = parse_gradient(*gradient);
    s.init = r.has("init") ? parse_init(r.object("init"), s.model, s.law) : InitialDatum::front(-14.0);

    if (const Json* cap = r.optional_object("capacity")) {
        ObjectReader c(*cap, "capacity");
        const std::string kind = c.string("kind");
        if (kind == "exponential_ramp") {
            const double K_L = c.number("K_L", 1.0);
            const double C = c.number("C");
            const double L = c.number("L");
            s.capacity = exponential_ramp_capacity(s.grid, K_L, C, L);
        } else if (kind == "constant") {
            s.capacity.assign(s.grid.size(), c.number("K", 1.0));
        } else {
            fail_config("capacity.kind must be exponential_ramp or constant, got '" + kind + "'");
        }
        c.finish();
    }

    s.options.dt = r.number("dt", s.options.dt);
    s.options.T = r.number("T", s.options.T);
    s.options.snapshot_every = r.number("snapshot_every", s.options.snapshot_every);
    s.options.probe_x = r.optional_number("probe_x");
    s.options.window = r.number("window", s.options.window);
    s.options.policy = r.boolean("parallel", false) ? ExecPolicy::parallel : ExecPolicy::serial;
    r.finish();

    if (!(s.options.dt > 0.0) || !(s.options.T > 0.0) || !(s.options.snapshot_every > 0.0)) {
        fail_config("dt, T and snapshot_every must be positive");
    }
    if (!(s.options.window > 0.0 && s.options.window <= 1.0)) fail_config("window must lie in (0, 1]");
    if (s.equation == Equation::two_population) {
        if (!params) fail_config("two_population runs need a wolbachia model");
        if (s.capacity.empty()) fail_config("two_population runs need a capacity");
        if (s.gradient.kind != GradientProfile::Kind::none) fail_config("two_population runs take a capacity, not a gradient");
    } else if (!s.capacity.empty()) {
        fail_config("capacity only applies to two_population runs");
    }
    if (s.equation == Equation::frequency_law && s.gradient.kind != GradientProfile::Kind::none) {
        fail_config("frequency_law runs take a law, not a gradient");
    }
    return s;
}

std::string config_hash(const Json& config) { return sha256_hex(config.dump()); }

}  // namespace frontgate
