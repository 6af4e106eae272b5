#include "bvp/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bvp {

namespace {

using nlohmann::json;

AsymptoticValue parse_asymptote(const json& j, const std::string& key) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "zero") return AsymptoticValue::zero();
        if (s == "infinite") return AsymptoticValue::infinite();
        throw ConfigError("config key '" + key + "': expected a number, \"zero\" or \"infinite\", got \"" + s + "\"");
    }
    if (j.is_number()) {
        const double v = j.get<double>();
        if (!(v > 0.0)) {
            throw ConfigError("config key '" + key + "': declared finite asymptote must be > 0");
        }
        return AsymptoticValue::finite(v);
    }
    throw ConfigError("config key '" + key + "': expected a number or string");
}

double require_number(const json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw ConfigError("config requires numeric key '" + key + "'");
    }
    return j.at(key).get<double>();
}

std::string require_string(const json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_string()) {
        throw ConfigError("config requires string key '" + key + "'");
    }
    return j.at(key).get<std::string>();
}

// H1/H2 sanity sampling: f on [0, 10) and a on [0, 1], 1000 points each.
void sample_hypotheses(ProblemConfig& c) {
    bool f_negative = false;
    bool a_negative = false;
    double a_max_front = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double u = k / 100.0;
        try {
            if (c.f.eval(u) < 0.0) f_negative = true;
        } catch (const EvalError&) {
            // domain faults surface later, at evaluation sites that matter
        }
        const double t = k / 999.0;
        try {
            const double av = c.a.eval(t);
            if (av < 0.0) a_negative = true;
            if (t <= c.params.eta) a_max_front = std::max(a_max_front, av);
        } catch (const EvalError&) {
        }
    }
    if (f_negative) {
        c.warnings.push_back(
            "f takes negative sampled values; hypothesis (H1) wants f in C([0,inf),[0,inf))");
    }
    if (a_negative) {
        c.warnings.push_back(
            "a takes negative sampled values; hypothesis (H2) wants a in C([0,1],[0,inf))");
    }
    if (a_max_front < 1e-12) {
        c.warnings.push_back(
            "a appears to vanish on [0,eta]; hypothesis (H2) wants a(t0) > 0 for some t0 in [0,eta]");
    }
}

}  // namespace

ProblemConfig load_config_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }

    static const std::set<std::string> known = {
        "alpha", "eta", "a", "f", "f0", "finf", "lambda", "grid_n",
        "quad_abs_tol", "quad_max_depth", "damping", "max_iters",
        "conv_tol", "trivial_threshold", "init_scales"};
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }

    ProblemConfig c{
        validate_params(require_number(j, "alpha"), require_number(j, "eta")),
        Expression::parse(require_string(j, "a"), "t"),
        Expression::parse(require_string(j, "f"), "u"),
    };

    if (j.contains("f0")) c.declared_f0 = parse_asymptote(j.at("f0"), "f0");
    if (j.contains("finf")) c.declared_finf = parse_asymptote(j.at("finf"), "finf");
    if (j.contains("lambda")) {
        c.lambda = require_number(j, "lambda");
        if (!(*c.lambda > 0.0)) {
            throw ConfigError("lambda must be > 0");
        }
    }
    if (j.contains("grid_n")) {
        const double n = require_number(j, "grid_n");
        if (n != std::floor(n) || n < 16 || static_cast<long long>(n) % 2 != 0) {
            throw ConfigError("grid_n must be an even integer >= 16");
        }
        c.solve.grid_n = static_cast<int>(n);
    }
    if (j.contains("quad_abs_tol")) {
        c.quad.abs_tol = require_number(j, "quad_abs_tol");
        if (!(c.quad.abs_tol > 0.0)) throw ConfigError("quad_abs_tol must be > 0");
    }
    if (j.contains("quad_max_depth")) {
        c.quad.max_depth = static_cast<int>(require_number(j, "quad_max_depth"));
        if (c.quad.max_depth < 1) throw ConfigError("quad_max_depth must be >= 1");
    }
    if (j.contains("damping")) {
        c.solve.damping = require_number(j, "damping");
        if (!(c.solve.damping > 0.0 && c.solve.damping <= 1.0)) {
            throw ConfigError("damping must lie in (0,1]");
        }
    }
    if (j.contains("max_iters")) {
        c.solve.max_iters = static_cast<int>(require_number(j, "max_iters"));
        if (c.solve.max_iters < 1) throw ConfigError("max_iters must be >= 1");
    }
    if (j.contains("conv_tol")) {
        c.solve.conv_tol = require_number(j, "conv_tol");
        if (!(c.solve.conv_tol > 0.0 && c.solve.conv_tol < 1.0)) {
            throw ConfigError("conv_tol must lie in (0,1)");
        }
    }
    if (j.contains("trivial_threshold")) {
        c.solve.trivial_threshold = require_number(j, "trivial_threshold");
        if (!(c.solve.trivial_threshold > 0.0)) {
            throw ConfigError("trivial_threshold must be > 0");
        }
    }
    if (j.contains("init_scales")) {
        if (!j.at("init_scales").is_array() || j.at("init_scales").empty()) {
            throw ConfigError("init_scales must be a nonempty array of positive numbers");
        }
        c.solve.init_scales.clear();
        for (const auto& v : j.at("init_scales")) {
            if (!v.is_number() || !(v.get<double>() > 0.0)) {
                throw ConfigError("init_scales must be a nonempty array of positive numbers");
            }
            c.solve.init_scales.push_back(v.get<double>());
        }
    }

    sample_hypotheses(c);
    return c;
}

ProblemConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_config_text(buf.str());
}

}  // namespace bvp
