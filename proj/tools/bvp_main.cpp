#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bvp/asymptotics.hpp"
#include "bvp/config.hpp"
#include "bvp/constants.hpp"
#include "bvp/kernel.hpp"
#include "bvp/solver.hpp"
#include "bvp/verifier.hpp"

using nlohmann::json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitEval = 3;
constexpr int kExitUnsolved = 4;
constexpr int kExitKernelViolation = 5;

// Shortest round-trip decimal form.
std::string fmt(double x) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

json asymptote_json(const bvp::AsymptoticValue& v) {
    using K = bvp::AsymptoticValue::Kind;
    switch (v.kind) {
        case K::Zero: return "zero";
        case K::Infinite: return "infinite";
        default: return v.value;
    }
}

json interval_json(const bvp::LambdaInterval& iv) {
    json j;
    j["conclusive"] = iv.conclusive;
    if (iv.conclusive) {
        j["lo"] = iv.lo;
        j["hi"] = iv.unbounded ? json("unbounded") : json(iv.hi);
        j["source"] = iv.source == bvp::LambdaInterval::Source::Theorem31 ? "Theorem3.1"
                                                                          : "Theorem3.2";
    } else {
        j["lo"] = nullptr;
        j["hi"] = nullptr;
        j["source"] = nullptr;
    }
    return j;
}

struct IntervalResult {
    bvp::LambdaConstants consts;
    bvp::AsymptoticValue f0, finf;
    bvp::LambdaInterval interval;
    std::vector<std::string> warnings;
};

IntervalResult compute_interval(const bvp::ProblemConfig& cfg) {
    IntervalResult r;
    r.warnings = cfg.warnings;
    r.consts.lambda1 = bvp::compute_lambda1(cfg.params, cfg.a, cfg.quad);
    r.consts.lambda2 = bvp::compute_lambda2(cfg.params, cfg.a, cfg.quad);

    auto resolve = [&](const std::optional<bvp::AsymptoticValue>& declared,
                       const char* name, bool at_zero) {
        if (declared) {
            return *declared;
        }
        bvp::AsymptoticEstimate est =
            at_zero ? bvp::estimate_f0(cfg.f) : bvp::estimate_finf(cfg.f);
        if (!est.confident) {
            r.warnings.push_back(std::string(name) +
                                 " estimate has a non-monotone trend; consider declaring " +
                                 name + " in the config");
        }
        for (const auto& note : est.notes) {
            r.warnings.push_back(std::string(name) + ": " + note);
        }
        return est.value;
    };
    r.f0 = resolve(cfg.declared_f0, "f0", true);
    r.finf = resolve(cfg.declared_finf, "finf", false);
    r.interval = bvp::eigenvalue_interval(r.consts, r.f0, r.finf);
    if (!r.interval.conclusive) {
        r.warnings.push_back("neither Theorem 3.1 nor 3.2 applies to this problem");
    }
    return r;
}

json verification_json(const bvp::VerificationReport& rep) {
    return json{{"ode_residual_sup", rep.ode_residual_sup},
                {"bc_neumann", rep.bc_neumann},
                {"bc_integral", rep.bc_integral},
                {"cone_margin", rep.cone_margin},
                {"ode_tolerance", rep.ode_tolerance},
                {"passed", rep.passed}};
}

const char* status_name(bvp::SolveStatus s) {
    switch (s) {
        case bvp::SolveStatus::Solved: return "Solved";
        case bvp::SolveStatus::Trivial: return "Trivial";
        case bvp::SolveStatus::Diverged: return "Diverged";
        case bvp::SolveStatus::MaxIters: return "MaxIters";
    }
    return "MaxIters";
}

int cmd_interval(const std::string& config_path) {
    bvp::ProblemConfig cfg = bvp::load_config_file(config_path);
    IntervalResult r = compute_interval(cfg);
    json out;
    out["lambda1"] = r.consts.lambda1;
    out["lambda2"] = r.consts.lambda2;
    out["gamma"] = bvp::cone_gamma(cfg.params);
    out["f0"] = asymptote_json(r.f0);
    out["finf"] = asymptote_json(r.finf);
    out["interval"] = interval_json(r.interval);
    out["warnings"] = r.warnings;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_solve(const std::string& config_path, double lambda_flag, bool has_lambda_flag,
              const std::string& csv_path) {
    bvp::ProblemConfig cfg = bvp::load_config_file(config_path);
    double lambda;
    if (has_lambda_flag) {
        lambda = lambda_flag;
    } else if (cfg.lambda) {
        lambda = *cfg.lambda;
    } else {
        throw bvp::ConfigError("no lambda given: pass --lambda or set it in the config");
    }
    if (!(lambda > 0.0)) {
        throw bvp::ConfigError("lambda must be > 0");
    }

    bvp::SolveOutcome out = bvp::picard_solve(cfg.params, cfg.a, cfg.f, lambda,
                                              cfg.solve, cfg.quad);

    json rep;
    rep["status"] = status_name(out.status);
    rep["iterations"] = out.iterations;
    rep["norm"] = out.history.empty() ? 0.0 : out.history.back();
    rep["clamped_points"] = out.clamped_points;
    rep["verification"] =
        out.status == bvp::SolveStatus::Solved ? verification_json(out.report) : json(nullptr);
    rep["warnings"] = cfg.warnings;

    if (out.status == bvp::SolveStatus::Solved) {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) {
            throw bvp::ConfigError("cannot open output file '" + csv_path + "'");
        }
        csv << "t,u\n";
        for (int i = 0; i <= out.solution.n; ++i) {
            csv << fmt(out.solution.node(i)) << "," << fmt(out.solution.values[i]) << "\n";
        }
        std::cerr << "solution written to " << csv_path << "\n";
    }
    std::cout << rep.dump(2) << "\n";
    return out.status == bvp::SolveStatus::Solved ? 0 : kExitUnsolved;
}

bool parse_lambda_grid(const std::string& spec, double& lo, double& hi, int& steps) {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) return false;
    try {
        std::size_t used = 0;
        lo = std::stod(spec.substr(0, c1), &used);
        if (used != c1) return false;
        const std::string mid = spec.substr(c1 + 1, c2 - c1 - 1);
        hi = std::stod(mid, &used);
        if (used != mid.size()) return false;
        const std::string tail = spec.substr(c2 + 1);
        steps = std::stoi(tail, &used);
        if (used != tail.size()) return false;
    } catch (const std::exception&) {
        return false;
    }
    return steps >= 1 && lo > 0.0 && hi >= lo;
}

int cmd_sweep(const std::string& config_path, const std::string& grid_spec,
              const std::string& csv_path) {
    double lo, hi;
    int steps;
    if (!parse_lambda_grid(grid_spec, lo, hi, steps)) {
        throw bvp::ConfigError("malformed --lambda-grid, expected lo:hi:steps with 0 < lo <= hi");
    }
    bvp::ProblemConfig cfg = bvp::load_config_file(config_path);
    IntervalResult ir = compute_interval(cfg);

    auto in_interval = [&](double lambda) {
        if (!ir.interval.conclusive) return false;
        if (lambda <= ir.interval.lo) return false;
        return ir.interval.unbounded || lambda < ir.interval.hi;
    };

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!csv_path.empty()) {
        file.open(csv_path, std::ios::binary);
        if (!file) {
            throw bvp::ConfigError("cannot open output file '" + csv_path + "'");
        }
        os = &file;
    }

    *os << "lambda,status,norm,ode_residual,in_predicted_interval\n";
    for (int k = 0; k < steps; ++k) {
        const double lambda = steps == 1 ? lo : lo + (hi - lo) * k / (steps - 1);
        std::string status, norm = "nan", ode = "nan";
        try {
            bvp::SolveOutcome out =
                bvp::picard_solve(cfg.params, cfg.a, cfg.f, lambda, cfg.solve, cfg.quad);
            status = status_name(out.status);
            if (!out.history.empty()) norm = fmt(out.history.back());
            if (out.status == bvp::SolveStatus::Solved) {
                ode = fmt(out.report.ode_residual_sup);
            }
        } catch (const bvp::Error& e) {
            status = "Error";
            std::cerr << "lambda=" << fmt(lambda) << ": " << e.what() << "\n";
        }
        *os << fmt(lambda) << "," << status << "," << norm << "," << ode << ","
            << (in_interval(lambda) ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_kernel_check(const std::string& config_path, int samples) {
    bvp::ProblemConfig cfg = bvp::load_config_file(config_path);
    const bvp::BvpParams p = cfg.params;
    const double gamma = bvp::cone_gamma(p);

    double max_lower = 0.0;     // violation of G >= 0
    double max_upper = 0.0;     // violation of G <= g
    double max_cone = 0.0;      // violation of G >= gamma*g on [0,eta]
    double max_seam = 0.0;      // jump across s = t and s = eta

    auto check_point = [&](double t, double s) {
        const double G = bvp::green(p, t, s);
        const double g = bvp::g_envelope(p, s);
        max_lower = std::max(max_lower, -G);
        max_upper = std::max(max_upper, G - g);
        if (t <= p.eta) {
            max_cone = std::max(max_cone, gamma * g - G);
        }
    };
    auto check_seam = [&](double t, double x) {
        const double d = 1e-8;
        if (x - d < 0.0 || x + d > 1.0) return;
        const double jump = std::fabs(bvp::green(p, t, x + d) - bvp::green(p, t, x - d));
        max_seam = std::max(max_seam, jump);
    };

    for (int i = 0; i < samples; ++i) {
        const double t = samples == 1 ? 0.0 : static_cast<double>(i) / (samples - 1);
        for (int j = 0; j < samples; ++j) {
            const double s = samples == 1 ? 0.0 : static_cast<double>(j) / (samples - 1);
            check_point(t, s);
        }
        check_seam(t, t);
        check_seam(t, p.eta);
    }
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < samples; ++i) {
        check_point(unit(rng), unit(rng));
    }

    const double tol = 1e-9;
    const double seam_tol = 1e-6;
    const bool ok = max_lower <= tol && max_upper <= tol && max_cone <= tol &&
                    max_seam <= seam_tol;
    json out;
    out["max_violation_nonnegative"] = max_lower;
    out["max_violation_envelope"] = max_upper;
    out["max_violation_cone_bound"] = max_cone;
    out["max_seam_jump"] = max_seam;
    out["samples"] = samples;
    out["passed"] = ok;
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : kExitKernelViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Positive solutions of u'' + lambda a(t) f(u) = 0 with u'(0)=0, "
                 "u(1) = alpha * int_0^eta u: eigenvalue intervals, kernel checks "
                 "and fixed-point solves"};
    app.require_subcommand(1);

    std::string config_path;
    std::string csv_path = "solution.csv";
    std::string sweep_csv;
    std::string grid_spec;
    double lambda = 0.0;
    int samples = 200;

    CLI::App* interval = app.add_subcommand("interval", "Compute Lambda1/Lambda2 and the guaranteed lambda interval");
    interval->add_option("config", config_path, "problem config (JSON)")->required();

    CLI::App* solve = app.add_subcommand("solve", "Find a positive solution by damped Picard iteration");
    solve->add_option("config", config_path, "problem config (JSON)")->required();
    CLI::Option* lambda_opt = solve->add_option("--lambda", lambda, "lambda (overrides config)");
    solve->add_option("--csv", csv_path, "solution output path (default solution.csv)");

    CLI::App* sweep = app.add_subcommand("sweep", "Solve across a grid of lambda values");
    sweep->add_option("config", config_path, "problem config (JSON)")->required();
    sweep->add_option("--lambda-grid", grid_spec, "lo:hi:steps")->required();
    sweep->add_option("--csv", sweep_csv, "CSV output path (default stdout)");

    CLI::App* kcheck = app.add_subcommand("kernel-check", "Verify the Green's function inequalities numerically");
    kcheck->add_option("config", config_path, "problem config (JSON)")->required();
    kcheck->add_option("--samples", samples, "grid resolution / random sample count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (interval->parsed()) return cmd_interval(config_path);
        if (solve->parsed()) return cmd_solve(config_path, lambda, lambda_opt->count() > 0, csv_path);
        if (sweep->parsed()) return cmd_sweep(config_path, grid_spec, sweep_csv);
        if (kcheck->parsed()) return cmd_kernel_check(config_path, samples);
    } catch (const bvp::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const bvp::OutOfRange& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const bvp::SyntaxError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const bvp::Error& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return kExitEval;
    }
    return kExitConfig;
}
