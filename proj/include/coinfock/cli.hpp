#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "coinfock/verify.hpp"

namespace coinfock::cli {

struct RunConfig {
    std::string command;
    int L = 3;
    int n_max = 4;
    int k_max = 2;
    int h_max = 2;
    int J = 200;
    double R = 10.0;
    int Lc = 1;
    double lambda = 1.0;
    double mass = 1.0;
    std::uint64_t seed = 1;
    std::string out_path;   // empty: stdout
    std::string format = "json";
};

inline int write_output(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream os(cfg.out_path);
    if (!os) {
        std::cerr << "cannot open output path: " << cfg.out_path << '\n';
        return 2;
    }
    os << text;
    return 0;
}

inline nlohmann::json params_json(const RunConfig& cfg)
{
    nlohmann::json p;
    p["command"] = cfg.command;
    p["L"] = cfg.L;
    p["n_max"] = cfg.n_max;
    p["k_max"] = cfg.k_max;
    p["h_max"] = cfg.h_max;
    p["J"] = cfg.J;
    p["R"] = cfg.R;
    p["Lc"] = cfg.Lc;
    p["lambda"] = cfg.lambda;
    p["mass"] = cfg.mass;
    return p;
}

inline int emit_report(const RunConfig& cfg, Report& rep)
{
    rep.seed = cfg.seed;
    rep.params = params_json(cfg);
    std::ostringstream os;
    if (cfg.format == "csv")
        rep.write_csv(os);
    else
        rep.write_json(os);
    int rc = write_output(cfg, os.str());
    if (rc != 0) return rc;
    return rep.all_pass() ? 0 : 1;
}

inline int run_verify_algebra(const RunConfig& cfg)
{
    Report rep;
    auto add = [&](std::vector<Check> cs) {
        for (auto& c : cs) rep.checks.push_back(std::move(c));
    };
    const int n_ops = std::min(cfg.n_max, 3);
    add(checks_measure_decomposition(std::min(cfg.L, 4), n_ops, 200, cfg.seed));
    add(checks_permutation_invariance(cfg.L, n_ops, cfg.seed + 1));
    add(checks_adjointness(cfg.L, std::min(cfg.n_max, 3), cfg.k_max, cfg.seed + 2));
    add(checks_commutators(cfg.L, cfg.n_max, cfg.k_max, cfg.h_max, 5, cfg.seed + 3));
    add(checks_norm_bounds(cfg.L, std::min(cfg.n_max, 3), cfg.k_max, 3, cfg.seed + 4));
    add(checks_interaction(cfg.L, cfg.n_max, std::min(std::min(cfg.k_max, cfg.h_max), 2), 20, cfg.seed + 5));
    add(checks_cyclicity(2, 2, 2));
    return emit_report(cfg, rep);
}

inline int run_verify_partitions(const RunConfig& cfg)
{
    Report rep;
    auto add = [&](std::vector<Check> cs) {
        for (auto& c : cs) rep.checks.push_back(std::move(c));
    };
    add(checks_partition_lattice(cfg.L, std::min(cfg.n_max, 4), cfg.seed));
    add(checks_indicator_identities(cfg.L, std::min(cfg.n_max, 4), cfg.seed + 1));
    return emit_report(cfg, rep);
}

inline int run_spectrum(const RunConfig& cfg)
{
    auto build = [&]() {
        if (cfg.Lc > 1) {
            auto tp = build_2p(cfg.J, cfg.R, cfg.Lc, cfg.lambda, cfg.mass);
            return spectrum(tp);
        }
        auto p = build_1p(cfg.J, cfg.R, cfg.lambda, cfg.mass);
        return spectrum(p);
    };
    Spectrum sp = build();
    std::ostringstream os;
    if (cfg.format == "csv") {
        write_spectrum_csv(sp, params_json(cfg).dump(), os);
    } else {
        nlohmann::json j;
        j["meta"]["version"] = kVersion;
        j["meta"]["seed"] = cfg.seed;
        j["meta"]["params"] = params_json(cfg);
        j["eigenvalues"] = std::vector<double>(sp.eigenvalues.data(),
                                               sp.eigenvalues.data() + sp.eigenvalues.size());
        os << j.dump(2) << '\n';
    }
    return write_output(cfg, os.str());
}

inline int run_evolve(const RunConfig& cfg)
{
    auto p = build_1p(cfg.J, cfg.R, cfg.lambda, cfg.mass);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(cfg.J);
    psi0(0) = 1.0;  // singular-node start
    std::vector<double> times;
    for (int i = 0; i <= 100; ++i) times.push_back(0.1 * i);
    auto tr = evolve(p, psi0, times);
    std::ostringstream os;
    if (cfg.format == "csv") {
        write_evolution_csv(tr, params_json(cfg).dump(), os);
    } else {
        nlohmann::json j;
        j["meta"]["version"] = kVersion;
        j["meta"]["seed"] = cfg.seed;
        j["meta"]["params"] = params_json(cfg);
        j["t"] = tr.times;
        j["norm_total"] = tr.norm_total;
        j["norm_singular"] = tr.norm_singular;
        j["norm_regular"] = tr.norm_regular;
        os << j.dump(2) << '\n';
    }
    return write_output(cfg, os.str());
}

inline int run_mixing(const RunConfig& cfg)
{
    auto p = build_1p(cfg.J, cfg.R, cfg.lambda, cfg.mass);
    auto mix = mixing_diagnostics(p);
    auto ctrl = mixing_diagnostics(decouple_node0(p));
    std::vector<std::pair<double, double>> sweep;
    for (double lam : {0.5, 1.0, 2.0}) {
        auto ps = build_1p(cfg.J, cfg.R, lam, cfg.mass);
        sweep.emplace_back(lam, mixing_diagnostics(ps).min_angle);
    }
    std::ostringstream os;
    if (cfg.format == "csv") {
        os << "# " << params_json(cfg).dump() << '\n';
        os << "lambda,min_angle\n";
        os << cfg.lambda << ',' << mix.min_angle << '\n';
        for (auto& [lam, ang] : sweep) os << lam << ',' << ang << '\n';
    } else {
        nlohmann::json j;
        j["meta"]["version"] = kVersion;
        j["meta"]["seed"] = cfg.seed;
        j["meta"]["params"] = params_json(cfg);
        j["min_angle"] = mix.min_angle;
        j["decoupled_control_min_angle"] = ctrl.min_angle;
        j["sweep"] = nlohmann::json::array();
        for (auto& [lam, ang] : sweep) j["sweep"].push_back({{"lambda", lam}, {"min_angle", ang}});
        os << j.dump(2) << '\n';
    }
    return write_output(cfg, os.str());
}

inline int run(const RunConfig& cfg)
{
    try {
        if (cfg.L < 1 || cfg.n_max < 0 || cfg.k_max < 1 || cfg.h_max < 1)
            throw BadParameter("invalid lattice or truncation parameters");
        if (cfg.format != "json" && cfg.format != "csv") throw BadParameter("format must be json or csv");
        if (cfg.command == "verify-algebra") return run_verify_algebra(cfg);
        if (cfg.command == "verify-partitions") return run_verify_partitions(cfg);
        if (cfg.command == "spectrum") return run_spectrum(cfg);
        if (cfg.command == "evolve") return run_evolve(cfg);
        if (cfg.command == "mixing") return run_mixing(cfg);
        std::cerr << "unknown command: " << cfg.command << '\n';
        return 2;
    } catch (const BadParameter& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

inline int main_entry(int argc, const char* const* argv)
{
    CLI::App app{"coincidence-product Fock space verification suite"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.set_config("--config")->description("flat key=value file; command-line flags win");
    app.add_option("--L", cfg.L, "lattice sites");
    app.add_option("--n-max", cfg.n_max, "Fock truncation");
    app.add_option("--k-max", cfg.k_max, "max annihilation order");
    app.add_option("--h-max", cfg.h_max, "max creation order");
    app.add_option("--J", cfg.J, "radial interior nodes");
    app.add_option("--R", cfg.R, "outer radius");
    app.add_option("--Lc", cfg.Lc, "center-coordinate sites");
    app.add_option("--lambda", cfg.lambda, "coupling constant");
    app.add_option("--mass", cfg.mass, "particle mass");
    app.add_option("--seed", cfg.seed, "PRNG seed");
    app.add_option("--out", cfg.out_path, "output path (default stdout)");
    app.add_option("--format", cfg.format, "json or csv");
    for (const char* name :
         {"verify-algebra", "verify-partitions", "spectrum", "evolve", "mixing"}) {
        auto* cmd = app.add_subcommand(name);
        cmd->fallthrough();
        cmd->callback([&cfg, name] { cfg.command = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return run(cfg);
}

}  // namespace coinfock::cli
