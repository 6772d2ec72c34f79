#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trio/oscillator_model.hpp"
#include "trio/sweep.hpp"
#include "trio/verify.hpp"

namespace {

int run_sweep_cmd(const std::string& states_spec, const std::string& preset,
                  double theta_min, double theta_max, int samples,
                  const std::string& out_path) {
    trio::sweep::SweepConfig config;
    config.theta_min = theta_min;
    config.theta_max = theta_max;
    config.samples = samples;
    if (!preset.empty()) {
        if (!trio::sweep::apply_preset(preset, config)) {
            std::cerr << "unknown preset '" << preset << "'; available:";
            for (const std::string& n : trio::sweep::preset_names()) {
                std::cerr << ' ' << n;
            }
            std::cerr << '\n';
            return 2;
        }
        // Explicit range flags override the preset's default range.
        config.theta_min = theta_min;
        config.theta_max = theta_max;
        config.samples = samples;
    }
    if (!states_spec.empty()) {
        config.states = trio::sweep::parse_states(states_spec);
    }
    if (!config.valid()) {
        std::cerr << "no states selected (use --states or --preset)\n";
        return 2;
    }
    if (out_path.empty() || out_path == "-") {
        trio::sweep::run_sweep(config, std::cout);
    } else {
        std::ofstream out(out_path, std::ios::binary); // keep LF on all hosts
        if (!out) {
            std::cerr << "cannot open '" << out_path << "' for writing\n";
            return 2;
        }
        trio::sweep::run_sweep(config, out);
    }
    return 0;
}

int run_diagonalize_cmd(const trio::model::OscillatorParams& params,
                        bool as_json) {
    using nlohmann::json;
    if (!params.valid()) {
        std::cerr << "all frequencies must be positive\n";
        return 2;
    }
    const auto coeffs = trio::model::quintic_coefficients(params);
    const trio::model::PhiRoots roots = trio::model::solve_phi_roots(params);
    const auto eigen = trio::model::potential_eigenvalues(params);

    json report;
    report["omega"] = {params.omega_x, params.omega_y, params.omega_z};
    report["coupling"] = {params.j_xy, params.j_xz, params.j_yz};
    report["weak_regime"] = params.weak_regime();
    report["quintic_coefficients"] = coeffs;
    report["degenerate"] = roots.degenerate;
    report["potential_eigenvalues"] = eigen;
    report["roots"] = json::array();
    for (double r : roots.roots) {
        const trio::model::DiagonalizationResult d =
            trio::model::diagonalize_at_root(params, r);
        report["roots"].push_back(
            {{"root", r},
             {"theta", d.angles.theta},
             {"Phi", d.angles.phi_cap},
             {"phi", d.angles.phi},
             {"diagonal", d.eigenvalues},
             {"residual", d.residual}});
    }
    if (roots.degenerate) {
        const trio::model::EulerAngles identity{};
        report["identity_residual"] =
            trio::model::diagonalization_residual(params, identity);
    }

    if (as_json) {
        std::cout << report.dump(2) << '\n';
        return 0;
    }
    std::printf("potential matrix: omega^2 = (%g, %g, %g), J = (%g, %g, %g)\n",
                params.omega_x * params.omega_x,
                params.omega_y * params.omega_y,
                params.omega_z * params.omega_z, params.j_xy, params.j_xz,
                params.j_yz);
    std::printf("weak-coupling regime: %s\n",
                params.weak_regime() ? "yes" : "no");
    std::printf("quintic coefficients a0..a5:");
    for (double c : coeffs) std::printf(" %.12g", c);
    std::printf("\n");
    std::printf("eigenvalues (ascending): %.12g %.12g %.12g\n", eigen[0],
                eigen[1], eigen[2]);
    if (roots.degenerate) {
        std::printf("condition degenerate: every angle phi solves it; "
                    "identity angles give residual %.3g\n",
                    report["identity_residual"].get<double>());
        return 0;
    }
    if (roots.roots.empty()) {
        std::printf("no real roots found\n");
        return 1;
    }
    for (double r : roots.roots) {
        const trio::model::DiagonalizationResult d =
            trio::model::diagonalize_at_root(params, r);
        std::printf("root %.12g -> theta=%.12g Phi=%.12g phi=%.12g  "
                    "diag=(%.12g, %.12g, %.12g)  residual=%.3g\n",
                    r, d.angles.theta, d.angles.phi_cap, d.angles.phi,
                    d.eigenvalues[0], d.eigenvalues[1], d.eigenvalues[2],
                    d.residual);
    }
    return 0;
}

int run_verify_cmd(const std::string& level_name) {
    const trio::verify::Level level = level_name == "full"
                                          ? trio::verify::Level::Full
                                          : trio::verify::Level::Fast;
    const std::vector<trio::verify::PropertyResult> results =
        trio::verify::run(level);
    for (const trio::verify::PropertyResult& r : results) {
        std::printf("[%s] %-55s max residual %.3e (tol %.1e)\n",
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.max_residual,
                    r.tolerance);
    }
    const bool ok = trio::verify::all_pass(results);
    std::printf("%zu properties, %s\n", results.size(),
                ok ? "all passed" : "FAILURES PRESENT");
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bipartite entanglement of three coupled harmonic "
                 "oscillators in Fock states"};
    app.require_subcommand(1);
    app.set_config("--config")->description("TOML config file (flags override)");

    // sweep
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Sweep linear entropies over theta, CSV out");
    std::string states_spec, preset, out_path;
    double theta_min = -1.0, theta_max = 1.0;
    int samples = 401;
    sweep_cmd->add_option("--states", states_spec,
                          "states as 'n,m,l;n,m,l;...'");
    sweep_cmd->add_option("--preset", preset,
                          "figure preset (fig2..fig10), sets states and range");
    sweep_cmd->add_option("--theta-min", theta_min, "range start (radians)")
        ->capture_default_str();
    sweep_cmd->add_option("--theta-max", theta_max, "range end (radians)")
        ->capture_default_str();
    sweep_cmd->add_option("--samples", samples, "number of samples")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    sweep_cmd->add_option("--out", out_path, "output CSV path ('-' = stdout)");

    // diagonalize
    auto* diag_cmd = app.add_subcommand(
        "diagonalize", "Quintic roots, Euler angles and residuals for "
                       "physical parameters");
    trio::model::OscillatorParams params;
    bool as_json = false;
    diag_cmd->add_option("--omega-x", params.omega_x, "frequency of x")
        ->capture_default_str();
    diag_cmd->add_option("--omega-y", params.omega_y, "frequency of y")
        ->capture_default_str();
    diag_cmd->add_option("--omega-z", params.omega_z, "frequency of z")
        ->capture_default_str();
    diag_cmd->add_option("--j-xy", params.j_xy, "coupling x-y")
        ->capture_default_str();
    diag_cmd->add_option("--j-xz", params.j_xz, "coupling x-z")
        ->capture_default_str();
    diag_cmd->add_option("--j-yz", params.j_yz, "coupling y-z")
        ->capture_default_str();
    diag_cmd->add_flag("--json", as_json, "emit JSON instead of text");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "Run the invariant/property suite");
    std::string level = "fast";
    verify_cmd->add_option("--level", level, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep_cmd->parsed()) {
            return run_sweep_cmd(states_spec, preset, theta_min, theta_max,
                                 samples, out_path);
        }
        if (diag_cmd->parsed()) return run_diagonalize_cmd(params, as_json);
        if (verify_cmd->parsed()) return run_verify_cmd(level);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
