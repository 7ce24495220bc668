// qcat — batch front end: scenario selection, deterministic seeds, JSON/CSV
// artifacts. See README.md for the subcommand reference.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "qcat/cli_runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"catalytic-teleportation simulator"};
    app.require_subcommand(1);

    qcat::cli::RunConfig cfg;
    std::string config_file;
    std::string x_arg = "optimal";
    std::vector<std::string> tol_args;

    app.add_option("--config", config_file, "key=value config file (flags win)");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--out", cfg.output_path, "output file (default: stdout)");
        sub->add_option("--tol", tol_args, "tolerance override key=value (repeatable)")
            ->take_all();
    };

    auto* tele = app.add_subcommand("teleport-demo", "noisy teleportation + Monte-Carlo fidelity");
    tele->add_option("--state", cfg.state, "singlet-in-qutrit | maxent-qutrit | maxent-qubit");
    tele->add_option("--mc", cfg.mc_samples, "Monte-Carlo samples (>= 100)");
    add_common(tele);

    auto* sub = app.add_subcommand("subroutine-verify", "randomized catalytic-subroutine checks");
    sub->add_option("--n", cfg.n, "copy count (2..4)");
    sub->add_option("--d", cfg.d, "local dimension");
    sub->add_option("--channels", cfg.channels, "number of random channels");
    add_common(sub);

    auto* adv = app.add_subcommand("advantage-map", "catalytic-advantage map over the qutrit simplex");
    adv->add_option("--resolution", cfg.resolution, "grid step in (0, 0.5]");
    adv->add_option("--d_R", cfg.d_r, "teleported dimension");
    add_common(adv);

    auto* small = app.add_subcommand("small-catalyst", "qutrit small-catalyst protocol");
    small->add_option("--x", x_arg, "x in [3/4, 1], or 'optimal'");
    add_common(small);

    auto* erg = app.add_subcommand("ergotropy", "work extraction / passive-state report");
    erg->add_option("--rho", cfg.rho_diag, "comma-separated populations");
    erg->add_option("--H", cfg.h_diag, "comma-separated energies");
    erg->add_option("--n-max", cfg.n_max, "largest copy count (<= 3 at d = 3)");
    add_common(erg);

    // the config file seeds the defaults, so flags parsed afterwards win
    try {
        for (int i = 1; i < argc; ++i) {
            std::string a = argv[i];
            if (a == "--config" && i + 1 < argc)
                qcat::cli::apply_config_file(cfg, argv[i + 1]);
            else if (a.rfind("--config=", 0) == 0)
                qcat::cli::apply_config_file(cfg, a.substr(9));
        }
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"usage\",\"message\":\"" << e.what() << "\"}\n";
        return qcat::cli::kExitUsage;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : qcat::cli::kExitUsage;
    }

    try {
        if (tele->parsed()) cfg.scenario = qcat::cli::Scenario::teleport_demo;
        if (sub->parsed()) cfg.scenario = qcat::cli::Scenario::subroutine_verify;
        if (adv->parsed()) cfg.scenario = qcat::cli::Scenario::advantage_map;
        if (small->parsed()) {
            cfg.scenario = qcat::cli::Scenario::small_catalyst;
            cfg.x = (x_arg == "optimal") ? -1.0 : std::stod(x_arg);
        }
        if (erg->parsed()) cfg.scenario = qcat::cli::Scenario::ergotropy;
        for (const auto& kv : tol_args) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("--tol expects key=value");
            cfg.tol_overrides[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        }
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"usage\",\"message\":\"" << e.what() << "\"}\n";
        return qcat::cli::kExitUsage;
    }

    return qcat::cli::run(cfg);
}
