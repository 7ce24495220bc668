// cli_runner.hpp — scenario dispatch behind the command-line front end.
// Kept as a library function so the file contracts are testable without
// spawning processes.

#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace qcat::cli {

enum class Scenario { teleport_demo, subroutine_verify, advantage_map, small_catalyst, ergotropy };

struct RunConfig {
    Scenario scenario = Scenario::teleport_demo;
    std::uint64_t seed = 1;
    std::size_t n = 2;             // copies (subroutine-verify)
    std::size_t d = 2;             // local dimension (subroutine-verify)
    std::size_t channels = 10;     // random channels (subroutine-verify)
    double x = -1.0;               // small-catalyst; < 0 means "optimal"
    double resolution = 0.05;      // advantage-map
    std::size_t d_r = 3;
    std::size_t mc_samples = 10000;
    std::string state = "singlet-in-qutrit"; // teleport-demo
    std::string rho_diag = "0.5,0.3,0.2";    // ergotropy
    std::string h_diag = "0,1,2";
    std::size_t n_max = 3;
    std::string output_path;                 // empty -> stdout
    std::map<std::string, double> tol_overrides;
};

// Exit status: 0 success, 2 usage error, 3 dimension-cap error.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

// Validates the config, runs the scenario and writes the artifact
// (JSON or CSV). Errors are reported as a machine-readable JSON record on
// stderr; the return value is the process exit code.
int run(const RunConfig& config);

// key=value config file; unknown keys are a usage error. Flag values win
// over file values, so the caller applies this first.
void apply_config_file(RunConfig& config, const std::string& path);

} // namespace qcat::cli
