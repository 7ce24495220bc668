#include "qcat/cli_runner.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "qcat/advopt.hpp"
#include "qcat/catengine.hpp"
#include "qcat/entmetrics.hpp"
#include "qcat/errors.hpp"
#include "qcat/gencat.hpp"
#include "qcat/kernels.hpp"
#include "qcat/report_io.hpp"
#include "qcat/smallcat.hpp"
#include "qcat/teleporter.hpp"
#include "qcat/tolerances.hpp"

namespace qcat::cli {

namespace {

using nlohmann::json;

std::vector<double> parse_diag(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw std::invalid_argument("empty diagonal list");
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << text;
}

DensityMatrix demo_state(const std::string& name) {
    if (name == "singlet-in-qutrit") {
        std::vector<cdouble> v(9, cdouble{0.0, 0.0});
        v[0] = v[4] = 1.0 / std::sqrt(2.0);
        return from_pure(PureState(std::move(v), {3, 3}));
    }
    if (name == "maxent-qutrit") return from_pure(max_entangled_state(3, 3));
    if (name == "maxent-qubit") return from_pure(max_entangled_state(2, 2));
    throw std::invalid_argument("unknown --state (use singlet-in-qutrit, maxent-qutrit, maxent-qubit)");
}

json run_teleport_demo(const RunConfig& cfg) {
    DensityMatrix rho = demo_state(cfg.state);
    const std::size_t d_r = rho.dims[0];
    FidelityRecord rec = make_fidelity_record(rho, d_r);
    McEstimate est = avg_fidelity_mc(rho, cfg.mc_samples, cfg.seed);
    return json{{"scenario", "teleport-demo"},
                {"state", cfg.state},
                {"d_R", d_r},
                {"seed", cfg.seed},
                {"singlet_fraction", rec.singlet_fraction},
                {"tele_fidelity_analytic", rec.tele_fidelity},
                {"classical_threshold", classical_threshold(d_r)},
                {"monte_carlo", to_json(est)}};
}

json run_subroutine_verify(const RunConfig& cfg) {
    Rng rng(cfg.seed);
    json rows = json::array();
    double worst_identity = 0.0, worst_drift = 0.0;
    bool all_bounds = true;
    for (std::size_t k = 0; k < cfg.channels; ++k) {
        MultiCopyChannel ch = MultiCopyChannel::random_channel(cfg.n, cfg.d, cfg.d, rng);
        DensityMatrix rho = random_density_matrix({cfg.d, cfg.d}, rng);
        BlockCatalystState cat = build_catalyst(rho, ch, cfg.n);
        ProtocolReport rep = run_subroutine(rho, cat, ch);
        // closed-form oracle: (1/n) sum_i tr_{/i} sigma^n
        ComplexMatrix closed(rho.dim(), rho.dim());
        for (std::size_t i = 0; i < cfg.n; ++i)
            closed += kernels::partial_trace(cat.sigma_n.mat, cat.sigma_n.dims, {i});
        closed *= cdouble{1.0 / static_cast<double>(cfg.n), 0.0};
        const double ident = (closed - rep.system_out.mat).max_abs();
        worst_identity = std::max(worst_identity, ident);
        worst_drift = std::max(worst_drift, rep.catalyst_drift);
        all_bounds = all_bounds && rep.bound_3eps_satisfied;
        rows.push_back(json{{"channel", k},
                            {"kind", static_cast<int>(ch.kind())},
                            {"identity_defect", ident},
                            {"catalyst_drift", rep.catalyst_drift},
                            {"joint_correlation", rep.joint_correlation},
                            {"epsilon_iid", rep.epsilon_iid},
                            {"bound_3eps_satisfied", rep.bound_3eps_satisfied}});
    }
    return json{{"scenario", "subroutine-verify"}, {"n", cfg.n},
                {"d", cfg.d},                      {"seed", cfg.seed},
                {"worst_identity_defect", worst_identity}, {"worst_catalyst_drift", worst_drift},
                {"all_bounds_satisfied", all_bounds},      {"channels", std::move(rows)}};
}

json run_small_catalyst_scenario(const RunConfig& cfg) {
    double x = cfg.x;
    json j{{"scenario", "small-catalyst"}};
    if (x < 0.0) {
        XOptimum opt = optimize_x();
        j["x_star"] = opt.x_star;
        j["f_star_closed_form"] = opt.f_star;
        j["F_star_closed_form"] = opt.tele_fidelity_star;
        x = opt.x_star;
    }
    SmallCatReport rep = run_small_catalyst(x);
    j["report"] = to_json(rep);
    return j;
}

json run_ergotropy(const RunConfig& cfg) {
    auto rd = parse_diag(cfg.rho_diag);
    auto hd = parse_diag(cfg.h_diag);
    if (rd.size() != hd.size()) throw std::invalid_argument("--rho and --H lengths differ");
    DensityMatrix rho(ComplexMatrix::diag(rd), {rd.size()});
    Observable h(ComplexMatrix::diag(hd), "Hamiltonian");
    WorkReport rep = make_work_report(rho, h, cfg.n_max);
    json j = to_json(rep);
    j["scenario"] = "ergotropy";
    j["rho_diag"] = rd;
    j["h_diag"] = hd;
    return j;
}

void validate(const RunConfig& cfg) {
    if (cfg.scenario == Scenario::advantage_map && !(cfg.resolution > 0.0 && cfg.resolution <= 0.5))
        throw std::invalid_argument("resolution must be in (0, 0.5]");
    if (cfg.scenario == Scenario::teleport_demo && cfg.mc_samples < 100)
        throw std::invalid_argument("mc_samples must be >= 100");
    if (cfg.scenario == Scenario::subroutine_verify && (cfg.n < 2 || cfg.n > 4))
        throw std::invalid_argument("subroutine-verify supports n in [2, 4]");
}

} // namespace

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line without '=': " + line);
        const std::string key = line.substr(0, eq);
        const std::string val = line.substr(eq + 1);
        if (key == "seed") cfg.seed = std::stoull(val);
        else if (key == "n") cfg.n = std::stoul(val);
        else if (key == "d") cfg.d = std::stoul(val);
        else if (key == "channels") cfg.channels = std::stoul(val);
        else if (key == "x") cfg.x = (val == "optimal" ? -1.0 : std::stod(val));
        else if (key == "resolution") cfg.resolution = std::stod(val);
        else if (key == "d_R") cfg.d_r = std::stoul(val);
        else if (key == "mc") cfg.mc_samples = std::stoul(val);
        else if (key == "state") cfg.state = val;
        else if (key == "rho") cfg.rho_diag = val;
        else if (key == "H") cfg.h_diag = val;
        else if (key == "n_max") cfg.n_max = std::stoul(val);
        else if (key == "out") cfg.output_path = val;
        else if (key.rfind("tol.", 0) == 0) cfg.tol_overrides[key.substr(4)] = std::stod(val);
        else throw std::invalid_argument("unknown config key: " + key);
    }
}

int run(const RunConfig& cfg) {
    try {
        validate(cfg);
        for (const auto& [key, value] : cfg.tol_overrides) {
            auto& t = tolerances();
            if (key == "hermiticity") t.hermiticity = value;
            else if (key == "trace_one") t.trace_one = value;
            else if (key == "bound_slack") t.bound_slack = value;
            else if (key == "entropy_match") t.entropy_match = value;
            else if (key == "optimizer") t.optimizer = value;
            else if (key == "dim_cap") t.dim_cap = static_cast<std::size_t>(value);
            else throw std::invalid_argument("unknown tolerance key: " + key);
        }

        if (cfg.scenario == Scenario::advantage_map) {
            auto points = advantage_map(cfg.resolution, cfg.d_r);
            std::ostringstream os;
            write_advantage_csv(os, points);
            write_text(cfg.output_path, os.str());
            return kExitOk;
        }

        json j;
        switch (cfg.scenario) {
            case Scenario::teleport_demo: j = run_teleport_demo(cfg); break;
            case Scenario::subroutine_verify: j = run_subroutine_verify(cfg); break;
            case Scenario::small_catalyst: j = run_small_catalyst_scenario(cfg); break;
            case Scenario::ergotropy: j = run_ergotropy(cfg); break;
            default: throw std::invalid_argument("unhandled scenario");
        }
        write_text(cfg.output_path, j.dump(2) + "\n");
        return kExitOk;
    } catch (const dimension_limit_error& e) {
        std::cerr << json{{"error", "dimension-limit"}, {"message", e.what()}}.dump() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "runtime"}, {"message", e.what()}}.dump() << "\n";
        return kExitUsage;
    }
}

} // namespace qcat::cli
