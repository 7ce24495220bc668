#include "qcat/report_io.hpp"

namespace qcat {

using nlohmann::json;

json to_json(const DensityMatrix& rho) {
    json entries = json::array();
    for (std::size_t r = 0; r < rho.mat.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < rho.mat.cols(); ++c)
            row.push_back({rho.mat(r, c).real(), rho.mat(r, c).imag()});
        entries.push_back(std::move(row));
    }
    return json{{"dims", rho.dims}, {"entries_re_im", std::move(entries)}};
}

json to_json(const ProtocolReport& rep) {
    json j{{"catalyst_drift", rep.catalyst_drift},
           {"system_out", to_json(rep.system_out)},
           {"has_joint_data", rep.has_joint_data}};
    if (rep.has_joint_data) {
        j["joint_correlation"] = rep.joint_correlation;
        j["epsilon_iid"] = rep.epsilon_iid;
        j["bound_3eps_satisfied"] = rep.bound_3eps_satisfied;
    }
    return j;
}

json to_json(const SmallCatReport& rep) {
    return json{{"x", rep.x},
                {"singlet_fraction", rep.singlet_fraction},
                {"tele_fidelity", rep.tele_fidelity},
                {"closed_form", rep.closed_form},
                {"catalyst_drift", rep.catalyst_drift},
                {"branches", rep.branches},
                {"system_out", to_json(rep.system_out)}};
}

json to_json(const WorkReport& rep) {
    json work = json::object();
    json resid = json::object();
    for (const auto& [n, v] : rep.per_copy_work) work[std::to_string(n)] = v;
    for (const auto& [n, v] : rep.per_copy_residual_energy) resid[std::to_string(n)] = v;
    return json{{"single_copy_ergotropy", rep.single_copy},
                {"per_copy_work", std::move(work)},
                {"per_copy_residual_energy", std::move(resid)},
                {"gibbs_beta", rep.gibbs_beta},
                {"free_energy_gap", rep.free_energy_gap}};
}

json to_json(const McEstimate& est) {
    return json{{"mean", est.mean}, {"stderr", est.stderr_of_mean}, {"samples", est.samples}};
}

} // namespace qcat
