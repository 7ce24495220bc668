// smallcat.hpp — the qutrit small-catalyst protocol: scenario states,
// Nielsen one-way-LOCC synthesis for psi^(x)2 -> phi-tilde, the conditional
// protocol with the classical-register flip, and the x-optimization.

#pragma once

#include <cstddef>

#include "qcat/channels.hpp"
#include "qcat/qstate.hpp"

namespace qcat {

struct SmallCatScenario {
    double x = 0.0;
    PureState psi;          // singlet embedded in qutrit (x) qutrit, dims {3,3}
    DensityMatrix gamma;    // x phi+ + (1-x)|00><00|, dims {3,3}
    PureState phi_tilde;    // dims {3,3,3,3} pair-major (A1 B1 A2 B2)
    // catalyst omega = 1/2 gamma (x) |1><1|_M + 1/2 psi (x) |2><2|_M
    DensityMatrix omega_block1; // gamma
    DensityMatrix omega_block2; // psi as a density matrix
    // spectra in construction order (x/3, x/3, x/3, 1-x, 0...) — descending
    // only for x >= 3/4, which is exactly the feasibility window
    SchmidtSpectrum source_spectrum; // of psi^(x)2 across A1A2 : B1B2
    SchmidtSpectrum target_spectrum; // of phi_tilde, construction order
};

// Builds and cross-checks the Appendix-style states for x in [0, 1].
SmallCatScenario make_small_cat_scenario(double x);

// One-way LOCC instrument (Alice measurements, Bob unitaries) mapping
// source_state to target_state exactly. Precondition: majorizes(target,
// source) on the given spectra; violations throw infeasibility_error.
// States are bipartite cut-major (dims {dA, dB}).
MultiCopyChannel nielsen_locc(const SchmidtSpectrum& source, const SchmidtSpectrum& target,
                              const PureState& source_state, const PureState& target_state);

struct SmallCatReport {
    double x = 0.0;
    double singlet_fraction = 0.0;  // of the post-protocol system state
    double tele_fidelity = 0.0;     // at d_R = 3
    double closed_form = 0.0;       // (1 + sqrt(x(1-x)/3) + x)/3
    double catalyst_drift = 0.0;
    std::size_t branches = 0;       // instrument size (<= 9)
    DensityMatrix system_out;       // 1/2 (gamma + gamma')
};

// Executes the conditional protocol literally: measure M, apply the
// instrument on M = 2, relabel registers and M, trace. Feasible for
// x in [3/4, 1] (the majorization window).
SmallCatReport run_small_catalyst(double x);

struct XOptimum {
    double x_star = 0.0;
    double f_star = 0.0;
    double tele_fidelity_star = 0.0;
};

// Maximize (1 + sqrt(x(1-x)/3) + x)/3 over [3/4, 1]: closed-form
// stationarity (root of 16x^2 - 16x + 1) against the interval ends.
XOptimum optimize_x();

} // namespace qcat
