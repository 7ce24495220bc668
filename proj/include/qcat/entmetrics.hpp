// entmetrics.hpp — entanglement fraction, teleportation-fidelity relation,
// classical threshold, isotropic twirl and majorization.
//
// Every singlet fraction computed here is a certified lower bound on the
// LOCC-optimized entanglement fraction: the raw overlap, the pure-state
// closed form and explicit protocol constructions are the three routes the
// library uses; no LOCC optimization is attempted.

#pragma once

#include <cstddef>

#include "qcat/qstate.hpp"

namespace qcat {

// |phi+> = sum_i |ii>/sqrt(m) on m = min(dA, dB) levels, embedded when the
// local dimensions differ.
PureState max_entangled_state(std::size_t d_a, std::size_t d_b);

// <phi+| rho |phi+> for bipartite rho (exactly two declared factors).
double singlet_fraction(const DensityMatrix& rho);

// (sum_i sqrt(lambda_i))^2 / d — the pure-state closed form.
double pure_ent_fraction(const SchmidtSpectrum& lam, std::size_t d);

// <F> = (f d_R + 1)/(d_R + 1).
double tele_fidelity(double f, std::size_t d_r);

// Classical bound 2/(d_R + 1); requires d_R >= 2.
double classical_threshold(std::size_t d_r);

// f phi+ + (1-f)(1 - phi+)/(d^2-1); preserves the singlet fraction exactly.
// Requires equal local dimensions.
DensityMatrix isotropic_twirl(const DensityMatrix& rho);

// Partial-sum dominance of mu over lam (padded to common length, slack
// tolerances().majorization). Compares the vectors in their STORED order:
// spectra from schmidt()/descending() arrive sorted, while construction-
// order vectors keep their meaning — the small-catalyst feasibility window
// x >= 3/4 relies on exactly that.
bool majorizes(const SchmidtSpectrum& mu, const SchmidtSpectrum& lam);

struct FidelityRecord {
    double singlet_fraction = 0.0;
    double tele_fidelity = 0.0;
    std::size_t d_r = 0;
};

FidelityRecord make_fidelity_record(const DensityMatrix& rho, std::size_t d_r);

} // namespace qcat
