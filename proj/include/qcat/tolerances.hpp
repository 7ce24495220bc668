// tolerances.hpp — the single configuration record for numerical tolerances
// and the global dimension cap. Defaults follow the per-operation contracts.

#pragma once

#include <cstddef>

namespace qcat {

struct Tolerances {
    double hermiticity     = 1e-10;  // max |A - A^dag| entrywise
    double trace_one       = 1e-10;  // |tr(rho) - 1|
    double psd_floor       = -1e-10; // eigenvalues below this are a validity error
    double state_norm      = 1e-12;  // pure-state normalization
    double unitarity       = 1e-12;  // |U U^dag - 1| entrywise
    double kraus_complete  = 1e-10;  // |sum E^dag E - 1| entrywise
    double majorization    = 1e-12;  // slack on partial-sum dominance
    double spectrum_sum    = 1e-10;  // |sum lambda - 1|
    double bound_slack     = 1e-8;   // additive slack in the 3-epsilon check
    double entropy_match   = 1e-8;   // |S(tau) - S(rho)| for the Gibbs bisection
    double optimizer       = 1e-8;   // local-ascent convergence in advopt
    std::size_t dim_cap    = 4096;   // hard cap on any total Hilbert-space dimension
};

// Process-wide record; the CLI applies overrides at startup, before any
// computation runs. Not synchronized for concurrent mutation.
inline Tolerances& tolerances() {
    static Tolerances t;
    return t;
}

} // namespace qcat
