// gencat.hpp — catalytic expectation-value optimization beyond LOCC:
// ergotropy, collective work extraction, the generic catalytic protocol and
// entropy-matched Gibbs states.

#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "qcat/catengine.hpp"
#include "qcat/channels.hpp"
#include "qcat/qstate.hpp"

namespace qcat {

struct Observable {
    ComplexMatrix mat;
    std::string role;

    Observable(ComplexMatrix m, std::string r = "");
};

// tr[O rho] (real part; O Hermitian).
double expectation(const DensityMatrix& rho, const Observable& o);

// max_U ( tr[H rho] - tr[H U rho U^dag] ) = tr[H rho] - sum_i w_i(desc) e_i(asc):
// the passive rearrangement achieves the unitary minimum.
double ergotropy(const DensityMatrix& rho, const Observable& h);

// Per-copy work extractable by a joint unitary on n copies:
// tr[H rho] - (1/n) sum_i w_i(desc) E_i(asc) over the n-copy spectra.
// n-fold spectra are combinatorial, but the dimension cap still applies.
double collective_ergotropy(const DensityMatrix& rho, const Observable& h, std::size_t n);

// The joint unitary achieving that minimum: sorted-eigenbasis permutation of
// rho^(x)n onto the ascending eigenbasis of the total-energy operator.
MultiCopyChannel optimal_extraction_unitary(const DensityMatrix& rho, const Observable& h,
                                            std::size_t n);

struct CatalyticValue {
    double value = 0.0;          // tr[O system_out]
    double catalyst_drift = 0.0;
    DensityMatrix system_out;
};

// Builds the generic catalyst for (rho, E, n), runs the conditional
// protocol and evaluates O on the averaged output.
CatalyticValue catalytic_expectation(const DensityMatrix& rho, const Observable& o,
                                     const MultiCopyChannel& channel, std::size_t n);

struct GibbsResult {
    DensityMatrix tau;
    double beta = 0.0;
    bool boundary = false; // maximally mixed input (beta = 0 exactly)
};

// Gibbs state of H with S(tau) = S(rho), by monotone bisection on beta >= 0.
// Pure input throws boundary_error (beta -> +infinity).
GibbsResult entropy_matched_gibbs(const DensityMatrix& rho, const Observable& h);

struct WorkReport {
    double single_copy = 0.0;                    // ergotropy
    std::map<std::size_t, double> per_copy_work; // n -> work per copy (non-decreasing)
    std::map<std::size_t, double> per_copy_residual_energy; // n -> tr[H rho] - work (non-increasing)
    double gibbs_beta = 0.0;
    double free_energy_gap = 0.0; // tr[H rho] - tr[H tau] at the entropy-matched beta
};

WorkReport make_work_report(const DensityMatrix& rho, const Observable& h, std::size_t n_max = 3);

} // namespace qcat
