// advopt.hpp — entropy-constrained lower bound on the regularized
// entanglement fraction and the catalytic-advantage map over the qutrit
// Schmidt simplex. All reported advantages are lower bounds.

#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "qcat/qstate.hpp"

namespace qcat {

// Unique root of h(x) = x log 2 in (1/2, 1), h the binary entropy;
// bisection to 1e-12.
double solve_binary_entropy_eq();

struct Lemma1Result {
    double f_cat_lb = 0.0;     // max (sum sqrt(lam'))^2 / d  s.t.  S(lam') <= S(lam)
    SchmidtSpectrum lam_opt;   // the optimizer, descending
};

// Two-stage solver: entropy-matched uniform-tail candidate + coarse ordered-
// simplex grid, then pairwise-transfer local ascent with golden-section line
// searches on the feasible segments. lam' = lam is always a candidate, so
// the bound never falls below pure_ent_fraction(lam, d).
Lemma1Result lemma1_bound(const SchmidtSpectrum& lam, std::size_t d);

struct AdvantagePoint {
    std::array<double, 3> lam{}; // descending grid point
    double f_std = 0.0;
    double f_cat_lb = 0.0;
    double F_std = 0.0;
    double F_cat_lb = 0.0;
    double eta = 0.0; // (F_cat_lb - F_std) / F_std
};

// Grid over the descending-ordered qutrit simplex at the given step;
// deterministic ordering by grid index, points independent.
std::vector<AdvantagePoint> advantage_map(double resolution, std::size_t d_r = 3);

// CSV with header lambda1,lambda2,lambda3,f_std,f_cat_lb,F_std,F_cat_lb,eta.
void write_advantage_csv(std::ostream& os, const std::vector<AdvantagePoint>& points);

} // namespace qcat
