#include "qcat/entmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcat/tolerances.hpp"

namespace qcat {

PureState max_entangled_state(std::size_t d_a, std::size_t d_b) {
    if (d_a == 0 || d_b == 0) throw std::invalid_argument("max_entangled_state: zero dimension");
    const std::size_t m = std::min(d_a, d_b);
    std::vector<cdouble> v(d_a * d_b, cdouble{0.0, 0.0});
    const double a = 1.0 / std::sqrt(static_cast<double>(m));
    for (std::size_t i = 0; i < m; ++i) v[i * d_b + i] = a;
    return PureState(std::move(v), {d_a, d_b});
}

double singlet_fraction(const DensityMatrix& rho) {
    if (rho.dims.size() != 2) throw std::invalid_argument("singlet_fraction: state must be bipartite");
    PureState phi = max_entangled_state(rho.dims[0], rho.dims[1]);
    return fidelity_pure(phi, rho);
}

double pure_ent_fraction(const SchmidtSpectrum& lam, std::size_t d) {
    if (lam.size() > d) throw std::invalid_argument("pure_ent_fraction: spectrum longer than local dimension");
    double s = 0.0;
    for (double x : lam.lambdas) s += std::sqrt(std::max(x, 0.0));
    return s * s / static_cast<double>(d);
}

double tele_fidelity(double f, std::size_t d_r) {
    if (f < -1e-12 || f > 1.0 + 1e-12) throw std::invalid_argument("tele_fidelity: f outside [0,1]");
    return (f * static_cast<double>(d_r) + 1.0) / (static_cast<double>(d_r) + 1.0);
}

double classical_threshold(std::size_t d_r) {
    if (d_r < 2) throw std::invalid_argument("classical_threshold: d_R must be >= 2");
    return 2.0 / (static_cast<double>(d_r) + 1.0);
}

DensityMatrix isotropic_twirl(const DensityMatrix& rho) {
    if (rho.dims.size() != 2) throw std::invalid_argument("isotropic_twirl: state must be bipartite");
    if (rho.dims[0] != rho.dims[1])
        throw std::invalid_argument("isotropic_twirl: local dimensions must be equal");
    const std::size_t d = rho.dims[0];
    const double f = singlet_fraction(rho);
    PureState phi = max_entangled_state(d, d);
    ComplexMatrix p = ComplexMatrix::outer(phi.vec, phi.vec);
    ComplexMatrix rest = ComplexMatrix::identity(d * d) - p;
    ComplexMatrix out = p * cdouble{f, 0.0} +
                        rest * cdouble{(1.0 - f) / static_cast<double>(d * d - 1), 0.0};
    return DensityMatrix(std::move(out), rho.dims);
}

bool majorizes(const SchmidtSpectrum& mu, const SchmidtSpectrum& lam) {
    const std::size_t n = std::max(mu.size(), lam.size());
    const double slack = tolerances().majorization;
    double sm = 0.0, sl = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sm += k < mu.size() ? mu.lambdas[k] : 0.0;
        sl += k < lam.size() ? lam.lambdas[k] : 0.0;
        if (sm < sl - slack) return false;
    }
    return true;
}

FidelityRecord make_fidelity_record(const DensityMatrix& rho, std::size_t d_r) {
    FidelityRecord r;
    r.singlet_fraction = singlet_fraction(rho);
    r.tele_fidelity = tele_fidelity(r.singlet_fraction, d_r);
    r.d_r = d_r;
    return r;
}

} // namespace qcat
