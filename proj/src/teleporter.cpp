#include "qcat/teleporter.hpp"

#include <cmath>
#include <stdexcept>

#include "qcat/entmetrics.hpp"
#include "qcat/kernels.hpp"
#include "qcat/tolerances.hpp"

namespace qcat {

PauliFrame PauliFrame::make(std::size_t d) {
    if (d < 2) throw std::invalid_argument("PauliFrame: d must be >= 2");
    PauliFrame f;
    f.d = d;
    ComplexMatrix x(d, d), z(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        x((i + 1) % d, i) = 1.0;
        const double a = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(d);
        z(i, i) = cdouble{std::cos(a), std::sin(a)};
    }
    ComplexMatrix xj = ComplexMatrix::identity(d);
    for (std::size_t j = 0; j < d; ++j) {
        ComplexMatrix u = xj;
        for (std::size_t k = 0; k < d; ++k) {
            f.unitaries.push_back(u);
            u = u * z;
        }
        xj = xj * x;
    }
    return f;
}

std::vector<ComplexMatrix> teleport_povm(const PauliFrame& frame) {
    const std::size_t d = frame.d;
    PureState phi = max_entangled_state(d, d);
    std::vector<ComplexMatrix> povm;
    povm.reserve(d * d);
    for (const auto& u : frame.unitaries) {
        // |m_a> = (1 (x) U_a) |phi+>
        std::vector<cdouble> m(d * d, cdouble{0.0, 0.0});
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t a2 = 0; a2 < d; ++a2) {
                cdouble acc = 0.0;
                for (std::size_t k = 0; k < d; ++k) acc += u(a2, k) * phi.vec[r * d + k];
                m[r * d + a2] = acc;
            }
        povm.push_back(ComplexMatrix::outer(m, m));
    }
    return povm;
}

DensityMatrix teleport(const DensityMatrix& rho_ab, const PureState& phi_r, const PauliFrame& frame) {
    const std::size_t d = frame.d;
    if (rho_ab.dims != Dims{d, d})
        throw std::invalid_argument("teleport: rho_AB must be two factors of the frame dimension");
    if (phi_r.dim() != d) throw std::invalid_argument("teleport: input dimension must equal the frame's");

    PureState phi_plus = max_entangled_state(d, d);
    ComplexMatrix out(d, d);
    for (const auto& u : frame.unitaries) {
        // |m_a> = (1 (x) U_a)|phi+> on RA, g[a] = <m_a | (phi_R (x) |a>_A)--
        // i.e. the A-side amplitude row of the rank-1 projection.
        std::vector<cdouble> m(d * d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t a2 = 0; a2 < d; ++a2) {
                cdouble acc = 0.0;
                for (std::size_t k = 0; k < d; ++k) acc += u(a2, k) * phi_plus.vec[r * d + k];
                m[r * d + a2] = acc;
            }
        // g[a] = sum_r conj(m[(r,a)]) phi_R[r]
        std::vector<cdouble> g(d, cdouble{0.0, 0.0});
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t a2 = 0; a2 < d; ++a2) g[a2] += std::conj(m[r * d + a2]) * phi_r.vec[r];
        // Bob's unnormalized branch state X[b,b'] = sum_{a,a'} g[a] rho[(a,b),(a',b')] conj(g[a'])
        ComplexMatrix x(d, d);
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t bp = 0; bp < d; ++bp) {
                cdouble acc = 0.0;
                for (std::size_t a2 = 0; a2 < d; ++a2)
                    for (std::size_t ap = 0; ap < d; ++ap)
                        acc += g[a2] * rho_ab.mat(a2 * d + b, ap * d + bp) * std::conj(g[ap]);
                x(b, bp) = acc;
            }
        // correction: the branch carries conj(U_a); U_a^T inverts it
        ComplexMatrix c = u.transpose();
        out += c * x * c.adjoint();
    }
    ComplexMatrix h = (out + out.adjoint()) * cdouble{0.5, 0.0};
    return DensityMatrix(std::move(h), {d});
}

McEstimate avg_fidelity_mc(const DensityMatrix& rho_ab, std::size_t samples, std::uint64_t seed) {
    if (samples < 100) throw std::invalid_argument("avg_fidelity_mc: need at least 100 samples");
    if (rho_ab.dims.size() != 2 || rho_ab.dims[0] != rho_ab.dims[1])
        throw std::invalid_argument("avg_fidelity_mc: state must be bipartite with equal local dims");
    const std::size_t d = rho_ab.dims[0];
    DensityMatrix twirled = isotropic_twirl(rho_ab);
    PauliFrame frame = PauliFrame::make(d);

    std::vector<double> fid(samples, 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(samples); ++s) {
        Rng rng(seed, static_cast<std::uint64_t>(s));
        PureState phi = haar_random_pure(d, rng);
        DensityMatrix out = teleport(twirled, phi, frame);
        fid[static_cast<std::size_t>(s)] = fidelity_pure(phi, out);
    }
    // serial reduction in index order: identical result for any thread count
    double mean = 0.0;
    for (double f : fid) mean += f;
    mean /= static_cast<double>(samples);
    double var = 0.0;
    for (double f : fid) var += (f - mean) * (f - mean);
    var /= static_cast<double>(samples - 1);
    return {mean, std::sqrt(var / static_cast<double>(samples)), samples};
}

} // namespace qcat
