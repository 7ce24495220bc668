// teleporter.hpp — standard noisy teleportation: generalized-Pauli POVM on
// RA, classical outcome, Bob's correction; Monte-Carlo average fidelity.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qcat/qstate.hpp"

namespace qcat {

// The d^2 generalized Paulis U_{jk} = X^j Z^k with X|i> = |i+1 mod d>,
// Z|i> = w^i |i>, w = exp(2 pi i / d). Ordered j-major.
struct PauliFrame {
    std::size_t d = 0;
    std::vector<ComplexMatrix> unitaries;

    static PauliFrame make(std::size_t d);
};

// POVM elements M_a = (1 (x) U_a) phi+_{RA} (1 (x) U_a^dag); rank-1
// projectors summing to the identity on RA.
std::vector<ComplexMatrix> teleport_povm(const PauliFrame& frame);

// One full protocol run: Alice measures RA in the frame's Bell basis,
// communicates the outcome, Bob applies the inverse rotation (U_a^T, the
// inverse of the conjugate rotation his share picked up). rho_AB is used
// as given — twirl first when the Eq.(5) relation must hold.
DensityMatrix teleport(const DensityMatrix& rho_ab, const PureState& phi_r, const PauliFrame& frame);

struct McEstimate {
    double mean = 0.0;
    double stderr_of_mean = 0.0;
    std::size_t samples = 0;
};

// Monte-Carlo Haar average of <phi| out |phi> using the twirl + POVM
// protocol (the twirl is applied here). Deterministic per seed: sample s
// draws from stream (seed, s), and the reduction order is fixed, so the
// result is identical for any thread count.
McEstimate avg_fidelity_mc(const DensityMatrix& rho_ab, std::size_t samples, std::uint64_t seed);

} // namespace qcat
