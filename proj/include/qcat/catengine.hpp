// catengine.hpp — the catalytic subroutine: block-diagonal catalyst over a
// classical register M, literal execution of the three protocol steps
// (conditional channel, cyclic M relabel, conditional register swap),
// exact-restoration check and the correlation bound.
//
// The M register is classical, so the joint state is exactly block-diagonal
// and is stored as one density matrix per M value — the full
// (dA dB)^n * n joint is never materialized in one dense block.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qcat/channels.hpp"
#include "qcat/qstate.hpp"

namespace qcat {

// The catalyst of the subroutine: block i (1-indexed) holds
// rho^(x)(i-1) (x) sigma^(n-i) over the n-1 copy registers, uniform weight
// 1/n on M, where sigma^n = E(rho^(x)n) and sigma^(n-i) traces out the
// first i copies.
struct BlockCatalystState {
    std::size_t n = 0;
    Dims copy_dims;                    // factorization of one copy, e.g. {dA, dB}
    DensityMatrix rho;                 // the single-copy resource
    std::vector<DensityMatrix> blocks; // n blocks over n-1 copies ([D]*(n-1))
    DensityMatrix sigma_n;             // E(rho^(x)n), dims [D]*n

    // Marginal consistency: block i's trailing factor group equals
    // tr_{1..i}(sigma_n); returns the worst entrywise deviation.
    double marginal_consistency_defect() const;
};

BlockCatalystState build_catalyst(const DensityMatrix& rho, const MultiCopyChannel& channel,
                                  std::size_t n);

struct ProtocolReport {
    DensityMatrix system_out;     // (1/n) sum_i tr_{/i} E(rho^(x)n), by the literal steps
    double catalyst_drift = 0.0;  // trace distance of the catalyst before/after
    double joint_correlation = 0.0; // trace distance of joint to system_out (x) omega
    double epsilon_iid = 0.0;     // || sigma^n - system_out^(x)n ||_1 (unnormalized)
    bool bound_3eps_satisfied = false;
    bool has_joint_data = false;  // false when retention was disabled
};

struct SubroutineOptions {
    // The per-block joint state is needed for the correlation bound; disable
    // for runs where only the effective channel and restoration matter.
    bool retain_joint = true;
};

// Executes steps 1-3 literally and discards the catalyst; the closed form
// (1/n) sum_i tr_{/i} E(rho^(x)n) is the test oracle, never the
// implementation path. The catalyst must have been built from the same
// (rho, channel, n).
ProtocolReport run_subroutine(const DensityMatrix& rho, const BlockCatalystState& catalyst,
                              const MultiCopyChannel& channel,
                              const SubroutineOptions& opts = {});

// True iff ||joint - system_out (x) omega||_1 <= 3 ||sigma^n - sigma^(x)n||_1
// + bound_slack, both unnormalized. Requires joint data in the report.
bool correlation_check(const ProtocolReport& report);

} // namespace qcat
