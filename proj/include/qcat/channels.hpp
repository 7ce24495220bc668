// channels.hpp — channels acting collectively on n copies of a system.
//
// Bipartite kinds model LOCC(A_1..A_n : B_1..B_n): every Kraus operator
// factorizes across the cut as (measurement on Alice's side) (x) (unitary
// on Bob's side). States are stored pair-major — factor order
// (A_1 B_1)(A_2 B_2)...(A_n B_n) — and the channel permutes to cut-major
// internally. The single-party global_unitary kind covers the unitary class
// used by the expectation-optimization module.

#pragma once

#include <cstddef>
#include <vector>

#include "qcat/complex_matrix.hpp"
#include "qcat/qstate.hpp"

namespace qcat {

enum class ChannelKind {
    identity,
    local_unitary_pair,  // single Kraus (U_A, U_B)
    one_way_instrument,  // Alice measurement operators + Bob correction unitaries
    copy_permutation,    // permutation of the n copies, applied on both sides
    global_unitary,      // one unitary on the full n-copy space (single-party class)
};

class MultiCopyChannel {
public:
    struct KrausPair {
        ComplexMatrix alice; // on dA^n
        ComplexMatrix bob;   // on dB^n
    };

    static MultiCopyChannel identity(std::size_t n, std::size_t d_a, std::size_t d_b);
    static MultiCopyChannel local_unitaries(ComplexMatrix u_a, ComplexMatrix u_b, std::size_t n,
                                            std::size_t d_a, std::size_t d_b);
    static MultiCopyChannel one_way_instrument(std::vector<KrausPair> kraus, std::size_t n,
                                               std::size_t d_a, std::size_t d_b);
    static MultiCopyChannel copy_permutation(std::vector<std::size_t> perm, std::size_t d_a,
                                             std::size_t d_b);
    static MultiCopyChannel global_unitary(ComplexMatrix u, std::size_t n, std::size_t copy_dim);

    // Random instances for the randomized suites.
    static MultiCopyChannel random_local_unitaries(std::size_t n, std::size_t d_a, std::size_t d_b,
                                                   Rng& rng);
    static MultiCopyChannel random_instrument(std::size_t n, std::size_t d_a, std::size_t d_b,
                                              std::size_t branches, Rng& rng);
    static MultiCopyChannel random_copy_permutation(std::size_t n, std::size_t d_a, std::size_t d_b,
                                                    Rng& rng);
    // Uniform pick across the bipartite kinds above.
    static MultiCopyChannel random_channel(std::size_t n, std::size_t d_a, std::size_t d_b, Rng& rng);

    ChannelKind kind() const { return kind_; }
    std::size_t copies() const { return n_; }
    std::size_t alice_dim() const { return d_a_; }
    std::size_t bob_dim() const { return d_b_; }
    std::size_t copy_dim() const { return d_a_ * d_b_; }
    std::size_t branch_count() const;
    const std::vector<KrausPair>& kraus() const { return kraus_; }

    // Applies the channel to an n-copy state with dims = [dA*dB] * n
    // (pair-major). Dimension mismatch throws std::invalid_argument.
    DensityMatrix apply(const DensityMatrix& rho) const;

    // Sum E^dag E = 1 within tolerances().kraus_complete, plus unitarity of
    // the Bob-side corrections.
    bool kraus_complete() const;

private:
    MultiCopyChannel() = default;

    ChannelKind kind_ = ChannelKind::identity;
    std::size_t n_ = 1;
    std::size_t d_a_ = 1;
    std::size_t d_b_ = 1;
    std::vector<KrausPair> kraus_;
    std::vector<std::size_t> perm_;
    ComplexMatrix global_u_;
};

} // namespace qcat
