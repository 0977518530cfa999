#ifndef GPC_VERIFY_HPP
#define GPC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gpc/subalgebra.hpp"

namespace gpc {

// Independent oracles. Everything here is recomputed from first principles
// (explicit sums over matrix units), never through the code paths it checks.

struct IdentityReport {
    std::string name;
    double max_violation = 0.0;
    long long trials = 0;
    bool passed = false;
    double tolerance = 0.0;
};

/// sum_ij Tr(E_ij X E_ji Y) = (Tr X)(Tr Y), evaluated by the explicit double
/// sum. Tolerance 1e-10.
IdentityReport lemma_trace_product(const CMatrix& x, const CMatrix& y);

/// For n^2 matrices V: pairwise HS orthonormality and the identity
/// sum_i V_i^dagger A V_i = (Tr A) I on random A are equivalent; checks both
/// and that they co-occur. Tolerance 1e-10.
IdentityReport depolarizing_basis_check(const std::vector<CMatrix>& v, int trials,
                                        std::uint64_t seed = 20240101u);

/// P_k = sum_ij U_k^dagger E_ij U_k tensor E_ij for an HS-orthonormal family:
/// each P_k must be Hermitian, idempotent, and Tr(P_k P_l) = 0 for k != l.
/// Tolerance 1e-9.
IdentityReport choi_projection_check(const std::vector<CMatrix>& u);

/// Block-structure oracle for F(X) = sum U_i^dagger X U_i: with blocks
/// (n_i, m_i) in standard arrangement it must equal the direct sum of
/// (1/m_i) I_{n_i} tensor Tr_{n_i}(P_i X P_i). Tolerance 1e-10.
IdentityReport f_map_block_oracle(const Subalgebra& s, const CMatrix& x);

}  // namespace gpc

#endif
