#ifndef GPC_SUBALGEBRA_HPP
#define GPC_SUBALGEBRA_HPP

#include <string>
#include <utility>
#include <vector>

#include "gpc/matrix.hpp"

namespace gpc {

enum class SubalgebraKind { F, M, General };

std::string to_string(SubalgebraKind kind);
SubalgebraKind kind_from_string(const std::string& text);

/// A unital *-subalgebra of M_n, represented by an HS-orthonormal basis whose
/// first element is I/sqrt(n). The commutant basis, when present, follows the
/// same normalization. `blocks` records a block-diagonal arrangement
/// (n_i, m_i) meaning the i-th summand is M_{n_i} tensor I_{m_i} in standard
/// coordinates; it is only set when the ambient coordinates actually are
/// block-adapted.
struct Subalgebra {
    int ambient_dim = 0;
    std::vector<CMatrix> basis;
    SubalgebraKind kind = SubalgebraKind::General;
    std::string label;
    std::vector<CMatrix> commutant_basis;           // empty = not populated
    std::vector<std::pair<int, int>> blocks;        // empty = not provided

    int dim() const { return static_cast<int>(basis.size()); }
    bool has_commutant_basis() const { return !commutant_basis.empty(); }
};

/// Gram-Schmidt under the HS inner product. Elements whose residual norm
/// after projection is below `tol` are dropped; the span is preserved up to
/// that tolerance. Throws on empty input.
std::vector<CMatrix> orthonormalize(const std::vector<CMatrix>& span_set, double tol);

/// Smallest unital *-algebra containing the generators: close {I} u gens u
/// adjoints under products until the span dimension stabilizes (at most 8
/// rounds), then orthonormalize with basis[0] = I/sqrt(n). The declared kind
/// is verified against the result.
Subalgebra from_generators(int n, const std::vector<CMatrix>& gens, SubalgebraKind kind,
                           const std::string& label);

/// Trace-preserving conditional expectation onto the subalgebra: the
/// HS-orthogonal projection sum_s basis[s] <basis[s], A>.
CMatrix conditional_expectation(const Subalgebra& s, const CMatrix& a);

/// Conditional expectation computed from the commutant basis:
/// (n / |commutant_basis|) sum_i U_i^dagger A U_i. Agrees with
/// conditional_expectation whenever all block ratios n_i/m_i coincide
/// (always the case for kinds F and M).
CMatrix cond_exp_via_commutant(const Subalgebra& s, const CMatrix& a);

/// F(X) = sum_i U_i^dagger X U_i over an HS-orthonormal family.
CMatrix f_map(const std::vector<CMatrix>& basis, const CMatrix& x);

/// Commutant computed as the null space of the stacked commutator maps
/// X -> B_s X - X B_s (rank-revealing orthogonal elimination, singular
/// threshold 1e-10), orthonormalized with first element I/sqrt(n).
Subalgebra commutant(const Subalgebra& s);

struct ComplementarityResult {
    bool complementary = false;
    double max_violation = 0.0;
};

/// True iff the traceless parts are HS-orthogonal: |<B,C> - Tr(B^dagger)Tr(C)/n|
/// <= tol over the full bases. Reports the worst offending value.
ComplementarityResult is_complementary(const Subalgebra& a, const Subalgebra& b,
                                       double tol = 1e-10);

/// Dimension of span{B_s C_t} over all basis pairs (Gram rank, eigenvalue
/// threshold 1e-9). Equals n^2 iff the products span M_n.
int product_span_dim(const Subalgebra& a, const Subalgebra& b);

/// Rank of the linear span of a family of matrices via the Gram matrix.
int gram_rank(const std::vector<CMatrix>& elems, double eigenvalue_threshold = 1e-9);

/// Largest mutual projection residual between the spans of two families
/// (0 when they span the same subspace).
double span_distance(const std::vector<CMatrix>& a, const std::vector<CMatrix>& b);

/// Pivoted completion: extend `existing` (orthonormal) by members of
/// `candidates` until `target_total` orthonormal elements are reached.
/// Returns only the appended elements.
std::vector<CMatrix> complete_orthonormal(const std::vector<CMatrix>& existing,
                                          const std::vector<CMatrix>& candidates,
                                          int target_total);

}  // namespace gpc

#endif
