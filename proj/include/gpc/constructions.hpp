#ifndef GPC_CONSTRUCTIONS_HPP
#define GPC_CONSTRUCTIONS_HPP

#include <array>
#include <string>
#include <vector>

#include "gpc/subalgebra.hpp"

namespace gpc {

/// An ordered family of pairwise complementary subalgebras of M_n, each with
/// its commutant basis populated. `spanning` records whether the union of the
/// parts spans M_n; `commutant_spanning` whether {I/sqrt(n)} plus the
/// non-identity commutant elements do.
struct Decomposition {
    int n = 0;
    std::vector<Subalgebra> parts;
    bool spanning = false;
    bool commutant_spanning = false;
    std::string name;

    int part_count() const { return static_cast<int>(parts.size()); }
};

/// sigma_0 .. sigma_3 (identity plus the three Pauli matrices).
std::array<CMatrix, 4> pauli_matrices();

/// Weyl operator X^a Z^b: X the cyclic shift (X e_k = e_{k+1 mod n}),
/// Z = diag(1, w, ..., w^{n-1}) with w = exp(2 pi i / n). Indices are reduced
/// mod n. Tr(W(a,b)^dagger W(c,d)) = n delta_ac delta_bd.
CMatrix weyl(int n, int a, int b);

bool is_prime(int p);

/// The p+1 MASAs of M_p spanned by the Weyl direction families
/// {W(mc, md) : 0 <= m < p} for (c,d) in {(0,1)} u {(1,d) : 0 <= d < p}.
/// Pairwise complementary, spanning, each self-commutant. Requires p prime,
/// p <= 13.
Decomposition mub_masa_decomposition(int p);

/// The p+1 mutually unbiased bases of C^p, one per MASA direction; each
/// returned matrix holds one orthonormal basis in its columns. Cross-basis
/// overlaps all have modulus 1/sqrt(p).
std::vector<CMatrix> mub_bases(int p);

/// The three MASAs of M_2 generated by sigma_1, sigma_2, sigma_3.
Decomposition qubit_pauli_decomposition();

/// The five-part decomposition of M_4 = M_2 x M_2: four F-subalgebras from
/// Pauli triplets plus the MASA generated by sigma_i x sigma_i, with the
/// commutant bases taken from the companion generator table.
Decomposition m4_example2_decomposition();

/// Builder dispatch by name: "qubit-pauli", "m4-example2", "mub-p<k>".
Decomposition build_decomposition(const std::string& name);

/// Recompute the spanning flags from the parts.
void refresh_spanning_flags(Decomposition& d);

struct ValidationCheck {
    std::string name;
    bool passed = false;
    double max_violation = 0.0;
    double tolerance = 0.0;
};

struct DecompositionReport {
    std::vector<ValidationCheck> checks;
    bool all_passed() const;
};

/// Full audit of a decomposition: unit-first normalization, basis
/// orthonormality, pairwise complementarity of parts and of commutants,
/// recomputed spanning flags, and agreement of each stored commutant basis
/// with the numerically computed commutant.
DecompositionReport validate_decomposition(const Decomposition& d);

}  // namespace gpc

#endif
