#include "gpc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gpc/rng.hpp"

namespace gpc {

IdentityReport lemma_trace_product(const CMatrix& x, const CMatrix& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("lemma_trace_product: dimension mismatch");
    const int n = x.dim();
    Complex lhs(0.0, 0.0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const CMatrix term = matrix_unit(n, i, j) * x * matrix_unit(n, j, i) * y;
            lhs += term.trace();
        }
    const Complex rhs = x.trace() * y.trace();
    IdentityReport report;
    report.name = "lemma-trace-product";
    report.max_violation = std::abs(lhs - rhs);
    report.trials = 1;
    report.tolerance = 1e-10;
    report.passed = report.max_violation <= report.tolerance;
    return report;
}

IdentityReport depolarizing_basis_check(const std::vector<CMatrix>& v, int trials,
                                        std::uint64_t seed) {
    if (v.empty()) throw std::invalid_argument("depolarizing_basis_check: empty family");
    const int n = v.front().dim();
    if (static_cast<int>(v.size()) != n * n)
        throw std::invalid_argument("depolarizing_basis_check: need exactly n^2 matrices");

    const double tol = 1e-10;
    double ortho_viol = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i; j < v.size(); ++j) {
            const Complex ip = hs_inner(v[i], v[j]);
            const Complex expected = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            ortho_viol = std::max(ortho_viol, std::abs(ip - expected));
        }

    double identity_viol = 0.0;
    for (int t = 0; t < trials; ++t) {
        const CMatrix a = random_matrix(n, rng_key(seed, static_cast<std::uint64_t>(t), 0));
        CMatrix lhs(n);
        for (const CMatrix& vi : v) lhs += vi.adjoint() * a * vi;
        const CMatrix rhs = CMatrix::identity(n) * a.trace();
        identity_viol = std::max(identity_viol, (lhs - rhs).max_norm());
    }

    IdentityReport report;
    report.name = "depolarizing-basis";
    report.trials = trials;
    report.tolerance = tol;
    report.max_violation = std::max(ortho_viol, identity_viol);
    report.passed = report.max_violation <= tol;
    // The lemma says the two conditions are equivalent; observing one side
    // hold while the other fails would falsify it.
    if ((ortho_viol <= tol) != (identity_viol <= tol))
        throw std::runtime_error("depolarizing_basis_check: conditions did not co-occur");
    return report;
}

IdentityReport choi_projection_check(const std::vector<CMatrix>& u) {
    if (u.empty()) throw std::invalid_argument("choi_projection_check: empty family");
    const int n = u.front().dim();
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i; j < u.size(); ++j) {
            const Complex ip = hs_inner(u[i], u[j]);
            const Complex expected = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            if (std::abs(ip - expected) > 1e-10)
                throw std::invalid_argument("choi_projection_check: family not HS-orthonormal");
        }

    std::vector<CMatrix> projections;
    projections.reserve(u.size());
    for (const CMatrix& uk : u) {
        CMatrix p(n * n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                p += kron(uk.adjoint() * matrix_unit(n, i, j) * uk, matrix_unit(n, i, j));
        projections.push_back(std::move(p));
    }

    double viol = 0.0;
    for (std::size_t k = 0; k < projections.size(); ++k) {
        const CMatrix& p = projections[k];
        viol = std::max(viol, p.hermiticity_defect());
        viol = std::max(viol, (p * p - p).max_norm());
        for (std::size_t l = k + 1; l < projections.size(); ++l)
            viol = std::max(viol, std::abs((p * projections[l]).trace()));
    }

    IdentityReport report;
    report.name = "choi-projections";
    report.trials = static_cast<long long>(u.size());
    report.tolerance = 1e-9;
    report.max_violation = viol;
    report.passed = viol <= report.tolerance;
    return report;
}

IdentityReport f_map_block_oracle(const Subalgebra& s, const CMatrix& x) {
    if (s.blocks.empty()) throw std::invalid_argument("f_map_block_oracle: blocks not provided");
    const int n = s.ambient_dim;
    if (x.dim() != n) throw std::invalid_argument("f_map_block_oracle: dimension mismatch");
    int total = 0;
    int basis_count = 0;
    for (const auto& [ni, mi] : s.blocks) {
        total += ni * mi;
        basis_count += ni * ni;
    }
    if (total != n || basis_count != s.dim())
        throw std::invalid_argument("f_map_block_oracle: block data inconsistent with subalgebra");

    // Block formula, assembled with matrix-unit embeddings: per block,
    // (1/m_i) I_{n_i} tensor Tr over the first factor of the block of X.
    CMatrix expected(n);
    int offset = 0;
    for (const auto& [ni, mi] : s.blocks) {
        const int bs = ni * mi;
        CMatrix sub(bs);
        for (int r = 0; r < bs; ++r)
            for (int c = 0; c < bs; ++c) sub(r, c) = x(offset + r, offset + c);
        const CMatrix reduced = partial_trace_first(sub, ni, mi);
        const CMatrix embedded = kron(CMatrix::identity(ni), reduced) * (1.0 / mi);
        for (int r = 0; r < bs; ++r)
            for (int c = 0; c < bs; ++c) expected(offset + r, offset + c) = embedded(r, c);
        offset += bs;
    }

    const CMatrix actual = f_map(s.basis, x);
    IdentityReport report;
    report.name = "f-map-block-formula";
    report.trials = 1;
    report.tolerance = 1e-10;
    report.max_violation = (actual - expected).max_norm();
    report.passed = report.max_violation <= report.tolerance;
    return report;
}

}  // namespace gpc
