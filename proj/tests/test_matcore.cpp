#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gpc/matrix.hpp"
#include "gpc/constructions.hpp"
#include "gpc/rng.hpp"
#include "test_helpers.hpp"

using namespace gpc;
using gpc::test::diag;
using gpc::test::max_diff;

TEST_CASE("matrix_unit places a single one") {
    CHECK(max_diff(matrix_unit(2, 1, 1), diag({1.0, 0.0})) == 0.0);

    CMatrix upper(2);
    upper(0, 1) = Complex(1.0, 0.0);
    CHECK(max_diff(matrix_unit(2, 1, 2), upper) == 0.0);

    CMatrix sum(3);
    for (int i = 1; i <= 3; ++i) sum += matrix_unit(3, i, i);
    CHECK(max_diff(sum, CMatrix::identity(3)) == 0.0);

    CHECK_THROWS_AS(matrix_unit(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(matrix_unit(2, 1, 3), std::invalid_argument);
}

TEST_CASE("hs_inner on Pauli matrices") {
    const auto sigma = pauli_matrices();
    CHECK(hs_inner(sigma[1], sigma[1]) == Complex(2.0, 0.0));
    CHECK(hs_inner(sigma[1], sigma[3]) == Complex(0.0, 0.0));
    const double inv = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(hs_inner(sigma[0] * inv, sigma[3] * inv)) == 0.0);

    CHECK_THROWS_AS(hs_inner(sigma[1], CMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("hs_inner is a positive-definite inner product") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const CMatrix a = random_matrix(4, seed);
        const CMatrix b = random_matrix(4, seed + 100);
        const Complex ab = hs_inner(a, b);
        const Complex ba = hs_inner(b, a);
        CHECK(std::abs(ab - std::conj(ba)) < 1e-12);
        const Complex aa = hs_inner(a, a);
        CHECK(std::abs(aa.imag()) < 1e-12);
        CHECK(aa.real() > 0.0);
        CHECK(std::abs(aa.real() - hs_norm(a) * hs_norm(a)) < 1e-12 * aa.real());
    }
}

TEST_CASE("kron matches the printed examples") {
    const auto sigma = pauli_matrices();
    const CMatrix a = kron(sigma[0], sigma[1]);
    CHECK(a(0, 1) == Complex(1.0, 0.0));
    CHECK(a(1, 0) == Complex(1.0, 0.0));
    CHECK(a(2, 3) == Complex(1.0, 0.0));
    CHECK(a(3, 2) == Complex(1.0, 0.0));
    CHECK(a(0, 3) == Complex(0.0, 0.0));

    CHECK(max_diff(kron(sigma[3], sigma[0]), diag({1.0, 1.0, -1.0, -1.0})) == 0.0);
}

TEST_CASE("kron algebraic identities on random matrices") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const CMatrix a = random_matrix(2, seed);
        const CMatrix b = random_matrix(2, seed + 10);
        const CMatrix c = random_matrix(2, seed + 20);
        const CMatrix d = random_matrix(2, seed + 30);

        CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-12);
        CHECK(max_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
        CHECK(max_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
    }
}

TEST_CASE("partial_trace_first") {
    const auto sigma = pauli_matrices();
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const CMatrix a = random_matrix(2, seed);
        const CMatrix b = random_matrix(2, seed + 7);
        CHECK(max_diff(partial_trace_first(kron(a, b), 2, 2), b * a.trace()) < 1e-12);

        const CMatrix x = random_matrix(4, seed + 14);
        CHECK(std::abs(partial_trace_first(x, 2, 2).trace() - x.trace()) < 1e-12);
        // linearity
        const CMatrix y = random_matrix(4, seed + 21);
        CHECK(max_diff(partial_trace_first(x + y, 2, 2),
                       partial_trace_first(x, 2, 2) + partial_trace_first(y, 2, 2)) < 1e-12);
    }
    CHECK(max_diff(partial_trace_first(CMatrix::identity(4), 2, 2), CMatrix::identity(2) * 2.0) == 0.0);
    CHECK_THROWS_AS(partial_trace_first(CMatrix::identity(6), 4, 2), std::invalid_argument);
}

TEST_CASE("hermitian_eigenvalues on known spectra") {
    const std::vector<double> d = hermitian_eigenvalues(diag({3.0, 1.0, 2.0}));
    CHECK(d.size() == 3);
    CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(d[2] == doctest::Approx(3.0).epsilon(1e-14));

    const auto sigma = pauli_matrices();
    const std::vector<double> s = hermitian_eigenvalues(sigma[1]);
    CHECK(s[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(s[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eigenvalues of the qubit Choi matrix at (1,1,-1)") {
    // Entries (1 + lambda_3)/2 = 0, (1 - lambda_3)/2 = 1, (lambda_1 + lambda_2)/2 = 1.
    CMatrix x(4);
    x(0, 3) = x(3, 0) = Complex(1.0, 0.0);
    x(1, 1) = x(2, 2) = Complex(1.0, 0.0);
    const std::vector<double> eig = hermitian_eigenvalues(x);
    CHECK(eig.front() == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eigenvalues rejects non-Hermitian input") {
    CMatrix x(2);
    x(0, 1) = Complex(1.0, 0.0);
    CHECK_THROWS_AS(hermitian_eigenvalues(x), std::invalid_argument);
}

TEST_CASE("eigen residuals, trace consistency, unitary invariance") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const int n = 3 + static_cast<int>(seed % 4);
        const CMatrix h = random_hermitian(n, seed);
        const EigenSystem sys = hermitian_eigensystem(h);

        double tr = 0.0;
        for (double v : sys.values) tr += v;
        CHECK(std::abs(tr - h.trace().real()) < 1e-9 * n * std::max(1.0, h.max_norm()));

        // residual ||Hv - lambda v||
        for (int k = 0; k < n; ++k) {
            double res = 0.0;
            for (int r = 0; r < n; ++r) {
                Complex hv(0.0, 0.0);
                for (int c = 0; c < n; ++c) hv += h(r, c) * sys.vectors(c, k);
                res += std::norm(hv - sys.values[static_cast<std::size_t>(k)] * sys.vectors(r, k));
            }
            CHECK(std::sqrt(res) < 1e-8 * std::max(1.0, h.frobenius_norm()));
        }

        const CMatrix u = random_unitary(n, seed + 50);
        const std::vector<double> rotated = hermitian_eigenvalues(u * h * u.adjoint());
        for (int k = 0; k < n; ++k)
            CHECK(std::abs(rotated[static_cast<std::size_t>(k)] - sys.values[static_cast<std::size_t>(k)]) < 1e-8);
    }
}
