#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gpc/constructions.hpp"
#include "gpc/rng.hpp"
#include "gpc/subalgebra.hpp"
#include "test_helpers.hpp"

using namespace gpc;
using gpc::test::max_diff;

namespace {

Subalgebra sigma_masa(int which) {
    const auto sigma = pauli_matrices();
    return from_generators(2, {sigma[static_cast<std::size_t>(which)]}, SubalgebraKind::M,
                           "sigma" + std::to_string(which));
}

Subalgebra full_matrix_algebra(int n) {
    std::vector<CMatrix> gens = {weyl(n, 1, 0), weyl(n, 0, 1)};
    return from_generators(n, gens, SubalgebraKind::F, "M" + std::to_string(n));
}

}  // namespace

TEST_CASE("orthonormalize drops dependent elements and normalizes") {
    const int n = 3;
    const CMatrix id = CMatrix::identity(n);
    const auto one = orthonormalize({id, id * 2.0}, 1e-8);
    REQUIRE(one.size() == 1);
    CHECK(max_diff(one[0], id * (1.0 / std::sqrt(3.0))) < 1e-15);

    const auto sigma = pauli_matrices();
    const auto two = orthonormalize({sigma[1], sigma[1] + sigma[3]}, 1e-8);
    REQUIRE(two.size() == 2);
    CHECK(std::abs(hs_inner(two[0], two[1])) < 1e-15);
    CHECK(hs_norm(two[1]) == doctest::Approx(1.0).epsilon(1e-14));
    // span{sigma_1, sigma_3} preserved
    CHECK(span_distance(two, {sigma[1], sigma[3]}) < 1e-12);

    CHECK_THROWS_AS(orthonormalize({}, 1e-8), std::invalid_argument);
}

TEST_CASE("orthonormalize leaves the sigma tensor basis unchanged") {
    const auto sigma = pauli_matrices();
    std::vector<CMatrix> elems;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            elems.push_back(kron(sigma[static_cast<std::size_t>(a)], sigma[static_cast<std::size_t>(b)]) * 0.5);
    // already orthonormal: pairwise inner products are exactly delta
    for (std::size_t s = 0; s < elems.size(); ++s)
        for (std::size_t t = 0; t < elems.size(); ++t) {
            const Complex expected = (s == t) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            CHECK(std::abs(hs_inner(elems[s], elems[t]) - expected) == 0.0);
        }
    const auto out = orthonormalize(elems, 1e-8);
    REQUIRE(out.size() == 16);
    for (std::size_t s = 0; s < out.size(); ++s) CHECK(max_diff(out[s], elems[s]) == 0.0);
}

TEST_CASE("from_generators builds the expected algebras") {
    const auto sigma = pauli_matrices();

    const Subalgebra diag = sigma_masa(3);
    CHECK(diag.dim() == 2);
    CHECK(max_diff(diag.basis[0], CMatrix::identity(2) * (1.0 / std::sqrt(2.0))) == 0.0);

    const Subalgebra factor = from_generators(
        4, {kron(sigma[0], sigma[1]), kron(sigma[0], sigma[2]), kron(sigma[0], sigma[3])},
        SubalgebraKind::F, "A1");
    CHECK(factor.dim() == 4);

    const Subalgebra masa5 = from_generators(
        4, {kron(sigma[1], sigma[1]), kron(sigma[2], sigma[2]), kron(sigma[3], sigma[3])},
        SubalgebraKind::M, "A5");
    CHECK(masa5.dim() == 4);

    // declared kind must match what the generators produce
    CHECK_THROWS_AS(from_generators(2, {sigma[1], sigma[3]}, SubalgebraKind::M, "bad"),
                    std::invalid_argument);
}

TEST_CASE("conditional_expectation is the HS projection") {
    const Subalgebra diag = sigma_masa(3);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const CMatrix a = random_matrix(2, seed);
        const CMatrix e = conditional_expectation(diag, a);
        CHECK(std::abs(e(0, 1)) < 1e-15);
        CHECK(std::abs(e(1, 0)) < 1e-15);
        CHECK(std::abs(e(0, 0) - a(0, 0)) < 1e-15);
        CHECK(std::abs(e(1, 1) - a(1, 1)) < 1e-15);
    }

    const auto sigma = pauli_matrices();
    CHECK(conditional_expectation(diag, sigma[1]).max_norm() < 1e-15);

    const Subalgebra full = full_matrix_algebra(3);
    CHECK(full.dim() == 9);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const CMatrix a = random_matrix(3, seed);
        CHECK(max_diff(conditional_expectation(full, a), a) < 1e-12);
    }

    CHECK_THROWS_AS(conditional_expectation(diag, CMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("cond_exp_via_commutant agrees with the projection form") {
    Subalgebra diag = sigma_masa(3);
    diag.commutant_basis = diag.basis;
    const auto sigma = pauli_matrices();
    CHECK(cond_exp_via_commutant(diag, sigma[1]).max_norm() < 1e-15);

    // A_5 is its own commutant; sigma_1 x sigma_1 is a fixed point.
    const Decomposition m4 = m4_example2_decomposition();
    const Subalgebra& a5 = m4.parts[4];
    const CMatrix s11 = kron(sigma[1], sigma[1]);
    CHECK(max_diff(cond_exp_via_commutant(a5, s11), s11) < 1e-12);

    // M_2 x I_2 inside M_4: the two formulas agree on random input.
    Subalgebra factor = from_generators(4, {kron(sigma[1], sigma[0]), kron(sigma[3], sigma[0])},
                                        SubalgebraKind::F, "M2xI2");
    factor.commutant_basis = commutant(factor).basis;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const CMatrix a = random_matrix(4, seed);
        CHECK(max_diff(cond_exp_via_commutant(factor, a), conditional_expectation(factor, a)) < 1e-10);
    }

    Subalgebra no_comm = sigma_masa(1);
    CHECK_THROWS_AS(cond_exp_via_commutant(no_comm, sigma[1]), std::invalid_argument);
}

TEST_CASE("f_map on the three printed families") {
    const int n = 3;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const CMatrix x = random_matrix(n, seed);

        // algebra CI
        const CMatrix trivial = f_map({CMatrix::identity(n) * (1.0 / std::sqrt(3.0))}, x);
        CHECK(max_diff(trivial, x * (1.0 / 3.0)) < 1e-14);

        // all matrix units: F(X) = (Tr X) I
        std::vector<CMatrix> units;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) units.push_back(matrix_unit(n, i, j));
        CHECK(max_diff(f_map(units, x), CMatrix::identity(n) * x.trace()) < 1e-13);
    }

    // {e_11, e_22} in M_2: diagonal part
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const CMatrix x = random_matrix(2, seed);
        const CMatrix fx = f_map({matrix_unit(2, 1, 1), matrix_unit(2, 2, 2)}, x);
        CHECK(std::abs(fx(0, 0) - x(0, 0)) < 1e-15);
        CHECK(std::abs(fx(1, 1) - x(1, 1)) < 1e-15);
        CHECK(std::abs(fx(0, 1)) < 1e-15);
    }
}

TEST_CASE("commutant: MASAs, the full algebra, and the m4 table") {
    const Subalgebra diag = sigma_masa(3);
    const Subalgebra diag_comm = commutant(diag);
    CHECK(diag_comm.dim() == 2);
    CHECK(span_distance(diag_comm.basis, diag.basis) < 1e-12);

    const Subalgebra full = full_matrix_algebra(2);
    const Subalgebra center = commutant(full);
    CHECK(center.dim() == 1);
    CHECK(max_diff(center.basis[0] * std::sqrt(2.0), CMatrix::identity(2)) < 1e-12);

    const auto sigma = pauli_matrices();
    const Decomposition m4 = m4_example2_decomposition();
    const Subalgebra a1_comm = commutant(m4.parts[0]);
    const std::vector<CMatrix> table = {CMatrix::identity(4), kron(sigma[1], sigma[0]),
                                        kron(sigma[2], sigma[0]), kron(sigma[3], sigma[0])};
    CHECK(a1_comm.dim() == 4);
    CHECK(span_distance(a1_comm.basis, table) < 1e-12);
}

TEST_CASE("double commutant recovers the original span") {
    const auto sigma = pauli_matrices();
    std::vector<Subalgebra> cases = {sigma_masa(1), sigma_masa(2),
                                     from_generators(4, {kron(sigma[1], sigma[0]), kron(sigma[3], sigma[0])},
                                                     SubalgebraKind::F, "M2xI2")};
    for (const Subalgebra& s : cases) {
        const Subalgebra cc = commutant(commutant(s));
        CHECK(cc.dim() == s.dim());
        CHECK(span_distance(cc.basis, s.basis) < 1e-9);
    }
}

TEST_CASE("is_complementary") {
    const Subalgebra m1 = sigma_masa(1);
    const Subalgebra m3 = sigma_masa(3);
    const auto good = is_complementary(m1, m3);
    CHECK(good.complementary);
    CHECK(good.max_violation < 1e-14);

    const auto self = is_complementary(m3, m3);
    CHECK_FALSE(self.complementary);
    CHECK(self.max_violation == doctest::Approx(1.0).epsilon(1e-12));

    const Decomposition m4 = m4_example2_decomposition();
    const auto pair = is_complementary(m4.parts[0], m4.parts[4]);
    CHECK(pair.complementary);

    CHECK_THROWS_AS(is_complementary(m1, m4.parts[0]), std::invalid_argument);
}

TEST_CASE("product_span_dim") {
    Subalgebra trivial;
    trivial.ambient_dim = 2;
    trivial.basis = {CMatrix::identity(2) * (1.0 / std::sqrt(2.0))};
    trivial.kind = SubalgebraKind::General;
    CHECK(product_span_dim(trivial, trivial) == 1);

    CHECK(product_span_dim(sigma_masa(3), sigma_masa(1)) == 4);

    const Decomposition m4 = m4_example2_decomposition();
    Subalgebra a1_comm = m4.parts[0];
    a1_comm.basis = m4.parts[0].commutant_basis;
    CHECK(product_span_dim(m4.parts[0], a1_comm) == 16);
}

TEST_CASE("conditional expectation is idempotent and trace preserving") {
    std::vector<Subalgebra> algebras;
    for (const Subalgebra& p : qubit_pauli_decomposition().parts) algebras.push_back(p);
    for (const Subalgebra& p : m4_example2_decomposition().parts) algebras.push_back(p);
    for (const Subalgebra& p : mub_masa_decomposition(3).parts) algebras.push_back(p);

    for (const Subalgebra& s : algebras) {
        for (std::uint64_t t = 0; t < 20; ++t) {
            const CMatrix a = random_matrix(s.ambient_dim, 1000 + t);
            const CMatrix e = conditional_expectation(s, a);
            CHECK(max_diff(conditional_expectation(s, e), e) < 1e-10);
            CHECK(std::abs(e.trace() - a.trace()) < 1e-10);
        }
        // unital
        CHECK(max_diff(conditional_expectation(s, CMatrix::identity(s.ambient_dim)),
                       CMatrix::identity(s.ambient_dim)) < 1e-12);
    }
}

TEST_CASE("bimodule property on basis elements") {
    const Decomposition m4 = m4_example2_decomposition();
    const Subalgebra& s = m4.parts[1];
    for (std::uint64_t t = 0; t < 5; ++t) {
        const CMatrix a = random_matrix(4, 2000 + t);
        for (const CMatrix& b : s.basis)
            for (const CMatrix& c : s.basis)
                CHECK(max_diff(conditional_expectation(s, b * a * c),
                               b * conditional_expectation(s, a) * c) < 1e-10);
    }
}

TEST_CASE("complementary commutants iff products span (both directions)") {
    // positive instances: all pairs of the m4 example and mub-p3; the diagonal
    // (i == j) pairs supply the negative direction.
    for (const Decomposition& d : {m4_example2_decomposition(), mub_masa_decomposition(3)}) {
        const int n2 = d.n * d.n;
        for (std::size_t i = 0; i < d.parts.size(); ++i)
            for (std::size_t j = 0; j < d.parts.size(); ++j) {
                Subalgebra ci = d.parts[i];
                ci.basis = d.parts[i].commutant_basis;
                Subalgebra cj = d.parts[j];
                cj.basis = d.parts[j].commutant_basis;
                const bool commutants_complementary = is_complementary(ci, cj).complementary;
                const bool products_span = product_span_dim(d.parts[i], d.parts[j]) == n2;
                CHECK(commutants_complementary == products_span);
                if (i == j) CHECK_FALSE(products_span);
            }
    }
}

TEST_CASE("complementary F/M pairs in M_4 have complementary commutants") {
    const Decomposition m4 = m4_example2_decomposition();
    for (std::size_t i = 0; i < m4.parts.size(); ++i)
        for (std::size_t j = i + 1; j < m4.parts.size(); ++j) {
            REQUIRE(is_complementary(m4.parts[i], m4.parts[j]).complementary);
            const Subalgebra ci = commutant(m4.parts[i]);
            const Subalgebra cj = commutant(m4.parts[j]);
            CHECK(is_complementary(ci, cj).complementary);
        }
}
