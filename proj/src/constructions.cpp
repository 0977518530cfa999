#include "gpc/constructions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gpc {

std::array<CMatrix, 4> pauli_matrices() {
    CMatrix s0 = CMatrix::identity(2);
    CMatrix s1(2), s2(2), s3(2);
    s1(0, 1) = s1(1, 0) = Complex(1.0, 0.0);
    s2(0, 1) = Complex(0.0, -1.0);
    s2(1, 0) = Complex(0.0, 1.0);
    s3(0, 0) = Complex(1.0, 0.0);
    s3(1, 1) = Complex(-1.0, 0.0);
    return {s0, s1, s2, s3};
}

CMatrix weyl(int n, int a, int b) {
    if (n < 1) throw std::invalid_argument("weyl: n must be positive");
    const int am = ((a % n) + n) % n;
    const int bm = ((b % n) + n) % n;
    CMatrix w(n);
    for (int c = 0; c < n; ++c) {
        const int phase = (bm * c) % n;
        const double angle = 2.0 * std::numbers::pi * phase / n;
        w((c + am) % n, c) = std::polar(1.0, angle);
    }
    return w;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

Subalgebra masa_from_weyl_direction(int p, int c, int d) {
    std::vector<CMatrix> elems;
    elems.reserve(static_cast<std::size_t>(p));
    for (int m = 0; m < p; ++m) elems.push_back(weyl(p, (m * c) % p, (m * d) % p));
    Subalgebra s;
    s.ambient_dim = p;
    s.basis = orthonormalize(elems, 1e-8);
    s.kind = SubalgebraKind::M;
    s.label = "M(" + std::to_string(c) + "," + std::to_string(d) + ")";
    s.commutant_basis = s.basis;  // MASAs are self-commutant
    return s;
}

void require_mub_prime(int p) {
    if (!is_prime(p)) throw std::invalid_argument("mub construction: p = " + std::to_string(p) + " is not prime");
    if (p > 13) throw std::invalid_argument("mub construction: p > 13 unsupported");
}

}  // namespace

Decomposition mub_masa_decomposition(int p) {
    require_mub_prime(p);
    Decomposition dec;
    dec.n = p;
    dec.name = "mub-p" + std::to_string(p);
    dec.parts.push_back(masa_from_weyl_direction(p, 0, 1));
    for (int d = 0; d < p; ++d) dec.parts.push_back(masa_from_weyl_direction(p, 1, d));
    refresh_spanning_flags(dec);
    return dec;
}

std::vector<CMatrix> mub_bases(int p) {
    require_mub_prime(p);
    std::vector<std::pair<int, int>> directions;
    directions.emplace_back(0, 1);
    for (int d = 0; d < p; ++d) directions.emplace_back(1, d);

    std::vector<CMatrix> bases;
    bases.reserve(directions.size());
    for (const auto& [c, d] : directions) {
        CMatrix w = weyl(p, c, d);
        // Normalize the phase so the generator has order exactly p; its
        // spectrum is then {1, w, ..., w^{p-1}} with simple eigenvalues.
        CMatrix wp = CMatrix::identity(p);
        for (int m = 0; m < p; ++m) wp = wp * w;
        const Complex gamma = wp(0, 0);
        if ((wp - CMatrix::identity(p) * gamma).max_norm() > 1e-8)
            throw std::runtime_error("mub_bases: W^p is not scalar");
        const Complex root = std::pow(gamma, 1.0 / static_cast<double>(p));
        w *= Complex(1.0, 0.0) / root;

        std::vector<CMatrix> powers;
        powers.push_back(CMatrix::identity(p));
        for (int m = 1; m < p; ++m) powers.push_back(powers.back() * w);

        CMatrix basis(p);
        for (int k = 0; k < p; ++k) {
            CMatrix proj(p);
            for (int m = 0; m < p; ++m) {
                const double angle = -2.0 * std::numbers::pi * ((k * m) % p) / p;
                proj += powers[static_cast<std::size_t>(m)] * std::polar(1.0 / p, angle);
            }
            if (std::abs(proj.trace() - Complex(1.0, 0.0)) > 1e-8)
                throw std::runtime_error("mub_bases: spectral projection is not rank one");
            // proj = |v><v|; recover v from its largest column.
            int best_col = 0;
            double best = -1.0;
            for (int j = 0; j < p; ++j) {
                double nrm = 0.0;
                for (int i = 0; i < p; ++i) nrm += std::norm(proj(i, j));
                if (nrm > best) {
                    best = nrm;
                    best_col = j;
                }
            }
            const double nrm = std::sqrt(best);
            if (nrm < 1e-8) throw std::runtime_error("mub_bases: degenerate projection column");
            for (int i = 0; i < p; ++i) basis(i, k) = proj(i, best_col) / nrm;
        }
        bases.push_back(std::move(basis));
    }
    return bases;
}

Decomposition qubit_pauli_decomposition() {
    const auto sigma = pauli_matrices();
    Decomposition dec;
    dec.n = 2;
    dec.name = "qubit-pauli";
    for (int i = 1; i <= 3; ++i) {
        Subalgebra s;
        s.ambient_dim = 2;
        s.basis = orthonormalize({sigma[0], sigma[static_cast<std::size_t>(i)]}, 1e-8);
        s.kind = SubalgebraKind::M;
        s.label = "A" + std::to_string(i);
        s.commutant_basis = s.basis;
        dec.parts.push_back(std::move(s));
    }
    refresh_spanning_flags(dec);
    return dec;
}

Decomposition m4_example2_decomposition() {
    const auto sigma = pauli_matrices();
    auto pp = [&](int a, int b) { return kron(sigma[static_cast<std::size_t>(a)], sigma[static_cast<std::size_t>(b)]); };

    // Pauli-triplet generator tables for the four F-subalgebras and their
    // commutants; entries are (a, b) labels of sigma_a x sigma_b.
    static constexpr int kGen[4][3][2] = {
        {{0, 1}, {0, 2}, {0, 3}},
        {{1, 0}, {2, 1}, {3, 1}},
        {{2, 0}, {3, 2}, {1, 2}},
        {{3, 0}, {1, 3}, {2, 3}},
    };
    static constexpr int kCommutant[4][3][2] = {
        {{1, 0}, {2, 0}, {3, 0}},
        {{0, 1}, {1, 2}, {1, 3}},
        {{2, 1}, {0, 2}, {2, 3}},
        {{3, 1}, {3, 2}, {0, 3}},
    };

    Decomposition dec;
    dec.n = 4;
    dec.name = "m4-example2";
    const CMatrix id4 = CMatrix::identity(4);
    for (int j = 0; j < 4; ++j) {
        Subalgebra s;
        s.ambient_dim = 4;
        s.basis = orthonormalize(
            {id4, pp(kGen[j][0][0], kGen[j][0][1]), pp(kGen[j][1][0], kGen[j][1][1]),
             pp(kGen[j][2][0], kGen[j][2][1])},
            1e-8);
        s.kind = SubalgebraKind::F;
        s.label = "A" + std::to_string(j + 1);
        s.commutant_basis = orthonormalize(
            {id4, pp(kCommutant[j][0][0], kCommutant[j][0][1]), pp(kCommutant[j][1][0], kCommutant[j][1][1]),
             pp(kCommutant[j][2][0], kCommutant[j][2][1])},
            1e-8);
        dec.parts.push_back(std::move(s));
    }
    Subalgebra a5;
    a5.ambient_dim = 4;
    a5.basis = orthonormalize({id4, pp(1, 1), pp(2, 2), pp(3, 3)}, 1e-8);
    a5.kind = SubalgebraKind::M;
    a5.label = "A5";
    a5.commutant_basis = a5.basis;
    dec.parts.push_back(std::move(a5));
    refresh_spanning_flags(dec);
    return dec;
}

Decomposition build_decomposition(const std::string& name) {
    if (name == "qubit-pauli") return qubit_pauli_decomposition();
    if (name == "m4-example2") return m4_example2_decomposition();
    const std::string prefix = "mub-p";
    if (name.rfind(prefix, 0) == 0) {
        const std::string digits = name.substr(prefix.size());
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("build_decomposition: bad mub name '" + name + "'");
        return mub_masa_decomposition(std::stoi(digits));
    }
    throw std::invalid_argument("build_decomposition: unknown name '" + name + "'");
}

namespace {

bool union_spans(const Decomposition& d, bool use_commutants) {
    const int n2 = d.n * d.n;
    long long count = 1;
    std::vector<CMatrix> all;
    for (const Subalgebra& part : d.parts) {
        const std::vector<CMatrix>& b = use_commutants ? part.commutant_basis : part.basis;
        if (b.empty()) return false;
        count += static_cast<long long>(b.size()) - 1;
        for (const CMatrix& m : b) all.push_back(m);
    }
    if (count != n2) return false;
    return gram_rank(all) == n2;
}

}  // namespace

void refresh_spanning_flags(Decomposition& d) {
    d.spanning = union_spans(d, false);
    d.commutant_spanning = union_spans(d, true);
}

bool DecompositionReport::all_passed() const {
    for (const ValidationCheck& c : checks)
        if (!c.passed) return false;
    return true;
}

DecompositionReport validate_decomposition(const Decomposition& d) {
    DecompositionReport report;
    const int n = d.n;
    const CMatrix unit_first = CMatrix::identity(n) * (1.0 / std::sqrt(static_cast<double>(n)));

    auto add_check = [&](const std::string& name, double violation, double tol) {
        report.checks.push_back({name, violation <= tol, violation, tol});
    };

    double unit_viol = 0.0;
    double ortho_viol = 0.0;
    auto scan_basis = [&](const std::vector<CMatrix>& b) {
        if (b.empty()) {
            unit_viol = std::max(unit_viol, 1.0);
            return;
        }
        unit_viol = std::max(unit_viol, (b.front() - unit_first).max_norm());
        for (std::size_t s = 0; s < b.size(); ++s)
            for (std::size_t t = s; t < b.size(); ++t) {
                const Complex ip = hs_inner(b[s], b[t]);
                const Complex expected = (s == t) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
                ortho_viol = std::max(ortho_viol, std::abs(ip - expected));
            }
    };
    for (const Subalgebra& part : d.parts) {
        scan_basis(part.basis);
        if (part.has_commutant_basis()) scan_basis(part.commutant_basis);
    }
    add_check("unit-first-normalization", unit_viol, 1e-12);
    add_check("basis-orthonormality", ortho_viol, 1e-10);

    double parts_viol = 0.0;
    double comm_viol = 0.0;
    for (std::size_t i = 0; i < d.parts.size(); ++i)
        for (std::size_t j = i + 1; j < d.parts.size(); ++j) {
            parts_viol = std::max(parts_viol, is_complementary(d.parts[i], d.parts[j]).max_violation);
            if (d.parts[i].has_commutant_basis() && d.parts[j].has_commutant_basis()) {
                Subalgebra ci = d.parts[i];
                ci.basis = d.parts[i].commutant_basis;
                Subalgebra cj = d.parts[j];
                cj.basis = d.parts[j].commutant_basis;
                comm_viol = std::max(comm_viol, is_complementary(ci, cj).max_violation);
            }
        }
    add_check("parts-pairwise-complementary", parts_viol, 1e-10);
    add_check("commutants-pairwise-complementary", comm_viol, 1e-10);

    Decomposition recomputed = d;
    refresh_spanning_flags(recomputed);
    add_check("spanning-flag", recomputed.spanning == d.spanning ? 0.0 : 1.0, 0.0);
    add_check("commutant-spanning-flag",
              recomputed.commutant_spanning == d.commutant_spanning ? 0.0 : 1.0, 0.0);

    // Kernel residual: the stored commutant basis must span the numerically
    // computed commutant.
    double match_viol = 0.0;
    for (const Subalgebra& part : d.parts) {
        if (!part.has_commutant_basis()) {
            match_viol = std::max(match_viol, 1.0);
            continue;
        }
        const Subalgebra numeric = commutant(part);
        match_viol = std::max(match_viol, span_distance(numeric.basis, part.commutant_basis));
    }
    add_check("commutant-span-match", match_viol, 1e-9);

    return report;
}

}  // namespace gpc
