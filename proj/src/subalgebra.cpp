#include "gpc/subalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpc {

std::string to_string(SubalgebraKind kind) {
    switch (kind) {
        case SubalgebraKind::F: return "F";
        case SubalgebraKind::M: return "M";
        case SubalgebraKind::General: return "GENERAL";
    }
    throw std::logic_error("to_string: bad SubalgebraKind");
}

SubalgebraKind kind_from_string(const std::string& text) {
    if (text == "F") return SubalgebraKind::F;
    if (text == "M") return SubalgebraKind::M;
    if (text == "GENERAL") return SubalgebraKind::General;
    throw std::invalid_argument("kind_from_string: unknown kind '" + text + "'");
}

std::vector<CMatrix> orthonormalize(const std::vector<CMatrix>& span_set, double tol) {
    if (span_set.empty()) throw std::invalid_argument("orthonormalize: empty input");
    const int n = span_set.front().dim();
    std::vector<CMatrix> out;
    for (const CMatrix& m : span_set) {
        if (m.dim() != n) throw std::invalid_argument("orthonormalize: mixed dimensions");
        CMatrix w = m;
        // Two projection passes keep the result orthonormal to ~1e-15 even
        // for badly conditioned inputs.
        for (int pass = 0; pass < 2; ++pass)
            for (const CMatrix& q : out) w -= q * hs_inner(q, w);
        const double nrm = hs_norm(w);
        if (nrm < tol) continue;
        out.push_back(w * (1.0 / nrm));
    }
    return out;
}

Subalgebra from_generators(int n, const std::vector<CMatrix>& gens, SubalgebraKind kind,
                           const std::string& label) {
    if (gens.empty()) throw std::invalid_argument("from_generators: no generators");
    for (const CMatrix& g : gens)
        if (g.dim() != n) throw std::invalid_argument("from_generators: generator dimension mismatch");

    const double drop_tol = 1e-8;
    std::vector<CMatrix> seed;
    seed.push_back(CMatrix::identity(n));
    for (const CMatrix& g : gens) seed.push_back(g);
    for (const CMatrix& g : gens) seed.push_back(g.adjoint());

    std::vector<CMatrix> basis = orthonormalize(seed, drop_tol);
    bool stable = false;
    for (int round = 0; round < 8 && !stable; ++round) {
        std::vector<CMatrix> candidates = basis;
        for (const CMatrix& a : basis)
            for (const CMatrix& b : basis) candidates.push_back(a * b);
        std::vector<CMatrix> next = orthonormalize(candidates, drop_tol);
        if (static_cast<int>(next.size()) > n * n)
            throw std::runtime_error("from_generators: closure exceeded n^2 dimensions");
        stable = next.size() == basis.size();
        basis = std::move(next);
    }
    if (!stable) throw std::runtime_error("from_generators: closure did not stabilize");

    if (kind == SubalgebraKind::M) {
        if (static_cast<int>(basis.size()) != n)
            throw std::invalid_argument("from_generators: generated algebra is not a MASA (dim != n)");
        for (std::size_t s = 0; s < basis.size(); ++s)
            for (std::size_t t = s + 1; t < basis.size(); ++t)
                if ((basis[s] * basis[t] - basis[t] * basis[s]).max_norm() > 1e-9)
                    throw std::invalid_argument("from_generators: generated algebra is not Abelian");
    } else if (kind == SubalgebraKind::F) {
        const int k = static_cast<int>(std::lround(std::sqrt(static_cast<double>(basis.size()))));
        if (k * k != static_cast<int>(basis.size()))
            throw std::invalid_argument("from_generators: F-subalgebra dimension is not a perfect square");
    }

    Subalgebra s;
    s.ambient_dim = n;
    s.basis = std::move(basis);
    s.kind = kind;
    s.label = label;
    return s;
}

CMatrix conditional_expectation(const Subalgebra& s, const CMatrix& a) {
    if (a.dim() != s.ambient_dim)
        throw std::invalid_argument("conditional_expectation: dimension mismatch");
    CMatrix out(s.ambient_dim);
    for (const CMatrix& b : s.basis) out += b * hs_inner(b, a);
    return out;
}

CMatrix cond_exp_via_commutant(const Subalgebra& s, const CMatrix& a) {
    if (!s.has_commutant_basis())
        throw std::invalid_argument("cond_exp_via_commutant: commutant basis not populated");
    if (a.dim() != s.ambient_dim)
        throw std::invalid_argument("cond_exp_via_commutant: dimension mismatch");
    CMatrix out(s.ambient_dim);
    for (const CMatrix& u : s.commutant_basis) out += u.adjoint() * a * u;
    const double scale = static_cast<double>(s.ambient_dim) / static_cast<double>(s.commutant_basis.size());
    return out * scale;
}

CMatrix f_map(const std::vector<CMatrix>& basis, const CMatrix& x) {
    if (basis.empty()) throw std::invalid_argument("f_map: empty basis");
    CMatrix out(x.dim());
    for (const CMatrix& u : basis) out += u.adjoint() * x * u;
    return out;
}

namespace {

using Vec = std::vector<Complex>;

Vec vec_of(const CMatrix& m) { return m.entries(); }

CMatrix unvec(int n, const Vec& v) { return CMatrix(n, v); }

Complex vdot(const Vec& a, const Vec& b) {
    Complex s(0.0, 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
    return s;
}

double vnorm(const Vec& a) {
    double s = 0.0;
    for (const Complex& z : a) s += std::norm(z);
    return std::sqrt(s);
}

void project_out(Vec& v, const std::vector<Vec>& q) {
    for (int pass = 0; pass < 2; ++pass)
        for (const Vec& u : q) {
            const Complex ip = vdot(u, v);
            for (std::size_t k = 0; k < v.size(); ++k) v[k] -= ip * u[k];
        }
}

// Rank-revealing orthogonal elimination: greedy pivot on the largest residual.
// Vectors whose residual falls below `threshold` are treated as dependent.
std::vector<Vec> pivoted_row_basis(std::vector<Vec> rows, double threshold) {
    std::vector<Vec> q;
    while (true) {
        double best = -1.0;
        std::size_t pick = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const double nrm = vnorm(rows[r]);
            if (nrm > best) {
                best = nrm;
                pick = r;
            }
        }
        if (pick == rows.size() || best <= threshold) break;
        Vec u = rows[pick];
        project_out(u, q);  // re-orthogonalize the pivot before normalizing
        const double nrm = vnorm(u);
        if (nrm <= threshold) {
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pick));
            continue;
        }
        for (Complex& z : u) z /= nrm;
        for (Vec& r : rows) {
            const Complex ip = vdot(u, r);
            for (std::size_t k = 0; k < r.size(); ++k) r[k] -= ip * u[k];
        }
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pick));
        q.push_back(std::move(u));
    }
    return q;
}

}  // namespace

Subalgebra commutant(const Subalgebra& s) {
    const int n = s.ambient_dim;
    const int n2 = n * n;
    const CMatrix id = CMatrix::identity(n);

    // Rows of the stacked system {X -> B_s X - X B_s}, conjugated so that the
    // kernel is the orthogonal complement of their span.
    std::vector<Vec> rows;
    rows.reserve(static_cast<std::size_t>(s.basis.size()) * n2);
    double max_row_norm = 0.0;
    for (const CMatrix& b : s.basis) {
        const CMatrix m = kron(b, id) - kron(id, b.transpose());
        for (int r = 0; r < n2; ++r) {
            Vec row(static_cast<std::size_t>(n2));
            for (int c = 0; c < n2; ++c) row[static_cast<std::size_t>(c)] = std::conj(m(r, c));
            max_row_norm = std::max(max_row_norm, vnorm(row));
            rows.push_back(std::move(row));
        }
    }

    const double threshold = 1e-10 * std::max(1.0, max_row_norm);
    const std::vector<Vec> row_space = pivoted_row_basis(std::move(rows), threshold);
    const int kernel_dim = n2 - static_cast<int>(row_space.size());
    if (kernel_dim < 1) throw std::runtime_error("commutant: empty kernel (identity lost)");

    // The identity always commutes; pin it as the first kernel element so the
    // returned basis starts with I/sqrt(n).
    std::vector<Vec> kernel;
    {
        Vec v = vec_of(id * (1.0 / std::sqrt(static_cast<double>(n))));
        project_out(v, row_space);
        const double nrm = vnorm(v);
        if (nrm < 0.5) throw std::runtime_error("commutant: identity not in kernel");
        for (Complex& z : v) z /= nrm;
        kernel.push_back(std::move(v));
    }
    while (static_cast<int>(kernel.size()) < kernel_dim) {
        double best = -1.0;
        Vec best_vec;
        for (int c = 0; c < n2; ++c) {
            Vec v(static_cast<std::size_t>(n2), Complex(0.0, 0.0));
            v[static_cast<std::size_t>(c)] = Complex(1.0, 0.0);
            project_out(v, row_space);
            project_out(v, kernel);
            const double nrm = vnorm(v);
            if (nrm > best) {
                best = nrm;
                best_vec = std::move(v);
            }
        }
        if (best < 1e-6) throw std::runtime_error("commutant: kernel completion failed");
        for (Complex& z : best_vec) z /= best;
        kernel.push_back(std::move(best_vec));
    }

    Subalgebra out;
    out.ambient_dim = n;
    out.kind = SubalgebraKind::General;
    out.label = s.label.empty() ? std::string("commutant") : s.label + "'";
    out.basis.reserve(kernel.size());
    for (const Vec& v : kernel) out.basis.push_back(unvec(n, v));
    return out;
}

ComplementarityResult is_complementary(const Subalgebra& a, const Subalgebra& b, double tol) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("is_complementary: ambient dimension mismatch");
    const double n = static_cast<double>(a.ambient_dim);
    double worst = 0.0;
    for (const CMatrix& x : a.basis) {
        const Complex tx = std::conj(x.trace());
        for (const CMatrix& y : b.basis) {
            const Complex overlap = hs_inner(x, y) - tx * y.trace() / n;
            worst = std::max(worst, std::abs(overlap));
        }
    }
    return {worst <= tol, worst};
}

int product_span_dim(const Subalgebra& a, const Subalgebra& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("product_span_dim: ambient dimension mismatch");
    std::vector<CMatrix> products;
    products.reserve(a.basis.size() * b.basis.size());
    for (const CMatrix& x : a.basis)
        for (const CMatrix& y : b.basis) products.push_back(x * y);
    return gram_rank(products);
}

int gram_rank(const std::vector<CMatrix>& elems, double eigenvalue_threshold) {
    if (elems.empty()) return 0;
    const int m = static_cast<int>(elems.size());
    CMatrix gram(m);
    for (int s = 0; s < m; ++s)
        for (int t = s; t < m; ++t) {
            const Complex ip = hs_inner(elems[static_cast<std::size_t>(s)], elems[static_cast<std::size_t>(t)]);
            gram(s, t) = ip;
            gram(t, s) = std::conj(ip);
        }
    const std::vector<double> eig = hermitian_eigenvalues(gram);
    int rank = 0;
    for (double v : eig)
        if (v > eigenvalue_threshold) ++rank;
    return rank;
}

double span_distance(const std::vector<CMatrix>& a, const std::vector<CMatrix>& b) {
    const std::vector<CMatrix> qa = orthonormalize(a, 1e-8);
    const std::vector<CMatrix> qb = orthonormalize(b, 1e-8);
    double worst = 0.0;
    auto residual = [](const CMatrix& x, const std::vector<CMatrix>& q) {
        CMatrix w = x;
        for (const CMatrix& u : q) w -= u * hs_inner(u, w);
        return hs_norm(w);
    };
    for (const CMatrix& x : qa) worst = std::max(worst, residual(x, qb));
    for (const CMatrix& x : qb) worst = std::max(worst, residual(x, qa));
    return worst;
}

std::vector<CMatrix> complete_orthonormal(const std::vector<CMatrix>& existing,
                                          const std::vector<CMatrix>& candidates,
                                          int target_total) {
    std::vector<CMatrix> appended;
    auto project = [&](CMatrix& w) {
        for (int pass = 0; pass < 2; ++pass) {
            for (const CMatrix& q : existing) w -= q * hs_inner(q, w);
            for (const CMatrix& q : appended) w -= q * hs_inner(q, w);
        }
    };
    while (static_cast<int>(existing.size() + appended.size()) < target_total) {
        double best = -1.0;
        CMatrix best_mat;
        for (const CMatrix& c : candidates) {
            CMatrix w = c;
            project(w);
            const double nrm = hs_norm(w);
            if (nrm > best) {
                best = nrm;
                best_mat = std::move(w);
            }
        }
        if (best < 1e-6)
            throw std::runtime_error("complete_orthonormal: candidates do not span the complement");
        appended.push_back(best_mat * (1.0 / best));
    }
    return appended;
}

}  // namespace gpc
