#include "gpc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gpc {

CMatrix::CMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("CMatrix: dim must be positive");
    entries_.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
}

CMatrix::CMatrix(int dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim < 1) throw std::invalid_argument("CMatrix: dim must be positive");
    if (entries_.size() != static_cast<std::size_t>(dim) * dim)
        throw std::invalid_argument("CMatrix: entry count does not match dim*dim");
    if (!all_finite()) throw std::invalid_argument("CMatrix: non-finite entry");
}

CMatrix CMatrix::identity(int dim) {
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = Complex(1.0, 0.0);
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Complex CMatrix::trace() const {
    Complex t(0.0, 0.0);
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::max_norm() const {
    double m = 0.0;
    for (const Complex& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

double CMatrix::hermiticity_defect() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

bool CMatrix::all_finite() const {
    for (const Complex& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

namespace {
void require_same_dim(const CMatrix& a, const CMatrix& b, const char* who) {
    if (a.dim() != b.dim()) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}
}  // namespace

CMatrix& CMatrix::operator+=(const CMatrix& other) {
    require_same_dim(*this, other, "CMatrix::operator+=");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
    require_same_dim(*this, other, "CMatrix::operator-=");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(Complex scalar) {
    for (Complex& z : entries_) z *= scalar;
    return *this;
}

CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
CMatrix operator*(CMatrix lhs, Complex scalar) { return lhs *= scalar; }
CMatrix operator*(Complex scalar, CMatrix rhs) { return rhs *= scalar; }
CMatrix operator*(CMatrix lhs, double scalar) { return lhs *= Complex(scalar, 0.0); }
CMatrix operator*(double scalar, CMatrix rhs) { return rhs *= Complex(scalar, 0.0); }

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
    require_same_dim(lhs, rhs, "CMatrix::operator*");
    const int n = lhs.dim();
    CMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

CMatrix matrix_unit(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("matrix_unit: index out of range");
    CMatrix m(n);
    m(i - 1, j - 1) = Complex(1.0, 0.0);
    return m;
}

Complex hs_inner(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b, "hs_inner");
    Complex s(0.0, 0.0);
    const std::vector<Complex>& ae = a.entries();
    const std::vector<Complex>& be = b.entries();
    for (std::size_t k = 0; k < ae.size(); ++k) s += std::conj(ae[k]) * be[k];
    return s;
}

double hs_norm(const CMatrix& a) { return a.frobenius_norm(); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const int na = a.dim(), nb = b.dim();
    CMatrix out(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0, 0.0)) continue;
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return out;
}

CMatrix partial_trace_first(const CMatrix& x, int n1, int n2) {
    if (n1 < 1 || n2 < 1 || x.dim() != n1 * n2)
        throw std::invalid_argument("partial_trace_first: dim is not n1*n2");
    CMatrix out(n2);
    for (int s = 0; s < n1; ++s)
        for (int k = 0; k < n2; ++k)
            for (int l = 0; l < n2; ++l) out(k, l) += x(s * n2 + k, s * n2 + l);
    return out;
}

namespace {

// Cyclic Jacobi with unitary plane rotations. Adequate at the dimensions this
// library works with (Choi matrices up to 169x169; hard cap 256).
EigenSystem jacobi_eigensystem(const CMatrix& h, bool want_vectors) {
    const int n = h.dim();
    if (n < 1) throw std::invalid_argument("hermitian_eigenvalues: empty matrix");
    if (n > 256) throw std::invalid_argument("hermitian_eigenvalues: dim > 256 unsupported");
    const double scale = std::max(1.0, h.max_norm());
    if (h.hermiticity_defect() > 1e-10 * scale)
        throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian within tolerance");

    // Symmetrize so rounding drift in the input cannot bias the iteration.
    CMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

    CMatrix v = want_vectors ? CMatrix::identity(n) : CMatrix(1);

    const double fnorm = std::max(1.0, a.frobenius_norm());
    const double target = 1e-13 * fnorm;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) s += 2.0 * std::norm(a(p, q));
        return std::sqrt(s);
    };

    double off = off_norm();
    for (int sweep = 0; sweep < 100 && off > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-300) {
                    a(p, q) = a(q, p) = Complex(0.0, 0.0);
                    continue;
                }
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const Complex phase = apq / mag;
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex sp = s * phase;  // s * e^{i phi}

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - std::conj(sp) * akq;
                    a(k, q) = sp * akp + c * akq;
                    a(p, k) = std::conj(a(k, p));
                    a(q, k) = std::conj(a(k, q));
                }
                a(p, p) = Complex(app - t * mag, 0.0);
                a(q, q) = Complex(aqq + t * mag, 0.0);
                a(p, q) = a(q, p) = Complex(0.0, 0.0);

                if (want_vectors) {
                    for (int k = 0; k < n; ++k) {
                        const Complex vkp = v(k, p), vkq = v(k, q);
                        v(k, p) = c * vkp - std::conj(sp) * vkq;
                        v(k, q) = sp * vkp + c * vkq;
                    }
                }
            }
        }
        off = off_norm();
    }
    if (off > 1e-9 * fnorm)
        throw std::runtime_error("hermitian_eigenvalues: Jacobi iteration failed to converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenSystem sys;
    sys.values.resize(n);
    for (int k = 0; k < n; ++k) sys.values[k] = a(order[k], order[k]).real();
    if (want_vectors) {
        sys.vectors = CMatrix(n);
        for (int k = 0; k < n; ++k)
            for (int r = 0; r < n; ++r) sys.vectors(r, k) = v(r, order[k]);
    }
    return sys;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
    return jacobi_eigensystem(h, false).values;
}

EigenSystem hermitian_eigensystem(const CMatrix& h) { return jacobi_eigensystem(h, true); }

}  // namespace gpc
