#ifndef GPC_MATRIX_HPP
#define GPC_MATRIX_HPP

#include <complex>
#include <vector>

namespace gpc {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage. Values are immutable in
/// spirit: every operation returns a fresh matrix, nothing mutates shared
/// state, so instances can be used freely across threads.
class CMatrix {
  public:
    CMatrix() = default;
    explicit CMatrix(int dim);
    CMatrix(int dim, std::vector<Complex> entries);

    static CMatrix identity(int dim);

    int dim() const { return dim_; }
    bool empty() const { return dim_ == 0; }

    Complex& operator()(int row, int col) { return entries_[static_cast<std::size_t>(row) * dim_ + col]; }
    const Complex& operator()(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * dim_ + col];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    Complex trace() const;

    double max_norm() const;        // max |entry|
    double frobenius_norm() const;  // = Hilbert-Schmidt norm
    double hermiticity_defect() const;  // max-norm of A - A^dagger
    bool all_finite() const;

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator-=(const CMatrix& other);
    CMatrix& operator*=(Complex scalar);

  private:
    int dim_ = 0;
    std::vector<Complex> entries_;
};

CMatrix operator+(CMatrix lhs, const CMatrix& rhs);
CMatrix operator-(CMatrix lhs, const CMatrix& rhs);
CMatrix operator*(CMatrix lhs, Complex scalar);
CMatrix operator*(Complex scalar, CMatrix rhs);
CMatrix operator*(CMatrix lhs, double scalar);
CMatrix operator*(double scalar, CMatrix rhs);
CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);  // matrix product

/// Matrix unit E_ij (1-based indices, matching the usual E_11 .. E_nn notation):
/// 1 at row i, column j, zero elsewhere.
CMatrix matrix_unit(int n, int i, int j);

/// Hilbert-Schmidt inner product Tr(A^dagger B). Conjugate-linear in the first
/// argument.
Complex hs_inner(const CMatrix& a, const CMatrix& b);
double hs_norm(const CMatrix& a);

/// Kronecker product; (A ⊗ B)(C ⊗ D) = AC ⊗ BD, dim = dimA * dimB.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Trace over the first tensor factor: X in M_{n1*n2} viewed as n1 x n1 blocks
/// of size n2, returns the sum of the diagonal blocks.
CMatrix partial_trace_first(const CMatrix& x, int n1, int n2);

struct EigenSystem {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // column k is the eigenvector for values[k]
};

/// Eigenvalues of a Hermitian matrix in nondecreasing order (cyclic Jacobi).
/// Throws if the input fails the Hermiticity tolerance or dim > 256.
std::vector<double> hermitian_eigenvalues(const CMatrix& h);
EigenSystem hermitian_eigensystem(const CMatrix& h);

}  // namespace gpc

#endif
