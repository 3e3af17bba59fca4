#pragma once

#include <complex>
#include <vector>

#include "vatoms/errors.hpp"

namespace vatoms {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Everything in this project is small
/// (dimension <= 81), so storage is a flat vector and all algorithms favor
/// accuracy and simplicity over asymptotic speed.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static CMatrix identity(int n) {
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool isSquare() const { return rows_ == cols_; }

    Complex& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }
    std::vector<Complex>& data() { return data_; }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    Complex trace() const;
    double frobeniusNorm() const;
    double maxAbs() const;

    /// max_{i,j} |a_ij - conj(a_ji)|
    double hermiticityResidual() const;
    bool isHermitian(double tol) const { return hermiticityResidual() <= tol * (1.0 + maxAbs()); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> data_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex s, const CMatrix& a);
CMatrix operator*(double s, const CMatrix& a);

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic complex Jacobi
/// rotations; stops once the off-diagonal Frobenius mass drops below
/// 1e-14 * ||A||_F^2. Throws NonSquareError / NotHermitianError (residual
/// checked against tol, scale-relative).
std::vector<double> hermitian_eigenvalues(const CMatrix& a, double tol = 1e-10);

/// Singular values, descending. Computed as sqrt of the eigenvalues of the
/// smaller Gram matrix, with negative rounding residue clamped to zero.
std::vector<double> singular_values(const CMatrix& a);

/// Sum of singular values.
double trace_norm(const CMatrix& a);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Determinant via LU with partial pivoting.
Complex determinant(const CMatrix& a);

/// Determinants of the top-left k x k blocks for k = 1..upTo. Intended for
/// Hermitian input, where each minor is real; the imaginary rounding residue
/// is discarded.
std::vector<double> leading_principal_minors(const CMatrix& a, int upTo);

}  // namespace vatoms
