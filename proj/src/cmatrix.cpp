#include "vatoms/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace vatoms {

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Complex CMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::frobeniusNorm() const {
    double s = 0.0;
    for (const Complex& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double CMatrix::maxAbs() const {
    double m = 0.0;
    for (const Complex& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double CMatrix::hermiticityResidual() const {
    if (!isSquare()) return std::numeric_limits<double>::infinity();
    double r = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return r;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    CMatrix out = a;
    for (size_t k = 0; k < out.data().size(); ++k) out.data()[k] += b.data()[k];
    return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    CMatrix out = a;
    for (size_t k = 0; k < out.data().size(); ++k) out.data()[k] -= b.data()[k];
    return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

CMatrix operator*(Complex s, const CMatrix& a) {
    CMatrix out = a;
    for (Complex& v : out.data()) v *= s;
    return out;
}

CMatrix operator*(double s, const CMatrix& a) { return Complex(s, 0.0) * a; }

namespace {

double offDiagonalMass(const CMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return s;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const CMatrix& a, double tol) {
    if (!a.isSquare()) throw NonSquareError("hermitian_eigenvalues: matrix is not square");
    if (!a.isHermitian(tol)) throw NotHermitianError("hermitian_eigenvalues: Hermiticity residual exceeds tolerance");

    const int n = a.rows();
    // Work on the exactly Hermitian part; input may carry rounding asymmetry.
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

    const double totalMass = m.frobeniusNorm() * m.frobeniusNorm();
    const double target = 1e-14 * totalMass;

    for (int sweep = 0; sweep < 60 && offDiagonalMass(m) > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = m(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const double app = m(p, p).real();
                const double aqq = m(q, q).real();

                // Phase factor reducing the 2x2 block to the real symmetric
                // case, then a classical Givens rotation zeroing the block's
                // off-diagonal. Combined unitary U (columns p,q):
                //   U = [[c, -s], [conj(x) s, conj(x) c]],  x = apq/|apq|.
                const Complex x = apq / mag;
                const double tau = (aqq - app) / (2.0 * mag);
                // Smaller-magnitude root of t^2 - 2 tau t - 1 = 0, the zeroing
                // condition for this rotation convention.
                const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const Complex u11 = c, u12 = -s;
                const Complex u21 = std::conj(x) * s, u22 = std::conj(x) * c;

                // A <- U^H A U, touching only rows/cols p and q.
                for (int k = 0; k < n; ++k) {
                    const Complex akp = m(k, p), akq = m(k, q);
                    m(k, p) = akp * u11 + akq * u21;
                    m(k, q) = akp * u12 + akq * u22;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex apk = m(p, k), aqk = m(q, k);
                    m(p, k) = std::conj(u11) * apk + std::conj(u21) * aqk;
                    m(q, k) = std::conj(u12) * apk + std::conj(u22) * aqk;
                }
            }
        }
    }

    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = m(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::vector<double> singular_values(const CMatrix& a) {
    // Gram matrix of the smaller dimension keeps the eigenproblem minimal.
    const bool tall = a.rows() >= a.cols();
    const CMatrix gram = tall ? a.adjoint() * a : a * a.adjoint();
    std::vector<double> ev = hermitian_eigenvalues(gram, 1e-8);
    std::vector<double> sv;
    sv.reserve(ev.size());
    for (auto it = ev.rbegin(); it != ev.rend(); ++it) sv.push_back(std::sqrt(std::max(0.0, *it)));
    return sv;
}

double trace_norm(const CMatrix& a) {
    double s = 0.0;
    for (double sv : singular_values(a)) s += sv;
    return s;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

namespace {

Complex luDeterminant(CMatrix m) {
    const int n = m.rows();
    Complex det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(m(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(m(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (int r = col + 1; r < n; ++r) {
            const Complex f = m(r, col) / m(col, col);
            if (f == Complex{}) continue;
            for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

}  // namespace

Complex determinant(const CMatrix& a) {
    if (!a.isSquare()) throw NonSquareError("determinant: matrix is not square");
    if (a.rows() == 0) return 1.0;
    return luDeterminant(a);
}

std::vector<double> leading_principal_minors(const CMatrix& a, int upTo) {
    if (!a.isSquare()) throw NonSquareError("leading_principal_minors: matrix is not square");
    upTo = std::min(upTo, a.rows());
    std::vector<double> minors;
    minors.reserve(upTo);
    for (int k = 1; k <= upTo; ++k) {
        CMatrix block(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) block(i, j) = a(i, j);
        minors.push_back(luDeterminant(std::move(block)).real());
    }
    return minors;
}

}  // namespace vatoms
