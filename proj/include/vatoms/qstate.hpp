#pragma once

#include <string>

#include "vatoms/cmatrix.hpp"

namespace vatoms {

enum class Subsystem { A, B };

/// Bipartite density matrix over two qutrits. The composite basis is ordered
/// |i_A j_B> with 1-based composite index k = dimB*(i-1) + j, so e.g. index 3
/// is |1_A 3_B> and index 7 is |3_A 1_B>; entry(3,7) is the coherence between
/// those two levels. Levels 1,2 are the excited states, level 3 the ground
/// state.
class DensityMatrix {
public:
    DensityMatrix() : dimA_(3), dimB_(3), mat_(9, 9) {}
    DensityMatrix(int dimA, int dimB, CMatrix mat);

    int dimA() const { return dimA_; }
    int dimB() const { return dimB_; }
    int dim() const { return dimA_ * dimB_; }

    const CMatrix& matrix() const { return mat_; }
    CMatrix& matrix() { return mat_; }

    /// 1-based composite-index access matching the basis convention above.
    Complex entry(int k, int l) const { return mat_(k - 1, l - 1); }
    void setEntry(int k, int l, Complex v) { mat_(k - 1, l - 1) = v; }

private:
    int dimA_;
    int dimB_;
    CMatrix mat_;
};

struct ValidationReport {
    double hermiticityResidual = 0.0;
    double traceDeviation = 0.0;
    double minEigenvalue = 0.0;
    bool hermitianOk = false;
    bool traceOk = false;
    bool psdOk = false;
    bool pass() const { return hermitianOk && traceOk && psdOk; }
};

/// Diagnostics against the state invariants: Hermitian within tol (scale
/// relative), trace within 1e-9 of one, minimum eigenvalue >= -1e-8.
ValidationReport validate(const DensityMatrix& rho, double tol = 1e-10);

/// Reduced state of the kept subsystem.
CMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Partial transposition; element rule for on == B is
/// (i,j|rho^PT|i',j') = (i,j'|rho|i',j). An exact entry permutation, so
/// applying it twice returns the input bit for bit.
CMatrix partial_transpose(const DensityMatrix& rho, Subsystem on = Subsystem::B);

/// Realignment R(rho)[(m,mu),(n,nu)] = rho[(m,n),(mu,nu)]: row indices pair
/// the two A-side labels, column indices the two B-side labels. Preserves the
/// Frobenius norm; separable states have trace_norm(R(rho)) <= 1.
CMatrix realign(const DensityMatrix& rho);

/// Plain-text serialization: first line "dimA dimB", then one line
/// "k l re im" (1-based composite indices) per nonzero entry.
std::string to_text(const DensityMatrix& rho);
DensityMatrix from_text(const std::string& text);

}  // namespace vatoms
