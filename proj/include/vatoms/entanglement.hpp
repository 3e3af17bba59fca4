#pragma once

#include <array>
#include <string>
#include <utility>

#include "vatoms/qstate.hpp"

namespace vatoms {

/// Full per-state entanglement record. `minors` holds the leading principal
/// minors m5..m8 of the A-side reduction matrix, the ones that can change
/// sign along the evolution of the coherence-patterned states.
struct EntanglementReport {
    double negativity = 0.0;
    double realignNegativity = 0.0;
    double reductionNegativity = 0.0;
    bool isPPT = true;
    bool distillableByReduction = false;
    double factorF = 0.0;
    double factorG = 0.0;
    double factorH = 0.0;
    std::array<double, 4> minors{};
};

/// N(rho) = (||rho^PT||_tr - 1)/2, the magnitude of the negative part of the
/// partially transposed spectrum. Clamped to zero below 1e-12.
double negativity(const DensityMatrix& rho);

/// N_R(rho) = max(0, (||R(rho)||_tr - 1)/2); positive values certify
/// entanglement and can detect PPT-entangled states.
double realignment_negativity(const DensityMatrix& rho);

/// (rho_A (x) I - rho, I (x) rho_B - rho). A negative eigenvalue of either side
/// certifies distillability.
std::pair<CMatrix, CMatrix> reduction_matrices(const DensityMatrix& rho);

/// max(0, -lambda_min) over the eigenvalues of both reduction matrices.
double reduction_negativity(const DensityMatrix& rho);

/// F = rho11*rho55*rho99 - rho55*|rho37|^2 - rho11*|rho86|^2 (1-based
/// composite indices). Along the patterned evolutions this is the only factor
/// of det(rho^PT) that changes sign; its zero marks the PPT -> NPPT time.
double pt_factor_F(const DensityMatrix& rho);

/// G = r33*r77 - |rho37|^2 and H = r66*r88 - |rho68|^2 with the reduction
/// matrix diagonal r_kk; H's sign change marks the onset of certified
/// distillability.
std::pair<double, double> reduction_factors_GH(const DensityMatrix& rho);

/// Sum of |entries| outside the pattern preserved by the vanishing-cross-
/// coupling dynamics: the diagonal plus the (1,5), (1,9), (5,9), (3,7), (6,8)
/// coherences and their conjugates.
double off_pattern_mass(const DensityMatrix& rho);

/// Determinant of rho^PT and minors m5..m8 of the A-side reduction matrix,
/// each computed two independent ways: direct LU elimination and the
/// closed block-product forms valid on the preserved zero pattern.
struct PtFactorization {
    double detDirect = 0.0;
    double detFactored = 0.0;
    std::array<double, 4> factors{};         // the four block determinants of rho^PT
    std::array<double, 4> minorsDirect{};    // m5..m8 by direct elimination
    std::array<double, 4> minorsFactored{};  // m5..m8 by the product forms
    double offPatternMass = 0.0;
    double detDiscrepancy() const { return std::abs(detDirect - detFactored); }
};

/// Throws PatternViolationError when the off-pattern mass exceeds 1e-4, where
/// the product forms stop being identities.
PtFactorization pt_minors_and_det(const DensityMatrix& rho);

EntanglementReport analyze(const DensityMatrix& rho);

/// One CSV row "t,N,NR,Nred,isPPT,distillable,F,G,H,m5,m6,m7,m8".
std::string report_csv_row(double t, const EntanglementReport& rep);

}  // namespace vatoms
