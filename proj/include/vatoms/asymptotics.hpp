#pragma once

#include "vatoms/qstate.hpp"
#include "vatoms/rational.hpp"

namespace vatoms {

/// Parameters of the strong-correlation-regime stationary state. The state is
/// supported on the two antisymmetric single-excitation combinations and the
/// double ground level: x, y are the antisymmetric populations, z the
/// coherence between them, w, v their coherences with the ground level, and
/// t = 1 - 2x - 2y the ground population.
struct AsymptoticParams {
    double x = 0.0;
    double y = 0.0;
    Complex z{};
    Complex w{};
    Complex v{};
    double t = 1.0;
};

/// Projects an initial state onto its small-separation asymptote. For states
/// with z = w = v = 0 the projection provably matches the long-time limit of
/// the dynamics; outside that class the caller should check the stationarity
/// residual instead of assuming it.
AsymptoticParams asymptotic_params(const DensityMatrix& rho0);

/// Assembles the 9x9 stationary state from its parameters. Throws NotAState
/// when the tuple is inconsistent (non-PSD result).
DensityMatrix build_asymptotic_state(const AsymptoticParams& p);

/// Closed-form negativity (1/2)[sqrt(4(x^2+y^2)+t^2) - t] of the diagonal
/// class (z = w = v = 0), t = 1 - 2x - 2y. Requires x, y >= 0, x + y <= 1/2.
double asymptotic_negativity_diagonal(double x, double y);

/// Closed form of rho_A (x) I - rho_as for the diagonal class: diagonal
/// (x, x, 0, y, y, 0, a, b, c) with a = 1-2x-y, b = 1-x-2y, c = x+y, plus the
/// (3,7) and (6,8) cross entries x and y. Carries a negative principal minor
/// (hence a negative eigenvalue) whenever x > 0 or y > 0.
CMatrix reduction_matrix_closed_form(double x, double y);

/// Exact-arithmetic asymptote of the bound-entangled family for rational
/// alpha: every matrix entry is a fraction, so the parameter map evaluates
/// without rounding. coherencesVanish reports z = w = v = 0 exactly.
struct RationalAsymptote {
    Rational x, y, t;
    bool coherencesVanish = false;
};
RationalAsymptote horodecki_asymptote_exact(const Rational& alpha);

}  // namespace vatoms
