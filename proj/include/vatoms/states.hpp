#pragma once

#include <array>

#include "vatoms/qstate.hpp"

namespace vatoms {

/// Mixing parameter of the bound-entangled two-qutrit family; the family is
/// PPT yet entangled exactly on the window 3 < alpha <= 4.
struct AlphaParam {
    explicit AlphaParam(double a) : value(a) {
        if (!(a > 3.0) || !(a <= 4.0)) throw AlphaOutOfRangeError("alpha must lie in (3, 4]");
    }
    double value;
};

/// Projector onto the maximally entangled vector (1/sqrt 3) sum_j |j_A j_B>.
DensityMatrix psi0();

/// Uniform mixtures of the two complementary product-basis triples:
/// p_plus over composite indices {2, 6, 7}, p_minus over {4, 8, 3}.
DensityMatrix p_plus();
DensityMatrix p_minus();

/// (2/7)|Psi0><Psi0| + (alpha/7) P_+ + ((5-alpha)/7) P_-.
DensityMatrix horodecki_alpha(AlphaParam alpha);

/// Same construction without the window check, for exploratory scans; the
/// bound-entanglement guarantees only hold on (3, 4].
DensityMatrix horodecki_alpha_unchecked(double alpha);

/// Diagonal state from a probability vector over the nine composite levels.
DensityMatrix diagonal_state(const std::array<double, 9>& p);

/// Projector onto composite basis level k (1-based).
DensityMatrix basis_state(int k);

}  // namespace vatoms
