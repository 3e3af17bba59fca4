#include "vatoms/states.hpp"

#include <cmath>

namespace vatoms {

DensityMatrix psi0() {
    DensityMatrix rho;
    for (int k : {1, 5, 9})
        for (int l : {1, 5, 9}) rho.setEntry(k, l, 1.0 / 3.0);
    return rho;
}

namespace {

DensityMatrix uniformDiagonal(std::initializer_list<int> levels) {
    DensityMatrix rho;
    for (int k : levels) rho.setEntry(k, k, 1.0 / 3.0);
    return rho;
}

}  // namespace

DensityMatrix p_plus() { return uniformDiagonal({2, 6, 7}); }
DensityMatrix p_minus() { return uniformDiagonal({4, 8, 3}); }

DensityMatrix horodecki_alpha_unchecked(double alpha) {
    DensityMatrix rho;
    const CMatrix mix = (2.0 / 7.0) * psi0().matrix() + (alpha / 7.0) * p_plus().matrix() +
                        ((5.0 - alpha) / 7.0) * p_minus().matrix();
    return DensityMatrix(3, 3, mix);
}

DensityMatrix horodecki_alpha(AlphaParam alpha) { return horodecki_alpha_unchecked(alpha.value); }

DensityMatrix diagonal_state(const std::array<double, 9>& p) {
    double sum = 0.0;
    for (double v : p) {
        if (v < 0.0) throw BadProbabilityVectorError("probability entries must be nonnegative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw BadProbabilityVectorError("probabilities must sum to one");
    DensityMatrix rho;
    for (int k = 1; k <= 9; ++k) rho.setEntry(k, k, p[k - 1]);
    return rho;
}

DensityMatrix basis_state(int k) {
    if (k < 1 || k > 9) throw BadProbabilityVectorError("basis level must lie in 1..9");
    DensityMatrix rho;
    rho.setEntry(k, k, 1.0);
    return rho;
}

}  // namespace vatoms
