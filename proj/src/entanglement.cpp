#include "vatoms/entanglement.hpp"

#include <cmath>
#include <cstdio>
#include <tuple>

namespace vatoms {

namespace {

void requireQutritPair(const DensityMatrix& rho) {
    if (rho.dimA() != 3 || rho.dimB() != 3) throw InvalidStateError("expected a two-qutrit state");
}

double negativePartSum(const std::vector<double>& eigenvalues) {
    double s = 0.0;
    for (double e : eigenvalues)
        if (e < 0.0) s -= e;
    return s;
}

// Diagonal of rho_A (x) I - rho at composite level k (1-based): the diagonal
// sum over k's own A-row triple minus rho_kk.
double reductionDiagonal(const DensityMatrix& rho, int k) {
    const int base = 3 * ((k - 1) / 3);
    double g = 0.0;
    for (int j = 1; j <= 3; ++j) g += rho.entry(base + j, base + j).real();
    return g - rho.entry(k, k).real();
}

constexpr std::array<std::pair<int, int>, 5> kPatternCoherences = {
    std::pair<int, int>{1, 5}, {1, 9}, {5, 9}, {3, 7}, {6, 8}};

}  // namespace

double negativity(const DensityMatrix& rho) {
    requireQutritPair(rho);
    const double n = negativePartSum(hermitian_eigenvalues(partial_transpose(rho), 1e-8));
    return n < 1e-12 ? 0.0 : n;
}

double realignment_negativity(const DensityMatrix& rho) {
    requireQutritPair(rho);
    return std::max(0.0, (trace_norm(realign(rho)) - 1.0) / 2.0);
}

std::pair<CMatrix, CMatrix> reduction_matrices(const DensityMatrix& rho) {
    requireQutritPair(rho);
    const CMatrix eyeA = CMatrix::identity(rho.dimA());
    const CMatrix eyeB = CMatrix::identity(rho.dimB());
    return {kron(partial_trace(rho, Subsystem::A), eyeB) - rho.matrix(),
            kron(eyeA, partial_trace(rho, Subsystem::B)) - rho.matrix()};
}

double reduction_negativity(const DensityMatrix& rho) {
    const auto [left, right] = reduction_matrices(rho);
    const double lmin = std::min(hermitian_eigenvalues(left, 1e-8).front(),
                                 hermitian_eigenvalues(right, 1e-8).front());
    return std::max(0.0, -lmin);
}

double pt_factor_F(const DensityMatrix& rho) {
    requireQutritPair(rho);
    const double r11 = rho.entry(1, 1).real();
    const double r55 = rho.entry(5, 5).real();
    const double r99 = rho.entry(9, 9).real();
    return r11 * r55 * r99 - r55 * std::norm(rho.entry(3, 7)) - r11 * std::norm(rho.entry(8, 6));
}

std::pair<double, double> reduction_factors_GH(const DensityMatrix& rho) {
    requireQutritPair(rho);
    const double g = reductionDiagonal(rho, 3) * reductionDiagonal(rho, 7) - std::norm(rho.entry(3, 7));
    const double h = reductionDiagonal(rho, 6) * reductionDiagonal(rho, 8) - std::norm(rho.entry(6, 8));
    return {g, h};
}

double off_pattern_mass(const DensityMatrix& rho) {
    requireQutritPair(rho);
    bool onPattern[10][10] = {};
    for (int k = 1; k <= 9; ++k) onPattern[k][k] = true;
    for (auto [k, l] : kPatternCoherences) onPattern[k][l] = onPattern[l][k] = true;
    double mass = 0.0;
    for (int k = 1; k <= 9; ++k)
        for (int l = 1; l <= 9; ++l)
            if (!onPattern[k][l]) mass += std::abs(rho.entry(k, l));
    return mass;
}

PtFactorization pt_minors_and_det(const DensityMatrix& rho) {
    requireQutritPair(rho);
    PtFactorization out;
    out.offPatternMass = off_pattern_mass(rho);
    if (out.offPatternMass > 1e-4)
        throw PatternViolationError("state leaves the preserved zero pattern; block factorizations do not apply");

    const auto e = [&](int k, int l) { return rho.entry(k, l); };
    out.factors[0] = (e(2, 2) * e(4, 4)).real() - std::norm(e(1, 5));
    out.factors[1] = (e(3, 3) * e(7, 7)).real() - std::norm(e(1, 9));
    out.factors[2] = (e(6, 6) * e(8, 8)).real() - std::norm(e(5, 9));
    out.factors[3] = pt_factor_F(rho);
    out.detFactored = out.factors[0] * out.factors[1] * out.factors[2] * out.factors[3];
    out.detDirect = determinant(partial_transpose(rho)).real();

    const double r11 = reductionDiagonal(rho, 1), r22 = reductionDiagonal(rho, 2);
    const double r33 = reductionDiagonal(rho, 3), r44 = reductionDiagonal(rho, 4);
    const double r55 = reductionDiagonal(rho, 5), r66 = reductionDiagonal(rho, 6);
    const auto [g, h] = reduction_factors_GH(rho);
    const double block15 = r11 * r55 - std::norm(e(1, 5));
    out.minorsFactored[0] = r22 * r33 * r44 * block15;
    out.minorsFactored[1] = r22 * r33 * r44 * r66 * block15;
    out.minorsFactored[2] = r22 * r44 * r66 * block15 * g;
    out.minorsFactored[3] = r22 * r44 * block15 * g * h;

    const CMatrix redA = reduction_matrices(rho).first;
    const std::vector<double> minors = leading_principal_minors(redA, 8);
    for (int i = 0; i < 4; ++i) out.minorsDirect[i] = minors[4 + i];
    return out;
}

EntanglementReport analyze(const DensityMatrix& rho) {
    requireQutritPair(rho);
    EntanglementReport rep;
    const std::vector<double> ptSpectrum = hermitian_eigenvalues(partial_transpose(rho), 1e-8);
    const double n = negativePartSum(ptSpectrum);
    rep.negativity = n < 1e-12 ? 0.0 : n;
    rep.isPPT = ptSpectrum.front() >= -1e-10;
    rep.realignNegativity = realignment_negativity(rho);
    rep.reductionNegativity = reduction_negativity(rho);
    rep.distillableByReduction = rep.reductionNegativity > 1e-10;
    rep.factorF = pt_factor_F(rho);
    std::tie(rep.factorG, rep.factorH) = reduction_factors_GH(rho);
    const CMatrix redA = reduction_matrices(rho).first;
    const std::vector<double> minors = leading_principal_minors(redA, 8);
    for (int i = 0; i < 4; ++i) rep.minors[i] = minors[4 + i];
    return rep;
}

std::string report_csv_row(double t, const EntanglementReport& rep) {
    char buf[360];
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%d,%d,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g",
                  t, rep.negativity, rep.realignNegativity, rep.reductionNegativity, rep.isPPT ? 1 : 0,
                  rep.distillableByReduction ? 1 : 0, rep.factorF, rep.factorG, rep.factorH, rep.minors[0],
                  rep.minors[1], rep.minors[2], rep.minors[3]);
    return buf;
}

}  // namespace vatoms
