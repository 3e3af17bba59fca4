#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "vatoms/entanglement.hpp"
#include "vatoms/states.hpp"

using namespace vatoms;
using namespace vatoms::testing;

namespace {

// Realignment negativity of the bound-entangled family, closed form.
double boundFamilyRealignNegativity(double alpha) {
    return (std::sqrt(3.0 * alpha * alpha - 15.0 * alpha + 19.0) - 1.0) / 21.0;
}

}  // namespace

TEST_CASE("psi0") {
    const DensityMatrix p = psi0();
    CHECK(p.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-15));
    for (int k : {1, 5, 9})
        for (int l : {1, 5, 9}) CHECK(p.entry(k, l) == Complex(1.0 / 3.0));
    int nonzeros = 0;
    for (int k = 1; k <= 9; ++k)
        for (int l = 1; l <= 9; ++l)
            if (p.entry(k, l) != Complex{}) ++nonzeros;
    CHECK(nonzeros == 9);
    CHECK(negativity(p) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(maxAbsDiff(partial_trace(p, Subsystem::B), (1.0 / 3.0) * CMatrix::identity(3)) <= 1e-15);
}

TEST_CASE("p_plus and p_minus") {
    const DensityMatrix plus = p_plus(), minus = p_minus();
    for (int k : {2, 6, 7}) CHECK(plus.entry(k, k) == Complex(1.0 / 3.0));
    for (int k : {4, 8, 3}) CHECK(minus.entry(k, k) == Complex(1.0 / 3.0));
    CHECK(negativity(plus) == 0.0);
    CHECK(negativity(minus) == 0.0);
    CHECK(realignment_negativity(plus) == 0.0);
    CHECK(realignment_negativity(minus) == 0.0);

    // The three ingredient families cover the nine basis levels exactly once.
    CMatrix diagPsi(9, 9);
    for (int k : {0, 4, 8}) diagPsi(k, k) = 1.0 / 3.0;
    CHECK(maxAbsDiff(plus.matrix() + minus.matrix() + diagPsi, (1.0 / 3.0) * CMatrix::identity(9)) <= 1e-15);
}

TEST_CASE("horodecki_alpha: entries and window") {
    const DensityMatrix rho = horodecki_alpha(AlphaParam(3.6));
    const double a = 3.6 / 21.0, b = 1.4 / 21.0, c = 2.0 / 21.0;
    const double expected[9] = {c, a, b, b, c, a, a, b, c};
    for (int k = 1; k <= 9; ++k) CHECK(rho.entry(k, k).real() == doctest::Approx(expected[k - 1]).epsilon(1e-15));
    for (int k : {1, 5, 9})
        for (int l : {1, 5, 9})
            if (k != l) CHECK(rho.entry(k, l) == Complex(2.0 / 21.0));

    CHECK_THROWS_AS(AlphaParam(3.0), AlphaOutOfRangeError);
    CHECK_THROWS_AS(AlphaParam(4.0001), AlphaOutOfRangeError);
    CHECK(validate(horodecki_alpha_unchecked(2.5)).pass());  // exploratory, no window
}

TEST_CASE("horodecki_alpha: PPT yet realignment-entangled across the window") {
    for (double alpha : {3.01, 3.2, 3.5, 3.6, 3.8, 4.0}) {
        const DensityMatrix rho = horodecki_alpha(AlphaParam(alpha));
        CHECK(validate(rho).pass());
        CHECK(hermitian_eigenvalues(partial_transpose(rho)).front() >= -1e-12);
        const double nr = realignment_negativity(rho);
        CHECK(nr > 0.0);
        CHECK(nr == doctest::Approx(boundFamilyRealignNegativity(alpha)).epsilon(1e-10));
    }
    CHECK(realignment_negativity(horodecki_alpha(AlphaParam(3.6))) ==
          doctest::Approx((std::sqrt(3.88) - 1.0) / 21.0).epsilon(1e-12));
    CHECK(realignment_negativity(horodecki_alpha(AlphaParam(4.0))) ==
          doctest::Approx((std::sqrt(7.0) - 1.0) / 21.0).epsilon(1e-12));
}

TEST_CASE("horodecki_alpha: affine in alpha") {
    const double a1 = 3.2, a2 = 3.9;
    const CMatrix mid = horodecki_alpha(AlphaParam(0.5 * (a1 + a2))).matrix();
    const CMatrix avg = 0.5 * (horodecki_alpha(AlphaParam(a1)).matrix() + horodecki_alpha(AlphaParam(a2)).matrix());
    CHECK(maxAbsDiff(mid, avg) <= 1e-15);
}

TEST_CASE("diagonal_state and basis_state") {
    CHECK(basis_state(9).entry(9, 9) == Complex(1.0));
    CHECK(basis_state(3).entry(3, 3) == Complex(1.0));  // one atom excited, the other ground

    std::array<double, 9> uniform{};
    uniform.fill(1.0 / 9.0);
    CHECK(maxAbsDiff(diagonal_state(uniform).matrix(), (1.0 / 9.0) * CMatrix::identity(9)) <= 1e-15);
    CHECK(negativity(diagonal_state(uniform)) == 0.0);

    std::array<double, 9> bad{};
    bad.fill(0.1);
    CHECK_THROWS_AS(diagonal_state(bad), BadProbabilityVectorError);
    std::array<double, 9> neg{};
    neg.fill(1.0 / 9.0);
    neg[0] = -neg[0];
    neg[1] += 2.0 / 9.0;
    CHECK_THROWS_AS(diagonal_state(neg), BadProbabilityVectorError);
    CHECK_THROWS_AS(basis_state(0), BadProbabilityVectorError);
    CHECK_THROWS_AS(basis_state(10), BadProbabilityVectorError);
}
