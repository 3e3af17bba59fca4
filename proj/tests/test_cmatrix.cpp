#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "vatoms/cmatrix.hpp"

using namespace vatoms;
using namespace vatoms::testing;

namespace {

// Projector onto (1/sqrt 3) sum_j |j j> over two qutrits, then the index
// permutation of the B-side partial transpose, both written out directly so
// the eigensolver is checked against an independently constructed matrix.
CMatrix maxEntangledProjectorPT() {
    CMatrix p(9, 9);
    for (int a : {0, 4, 8})
        for (int b : {0, 4, 8}) p(a, b) = 1.0 / 3.0;
    CMatrix pt(9, 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int ip = 0; ip < 3; ++ip)
                for (int jp = 0; jp < 3; ++jp) pt(3 * i + j, 3 * ip + jp) = p(3 * i + jp, 3 * ip + j);
    return pt;
}

}  // namespace

TEST_CASE("hermitian_eigenvalues: fixed spectra") {
    CHECK(hermitian_eigenvalues(CMatrix::identity(3)) == std::vector<double>{1.0, 1.0, 1.0});

    CMatrix flip(2, 2);
    flip(0, 1) = 1.0;
    flip(1, 0) = 1.0;
    const auto ev = hermitian_eigenvalues(flip);
    CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eigenvalues: partially transposed maximally entangled projector") {
    const auto ev = hermitian_eigenvalues(maxEntangledProjectorPT());
    REQUIRE(ev.size() == 9);
    for (int i = 0; i < 3; ++i) CHECK(ev[i] == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    for (int i = 3; i < 9; ++i) CHECK(ev[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    double negSum = 0.0;
    for (double e : ev)
        if (e < 0) negSum -= e;
    CHECK(negSum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eigenvalues: sum equals trace, product equals determinant") {
    auto gen = rng();
    for (int n : {2, 3, 5, 9, 16}) {
        const CMatrix a = randomHermitian(n, gen, 1.0 / n);
        const auto ev = hermitian_eigenvalues(a);
        double sum = 0.0, prod = 1.0;
        for (double e : ev) {
            sum += e;
            prod *= e;
        }
        CHECK(std::abs(sum - a.trace().real()) <= 1e-9 * n);
        CHECK(std::abs(prod - determinant(a).real()) <= 1e-9 * (1.0 + std::abs(prod)));
    }
}

TEST_CASE("hermitian_eigenvalues: errors") {
    CHECK_THROWS_AS(hermitian_eigenvalues(CMatrix(2, 3)), NonSquareError);
    CMatrix notHerm(2, 2);
    notHerm(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eigenvalues(notHerm), NotHermitianError);
}

TEST_CASE("singular_values: fixed cases") {
    CHECK(singular_values(CMatrix::identity(2)) == std::vector<double>{1.0, 1.0});

    CMatrix d(2, 2);
    d(0, 0) = 3.0;
    d(1, 1) = -4.0;
    const auto sv = singular_values(d);
    CHECK(sv[0] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(sv[1] == doctest::Approx(3.0).epsilon(1e-12));

    // Realigning the maximally entangled projector gives the 9x9 identity
    // over 3:nine singular values of 1/3.
    const CMatrix r = (1.0 / 3.0) * CMatrix::identity(9);
    for (double s : singular_values(r)) CHECK(s == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(trace_norm(r) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("singular_values: Frobenius identity and Hermitian |eigenvalue| match") {
    auto gen = rng(7);
    const CMatrix a = randomComplexMatrix(6, 4, gen);
    double s2 = 0.0;
    for (double s : singular_values(a)) s2 += s * s;
    CHECK(s2 == doctest::Approx(a.frobeniusNorm() * a.frobeniusNorm()).epsilon(1e-10));

    const CMatrix h = randomHermitian(7, gen);
    auto sv = singular_values(h);
    auto ev = hermitian_eigenvalues(h);
    std::vector<double> absEv;
    for (double e : ev) absEv.push_back(std::abs(e));
    std::sort(absEv.rbegin(), absEv.rend());
    for (size_t i = 0; i < absEv.size(); ++i) CHECK(std::abs(sv[i] - absEv[i]) <= 1e-9);
}

TEST_CASE("trace_norm: fixed cases and unitary invariance") {
    CMatrix d(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = -2.0;
    CHECK(trace_norm(d) == doctest::Approx(3.0).epsilon(1e-12));

    auto gen = rng(11);
    const CMatrix rho = randomDensityMatrix(9, gen);
    CHECK(trace_norm(rho) == doctest::Approx(1.0).epsilon(1e-10));

    const CMatrix a = randomComplexMatrix(5, 5, gen);
    const CMatrix u = randomUnitary(5, gen), v = randomUnitary(5, gen);
    CHECK(std::abs(trace_norm(u * a * v) - trace_norm(a)) <= 1e-9 * (1.0 + trace_norm(a)));
}

TEST_CASE("kron: fixed actions and algebra") {
    CHECK(maxAbsDiff(kron(CMatrix::identity(3), CMatrix::identity(3)), CMatrix::identity(9)) == 0.0);

    // |1><3| on the first slot sends |3,k> to |1,k>.
    CMatrix e13(3, 3);
    e13(0, 2) = 1.0;
    const CMatrix lift = kron(e13, CMatrix::identity(3));
    int nonzeros = 0;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            if (lift(i, j) != Complex{}) ++nonzeros;
    CHECK(nonzeros == 3);
    for (int k = 0; k < 3; ++k) CHECK(lift(0 * 3 + k, 2 * 3 + k) == Complex(1.0));

    CMatrix d1(2, 2), d2(2, 2);
    d1(0, 0) = 1.0;
    d1(1, 1) = 2.0;
    d2(0, 0) = 3.0;
    d2(1, 1) = 4.0;
    const CMatrix kd = kron(d1, d2);
    CHECK(kd(0, 0) == Complex(3.0));
    CHECK(kd(1, 1) == Complex(4.0));
    CHECK(kd(2, 2) == Complex(6.0));
    CHECK(kd(3, 3) == Complex(8.0));

    auto gen = rng(13);
    const CMatrix a = randomComplexMatrix(2, 3, gen), b = randomComplexMatrix(3, 2, gen);
    const CMatrix c = randomComplexMatrix(3, 2, gen), e = randomComplexMatrix(2, 3, gen);
    CHECK(maxAbsDiff(kron(a, b) * kron(c, e), kron(a * c, b * e)) <= 1e-12);
    CHECK(maxAbsDiff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-12);
}

TEST_CASE("leading_principal_minors") {
    CMatrix d(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    d(2, 2) = 3.0;
    CHECK(leading_principal_minors(d, 3) == std::vector<double>{1.0, 2.0, 6.0});

    // The sign-carrying block of the asymptotic reduction matrix.
    const double x = 5.0 / 56.0, a = 41.0 / 56.0;
    CMatrix blk(2, 2);
    blk(0, 1) = x;
    blk(1, 0) = x;
    blk(1, 1) = a;
    const auto minors = leading_principal_minors(blk, 2);
    CHECK(minors[0] == 0.0);
    CHECK(minors[1] == doctest::Approx(-25.0 / 3136.0).epsilon(1e-12));
    CHECK(minors[1] == doctest::Approx(-0.00797194).epsilon(1e-5));

    CHECK_THROWS_AS(leading_principal_minors(CMatrix(2, 3), 2), NonSquareError);

    auto gen = rng(17);
    const CMatrix h = randomHermitian(6, gen);
    const auto ms = leading_principal_minors(h, 6);
    CHECK(std::abs(ms[5] - determinant(h).real()) <= 1e-9 * (1.0 + std::abs(ms[5])));
}
