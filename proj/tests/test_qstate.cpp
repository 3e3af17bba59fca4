#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "vatoms/qstate.hpp"
#include "vatoms/states.hpp"

using namespace vatoms;
using namespace vatoms::testing;

TEST_CASE("validate: pass and fail diagnostics") {
    CHECK(validate(basis_state(9)).pass());
    CHECK(validate(basis_state(9)).minEigenvalue == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(validate(horodecki_alpha(AlphaParam(3.6))).pass());

    DensityMatrix uniform(3, 3, (1.0 / 9.0) * CMatrix::identity(9));
    CHECK(validate(uniform).pass());

    DensityMatrix doubled(3, 3, (2.0 / 9.0) * CMatrix::identity(9));
    const auto rep = validate(doubled);
    CHECK_FALSE(rep.traceOk);
    CHECK(rep.traceDeviation == doctest::Approx(1.0));

    auto gen = rng(23);
    DensityMatrix notPsd = randomState(gen);
    notPsd.setEntry(1, 1, notPsd.entry(1, 1) - 0.5);
    notPsd.setEntry(9, 9, notPsd.entry(9, 9) + 0.5);
    CHECK_FALSE(validate(notPsd).pass());
}

TEST_CASE("partial_trace") {
    auto gen = rng(29);
    const CMatrix sa = randomDensityMatrix(3, gen), sb = randomDensityMatrix(3, gen);
    const DensityMatrix product(3, 3, kron(sa, sb));
    CHECK(maxAbsDiff(partial_trace(product, Subsystem::A), sa) <= 1e-14);
    CHECK(maxAbsDiff(partial_trace(product, Subsystem::B), sb) <= 1e-14);

    CHECK(maxAbsDiff(partial_trace(psi0(), Subsystem::A), (1.0 / 3.0) * CMatrix::identity(3)) <= 1e-15);
    CHECK(maxAbsDiff(partial_trace(horodecki_alpha(AlphaParam(3.6)), Subsystem::B),
                     (1.0 / 3.0) * CMatrix::identity(3)) <= 1e-15);

    const DensityMatrix any = randomState(gen);
    for (Subsystem keep : {Subsystem::A, Subsystem::B}) {
        const CMatrix red = partial_trace(any, keep);
        CHECK(std::abs(red.trace().real() - 1.0) <= 1e-10);
        CHECK(hermitian_eigenvalues(red).front() >= -1e-10);
    }
}

TEST_CASE("partial_transpose: product rule, spectrum, involution") {
    auto gen = rng(31);
    const CMatrix sa = randomDensityMatrix(3, gen), sb = randomDensityMatrix(3, gen);
    const DensityMatrix product(3, 3, kron(sa, sb));
    CHECK(maxAbsDiff(partial_transpose(product, Subsystem::B), kron(sa, sb.transpose())) <= 1e-15);
    CHECK(maxAbsDiff(partial_transpose(product, Subsystem::A), kron(sa.transpose(), sb)) <= 1e-15);

    const auto ev = hermitian_eigenvalues(partial_transpose(psi0()));
    for (int i = 0; i < 3; ++i) CHECK(ev[i] == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    for (int i = 3; i < 9; ++i) CHECK(ev[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const DensityMatrix any = randomState(gen);
    const CMatrix pt = partial_transpose(any);
    CHECK(pt.trace() == any.matrix().trace());
    const CMatrix back = partial_transpose(DensityMatrix(3, 3, pt));
    CHECK(maxAbsDiff(back, any.matrix()) == 0.0);  // pure index permutation

    // Either side can be transposed; the spectra coincide.
    const auto evA = hermitian_eigenvalues(partial_transpose(any, Subsystem::A));
    const auto evB = hermitian_eigenvalues(partial_transpose(any, Subsystem::B));
    for (size_t i = 0; i < evA.size(); ++i) CHECK(std::abs(evA[i] - evB[i]) <= 1e-10);
}

TEST_CASE("partial_transpose: coherence relocation on the preserved pattern") {
    // Hermitian matrix with the dynamics' zero pattern and distinct values in
    // every allowed slot.
    DensityMatrix rho;
    for (int k = 1; k <= 9; ++k) rho.setEntry(k, k, 0.1 + 0.01 * k);
    const auto setPair = [&](int k, int l, Complex v) {
        rho.setEntry(k, l, v);
        rho.setEntry(l, k, std::conj(v));
    };
    setPair(1, 5, {0.01, 0.002});
    setPair(1, 9, {0.02, -0.003});
    setPair(5, 9, {0.03, 0.004});
    setPair(3, 7, {0.04, 0.005});
    setPair(6, 8, {0.05, -0.006});

    const CMatrix pt = partial_transpose(rho);
    // 1-based expectations: rho37 lands on (1,9), rho15 on (2,4), rho19 on
    // (3,7), rho68 on (5,9), rho59 on (6,8); diagonal untouched.
    CHECK(pt(0, 8) == rho.entry(3, 7));
    CHECK(pt(8, 0) == rho.entry(7, 3));
    CHECK(pt(1, 3) == rho.entry(1, 5));
    CHECK(pt(2, 6) == rho.entry(1, 9));
    CHECK(pt(4, 8) == rho.entry(6, 8));
    CHECK(pt(5, 7) == rho.entry(5, 9));
    for (int k = 0; k < 9; ++k) CHECK(pt(k, k) == rho.entry(k + 1, k + 1));
    // Nothing new appears: the pattern positions just swap around.
    int nonzeros = 0;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            if (pt(i, j) != Complex{}) ++nonzeros;
    CHECK(nonzeros == 9 + 10);
}

TEST_CASE("realign: products, fixed trace norms, Frobenius preservation") {
    auto gen = rng(37);
    const CMatrix sa = randomDensityMatrix(3, gen), sb = randomDensityMatrix(3, gen);
    const CMatrix r = realign(DensityMatrix(3, 3, kron(sa, sb)));
    const auto sv = singular_values(r);
    CHECK(sv[0] == doctest::Approx(sa.frobeniusNorm() * sb.frobeniusNorm()).epsilon(1e-12));
    // The Gram-matrix route resolves vanishing singular values only to about
    // sqrt(machine epsilon).
    for (size_t i = 1; i < sv.size(); ++i) CHECK(sv[i] <= 5e-8);
    CHECK(trace_norm(r) <= 1.0 + 1e-9);

    CHECK(trace_norm(realign(psi0())) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(trace_norm(realign(DensityMatrix(3, 3, (1.0 / 9.0) * CMatrix::identity(9)))) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const DensityMatrix any = randomState(gen);
    CHECK(realign(any).frobeniusNorm() == doctest::Approx(any.matrix().frobeniusNorm()).epsilon(1e-12));
}

TEST_CASE("realign: separable states satisfy the trace-norm bound") {
    auto gen = rng(41);
    for (const DensityMatrix& rho :
         {p_plus(), p_minus(), basis_state(3), basis_state(9), randomSeparableState(gen),
          randomSeparableState(gen), randomSeparableState(gen)}) {
        CHECK(trace_norm(realign(rho)) <= 1.0 + 1e-9);
    }
}

TEST_CASE("text serialization round trip") {
    auto gen = rng(43);
    const DensityMatrix rho = randomState(gen);
    const DensityMatrix back = from_text(to_text(rho));
    CHECK(back.dimA() == 3);
    CHECK(back.dimB() == 3);
    CHECK(maxAbsDiff(back.matrix(), rho.matrix()) <= 1e-15);

    CHECK_THROWS_AS(from_text("garbage"), InvalidStateError);
    CHECK_THROWS_AS(from_text("3 3\n95 1 0.5 0"), InvalidStateError);
}
