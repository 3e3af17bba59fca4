#include "vatoms/asymptotics.hpp"

#include <cmath>

namespace vatoms {

AsymptoticParams asymptotic_params(const DensityMatrix& rho0) {
    if (rho0.dimA() != 3 || rho0.dimB() != 3) throw InvalidStateError("expected a two-qutrit state");
    const auto e = [&](int k, int l) { return rho0.entry(k, l); };
    AsymptoticParams p;
    p.x = (e(2, 2).real() + 2.0 * e(3, 3).real() + e(4, 4).real() + 2.0 * e(7, 7).real() -
           2.0 * e(2, 4).real() - 4.0 * e(3, 7).real()) /
          8.0;
    p.y = (e(2, 2).real() + e(4, 4).real() + 2.0 * e(6, 6).real() + 2.0 * e(8, 8).real() -
           2.0 * e(2, 4).real() - 4.0 * e(6, 8).real()) /
          8.0;
    p.z = 0.25 * (e(3, 6) - e(3, 8) - e(7, 6) + e(7, 8));
    p.w = 0.25 * (e(2, 6) + e(2, 8) + 2.0 * e(3, 9) - e(4, 6) - e(4, 8) - 2.0 * e(7, 9));
    p.v = 0.25 * (-e(2, 3) - e(2, 7) + e(4, 3) + e(4, 7) + 2.0 * e(6, 9) - 2.0 * e(8, 9));
    p.t = 1.0 - 2.0 * p.x - 2.0 * p.y;
    return p;
}

DensityMatrix build_asymptotic_state(const AsymptoticParams& p) {
    if (std::abs(p.t - (1.0 - 2.0 * p.x - 2.0 * p.y)) > 1e-12)
        throw NotAStateError("inconsistent parameter tuple: t must equal 1 - 2x - 2y");
    DensityMatrix rho;
    const Complex x = p.x, y = p.y;
    rho.setEntry(3, 3, x);
    rho.setEntry(3, 6, p.z);
    rho.setEntry(3, 7, -x);
    rho.setEntry(3, 8, -p.z);
    rho.setEntry(3, 9, p.w);
    rho.setEntry(6, 3, std::conj(p.z));
    rho.setEntry(6, 6, y);
    rho.setEntry(6, 7, -std::conj(p.z));
    rho.setEntry(6, 8, -y);
    rho.setEntry(6, 9, p.v);
    rho.setEntry(7, 3, -x);
    rho.setEntry(7, 6, -p.z);
    rho.setEntry(7, 7, x);
    rho.setEntry(7, 8, p.z);
    rho.setEntry(7, 9, -p.w);
    rho.setEntry(8, 3, -std::conj(p.z));
    rho.setEntry(8, 6, -y);
    rho.setEntry(8, 7, std::conj(p.z));
    rho.setEntry(8, 8, y);
    rho.setEntry(8, 9, -p.v);
    rho.setEntry(9, 3, std::conj(p.w));
    rho.setEntry(9, 6, std::conj(p.v));
    rho.setEntry(9, 7, -std::conj(p.w));
    rho.setEntry(9, 8, -std::conj(p.v));
    rho.setEntry(9, 9, p.t);
    if (!validate(rho).pass()) throw NotAStateError("parameter tuple yields a non-positive matrix");
    return rho;
}

double asymptotic_negativity_diagonal(double x, double y) {
    if (x < 0.0 || y < 0.0 || x + y > 0.5 + 1e-15)
        throw OutOfDomainError("need x, y >= 0 and x + y <= 1/2");
    const double t = 1.0 - 2.0 * x - 2.0 * y;
    return 0.5 * (std::sqrt(4.0 * (x * x + y * y) + t * t) - t);
}

CMatrix reduction_matrix_closed_form(double x, double y) {
    if (x < 0.0 || y < 0.0 || x + y > 0.5 + 1e-15)
        throw OutOfDomainError("need x, y >= 0 and x + y <= 1/2");
    const double a = 1.0 - 2.0 * x - y;
    const double b = 1.0 - x - 2.0 * y;
    const double c = x + y;
    CMatrix m(9, 9);
    m(0, 0) = x;
    m(1, 1) = x;
    m(3, 3) = y;
    m(4, 4) = y;
    m(6, 6) = a;
    m(7, 7) = b;
    m(8, 8) = c;
    m(2, 6) = x;
    m(6, 2) = x;
    m(5, 7) = y;
    m(7, 5) = y;
    return m;
}

RationalAsymptote horodecki_asymptote_exact(const Rational& alpha) {
    if (!(alpha.num > 3 * alpha.den) || !(alpha.num <= 4 * alpha.den))
        throw AlphaOutOfRangeError("alpha must lie in (3, 4]");

    const Rational third(1, 3);
    const Rational twoSevenths(2, 7);
    const Rational aw = alpha * Rational(1, 7);           // weight of P_+
    const Rational bw = (Rational(5) - alpha) * Rational(1, 7);  // weight of P_-

    // Exact matrix entries of the family; coherences exist only inside the
    // {1,5,9} maximally entangled block.
    const auto entry = [&](int k, int l) -> Rational {
        const bool kc = (k == 1 || k == 5 || k == 9);
        const bool lc = (l == 1 || l == 5 || l == 9);
        if (kc && lc) return twoSevenths * third;  // 2/21, diagonal and coherences alike
        if (k != l) return Rational(0);
        if (k == 2 || k == 6 || k == 7) return aw * third;
        return bw * third;  // levels 3, 4, 8
    };

    RationalAsymptote out;
    const Rational eighth(1, 8);
    out.x = (entry(2, 2) + Rational(2) * entry(3, 3) + entry(4, 4) + Rational(2) * entry(7, 7) -
             Rational(2) * entry(2, 4) - Rational(4) * entry(3, 7)) *
            eighth;
    out.y = (entry(2, 2) + entry(4, 4) + Rational(2) * entry(6, 6) + Rational(2) * entry(8, 8) -
             Rational(2) * entry(2, 4) - Rational(4) * entry(6, 8)) *
            eighth;
    out.t = Rational(1) - Rational(2) * out.x - Rational(2) * out.y;

    const Rational quarter(1, 4);
    const Rational z = (entry(3, 6) - entry(3, 8) - entry(7, 6) + entry(7, 8)) * quarter;
    const Rational w =
        (entry(2, 6) + entry(2, 8) + Rational(2) * entry(3, 9) - entry(4, 6) - entry(4, 8) - Rational(2) * entry(7, 9)) *
        quarter;
    const Rational v =
        (Rational(0) - entry(2, 3) - entry(2, 7) + entry(4, 3) + entry(4, 7) + Rational(2) * entry(6, 9) -
         Rational(2) * entry(8, 9)) *
        quarter;
    out.coherencesVanish = (z == Rational(0)) && (w == Rational(0)) && (v == Rational(0));
    return out;
}

}  // namespace vatoms
