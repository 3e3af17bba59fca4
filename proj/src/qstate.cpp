#include "vatoms/qstate.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace vatoms {

namespace {

void requireStateShape(const DensityMatrix& rho) {
    const CMatrix& m = rho.matrix();
    if (!m.isSquare() || m.rows() != rho.dim())
        throw InvalidStateError("density matrix storage does not match dimA*dimB");
    if (!m.isHermitian(1e-8))
        throw InvalidStateError("density matrix is not Hermitian");
}

}  // namespace

DensityMatrix::DensityMatrix(int dimA, int dimB, CMatrix mat) : dimA_(dimA), dimB_(dimB), mat_(std::move(mat)) {
    if (dimA_ <= 0 || dimB_ <= 0 || !mat_.isSquare() || mat_.rows() != dimA_ * dimB_)
        throw InvalidStateError("density matrix storage does not match dimA*dimB");
}

ValidationReport validate(const DensityMatrix& rho, double tol) {
    ValidationReport rep;
    const CMatrix& m = rho.matrix();
    rep.hermiticityResidual = m.hermiticityResidual();
    rep.hermitianOk = rep.hermiticityResidual <= tol * (1.0 + m.maxAbs());
    rep.traceDeviation = std::abs(m.trace() - Complex(1.0, 0.0));
    rep.traceOk = rep.traceDeviation <= 1e-9;
    if (rep.hermitianOk) {
        std::vector<double> ev = hermitian_eigenvalues(m, 1e-8);
        rep.minEigenvalue = ev.front();
        rep.psdOk = rep.minEigenvalue >= -1e-8;
    }
    return rep;
}

CMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    requireStateShape(rho);
    const int dA = rho.dimA(), dB = rho.dimB();
    const CMatrix& m = rho.matrix();
    if (keep == Subsystem::A) {
        CMatrix out(dA, dA);
        for (int i = 0; i < dA; ++i)
            for (int ip = 0; ip < dA; ++ip)
                for (int j = 0; j < dB; ++j) out(i, ip) += m(i * dB + j, ip * dB + j);
        return out;
    }
    CMatrix out(dB, dB);
    for (int j = 0; j < dB; ++j)
        for (int jp = 0; jp < dB; ++jp)
            for (int i = 0; i < dA; ++i) out(j, jp) += m(i * dB + j, i * dB + jp);
    return out;
}

CMatrix partial_transpose(const DensityMatrix& rho, Subsystem on) {
    requireStateShape(rho);
    const int dA = rho.dimA(), dB = rho.dimB();
    const CMatrix& m = rho.matrix();
    CMatrix out(dA * dB, dA * dB);
    for (int i = 0; i < dA; ++i)
        for (int j = 0; j < dB; ++j)
            for (int ip = 0; ip < dA; ++ip)
                for (int jp = 0; jp < dB; ++jp) {
                    if (on == Subsystem::B)
                        out(i * dB + j, ip * dB + jp) = m(i * dB + jp, ip * dB + j);
                    else
                        out(i * dB + j, ip * dB + jp) = m(ip * dB + j, i * dB + jp);
                }
    return out;
}

CMatrix realign(const DensityMatrix& rho) {
    requireStateShape(rho);
    const int dA = rho.dimA(), dB = rho.dimB();
    const CMatrix& m = rho.matrix();
    CMatrix out(dA * dA, dB * dB);
    for (int a = 0; a < dA; ++a)
        for (int ap = 0; ap < dA; ++ap)
            for (int b = 0; b < dB; ++b)
                for (int bp = 0; bp < dB; ++bp)
                    out(a * dA + ap, b * dB + bp) = m(a * dB + b, ap * dB + bp);
    return out;
}

std::string to_text(const DensityMatrix& rho) {
    std::ostringstream os;
    os << rho.dimA() << ' ' << rho.dimB() << '\n';
    const int n = rho.dim();
    char buf[80];
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            const Complex v = rho.entry(k, l);
            if (v == Complex{}) continue;
            std::snprintf(buf, sizeof buf, "%d %d %.17g %.17g\n", k, l, v.real(), v.imag());
            os << buf;
        }
    return os.str();
}

DensityMatrix from_text(const std::string& text) {
    std::istringstream is(text);
    int dA = 0, dB = 0;
    if (!(is >> dA >> dB) || dA <= 0 || dB <= 0) throw InvalidStateError("state text: bad dimension line");
    CMatrix m(dA * dB, dA * dB);
    int k, l;
    double re, im;
    while (is >> k >> l >> re >> im) {
        if (k < 1 || l < 1 || k > dA * dB || l > dA * dB) throw InvalidStateError("state text: index out of range");
        m(k - 1, l - 1) = Complex(re, im);
    }
    return DensityMatrix(dA, dB, std::move(m));
}

}  // namespace vatoms
