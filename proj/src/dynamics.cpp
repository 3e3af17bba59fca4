#include "vatoms/dynamics.hpp"

#include <cmath>

namespace vatoms {

namespace {

// |j><k| on one atom (1-based levels), embedded in the pair space.
CMatrix transitionOp(Subsystem atom, int j, int k) {
    CMatrix unit(3, 3);
    unit(j - 1, k - 1) = 1.0;
    return atom == Subsystem::A ? kron(unit, CMatrix::identity(3)) : kron(CMatrix::identity(3), unit);
}

CMatrix hermitize(const CMatrix& m) {
    CMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return out;
}

void vecOf(const CMatrix& m, std::vector<Complex>& v) {
    v.assign(m.data().begin(), m.data().end());
}

CMatrix unvec(const std::vector<Complex>& v) {
    CMatrix m(9, 9);
    m.data().assign(v.begin(), v.end());
    return m;
}

void matvec(const CMatrix& sop, const std::vector<Complex>& v, std::vector<Complex>& out) {
    const int n = sop.rows();
    out.assign(n, Complex{});
    const Complex* row = sop.data().data();
    for (int i = 0; i < n; ++i, row += n) {
        Complex acc{};
        for (int j = 0; j < n; ++j) acc += row[j] * v[j];
        out[i] = acc;
    }
}

DensityMatrix sampleState(const std::vector<Complex>& v, double t) {
    for (const Complex& c : v)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw StepTooLargeError("integration diverged by t = " + std::to_string(t), t);
    CMatrix m = hermitize(unvec(v));
    DensityMatrix rho(3, 3, std::move(m));
    const double traceDev = std::abs(rho.matrix().trace() - Complex(1.0, 0.0));
    if (!(traceDev <= 1e-9))
        throw StepTooLargeError("trace drift exceeds 1e-9 at t = " + std::to_string(t), t);
    const double minEig = hermitian_eigenvalues(rho.matrix(), 1e-8).front();
    if (!(minEig >= -1e-8))
        throw StepTooLargeError("state left the positive cone at t = " + std::to_string(t), t);
    return rho;
}

}  // namespace

void CouplingParams::check() const {
    if (!(gamma > 0.0)) throw BadCouplingsError("gamma must be positive");
    // Damping-coefficient matrix over the lowering operators
    // (A:1->3, A:2->3, B:1->3, B:2->3).
    CMatrix c(4, 4);
    c(0, 0) = c(1, 1) = c(2, 2) = c(3, 3) = gamma;
    c(0, 2) = c(2, 0) = Gamma13;
    c(1, 3) = c(3, 1) = Gamma23;
    c(0, 3) = c(3, 0) = Gammavc;
    c(1, 2) = c(2, 1) = Gammavc;
    const double minEig = hermitian_eigenvalues(c, 1e-12).front();
    if (minEig < -1e-12 * gamma)
        throw BadCouplingsError("collective damping matrix is not positive semidefinite");
}

CouplingParams couplings(const CouplingModel& model) {
    CouplingParams p;
    switch (model.kind) {
        case CouplingModel::Kind::Independent:
            break;
        case CouplingModel::Kind::IdealSmallR:
            p.Gamma13 = p.Gamma23 = p.gamma;
            p.Omega13 = p.Omega23 = model.smallROmega;
            break;
        case CouplingModel::Kind::Geometric: {
            if (!(model.separation > 0.0)) throw BadGeometryError("separation must be positive");
            const double a = model.separation;
            const double s = std::sin(a), c = std::cos(a);
            p.Gamma13 = p.Gamma23 = 1.5 * p.gamma * (s / a + c / (a * a) - s / (a * a * a));
            p.Omega13 = p.Omega23 = 0.75 * p.gamma * (-c / a + s / (a * a) + c / (a * a * a));
            break;
        }
    }
    p.check();
    return p;
}

Generator::Generator(const CouplingParams& c) {
    c.check();

    const CMatrix sA13 = transitionOp(Subsystem::A, 1, 3), sA23 = transitionOp(Subsystem::A, 2, 3);
    const CMatrix sA31 = transitionOp(Subsystem::A, 3, 1), sA32 = transitionOp(Subsystem::A, 3, 2);
    const CMatrix sB13 = transitionOp(Subsystem::B, 1, 3), sB23 = transitionOp(Subsystem::B, 2, 3);
    const CMatrix sB31 = transitionOp(Subsystem::B, 3, 1), sB32 = transitionOp(Subsystem::B, 3, 2);

    // Photon-exchange Hamiltonian: dipole-dipole exchange within each
    // transition plus the cross-shift between orthogonal transitions.
    hamiltonian_ = c.Omega13 * (sA13 * sB31 + sB13 * sA31) + c.Omega23 * (sA23 * sB32 + sB23 * sA32) +
                   c.Omegavc * (sA23 * sB31 + sA32 * sB13 + sB23 * sA31 + sB32 * sA13);

    // coeff * (2 L_m rho L_n^H - L_n^H L_m rho - rho L_n^H L_m)
    const auto addPair = [&](const CMatrix& lm, const CMatrix& ln, double coeff) {
        if (coeff == 0.0) return;
        pairs_.push_back({lm, ln.adjoint(), ln.adjoint() * lm, coeff});
    };

    addPair(sA31, sA31, c.gamma);
    addPair(sA32, sA32, c.gamma);
    addPair(sB31, sB31, c.gamma);
    addPair(sB32, sB32, c.gamma);

    addPair(sA31, sB31, c.Gamma13);
    addPair(sB31, sA31, c.Gamma13);
    addPair(sA32, sB32, c.Gamma23);
    addPair(sB32, sA32, c.Gamma23);

    addPair(sA31, sB32, c.Gammavc);
    addPair(sB31, sA32, c.Gammavc);
    addPair(sA32, sB31, c.Gammavc);
    addPair(sB32, sA31, c.Gammavc);

    superop_ = CMatrix(81, 81);
    for (int r = 0; r < 9; ++r)
        for (int s = 0; s < 9; ++s) {
            CMatrix basis(9, 9);
            basis(r, s) = 1.0;
            const CMatrix image = apply(basis);
            for (int i = 0; i < 9; ++i)
                for (int j = 0; j < 9; ++j) superop_(9 * i + j, 9 * r + s) = image(i, j);
        }
}

CMatrix Generator::apply(const CMatrix& rho) const {
    CMatrix out = Complex(0.0, 1.0) * (hamiltonian_ * rho - rho * hamiltonian_);
    for (const JumpPair& p : pairs_) {
        out = out + p.coeff * (2.0 * (p.lower * rho * p.raiseOther) - p.raiseTimesLower * rho -
                               rho * p.raiseTimesLower);
    }
    return out;
}

CMatrix liouvillian(const DensityMatrix& rho, const CouplingParams& c) {
    if (rho.dimA() != 3 || rho.dimB() != 3) throw InvalidStateError("expected a two-qutrit state");
    return Generator(c).apply(rho.matrix());
}

void Trajectory::analyzeAll() {
    reports.clear();
    reports.reserve(states.size());
    for (const DensityMatrix& s : states) reports.push_back(analyze(s));
}

namespace {

// One classical RK4 step of v' = S v.
void rk4Step(const CMatrix& sop, std::vector<Complex>& v, double h, std::vector<Complex>& k1,
             std::vector<Complex>& k2, std::vector<Complex>& k3, std::vector<Complex>& k4,
             std::vector<Complex>& tmp) {
    const size_t n = v.size();
    matvec(sop, v, k1);
    tmp.resize(n);
    for (size_t i = 0; i < n; ++i) tmp[i] = v[i] + 0.5 * h * k1[i];
    matvec(sop, tmp, k2);
    for (size_t i = 0; i < n; ++i) tmp[i] = v[i] + 0.5 * h * k2[i];
    matvec(sop, tmp, k3);
    for (size_t i = 0; i < n; ++i) tmp[i] = v[i] + h * k3[i];
    matvec(sop, tmp, k4);
    const double w = h / 6.0;
    for (size_t i = 0; i < n; ++i) v[i] += w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

DensityMatrix integrateTo(const Generator& gen, const DensityMatrix& from, double span, double dtMax) {
    std::vector<Complex> v, k1, k2, k3, k4, tmp;
    vecOf(from.matrix(), v);
    const int n = std::max(1, static_cast<int>(std::ceil(span / dtMax - 1e-12)));
    const double h = span / n;
    for (int i = 0; i < n; ++i) rk4Step(gen.superoperator(), v, h, k1, k2, k3, k4, tmp);
    return DensityMatrix(3, 3, hermitize(unvec(v)));
}

}  // namespace

Trajectory evolve(const DensityMatrix& rho0, const CouplingParams& c, double tEnd, double dt, int sampleEvery) {
    if (!(tEnd > 0.0) || !(dt > 0.0) || sampleEvery < 1) throw Error("evolve: need tEnd > 0, dt > 0, sampleEvery >= 1");
    if (!validate(rho0).pass()) throw InvalidStateError("evolve: initial state fails validation");

    const Generator gen(c);
    Trajectory traj;
    traj.params = c;
    traj.dt = dt;

    const long long nSteps = std::max<long long>(1, std::llround(tEnd / dt));
    std::vector<Complex> v, k1, k2, k3, k4, tmp;
    vecOf(rho0.matrix(), v);

    for (long long step = 0;; ++step) {
        const double t = static_cast<double>(step) * dt;
        if (step % sampleEvery == 0 || step == nSteps) {
            traj.times.push_back(t);
            traj.states.push_back(sampleState(v, t));
        }
        if (step == nSteps) break;
        rk4Step(gen.superoperator(), v, dt, k1, k2, k3, k4, tmp);
    }
    return traj;
}

std::optional<double> detect_sign_change(const Trajectory& traj,
                                         const std::function<double(const DensityMatrix&)>& f,
                                         const CouplingParams& refine, double timeTol) {
    if (traj.states.size() < 2) return std::nullopt;

    std::vector<double> values(traj.states.size());
    for (size_t i = 0; i < traj.states.size(); ++i) values[i] = f(traj.states[i]);

    size_t bracket = traj.states.size();
    for (size_t i = 0; i + 1 < values.size(); ++i) {
        if ((values[i] > 0.0 && values[i + 1] <= 0.0) || (values[i] < 0.0 && values[i + 1] >= 0.0)) {
            bracket = i;
            break;
        }
    }
    if (bracket == traj.states.size()) return std::nullopt;

    const Generator gen(refine);
    const DensityMatrix& base = traj.states[bracket];
    const double t0 = traj.times[bracket];
    double lo = t0, hi = traj.times[bracket + 1];
    double flo = values[bracket];

    for (int iter = 0; hi - lo > timeTol; ++iter) {
        if (iter > 200) throw RefinementStallError("sign-change refinement failed to converge");
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(integrateTo(gen, base, mid - t0, traj.dt));
        if (!std::isfinite(fmid)) throw RefinementStallError("non-finite functional value during refinement");
        if (fmid == 0.0) return mid;
        if ((flo > 0.0) == (fmid > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace vatoms
