#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "vatoms/entanglement.hpp"
#include "vatoms/qstate.hpp"

namespace vatoms {

/// Rates and shifts of the two-atom master equation, in units of the
/// single-transition spontaneous decay rate gamma (both transitions decay at
/// the same rate; excited populations of an isolated atom decay as
/// exp(-2*gamma*t)). Gamma13/Gamma23 are the collective damping rates,
/// Omega13/Omega23 the dipole-dipole shifts, and the vc pair the cross terms
/// coupling orthogonal transition dipoles of different atoms. omega0 is
/// carried as metadata only; the equation is written in the frame rotating at
/// the (near-degenerate) transition frequency.
struct CouplingParams {
    double gamma = 1.0;
    double Gamma13 = 0.0;
    double Gamma23 = 0.0;
    double Gammavc = 0.0;
    double Omega13 = 0.0;
    double Omega23 = 0.0;
    double Omegavc = 0.0;
    double omega0 = 0.0;

    /// Complete positivity requires the 4x4 damping-coefficient matrix over
    /// the four lowering operators to be positive semidefinite (zero modes
    /// allowed: |Gamma| = gamma is exactly the decoherence-free point).
    /// Throws BadCouplingsError otherwise.
    void check() const;
};

struct CouplingModel {
    enum class Kind { Independent, IdealSmallR, Geometric };
    Kind kind = Kind::Independent;
    /// Geometric: dimensionless interatomic separation, measured in reduced
    /// wavelengths (i.e. the retardation phase k0*R of the shared field).
    double separation = 0.0;
    /// IdealSmallR: finite dipole-dipole shift to use in place of the
    /// divergent small-separation limit.
    double smallROmega = 5.0;

    static CouplingModel independent() { return {}; }
    static CouplingModel idealSmallR(double omega = 5.0) { return {Kind::IdealSmallR, 0.0, omega}; }
    static CouplingModel geometric(double separation) { return {Kind::Geometric, separation, 0.0}; }
};

/// Coupling coefficients for a model, gamma = 1.
///  - Independent: all collective terms zero.
///  - IdealSmallR: Gamma13 = Gamma23 = gamma (decoherence-free point),
///    Omega13 = Omega23 = smallROmega, cross terms zero.
///  - Geometric(a): the standard radiative-coupling closed forms for parallel
///    dipoles perpendicular to the separation axis,
///      Gamma = (3/2)gamma [sin a / a + cos a / a^2 - sin a / a^3],
///      Omega = (3/4)gamma [-cos a / a + sin a / a^2 + cos a / a^3],
///    cross terms zero. Gamma -> gamma and Omega diverges as a -> 0; both
///    vanish as a -> infinity.
CouplingParams couplings(const CouplingModel& model);

/// Precomputed right-hand side of the master equation
///   d(rho)/dt = i[H, rho] + (L^A + L^B + L^AB) rho.
class Generator {
public:
    explicit Generator(const CouplingParams& c);

    /// d(rho)/dt for an arbitrary 9x9 matrix (linear, so also usable on
    /// non-Hermitian basis elements).
    CMatrix apply(const CMatrix& rho) const;

    const CMatrix& hamiltonian() const { return hamiltonian_; }

    /// 81x81 matrix acting on the row-major vectorization of rho; this is
    /// what the integrator iterates.
    const CMatrix& superoperator() const { return superop_; }

private:
    CMatrix hamiltonian_;
    struct JumpPair {
        CMatrix lower;          // L_m
        CMatrix raiseOther;     // L_n^dagger
        CMatrix raiseTimesLower;  // L_n^dagger L_m
        double coeff;
    };
    std::vector<JumpPair> pairs_;
    CMatrix superop_;
};

/// One evaluation of the master-equation right-hand side.
CMatrix liouvillian(const DensityMatrix& rho, const CouplingParams& c);

struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
    std::vector<EntanglementReport> reports;  // filled by analyzeAll
    CouplingParams params;
    double dt = 0.0;

    void analyzeAll();
    bool analyzed() const { return reports.size() == states.size() && !states.empty(); }
};

/// Fixed-step classical fourth-order integration. Each retained sample is
/// re-Hermitized ((rho + rho^H)/2) and validated: trace within 1e-9 of one and
/// minimum eigenvalue >= -1e-8, else StepTooLargeError with the offending
/// time. Samples are taken every sampleEvery steps plus the final step.
Trajectory evolve(const DensityMatrix& rho0, const CouplingParams& c, double tEnd, double dt = 1e-3,
                  int sampleEvery = 10);

/// Earliest sign change of f along the sampled trajectory, refined by
/// bisection with fresh short integrations from the bracketing sample, to
/// absolute time tolerance timeTol. Returns nullopt when f never changes
/// sign. The caller must sample densely enough that f crosses at most once
/// between neighboring samples.
std::optional<double> detect_sign_change(const Trajectory& traj,
                                         const std::function<double(const DensityMatrix&)>& f,
                                         const CouplingParams& refine, double timeTol = 1e-4);

}  // namespace vatoms
