#ifndef REINHARDT_COSTATE_HPP
#define REINHARDT_COSTATE_HPP

#include <functional>
#include <vector>

#include "reinhardt/links.hpp"
#include "reinhardt/ode.hpp"

namespace reinhardt {

struct Costate {
    AlgebraElement Lambda;
    double nu1 = 0.0;
    double nu2 = 0.0;
    double lambda_cost = -1.0;

    bool projectively_nonzero(double tol = 0.0) const {
        return std::abs(lambda_cost) > tol || Lambda.m.norm_inf() > tol ||
               std::abs(nu1) > tol || std::abs(nu2) > tol;
    }
};

// full state+costate point of the Hamiltonian system
struct LiftedState {
    GroupElement g;
    HalfPlanePoint z;
    Costate costate;
    double t = 0.0;
    double accumulated_cost = 0.0;
};

struct CanonicalPoint {
    double xi1 = 0.0, xi2 = 0.0, mu1 = 0.0, mu2 = 0.0;
};

struct SwitchingValues {
    double chi12 = 0.0, chi13 = 0.0, chi23 = 0.0;

    double chi(int i, int j) const {  // 1-based vertex indices
        if (i == j) return 0.0;
        if (i == 1 && j == 2) return chi12;
        if (i == 2 && j == 1) return -chi12;
        if (i == 1 && j == 3) return chi13;
        if (i == 3 && j == 1) return -chi13;
        if (i == 2 && j == 3) return chi23;
        return -chi23;
    }
};

// H = <Lambda - (3/2) lambda_cost J, X> + nu . f
double hamiltonian(const LiftedState& s, const Control& u);
double hamiltonian(const LiftedState& s, const ControlMatrix& Z0);
double hamiltonian_lie(const LiftedState& s);                     // <Lambda,X> - (3/2)lc<J,X>
double hamiltonian_h(const LiftedState& s, const Control& u);     // nu . f

struct AdjointRhs {
    AlgebraElement dLambda;
    double dnu1 = 0.0, dnu2 = 0.0;
};
// Lambda' = [Lambda, X], nu' = -dH/d(x,y) at fixed (Lambda, nu, u)
AdjointRhs adjoint_rhs(const LiftedState& s, const Control& u);

// chi_ij = H(e_i) - H(e_j); chi23 is derived as chi13 - chi12 so the cocycle
// identity holds exactly in floating point
SwitchingValues switching(const LiftedState& s);

// coordinates adapted to the switching functions; mu1, mu2 carry chi13, chi23
// up to known positive factors
CanonicalPoint canonical(const LiftedState& s);

// costate matching the circular singular arc: Lambda = -(3/2)J, nu = 0, z = i
LiftedState singular_state();

// distance of (Lambda, nu, z) to the singular locus (g is quotiented out)
double distance_to_singular(const LiftedState& s);

// nu2 along the e3 link started at the singular costate; negative for t > 0
double nu2_singular_link(double t);

// SO2 symmetry action: g -> rho g rho^-1, z -> rho.z, Lambda -> rho Lambda rho^-1,
// nu -> (F^t)^-1 nu with F = d(rho) at z
LiftedState rotate_lifted(const LiftedState& s, const GroupElement& rho);

// ---- numeric propagation of the full lifted system ----

using LiftedVec = std::array<double, 12>;

LiftedVec pack_lifted(const LiftedState& s);
LiftedState unpack_lifted(const LiftedVec& v, double lambda_cost, double t);
void lifted_rhs(const LiftedVec& v, const ControlMatrix& Z0, double lambda_cost, LiftedVec& out);

enum class StopReason { Completed, StarExit, DegenerateDenominator, StepSizeUnderflow };

struct PropagateOptions {
    double atol = 1e-10;
    double rtol = 1e-10;
    bool enforce_star = true;
    double star_margin = kDefaultStarMargin;
    std::vector<double> break_times;  // control-discontinuity times to land on exactly
};

struct PropagateResult {
    LiftedState final_state;
    std::vector<double> sample_times;
    std::vector<LiftedState> samples;
    StopReason reason = StopReason::Completed;
    double hamiltonian_initial = 0.0;
    double hamiltonian_drift = 0.0;  // max |H(t) - H(0)| over accepted steps
};

using ControlLaw = std::function<Control(double, const LiftedState&)>;

PropagateResult propagate(const LiftedState& s0, const ControlLaw& u_fn, double t0, double t1,
                          const PropagateOptions& opt = {},
                          const std::vector<double>& sample_times = {});

}  // namespace reinhardt

#endif
