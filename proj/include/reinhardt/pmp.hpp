#ifndef REINHARDT_PMP_HPP
#define REINHARDT_PMP_HPP

#include <optional>
#include <string>

#include "reinhardt/costate.hpp"
#include "reinhardt/polygon.hpp"

namespace reinhardt {

// dense record of the costate along the first link, extendable to t < 0
class LinkCostateTrace {
  public:
    LinkCostateTrace(PolygonFamily family, double y_k, Costate c0, double solve_residual);

    PolygonFamily family() const { return family_; }
    double y_k() const { return y_k_; }
    double t_k() const { return t_k_; }
    const Costate& initial() const { return c0_; }
    double solve_residual() const { return residual_; }

    Costate at(double t) const;
    double nu2_at(double t) const { return at(t).nu2; }
    LiftedState lifted_at(double t) const;  // state from the closed-form link

  private:
    void extend_to(double t) const;

    PolygonFamily family_;
    double y_k_, t_k_;
    Costate c0_;
    double residual_;
    mutable std::vector<Rk45<5>::Segment> fwd_, bwd_;
    mutable double t_lo_ = 0.0, t_hi_ = 0.0;
};

// Solve the five-equation linear system for the initial costate of the
// periodic link: two entries of Lambda(t_k) = Q^-1... (transversality over the
// reduced period), vanishing Hamiltonian at t = 0, and the nu transversality
// F^t nu(t_k) = nu(0). lambda_cost is pinned to -1.
LinkCostateTrace solve_link_costate(PolygonFamily family, double y_k);

Costate solve_costate_bvp(const SmoothedPolygon& p, double* residual = nullptr);

enum class MultiplierSign { Normal, Abnormal, WrongSign };

inline const char* multiplier_sign_name(MultiplierSign m) {
    switch (m) {
        case MultiplierSign::Normal: return "normal";
        case MultiplierSign::Abnormal: return "abnormal";
        default: return "wrong_sign";
    }
}

struct ExtremalityReport {
    std::string family;
    int k = 0;
    MultiplierSign lambda_cost_sign = MultiplierSign::Normal;
    double hamiltonian_sup_norm = 0.0;
    std::vector<double> switching_margins;  // per link, min over interior samples
    double dominance_gap = 0.0;             // min of switching_margins
    double transversality_lambda = 0.0;     // full period
    double transversality_nu = 0.0;
    double bvp_residual = 0.0;              // reduced period, from the solve
    double nu2_min = 0.0;
    bool nu2_interior_zero_free = true;
    double switch_point_residual = 0.0;     // |chi(active,next)| at the switch times
    double time_symmetry_residual = 0.0;    // chi_{e1}(t_k - t) = chi_{e2}(t), Plus family
    double det_lambda_drift = 0.0;
    bool pass = false;
    std::vector<std::string> reasons;
};

struct VerifyOptions {
    double atol = 1e-12;
    double rtol = 1e-12;
    int margin_samples = 257;    // per link, interior dominance grid
    int nu2_samples = 10001;     // first-link nu2 grid
    double h_tol = 1e-8;
    double transversality_tol = 1e-8;
    double nu2_tol = 1e-10;
};

// Propagate the lifted trajectory over the full period with the schedule's
// vertex controls and check every PMP condition. A dominance pattern that is
// exactly reversed and repaired by flipping the costate sign is classified as
// the wrong-sign multiplier.
ExtremalityReport verify_extremal(const SmoothedPolygon& p, const Costate& c0,
                                  const VerifyOptions& opt = {});

// positivity diagnostic: f(y, v) = 3 sqrt3 y0^5 v^2 nu2 on the triangle
// y, v in [2 sqrt2, 4], y <= v; y determines the link height, v the time
double f_triangle(double y, double v, double y0);
double f_triangle(double y, double v);  // y0 = sqrt((y-1)/3)
double f_triangle_from_trace(const LinkCostateTrace& tr, double y, double v, double y0);

// closed-form diagonal slope of the positivity diagnostic
inline double f_triangle_diagonal_slope(double y) {
    return y * ((y - 4.0) + y * std::log(4.0 / y));
}

struct DeformationQuadratic {
    double b1 = 0.0;                   // first-order cost response, zero for an extremal
    double b2 = 0.0;                   // cost''(0) along the family (strictly positive here)
    std::array<double, 4> a_first{};   // a_1^1..a_4^1
    std::array<double, 7> eta1{};      // sample offsets used for the fit
    std::array<double, 7> cost{};      // matching total costs
    double base_cost = 0.0;
};

// One-dimensional family of endpoint-preserving deformations of the smoothed
// octagon: solve the five closure equations for (eta_2..eta_6) as functions of
// eta_1 by Newton continuation, then fit the cost to a quadratic in eta_1.
DeformationQuadratic local_deformation_quadratic(const SmoothedPolygon& octagon);

}  // namespace reinhardt

#endif
