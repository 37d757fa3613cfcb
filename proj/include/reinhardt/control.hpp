#ifndef REINHARDT_CONTROL_HPP
#define REINHARDT_CONTROL_HPP

#include <array>

#include "reinhardt/halfplane.hpp"

namespace reinhardt {

// barycentric point of the control 2-simplex U
struct Control {
    double u0 = 0.0, u1 = 0.0, u2 = 0.0;

    Control() = default;
    Control(double a, double b, double c) : u0(a), u1(b), u2(c) {
        if (std::abs(u0 + u1 + u2 - 1.0) > 1e-12 || u0 < -1e-15 || u1 < -1e-15 || u2 < -1e-15)
            throw Error(ErrorCode::InvalidArgument, "control must be a barycentric triple on U");
    }

    static Control e1() { return {1.0, 0.0, 0.0}; }
    static Control e2() { return {0.0, 1.0, 0.0}; }
    static Control e3() { return {0.0, 0.0, 1.0}; }
    static Control barycenter() { return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}; }

    double operator[](int i) const { return i == 0 ? u0 : (i == 1 ? u1 : u2); }
};

// Z0(u) = [[a, b], [c, -a]]
struct ControlMatrix {
    double a = 0.0, b = 0.0, c = 0.0;

    AlgebraElement as_algebra() const { return AlgebraElement(a, b, c); }
};

// planar rates (dx/dt, dy/dt)
struct Velocity {
    double f1 = 0.0, f2 = 0.0;
};

// hexagon vertex e_j = (cos(pi j/3), sin(pi j/3))
std::array<double, 2> hex_vertex(int j);

// closed-form entries a = (u1-u2)/sqrt3, b = u0/3 - 2u1/3 - 2u2/3, c = u0
ControlMatrix control_matrix(const Control& u);

// residual of the wedge system e_{2i} ^ Z0 e_{2i} = u_i (diagnostic)
double control_matrix_residual(const Control& u, const ControlMatrix& Z0);

// normalization delta = -2/trace(Z0 X); positive inside the star region
double delta(const Control& u, const AlgebraElement& X);
double delta(const ControlMatrix& Z0, const AlgebraElement& X);

// open ideal-triangle membership with slack >= margin on both inequalities
bool star_contains(const HalfPlanePoint& z, double margin = 0.0);

// state vector field on the half-plane
Velocity velocity(const HalfPlanePoint& z, const Control& u);
Velocity velocity(const HalfPlanePoint& z, const ControlMatrix& Z0);

// partial derivatives of (f1, f2) in (x, y) at fixed control
struct VelocityJacobian {
    double f1x, f1y, f2x, f2y;
};
VelocityJacobian velocity_jacobian(const HalfPlanePoint& z, const ControlMatrix& Z0);

// (3/2)(x^2 + y^2 + 1)/y, the area integrand; >= 3 with equality only at i
double cost_rate(const HalfPlanePoint& z);

// curvature of the 2i-th boundary branch at g = I
double curvature(const HalfPlanePoint& z, const Control& u, int branch);

constexpr double kDenominatorGuard = 1e-10;
constexpr double kDefaultStarMargin = 1e-8;

}  // namespace reinhardt

#endif
