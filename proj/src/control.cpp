#include "reinhardt/control.hpp"

namespace reinhardt {

namespace {
const double kSqrt3 = std::sqrt(3.0);

// shared denominator b + 2ax - cx^2 - cy^2; equals y*trace(Z0 X), negative inside the star
double field_denominator(const HalfPlanePoint& z, const ControlMatrix& Z0) {
    double x = z.x, y = z.y;
    double D = Z0.b + 2.0 * Z0.a * x - Z0.c * x * x - Z0.c * y * y;
    if (std::abs(D) < kDenominatorGuard)
        throw Error(ErrorCode::DegenerateDenominator,
                    "trace(Z0 X) vanished: trajectory reached the star boundary");
    return D;
}
}  // namespace

std::array<double, 2> hex_vertex(int j) {
    int jj = ((j % 6) + 6) % 6;
    double t = M_PI * jj / 3.0;
    return {std::cos(t), std::sin(t)};
}

ControlMatrix control_matrix(const Control& u) {
    ControlMatrix z;
    z.a = (u.u1 - u.u2) / kSqrt3;
    z.b = u.u0 / 3.0 - 2.0 * u.u1 / 3.0 - 2.0 * u.u2 / 3.0;
    z.c = u.u0;
    return z;
}

double control_matrix_residual(const Control& u, const ControlMatrix& Z0) {
    // wedge system: e_{2i} ^ Z0 e_{2i} = u_i for the even hexagon vertices
    Mat2 Z{Z0.a, Z0.b, Z0.c, -Z0.a};
    double r = 0.0;
    for (int i = 0; i < 3; ++i) {
        auto e = hex_vertex(2 * i);
        double zx = Z.c11 * e[0] + Z.c12 * e[1];
        double zy = Z.c21 * e[0] + Z.c22 * e[1];
        double wedge = e[0] * zy - e[1] * zx;
        r = std::max(r, std::abs(wedge - u[i]));
    }
    return r;
}

double delta(const ControlMatrix& Z0, const AlgebraElement& X) {
    double tr = 2.0 * Z0.a * X.m.c11 + Z0.b * X.m.c21 + Z0.c * X.m.c12;
    if (std::abs(tr) < kDenominatorGuard)
        throw Error(ErrorCode::DegenerateDenominator,
                    "trace(Z0 X) vanished: star boundary contact");
    return -2.0 / tr;
}

double delta(const Control& u, const AlgebraElement& X) { return delta(control_matrix(u), X); }

bool star_contains(const HalfPlanePoint& z, double margin) {
    double x = z.x, y = z.y;
    return (1.0 / kSqrt3 - std::abs(x) >= margin) && (x * x + y * y - 1.0 / 3.0 >= margin);
}

Velocity velocity(const HalfPlanePoint& z, const ControlMatrix& Z0) {
    double x = z.x, y = z.y;
    double D = field_denominator(z, Z0);
    Velocity v;
    v.f1 = y * (D + 2.0 * Z0.c * y * y) / D;
    v.f2 = 2.0 * (Z0.a - Z0.c * x) * y * y / D;
    return v;
}

Velocity velocity(const HalfPlanePoint& z, const Control& u) { return velocity(z, control_matrix(u)); }

VelocityJacobian velocity_jacobian(const HalfPlanePoint& z, const ControlMatrix& Z0) {
    double x = z.x, y = z.y;
    double a = Z0.a, c = Z0.c;
    double D = field_denominator(z, Z0);
    VelocityJacobian J;
    J.f1x = -4.0 * c * y * y * y * (a - c * x) / (D * D);
    J.f1y = 1.0 + 6.0 * c * y * y / D + 4.0 * c * c * y * y * y * y / (D * D);
    J.f2x = -2.0 * y * y * (c * D + 2.0 * (a - c * x) * (a - c * x)) / (D * D);
    J.f2y = 4.0 * (a - c * x) * y * (D + c * y * y) / (D * D);
    return J;
}

double cost_rate(const HalfPlanePoint& z) {
    return 1.5 * (z.x * z.x + z.y * z.y + 1.0) / z.y;
}

double curvature(const HalfPlanePoint& z, const Control& u, int branch) {
    if (branch < 0 || branch > 2)
        throw Error(ErrorCode::InvalidArgument, "branch index must be 0, 1 or 2");
    AlgebraElement X = x_of_z(z);
    double d = delta(u, X);
    auto e = hex_vertex(2 * branch);
    double sx = X.m.c11 * e[0] + X.m.c12 * e[1];
    double sy = X.m.c21 * e[0] + X.m.c22 * e[1];
    double speed = std::sqrt(sx * sx + sy * sy);  // |g' e_{2i}| at g = I
    return d * u[branch] / (speed * speed * speed);
}

}  // namespace reinhardt
