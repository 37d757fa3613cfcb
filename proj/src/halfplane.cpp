#include "reinhardt/halfplane.hpp"

namespace reinhardt {

AlgebraElement x_of_z(const HalfPlanePoint& z) {
    double x = z.x, y = z.y;
    return AlgebraElement(x / y, -x * x / y - y, 1.0 / y);
}

HalfPlanePoint z_of_x(const AlgebraElement& X) {
    double c21 = X.m.c21;
    if (!(c21 > 0.0))
        throw Error(ErrorCode::NotPositivelyOriented, "c21(X) must be positive");
    if (std::abs(X.det() - 1.0) > 1e-6)
        throw Error(ErrorCode::InvalidArgument, "X is not on the unit-determinant orbit");
    double y = 1.0 / c21;
    double x = X.m.c11 / c21;
    return HalfPlanePoint(x, y);
}

HalfPlanePoint mobius(const GroupElement& g, const HalfPlanePoint& z) {
    double a = g.m.c11, b = g.m.c12, c = g.m.c21, d = g.m.c22;
    double x = z.x, y = z.y;
    double den = (c * x + d) * (c * x + d) + c * c * y * y;
    if (den < 1e-300) throw Error(ErrorCode::DegenerateDenominator, "mobius denominator vanished");
    double nx = (a * x + b) * (c * x + d) + a * c * y * y;
    double ny = (a * d - b * c) * y;
    return HalfPlanePoint(nx / den, ny / den);
}

LinMap2 mobius_jacobian(const GroupElement& g, const HalfPlanePoint& z) {
    // holomorphic map: f'(z) = det(g)/(cz+d)^2, realized as [[p,-q],[q,p]]
    double c = g.m.c21, d = g.m.c22;
    double wr = c * z.x + d, wi = c * z.y;       // cz + d
    double s2r = wr * wr - wi * wi, s2i = 2.0 * wr * wi;  // (cz+d)^2
    double n = s2r * s2r + s2i * s2i;
    if (n < 1e-300) throw Error(ErrorCode::DegenerateDenominator, "mobius jacobian denominator vanished");
    double det = g.m.det();
    double p = det * s2r / n, q = -det * s2i / n;
    return {p, -q, q, p};
}

DiskPoint disk_of_half(const HalfPlanePoint& z) {
    double x = z.x, y = z.y;
    double den = x * x + (y + 1.0) * (y + 1.0);
    return DiskPoint((x * x + y * y - 1.0) / den, -2.0 * x / den);
}

HalfPlanePoint half_of_disk(const DiskPoint& w) {
    double u = w.u, v = w.v;
    double den = (1.0 - u) * (1.0 - u) + v * v;
    if (den < 1e-300) throw Error(ErrorCode::DegenerateDenominator, "disk boundary point");
    return HalfPlanePoint(-2.0 * v / den, (1.0 - u * u - v * v) / den);
}

}  // namespace reinhardt
