#ifndef REINHARDT_HALFPLANE_HPP
#define REINHARDT_HALFPLANE_HPP

#include "reinhardt/mat2.hpp"

namespace reinhardt {

// z = x + iy with y > 0
struct HalfPlanePoint {
    double x = 0.0;
    double y = 1.0;

    HalfPlanePoint() = default;
    HalfPlanePoint(double xx, double yy) : x(xx), y(yy) {
        if (!(y > 0.0)) throw Error(ErrorCode::InvalidArgument, "half-plane point needs y > 0");
    }
};

// w = u + iv with |w| < 1
struct DiskPoint {
    double u = 0.0;
    double v = 0.0;

    DiskPoint() = default;
    DiskPoint(double uu, double vv) : u(uu), v(vv) {
        if (!(u * u + v * v < 1.0))
            throw Error(ErrorCode::InvalidArgument, "disk point needs |w| < 1");
    }
};

// real 2x2 linear map between tangent planes
struct LinMap2 {
    double a11 = 1.0, a12 = 0.0, a21 = 0.0, a22 = 1.0;

    double det() const { return a11 * a22 - a12 * a21; }
    LinMap2 transpose() const { return {a11, a21, a12, a22}; }
    LinMap2 inverse() const {
        double d = det();
        if (std::abs(d) < 1e-300) throw Error(ErrorCode::DegenerateDenominator, "singular tangent map");
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }
    // apply to a (dx, dy) pair
    void apply(double x, double y, double& ox, double& oy) const {
        ox = a11 * x + a12 * y;
        oy = a21 * x + a22 * y;
    }
};

// X(x,y) = zhat J zhat^-1, the adjoint-orbit point over z
AlgebraElement x_of_z(const HalfPlanePoint& z);

// inverse of x_of_z; requires c21 > 0, det ~ 1, trace ~ 0
HalfPlanePoint z_of_x(const AlgebraElement& X);

// linear fractional action z -> (az+b)/(cz+d)
HalfPlanePoint mobius(const GroupElement& g, const HalfPlanePoint& z);

// real derivative of z -> g.z at z (complex derivative det/(cz+d)^2 as a real map)
LinMap2 mobius_jacobian(const GroupElement& g, const HalfPlanePoint& z);

// Cayley maps between the half-plane and the Poincare disk: w = (z-i)/(z+i)
DiskPoint disk_of_half(const HalfPlanePoint& z);
HalfPlanePoint half_of_disk(const DiskPoint& w);

}  // namespace reinhardt

#endif
