#ifndef REINHARDT_MAT2_HPP
#define REINHARDT_MAT2_HPP

#include <cmath>
#include <cstdlib>

#include "reinhardt/errors.hpp"

namespace reinhardt {

// 2x2 real matrix stored as four scalars by value. All operations pure.
struct Mat2 {
    double c11 = 0.0, c12 = 0.0, c21 = 0.0, c22 = 0.0;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {0.0, 0.0, 0.0, 0.0}; }

    double trace() const { return c11 + c22; }
    double det() const { return c11 * c22 - c12 * c21; }

    Mat2 transpose() const { return {c11, c21, c12, c22}; }

    // adjugate-based inverse
    Mat2 inverse() const {
        double d = det();
        if (std::abs(d) < 1e-300)
            throw Error(ErrorCode::DegenerateDenominator, "singular 2x2 matrix");
        return {c22 / d, -c12 / d, -c21 / d, c11 / d};
    }

    Mat2 operator+(const Mat2& o) const { return {c11 + o.c11, c12 + o.c12, c21 + o.c21, c22 + o.c22}; }
    Mat2 operator-(const Mat2& o) const { return {c11 - o.c11, c12 - o.c12, c21 - o.c21, c22 - o.c22}; }
    Mat2 operator*(const Mat2& o) const {
        return {c11 * o.c11 + c12 * o.c21, c11 * o.c12 + c12 * o.c22,
                c21 * o.c11 + c22 * o.c21, c21 * o.c12 + c22 * o.c22};
    }
    Mat2 operator*(double s) const { return {c11 * s, c12 * s, c21 * s, c22 * s}; }
    Mat2 operator-() const { return {-c11, -c12, -c21, -c22}; }

    double norm_inf() const {
        double m = std::abs(c11);
        m = std::max(m, std::abs(c12));
        m = std::max(m, std::abs(c21));
        m = std::max(m, std::abs(c22));
        return m;
    }
};

inline Mat2 operator*(double s, const Mat2& m) { return m * s; }

// trace inner product <A,B> = trace(AB)
inline double inner(const Mat2& a, const Mat2& b) {
    return a.c11 * b.c11 + a.c12 * b.c21 + a.c21 * b.c12 + a.c22 * b.c22;
}

inline Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

// J = [[0,-1],[1,0]], infinitesimal counterclockwise rotation
inline Mat2 mat_J() { return {0.0, -1.0, 1.0, 0.0}; }

// Mat2 in the SL2 role; |det - 1| <= 1e-9 tolerated, renormalizable after long
// composition chains.
struct GroupElement {
    Mat2 m;

    GroupElement() : m(Mat2::identity()) {}
    explicit GroupElement(const Mat2& mm) : m(mm) {
        if (std::abs(m.det() - 1.0) > 1e-9)
            throw Error(ErrorCode::InvalidArgument, "GroupElement determinant drifted beyond 1e-9");
    }

    static GroupElement identity() { return GroupElement(); }

    GroupElement operator*(const GroupElement& o) const {
        GroupElement g;
        g.m = m * o.m;
        g.renormalize();
        return g;
    }

    GroupElement inverse() const {
        // det = 1: adjugate
        GroupElement g;
        g.m = {m.c22, -m.c12, -m.c21, m.c11};
        return g;
    }

    // project back to det 1 by dividing by sqrt(det) once drift exceeds 1e-12
    void renormalize() {
        double d = m.det();
        if (std::abs(d - 1.0) > 1e-12 && d > 0.0) m = m * (1.0 / std::sqrt(d));
    }
};

// Mat2 in the sl2 role; trace must vanish at construction.
struct AlgebraElement {
    Mat2 m;

    AlgebraElement() : m(Mat2::zero()) {}
    explicit AlgebraElement(const Mat2& mm) : m(mm) {
        if (std::abs(m.trace()) > 1e-12)
            throw Error(ErrorCode::InvalidArgument, "AlgebraElement trace exceeds 1e-12");
    }
    // entries (c11, c12, c21) with c22 = -c11 implied
    AlgebraElement(double a, double b, double c) : m{a, b, c, -a} {}

    double det() const { return m.det(); }
};

inline AlgebraElement conjugate(const GroupElement& g, const AlgebraElement& x) {
    Mat2 r = g.m * x.m * g.inverse().m;
    // symmetrize away the trace roundoff so the sl2 invariant holds exactly
    double t = 0.5 * r.trace();
    return AlgebraElement(Mat2{r.c11 - t, r.c12, r.c21, r.c22 - t});
}

// rot(theta) = exp(J theta), counterclockwise
inline GroupElement rot(double theta) {
    GroupElement g;
    double c = std::cos(theta), s = std::sin(theta);
    g.m = {c, -s, s, c};
    return g;
}

inline GroupElement rot_R() { return rot(M_PI / 3.0); }      // R = exp(J pi/3)
inline GroupElement rot_R_pow(int k) { return rot(k * M_PI / 3.0); }

}  // namespace reinhardt

#endif
