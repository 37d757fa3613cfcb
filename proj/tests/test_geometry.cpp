#include "doctest.h"
#include "oracles.hpp"
#include "reinhardt/halfplane.hpp"

using namespace reinhardt;

TEST_CASE("rot basics") {
    CHECK((rot(0.0).m - Mat2::identity()).norm_inf() == 0.0);
    CHECK(rot(M_PI / 3.0).m.trace() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((rot(M_PI).m + Mat2::identity()).norm_inf() < 1e-15);
    CHECK(rot(0.7).m.det() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("rot is a homomorphism") {
    oracles::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        double a = rng.uniform(-10.0, 10.0), b = rng.uniform(-10.0, 10.0);
        CHECK(((rot(a) * rot(b)).m - rot(a + b).m).norm_inf() <= 1e-12);
    }
}

TEST_CASE("x_of_z entries and invariants") {
    AlgebraElement J(x_of_z(HalfPlanePoint(0.0, 1.0)));
    CHECK((J.m - mat_J()).norm_inf() < 1e-15);

    AlgebraElement X = x_of_z(HalfPlanePoint(0.5, 1.0));
    CHECK(X.m.c11 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(X.m.c12 == doctest::Approx(-1.25).epsilon(1e-15));
    CHECK(X.m.c21 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(X.m.c22 == doctest::Approx(-0.5).epsilon(1e-15));

    oracles::Rng rng(12);
    for (int i = 0; i < 1000; ++i) {
        HalfPlanePoint z(rng.uniform(-5.0, 5.0), rng.uniform(0.05, 10.0));
        AlgebraElement A = x_of_z(z);
        CHECK(std::abs(A.det() - 1.0) <= 1e-12);
        CHECK(std::abs(A.m.trace()) <= 1e-12);
        CHECK(A.m.c21 > 0.0);
    }
}

TEST_CASE("z_of_x inverts x_of_z") {
    HalfPlanePoint i0 = z_of_x(AlgebraElement(mat_J()));
    CHECK(i0.x == 0.0);
    CHECK(i0.y == 1.0);

    oracles::Rng rng(13);
    for (int i = 0; i < 500; ++i) {
        HalfPlanePoint z(rng.uniform(-5.0, 5.0), rng.uniform(0.05, 10.0));
        HalfPlanePoint back = z_of_x(x_of_z(z));
        CHECK(std::abs(back.x - z.x) <= 1e-12 * std::max(1.0, std::abs(z.x)));
        CHECK(std::abs(back.y - z.y) <= 1e-12 * z.y);
    }

    CHECK_THROWS_AS(z_of_x(AlgebraElement(0.0, 1.0, -1.0)), Error);
}

TEST_CASE("mobius action") {
    oracles::Rng rng(14);
    HalfPlanePoint z(0.3, 0.8);
    HalfPlanePoint same = mobius(GroupElement::identity(), z);
    CHECK(same.x == doctest::Approx(z.x).epsilon(1e-15));
    CHECK(same.y == doctest::Approx(z.y).epsilon(1e-15));

    for (int i = 0; i < 50; ++i) {
        HalfPlanePoint fixed = mobius(rot(rng.uniform(-3.0, 3.0)), HalfPlanePoint(0.0, 1.0));
        CHECK(std::abs(fixed.x) < 1e-14);
        CHECK(std::abs(fixed.y - 1.0) < 1e-14);
    }

    // normalized upper-triangular zhat moves i to x + iy
    for (int i = 0; i < 50; ++i) {
        double x = rng.uniform(-2.0, 2.0), y = rng.uniform(0.1, 4.0);
        double s = std::sqrt(y);
        GroupElement zhat(Mat2{s, x / s, 0.0, 1.0 / s});
        HalfPlanePoint img = mobius(zhat, HalfPlanePoint(0.0, 1.0));
        CHECK(img.x == doctest::Approx(x).epsilon(1e-13));
        CHECK(img.y == doctest::Approx(y).epsilon(1e-13));
    }

    // left action law and preservation of y > 0
    for (int i = 0; i < 200; ++i) {
        GroupElement g1 = rot(rng.uniform(-3, 3)) *
                          GroupElement(Mat2{1.0, rng.uniform(-1, 1), 0.0, 1.0});
        double lam = std::exp(rng.uniform(-0.5, 0.5));
        GroupElement g2(Mat2{lam, 0.0, 0.0, 1.0 / lam});
        HalfPlanePoint z2(rng.uniform(-2, 2), rng.uniform(0.1, 3.0));
        HalfPlanePoint a = mobius(g1 * g2, z2);
        HalfPlanePoint b = mobius(g1, mobius(g2, z2));
        CHECK(std::abs(a.x - b.x) <= 1e-11 * std::max(1.0, std::abs(a.x)));
        CHECK(std::abs(a.y - b.y) <= 1e-11 * a.y);
        CHECK(a.y > 0.0);
    }
}

TEST_CASE("mobius jacobian against finite differences") {
    oracles::Rng rng(15);
    LinMap2 id = mobius_jacobian(GroupElement::identity(), HalfPlanePoint(0.4, 0.9));
    CHECK(id.a11 == doctest::Approx(1.0));
    CHECK(id.a12 == doctest::Approx(0.0));
    CHECK(id.a21 == doctest::Approx(0.0));
    CHECK(id.a22 == doctest::Approx(1.0));

    for (int i = 0; i < 100; ++i) {
        GroupElement g = rot(rng.uniform(-3, 3)) * GroupElement(Mat2{1.0, rng.uniform(-1, 1), 0.0, 1.0});
        HalfPlanePoint z(rng.uniform(-2, 2), rng.uniform(0.2, 3.0));
        LinMap2 Jm = mobius_jacobian(g, z);

        HalfPlanePoint w = mobius(g, z);
        CHECK(Jm.det() == doctest::Approx(w.y * w.y / (z.y * z.y)).epsilon(1e-9));
        CHECK(Jm.det() > 0.0);

        auto fx = [&](double x) { return mobius(g, HalfPlanePoint(x, z.y)); };
        auto fy = [&](double y) { return mobius(g, HalfPlanePoint(z.x, y)); };
        double h = 1e-6;
        CHECK(Jm.a11 == doctest::Approx((fx(z.x + h).x - fx(z.x - h).x) / (2 * h)).epsilon(1e-7));
        CHECK(Jm.a21 == doctest::Approx((fx(z.x + h).y - fx(z.x - h).y) / (2 * h)).epsilon(1e-7));
        CHECK(Jm.a12 == doctest::Approx((fy(z.y + h).x - fy(z.y - h).x) / (2 * h)).epsilon(1e-7));
        CHECK(Jm.a22 == doctest::Approx((fy(z.y + h).y - fy(z.y - h).y) / (2 * h)).epsilon(1e-7));
    }

    // chain rule
    for (int i = 0; i < 100; ++i) {
        GroupElement g1 = rot(rng.uniform(-3, 3));
        GroupElement g2(Mat2{1.0, rng.uniform(-1, 1), 0.0, 1.0});
        HalfPlanePoint z(rng.uniform(-2, 2), rng.uniform(0.2, 3.0));
        LinMap2 A = mobius_jacobian(g1 * g2, z);
        LinMap2 B = mobius_jacobian(g1, mobius(g2, z));
        LinMap2 C = mobius_jacobian(g2, z);
        CHECK(std::abs(A.a11 - (B.a11 * C.a11 + B.a12 * C.a21)) <= 1e-9);
        CHECK(std::abs(A.a12 - (B.a11 * C.a12 + B.a12 * C.a22)) <= 1e-9);
        CHECK(std::abs(A.a21 - (B.a21 * C.a11 + B.a22 * C.a21)) <= 1e-9);
        CHECK(std::abs(A.a22 - (B.a21 * C.a12 + B.a22 * C.a22)) <= 1e-9);
    }
}

TEST_CASE("half-plane and disk models") {
    DiskPoint w0 = disk_of_half(HalfPlanePoint(0.0, 1.0));
    CHECK(std::abs(w0.u) < 1e-15);
    CHECK(std::abs(w0.v) < 1e-15);

    oracles::Rng rng(16);
    for (int i = 0; i < 300; ++i) {
        HalfPlanePoint z(rng.uniform(-4, 4), rng.uniform(0.05, 8.0));
        HalfPlanePoint back = half_of_disk(disk_of_half(z));
        CHECK(std::abs(back.x - z.x) <= 1e-14 * std::max(1.0, std::abs(z.x)));
        CHECK(std::abs(back.y - z.y) <= 1e-14 * std::max(1.0, z.y));
    }

    // the star's finite ideal vertices land on the nontrivial cube roots of unity
    const double r3 = std::sqrt(3.0);
    for (double sgn : {1.0, -1.0}) {
        double x = sgn / r3;
        // boundary evaluation of w = (z - i)/(z + i) at z = x + 0i
        double den = x * x + 1.0;
        double u = (x * x - 1.0) / den, v = -2.0 * x / den;
        CHECK(u == doctest::Approx(-0.5).epsilon(1e-14));
        CHECK(v == doctest::Approx(-sgn * r3 / 2.0).epsilon(1e-14));
        // approach along y -> 0 through the model map
        DiskPoint w = disk_of_half(HalfPlanePoint(x, 1e-9));
        CHECK(w.u == doctest::Approx(u).epsilon(1e-8));
        CHECK(w.v == doctest::Approx(v).epsilon(1e-8));
    }
}

TEST_CASE("rotation equivariance of the orbit map") {
    oracles::Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        HalfPlanePoint z(rng.uniform(-2, 2), rng.uniform(0.1, 4.0));
        GroupElement rho = rot(rng.uniform(-3.0, 3.0));
        AlgebraElement X = x_of_z(z);
        HalfPlanePoint a = z_of_x(conjugate(rho, X));
        HalfPlanePoint b = mobius(rho, z);
        CHECK(std::abs(a.x - b.x) <= 1e-11 * std::max(1.0, std::abs(b.x)));
        CHECK(std::abs(a.y - b.y) <= 1e-11 * b.y);
    }
}
