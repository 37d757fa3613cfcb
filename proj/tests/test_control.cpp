#include "doctest.h"
#include "oracles.hpp"
#include "reinhardt/control.hpp"

using namespace reinhardt;

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

TEST_CASE("control matrix closed form") {
    ControlMatrix zc = control_matrix(Control::barycenter());
    CHECK(zc.a == doctest::Approx(0.0));
    CHECK(zc.b == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK(zc.c == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK((zc.as_algebra().m - mat_J() * (1.0 / 3.0)).norm_inf() < 1e-16);

    ControlMatrix z1 = control_matrix(Control::e1());
    CHECK(z1.a == 0.0);
    CHECK(z1.b == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(z1.c == 1.0);

    ControlMatrix z3 = control_matrix(Control::e3());
    CHECK(z3.a == doctest::Approx(-1.0 / kSqrt3).epsilon(1e-15));
    CHECK(z3.b == doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
    CHECK(z3.c == 0.0);
    CHECK(z3.b / (2.0 * z3.a) == doctest::Approx(1.0 / kSqrt3).epsilon(1e-15));  // m = 1/sqrt3
}

TEST_CASE("control matrix solves the wedge system and is affine") {
    oracles::Rng rng(21);
    for (int i = 0; i < 300; ++i) {
        Control u = rng.control();
        CHECK(control_matrix_residual(u, control_matrix(u)) <= 1e-15);
    }
    for (int i = 0; i < 300; ++i) {
        Control u = rng.control(), v = rng.control();
        double s = rng.uniform(0.0, 1.0);
        Control mix(s * u.u0 + (1 - s) * v.u0, s * u.u1 + (1 - s) * v.u1,
                    s * u.u2 + (1 - s) * v.u2);
        ControlMatrix zm = control_matrix(mix);
        ControlMatrix zu = control_matrix(u), zv = control_matrix(v);
        CHECK(std::abs(zm.a - (s * zu.a + (1 - s) * zv.a)) <= 1e-15);
        CHECK(std::abs(zm.b - (s * zu.b + (1 - s) * zv.b)) <= 1e-15);
        CHECK(std::abs(zm.c - (s * zu.c + (1 - s) * zv.c)) <= 1e-15);
    }
}

TEST_CASE("delta normalization") {
    AlgebraElement J(mat_J());
    SUBCASE("circle: delta = 3 and delta Z0 = J") {
        double d = delta(Control::barycenter(), J);
        CHECK(d == doctest::Approx(3.0).epsilon(1e-14));
        Mat2 dz = control_matrix(Control::barycenter()).as_algebra().m * d;
        CHECK((dz - mat_J()).norm_inf() <= 1e-14);
        // X' = X (delta Z0 - X) vanishes on the circle
        Mat2 xp = J.m * (dz - J.m);
        CHECK(xp.norm_inf() <= 1e-14);
    }
    SUBCASE("vertex control at J") {
        CHECK(delta(Control::e3(), J) == doctest::Approx(3.0).epsilon(1e-14));
    }
    SUBCASE("degenerate denominator at the star boundary") {
        // e3 has trace(Z0 X) = 0 exactly on the line x = -1/sqrt3
        AlgebraElement X = x_of_z(HalfPlanePoint(-1.0 / kSqrt3, 0.8));
        CHECK_THROWS_AS(delta(Control::e3(), X), Error);
    }
    SUBCASE("negative trace throughout the star") {
        oracles::Rng rng(22);
        for (int i = 0; i < 300; ++i) {
            AlgebraElement X = x_of_z(rng.star_point(1e-6));
            for (const Control& u : {Control::e1(), Control::e2(), Control::e3(), rng.control()}) {
                ControlMatrix z0 = control_matrix(u);
                double tr = 2.0 * z0.a * X.m.c11 + z0.b * X.m.c21 + z0.c * X.m.c12;
                CHECK(tr < 0.0);
                CHECK(delta(u, X) > 0.0);
            }
        }
    }
}

TEST_CASE("star region membership") {
    CHECK(star_contains(HalfPlanePoint(0.0, 1.0)));
    CHECK_FALSE(star_contains(HalfPlanePoint(0.6, 0.1)));
    CHECK_FALSE(star_contains(HalfPlanePoint(0.0, 0.5)));
    CHECK(star_contains(HalfPlanePoint(0.0, 1.0), 0.1));
    CHECK_FALSE(star_contains(HalfPlanePoint(0.57, 1.0), 0.01));
}

TEST_CASE("velocity field") {
    Velocity v0 = velocity(HalfPlanePoint(0.0, 1.0), Control::barycenter());
    CHECK(std::abs(v0.f1) <= 1e-15);
    CHECK(std::abs(v0.f2) <= 1e-15);

    Velocity v3 = velocity(HalfPlanePoint(0.0, 1.0), Control::e3());
    CHECK(v3.f1 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(v3.f2 == doctest::Approx(kSqrt3).epsilon(1e-14));
}

TEST_CASE("velocity set is the convex hull of the vertex velocities") {
    oracles::Rng rng(23);
    for (int i = 0; i < 1000; ++i) {
        HalfPlanePoint z = rng.star_point(1e-4);
        Control u = rng.control();
        Velocity w = velocity(z, u);
        Velocity v1 = velocity(z, Control::e1());
        Velocity v2 = velocity(z, Control::e2());
        Velocity v3 = velocity(z, Control::e3());
        // barycentric solve in the vertex triangle
        double a11 = v1.f1 - v3.f1, a12 = v2.f1 - v3.f1;
        double a21 = v1.f2 - v3.f2, a22 = v2.f2 - v3.f2;
        double det = a11 * a22 - a12 * a21;
        REQUIRE(std::abs(det) > 1e-14);
        double b1 = w.f1 - v3.f1, b2 = w.f2 - v3.f2;
        double l1 = (b1 * a22 - b2 * a12) / det;
        double l2 = (a11 * b2 - a21 * b1) / det;
        double l3 = 1.0 - l1 - l2;
        CHECK(l1 >= -1e-9);
        CHECK(l2 >= -1e-9);
        CHECK(l3 >= -1e-9);
        CHECK(std::abs(l1 * v1.f1 + l2 * v2.f1 + l3 * v3.f1 - w.f1) <= 1e-9);
        CHECK(std::abs(l1 * v1.f2 + l2 * v2.f2 + l3 * v3.f2 - w.f2) <= 1e-9);
    }
}

TEST_CASE("velocity is monotone along control segments") {
    oracles::Rng rng(24);
    for (int i = 0; i < 100; ++i) {
        HalfPlanePoint z = rng.star_point(1e-3);
        Control u = rng.control(), v = rng.control();
        double prev1 = 0.0, prev2 = 0.0;
        int sign1 = 0, sign2 = 0;
        bool ok = true;
        for (int j = 0; j <= 20; ++j) {
            double s = j / 20.0;
            Control mix(s * u.u0 + (1 - s) * v.u0, s * u.u1 + (1 - s) * v.u1,
                        s * u.u2 + (1 - s) * v.u2);
            Velocity w = velocity(z, mix);
            if (j > 0) {
                double d1 = w.f1 - prev1, d2 = w.f2 - prev2;
                if (std::abs(d1) > 1e-12) {
                    int s1 = d1 > 0 ? 1 : -1;
                    if (sign1 != 0 && s1 != sign1) ok = false;
                    sign1 = s1;
                }
                if (std::abs(d2) > 1e-12) {
                    int s2 = d2 > 0 ? 1 : -1;
                    if (sign2 != 0 && s2 != sign2) ok = false;
                    sign2 = s2;
                }
            }
            prev1 = w.f1;
            prev2 = w.f2;
        }
        CHECK(ok);
    }
}

TEST_CASE("velocity jacobian matches finite differences") {
    oracles::Rng rng(25);
    for (int i = 0; i < 200; ++i) {
        HalfPlanePoint z = rng.star_point(1e-3);
        ControlMatrix z0 = control_matrix(rng.control());
        VelocityJacobian J = velocity_jacobian(z, z0);
        double h = 1e-6;
        auto f1x = oracles::fd([&](double x) { return velocity(HalfPlanePoint(x, z.y), z0).f1; }, z.x, h);
        auto f1y = oracles::fd([&](double y) { return velocity(HalfPlanePoint(z.x, y), z0).f1; }, z.y, h);
        auto f2x = oracles::fd([&](double x) { return velocity(HalfPlanePoint(x, z.y), z0).f2; }, z.x, h);
        auto f2y = oracles::fd([&](double y) { return velocity(HalfPlanePoint(z.x, y), z0).f2; }, z.y, h);
        double scale = std::max({1.0, std::abs(f1x), std::abs(f1y), std::abs(f2x), std::abs(f2y)});
        CHECK(std::abs(J.f1x - f1x) / scale <= 1e-6);
        CHECK(std::abs(J.f1y - f1y) / scale <= 1e-6);
        CHECK(std::abs(J.f2x - f2x) / scale <= 1e-6);
        CHECK(std::abs(J.f2y - f2y) / scale <= 1e-6);
    }
}

TEST_CASE("cost rate") {
    CHECK(cost_rate(HalfPlanePoint(0.0, 1.0)) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(cost_rate(HalfPlanePoint(0.0, 2.0)) == doctest::Approx(15.0 / 4.0).epsilon(1e-15));

    oracles::Rng rng(26);
    for (int i = 0; i < 500; ++i) {
        HalfPlanePoint z(rng.uniform(-3, 3), rng.uniform(0.05, 6.0));
        CHECK(cost_rate(z) >= 3.0 - 1e-12);
        GroupElement rho = rot(rng.uniform(-3, 3));
        CHECK(std::abs(cost_rate(mobius(rho, z)) - cost_rate(z)) <=
              1e-10 * std::max(1.0, cost_rate(z)));
    }
}

TEST_CASE("branch curvature") {
    for (int branch = 0; branch < 3; ++branch)
        CHECK(curvature(HalfPlanePoint(0.0, 1.0), Control::barycenter(), branch) ==
              doctest::Approx(1.0).epsilon(1e-13));
    CHECK(curvature(HalfPlanePoint(0.0, 1.0), Control::e3(), 0) == 0.0);

    oracles::Rng rng(27);
    for (int i = 0; i < 300; ++i) {
        HalfPlanePoint z = rng.star_point(1e-4);
        Control u = rng.control();
        for (int branch = 0; branch < 3; ++branch) CHECK(curvature(z, u, branch) >= -1e-12);
    }
}
