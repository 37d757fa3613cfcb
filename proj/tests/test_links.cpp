#include "doctest.h"
#include "oracles.hpp"
#include "reinhardt/links.hpp"

using namespace reinhardt;

namespace {
const double kSqrt3 = std::sqrt(3.0);
const double kM3 = 1.0 / kSqrt3;

Schedule octagon_schedule(double t1) {
    Schedule s;
    s.items = {{0, t1}, {-1, t1}, {-2, t1}, {-3, t1}};
    return s;
}
const double kOctT = 0.25630473984319778;  // link duration of the smoothed octagon
const double kOctY = 0.78068925203869058;

struct LinkSample {
    reinhardt::HalfPlanePoint z0{0.0, 1.0};
    double m = kM3;
    double t = 0.1;
};

// admissible random link: the whole segment stays inside the star, which keeps
// alpha moderate and the cost rate bounded
LinkSample sample_link(oracles::Rng& rng, double t_lo = 0.01, double t_hi = 0.5) {
    for (;;) {
        LinkSample s;
        s.z0 = rng.star_point(1e-2);
        s.m = rng.uniform(0.0, 1.0) < 0.5 ? kM3 : -kM3;
        s.t = rng.uniform(t_lo, t_hi);
        bool inside = true;
        for (int i = 0; i <= 16 && inside; ++i)
            inside = star_contains(link_state(s.z0, s.m, s.t * i / 16.0), 1e-3);
        if (inside) return s;
    }
}
}  // namespace

TEST_CASE("link state closed form") {
    HalfPlanePoint z0(0.0, 1.0);
    HalfPlanePoint at0 = link_state(z0, kM3, 0.0);
    CHECK(at0.x == doctest::Approx(0.0));
    CHECK(at0.y == doctest::Approx(1.0));

    oracles::Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        double t = rng.uniform(0.0, 0.3);
        HalfPlanePoint z = link_state(z0, kM3, t);
        CHECK(z.x == doctest::Approx(-kM3 + std::exp(kSqrt3 * t) / kSqrt3).epsilon(1e-14));
        CHECK(z.y == doctest::Approx(std::exp(kSqrt3 * t)).epsilon(1e-14));
    }

    // collinearity with the line y = alpha (x + m)
    for (int i = 0; i < 300; ++i) {
        LinkSample ls = sample_link(rng, 0.0, 1.0);
        LinkParams p = link_params(ls.z0, ls.m);
        HalfPlanePoint z = link_state(ls.z0, ls.m, ls.t);
        CHECK(std::abs(z.y - p.alpha * (z.x + ls.m)) <= 1e-12 * std::max(1.0, z.y));
    }
}

TEST_CASE("link state solves the vertex-control ODE") {
    oracles::Rng rng(32);
    for (int i = 0; i < 200; ++i) {
        LinkSample ls = sample_link(rng, 0.01, 0.2);
        Control u = ls.m > 0 ? Control::e3() : Control::e2();
        HalfPlanePoint z = link_state(ls.z0, ls.m, ls.t);
        Velocity v = velocity(z, u);
        double h = 1e-6;
        double dx = (link_state(ls.z0, ls.m, ls.t + h).x - link_state(ls.z0, ls.m, ls.t - h).x) / (2 * h);
        double dy = (link_state(ls.z0, ls.m, ls.t + h).y - link_state(ls.z0, ls.m, ls.t - h).y) / (2 * h);
        CHECK(std::abs(dx - v.f1) <= 1e-9 * std::max(1.0, std::abs(v.f1)));
        CHECK(std::abs(dy - v.f2) <= 1e-9 * std::max(1.0, std::abs(v.f2)));
    }
}

TEST_CASE("link motion orientation") {
    HalfPlanePoint z0(0.05, 0.9);
    CHECK(link_params(z0, kM3).alpha > 0.0);   // e3 runs away from its fixed point
    CHECK(link_params(z0, -kM3).alpha < 0.0);  // e2 runs toward it
}

TEST_CASE("link group solves g' = gX") {
    HalfPlanePoint z0(0.1, 0.9);
    CHECK((link_group(z0, kM3, 0.0).m - Mat2::identity()).norm_inf() == 0.0);

    oracles::Rng rng(33);
    for (int i = 0; i < 200; ++i) {
        LinkSample ls = sample_link(rng, 0.0, 0.4);
        GroupElement g = link_group(ls.z0, ls.m, ls.t);
        CHECK(std::abs(g.m.det() - 1.0) <= 1e-12);

        double h = 1e-6;
        Mat2 gp = (link_group(ls.z0, ls.m, ls.t + h).m - link_group(ls.z0, ls.m, ls.t - h).m) *
                  (1.0 / (2 * h));
        Mat2 want = g.m * x_of_z(link_state(ls.z0, ls.m, ls.t)).m;
        CHECK((gp - want).norm_inf() <= 1e-7);
    }
}

TEST_CASE("link cost equals the quadrature of the cost rate") {
    oracles::Rng rng(34);
    CHECK(link_cost(HalfPlanePoint(0.2, 1.1), kM3, 0.0) == 0.0);
    for (int i = 0; i < 60; ++i) {
        LinkSample ls = sample_link(rng);
        double closed = link_cost(ls.z0, ls.m, ls.t);
        double quad = oracles::quad(
            [&](double s) { return cost_rate(link_state(ls.z0, ls.m, s)); }, 0.0, ls.t);
        CHECK(std::abs(closed - quad) <= 1e-10 * std::max(1.0, std::abs(quad)));
        CHECK(closed >= 3.0 * ls.t - 1e-12);
        CHECK(link_cost(ls.z0, ls.m, ls.t + 0.01) > closed);
    }
}

TEST_CASE("rotated link clamps and conjugates") {
    HalfPlanePoint z(0.05, 0.85);
    double T1 = 0.3, T2 = 0.5;
    for (int i = -3; i <= 3; ++i) {
        CHECK((rotated_link(i, z, T1, T2, 0.1).m - Mat2::identity()).norm_inf() == 0.0);
        CHECK((rotated_link(i, z, T1, T2, T1).m - Mat2::identity()).norm_inf() == 0.0);

        GroupElement Ri = rot_R_pow(i);
        double t = 0.42;
        Mat2 direct = rotated_link(i, z, T1, T2, t).m;
        Mat2 conj = (Ri * gamma0(z, t - T1) * Ri.inverse()).m;
        CHECK((direct - conj).norm_inf() <= 1e-12);

        // frozen after T2 and continuous at both knots
        CHECK((rotated_link(i, z, T1, T2, 0.9).m - rotated_link(i, z, T1, T2, T2).m).norm_inf() ==
              0.0);
        CHECK((rotated_link(i, z, T1, T2, T1 + 1e-12).m - Mat2::identity()).norm_inf() <= 1e-11);
        CHECK((rotated_link(i, z, T1, T2, T2 + 1e-12).m -
               rotated_link(i, z, T1, T2, T2 - 1e-12).m)
                  .norm_inf() <= 1e-11);
    }
}

TEST_CASE("control of rotation index convention") {
    CHECK(control_of_rotation(0)[2] == 1.0);   // e3
    CHECK(control_of_rotation(1)[1] == 1.0);   // e2
    CHECK(control_of_rotation(-1)[0] == 1.0);  // e1
    for (int k = -6; k <= 6; ++k) {
        CHECK(control_vertex_index(k) == control_vertex_index(k + 3));
    }

    // conjugation identity Z0(R.u) = R Z0(u) R^-1 pins the permutation
    GroupElement R = rot_R();
    for (int k = -3; k <= 3; ++k) {
        Mat2 a = control_matrix(control_of_rotation(k + 1)).as_algebra().m;
        Mat2 b = (R.m * control_matrix(control_of_rotation(k)).as_algebra().m) * R.inverse().m;
        CHECK((a - b).norm_inf() <= 1e-15);
    }
}

TEST_CASE("single-link trajectories follow the rotated vertex field") {
    // the ODE residual fixes the rotation-to-control assignment for every k
    oracles::Rng rng(35);
    for (int k = -2; k <= 2; ++k) {
        Schedule s;
        s.items = {{k, 0.15}};
        HalfPlanePoint z0(0.02, 0.95);
        BangBangTrajectory traj(s, z0, 0.0);
        Control u = control_of_rotation(k);
        for (double t : {0.03, 0.08, 0.12}) {
            double h = 1e-6;
            HalfPlanePoint zp = traj.state_at(t + h), zm = traj.state_at(t - h);
            Velocity v = velocity(traj.state_at(t), u);
            CHECK(std::abs((zp.x - zm.x) / (2 * h) - v.f1) <= 1e-7 * std::max(1.0, std::abs(v.f1)));
            CHECK(std::abs((zp.y - zm.y) / (2 * h) - v.f2) <= 1e-7 * std::max(1.0, std::abs(v.f2)));
        }
    }
}

TEST_CASE("e1 links move on circles through both fixed points") {
    Schedule s;
    s.items = {{-1, 0.2}};
    for (double y0 : {0.8, 1.0, 1.3}) {
        BangBangTrajectory traj(s, HalfPlanePoint(0.0, y0), 0.0);
        auto invariant = [](const HalfPlanePoint& z) {
            return (z.x * z.x + z.y * z.y - 1.0 / 3.0) / (2.0 * z.y);
        };
        double c0 = invariant(traj.state_at(0.0));
        for (double t : {0.05, 0.1, 0.15, 0.2})
            CHECK(std::abs(invariant(traj.state_at(t)) - c0) <= 1e-10 * std::max(1.0, std::abs(c0)));
    }
}

TEST_CASE("concatenation: continuity, cost additivity, unit speed") {
    Schedule oct = octagon_schedule(kOctT);
    HalfPlanePoint z0(0.0, kOctY);
    BangBangTrajectory traj(oct, z0, 0.0);

    SUBCASE("singleton schedule reduces to a rotated link") {
        Schedule s;
        s.items = {{-2, 0.2}};
        BangBangTrajectory single(s, z0, 0.0);
        CHECK((single.group_at(0.13).m - rotated_link(-2, z0, 0.0, 0.2, 0.13).m).norm_inf() <=
              1e-13);
        CHECK(single.total_cost() == doctest::Approx(link_cost(z0, kM3, 0.2)).epsilon(1e-14));
    }

    SUBCASE("X is continuous across switch times") {
        const auto& T = traj.switch_times();
        for (std::size_t i = 1; i + 1 < T.size(); ++i) {
            Mat2 left = traj.x_at(T[i] - 1e-11).m;
            Mat2 right = traj.x_at(T[i] + 1e-11).m;
            CHECK((left - right).norm_inf() <= 1e-10);
        }
    }

    SUBCASE("gamma is continuous across switch times") {
        const auto& T = traj.switch_times();
        for (std::size_t i = 1; i + 1 < T.size(); ++i) {
            Mat2 left = traj.group_at(T[i] - 1e-12).m;
            Mat2 right = traj.group_at(T[i] + 1e-12).m;
            CHECK((left - right).norm_inf() <= 1e-11);
        }
    }

    SUBCASE("unit speed: det X = 1, trace X = 0 everywhere") {
        for (double t = 0.0; t <= traj.total_time(); t += traj.total_time() / 97.0) {
            AlgebraElement X = traj.x_at(t);
            CHECK(std::abs(X.det() - 1.0) <= 1e-12);
            CHECK(std::abs(X.m.trace()) <= 1e-12);
        }
    }

    SUBCASE("total cost equals the quadrature of the cost rate") {
        double total = 0.0;
        const auto& T = traj.switch_times();
        for (std::size_t i = 0; i + 1 < T.size(); ++i)
            total += oracles::quad(
                [&](double t) { return cost_rate(traj.state_at(t)); }, T[i], T[i + 1], 1e-12);
        CHECK(std::abs(total - traj.total_cost()) <= 1e-8);
    }

    SUBCASE("cost is additive over schedule splits") {
        Schedule head, tail;
        head.items = {oct.items[0], oct.items[1]};
        tail.items = {oct.items[2], oct.items[3]};
        BangBangTrajectory h(head, z0, 0.0);
        // the tail starts from the head's final frame point shifted into the
        // next link's frame
        HalfPlanePoint z_mid = mobius(rot_R_pow(oct.items[1].first - oct.items[2].first),
                                      link_state(h.frame_points()[1], kM3, kOctT));
        BangBangTrajectory t2(tail, z_mid, 0.0);
        CHECK(std::abs(h.total_cost() + t2.total_cost() - traj.total_cost()) <= 1e-12);
    }

    SUBCASE("zero-duration links are legal no-ops") {
        Schedule padded;
        padded.items = {{0, kOctT}, {-1, 0.0}, {-1, kOctT}, {-2, kOctT}, {-3, kOctT}};
        BangBangTrajectory p(padded, z0, 0.0);
        CHECK(std::abs(p.total_cost() - traj.total_cost()) <= 1e-12);
        CHECK((p.terminal_group().m - traj.terminal_group().m).norm_inf() <= 1e-12);
    }
}

TEST_CASE("concat reports star exits with the offending link") {
    Schedule s;
    s.items = {{0, 5.0}};  // e3 link long enough to leave the star
    try {
        BangBangTrajectory traj(s, HalfPlanePoint(0.0, 0.9), 0.0);
        FAIL("expected StarExit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::StarExit);
        CHECK(std::string(e.what()).find("link 0") != std::string::npos);
    }
}
