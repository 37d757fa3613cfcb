#include "reinhardt/polygon.hpp"

#include <cmath>

namespace reinhardt {

namespace {
const double kSqrt3 = std::sqrt(3.0);

double theta_of(PolygonFamily family, double k) {
    // Plus: pi k/(3k+1). Minus: pi k/(3k-1); the closure products force the
    // 3k-1 denominator together with the ascending schedule.
    return family == PolygonFamily::Plus ? M_PI * k / (3.0 * k + 1.0) : M_PI * k / (3.0 * k - 1.0);
}

double trace_residual(PolygonFamily family, double k, double y) {
    double t = polygon_link_time(family, y);
    GroupElement g = gamma0(polygon_frame_start(family, y), t);
    GroupElement Q = family == PolygonFamily::Plus ? rot_R_pow(-1) : rot_R_pow(1);
    double tr = (Q.m * g.m).trace();
    return tr - 2.0 * std::cos(theta_of(family, k));
}
}  // namespace

double polygon_link_time(PolygonFamily family, double y) {
    double w = 1.0 + 3.0 * y * y;
    double l = std::log(w / 4.0);
    return (family == PolygonFamily::Plus ? -l : l) / (kSqrt3 * y);
}

HalfPlanePoint polygon_frame_start(PolygonFamily family, double y) {
    if (family == PolygonFamily::Plus) return HalfPlanePoint(0.0, y);
    return mobius(rot_R_pow(-1), HalfPlanePoint(0.0, y));
}

int polygon_links(PolygonFamily family, int k) {
    return family == PolygonFamily::Plus ? 3 * k + 1 : 3 * k - 1;
}

int polygon_sides(PolygonFamily family, int k) {
    return family == PolygonFamily::Plus ? 6 * k + 2 : 6 * k - 2;
}

PolygonParams solve_polygon_params(PolygonFamily family, double k) {
    if (family == PolygonFamily::Plus && k < 1.0)
        throw Error(ErrorCode::InvalidArgument, "Plus family needs k >= 1");
    if (family == PolygonFamily::Minus && k <= 1.0)
        throw Error(ErrorCode::InvalidArgument, "Minus family needs k > 1");

    double lo, hi;
    if (family == PolygonFamily::Plus) {
        lo = 1.0 / kSqrt3 + 1e-6;
        hi = 1.0 - 1e-9;
    } else {
        lo = 1.0 + 1e-9;
        hi = 2.0;
        while (trace_residual(family, k, hi) > 0.0 && hi < 1e6) hi *= 2.0;
    }
    double flo = trace_residual(family, k, lo);
    double fhi = trace_residual(family, k, hi);
    if (!(flo > 0.0 && fhi < 0.0))
        throw Error(ErrorCode::BracketFailure, "no sign change in the y_k bracket");

    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = trace_residual(family, k, mid);
        if (fm > 0.0) lo = mid; else hi = mid;
    }
    double y = 0.5 * (lo + hi);

    // Newton polish with a centered numeric derivative
    for (int i = 0; i < 4; ++i) {
        double h = 1e-7 * std::max(1.0, y);
        double f = trace_residual(family, k, y);
        double fp = (trace_residual(family, k, y + h) - trace_residual(family, k, y - h)) / (2.0 * h);
        if (std::abs(fp) < 1e-300) break;
        double step = f / fp;
        double yn = y - step;
        if (yn <= lo - 1e-6 || yn >= hi + 1e-6) break;
        y = yn;
        if (std::abs(step) < 1e-15) break;
    }

    PolygonParams p;
    p.y_k = y;
    p.t_k = polygon_link_time(family, y);
    p.theta_k = theta_of(family, k);
    p.trace_residual = trace_residual(family, k, y);
    return p;
}

SmoothedPolygon build_polygon(PolygonFamily family, int k, int samples_per_link) {
    PolygonParams par = solve_polygon_params(family, static_cast<double>(k));
    int n = polygon_links(family, k);

    Schedule sched;
    sched.items.reserve(n);
    for (int i = 0; i < n; ++i) {
        int ki = family == PolygonFamily::Plus ? -i : i + 1;
        sched.items.push_back({ki, par.t_k});
    }

    HalfPlanePoint z0 = polygon_frame_start(family, par.y_k);
    BangBangTrajectory traj = concat(sched, z0, 0.0);

    GroupElement R = rot_R();
    double g_res = (traj.terminal_group().m - R.m).norm_inf();
    HalfPlanePoint z_start = traj.state_at(0.0);
    HalfPlanePoint z_expect = mobius(R.inverse(), z_start);
    HalfPlanePoint z_end = traj.terminal_state();
    double z_res = std::hypot(z_end.x - z_expect.x, z_end.y - z_expect.y);
    if (g_res > 1e-8 || z_res > 1e-8)
        throw Error(ErrorCode::ClosureFailure,
                    "polygon closure residuals g=" + std::to_string(g_res) +
                        " z=" + std::to_string(z_res));

    SmoothedPolygon p{family, k, par.y_k, par.t_k, par.theta_k, traj.total_time(),
                      traj.total_cost(), std::move(sched), std::move(traj), {}, {}, g_res, z_res};

    if (samples_per_link < 1) samples_per_link = 1;
    p.boundary_times.reserve(static_cast<std::size_t>(n) * samples_per_link + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < samples_per_link; ++j)
            p.boundary_times.push_back((i + static_cast<double>(j) / samples_per_link) * par.t_k);
    p.boundary_times.push_back(p.t_f);
    for (auto& b : p.boundary) b.reserve(p.boundary_times.size());
    for (double t : p.boundary_times) {
        GroupElement g = p.trajectory.group_at(t);
        for (int j = 0; j < 6; ++j) {
            auto e = hex_vertex(j);
            p.boundary[j].push_back({g.m.c11 * e[0] + g.m.c12 * e[1],
                                     g.m.c21 * e[0] + g.m.c22 * e[1]});
        }
    }
    return p;
}

const std::array<std::vector<std::array<double, 2>>, 6>& boundary_samples(const SmoothedPolygon& p) {
    return p.boundary;
}

double polygon_area(const SmoothedPolygon& p) { return p.area; }

double shoelace_area(const SmoothedPolygon& p) {
    // concatenate sigma_0..sigma_5 dropping each branch's final sample, which
    // coincides with the next branch's first
    std::vector<std::array<double, 2>> pts;
    pts.reserve(6 * p.boundary[0].size());
    for (int j = 0; j < 6; ++j)
        pts.insert(pts.end(), p.boundary[j].begin(), p.boundary[j].end() - 1);
    double a = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& u = pts[i];
        const auto& v = pts[(i + 1) % pts.size()];
        a += u[0] * v[1] - v[0] * u[1];
    }
    return 0.5 * std::abs(a);
}

double polygon_area_interpolated(PolygonFamily family, double k) {
    PolygonParams par = solve_polygon_params(family, k);
    double links = family == PolygonFamily::Plus ? 3.0 * k + 1.0 : 3.0 * k - 1.0;
    HalfPlanePoint z0 = polygon_frame_start(family, par.y_k);
    return links * link_cost(z0, 1.0 / kSqrt3, par.t_k);
}

}  // namespace reinhardt
