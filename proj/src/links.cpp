#include "reinhardt/links.hpp"

#include <string>

namespace reinhardt {

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

LinkParams link_params(const HalfPlanePoint& z0, double m) {
    LinkParams p;
    p.m = m;
    p.c0 = z0.x + m;
    if (std::abs(p.c0) < 1e-12)
        throw Error(ErrorCode::DegenerateDenominator, "link through its own fixed point (c0 = 0)");
    p.alpha = z0.y / p.c0;
    return p;
}

HalfPlanePoint link_state(const HalfPlanePoint& z0, double m, double t) {
    LinkParams p = link_params(z0, m);
    double s = std::exp(p.alpha * t);
    return HalfPlanePoint(-m + p.c0 * s, p.c0 * p.alpha * s);
}

GroupElement link_group(const HalfPlanePoint& z0, double m, double t) {
    LinkParams p = link_params(z0, m);
    double s = std::exp(p.alpha * t);
    double beta = std::expm1(p.alpha * t) / (p.alpha * p.alpha * p.c0 * s);
    double star = (p.c0 - m) * (m - p.c0 * s) - p.alpha * p.alpha * p.c0 * p.c0 * s;
    GroupElement g;
    g.m = {1.0 + beta * (p.c0 - m), beta * star,
           beta, 1.0 + beta * (m - p.c0 * s)};
    g.renormalize();
    return g;
}

double link_cost(const HalfPlanePoint& z0, double m, double t) {
    LinkParams p = link_params(z0, m);
    double at = p.alpha * t;
    double em = std::expm1(at);    // s - 1
    double emn = -std::expm1(-at); // 1 - 1/s
    double bracket = (4.0 / 3.0) * emn - 2.0 * m * p.c0 * at +
                     p.c0 * p.c0 * (1.0 + p.alpha * p.alpha) * em;
    return 1.5 * bracket / (p.alpha * p.alpha * p.c0);
}

GroupElement rotated_link(int i, const HalfPlanePoint& z, double T1, double T2, double t) {
    if (T1 > T2) throw Error(ErrorCode::InvalidArgument, "rotated_link needs T1 <= T2");
    double tau = std::min(std::max(t - T1, 0.0), T2 - T1);
    if (tau == 0.0) return GroupElement::identity();
    GroupElement Ri = rot_R_pow(i);
    return Ri * gamma0(z, tau) * Ri.inverse();
}

int control_vertex_index(int k) {
    // R . u cycles the barycentric indices left, so R^k . e3 sits at index (2 - k) mod 3
    return ((2 - k) % 3 + 3) % 3;
}

Control control_of_rotation(int k) {
    switch (control_vertex_index(k)) {
        case 0: return Control::e1();
        case 1: return Control::e2();
        default: return Control::e3();
    }
}

BangBangTrajectory::BangBangTrajectory(Schedule schedule, HalfPlanePoint z0, double star_margin)
    : schedule_(std::move(schedule)), z0_(z0) {
    const std::size_t n = schedule_.items.size();
    T_.resize(n + 1);
    T_[0] = 0.0;
    zf_.reserve(n);
    params_.reserve(n);
    prefix_.reserve(n + 1);
    cost_prefix_.resize(n + 1);
    prefix_.push_back(GroupElement::identity());
    cost_prefix_[0] = 0.0;

    HalfPlanePoint z = z0;
    double m3 = 1.0 / kSqrt3;
    for (std::size_t i = 0; i < n; ++i) {
        int k = schedule_.items[i].first;
        double dt = schedule_.items[i].second;
        if (dt < 0.0) throw Error(ErrorCode::InvalidArgument, "negative link duration");
        if (!star_contains(z, star_margin))
            throw Error(ErrorCode::StarExit,
                        "link " + std::to_string(i) + " starts outside the star region");
        zf_.push_back(z);
        params_.push_back(reinhardt::link_params(z, m3));
        T_[i + 1] = T_[i] + dt;
        cost_prefix_[i + 1] = cost_prefix_[i] + link_cost(z, m3, dt);

        GroupElement Ri = rot_R_pow(k);
        GroupElement frozen = Ri * gamma0(z, dt) * Ri.inverse();
        prefix_.push_back(prefix_.back() * frozen);

        HalfPlanePoint z_end = link_state(z, m3, dt);
        if (!star_contains(z_end, star_margin))
            throw Error(ErrorCode::StarExit,
                        "link " + std::to_string(i) + " exits the star region at t = " +
                            std::to_string(T_[i + 1]));
        if (i + 1 < n) {
            int knext = schedule_.items[i + 1].first;
            z = mobius(rot_R_pow(k - knext), z_end);
        } else {
            z = z_end;
        }
    }
    total_cost_ = cost_prefix_[n];
    terminal_g_ = prefix_.back();
    if (n > 0) {
        int klast = schedule_.items[n - 1].first;
        terminal_z_ = mobius(rot_R_pow(klast), z);
    } else {
        terminal_z_ = z0_;
    }
}

int BangBangTrajectory::link_index(double t) const {
    const std::size_t n = schedule_.items.size();
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty schedule");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (t < T_[i + 1]) return static_cast<int>(i);
    return static_cast<int>(n - 1);
}

Control BangBangTrajectory::control_at(double t) const {
    return control_of_rotation(schedule_.items[link_index(t)].first);
}

GroupElement BangBangTrajectory::group_at(double t) const {
    if (schedule_.items.empty()) return GroupElement::identity();
    int i = link_index(t);
    double tau = std::min(std::max(t - T_[i], 0.0), T_[i + 1] - T_[i]);
    int k = schedule_.items[i].first;
    GroupElement Ri = rot_R_pow(k);
    return prefix_[i] * Ri * gamma0(zf_[i], tau) * Ri.inverse();
}

AlgebraElement BangBangTrajectory::x_at(double t) const {
    return x_of_z(state_at(t));
}

HalfPlanePoint BangBangTrajectory::state_at(double t) const {
    if (schedule_.items.empty()) return z0_;
    int i = link_index(t);
    double tau = std::min(std::max(t - T_[i], 0.0), T_[i + 1] - T_[i]);
    int k = schedule_.items[i].first;
    return mobius(rot_R_pow(k), link_state(zf_[i], 1.0 / kSqrt3, tau));
}

double BangBangTrajectory::cost_at(double t) const {
    if (schedule_.items.empty()) return 0.0;
    int i = link_index(t);
    double tau = std::min(std::max(t - T_[i], 0.0), T_[i + 1] - T_[i]);
    return cost_prefix_[i] + link_cost(zf_[i], 1.0 / kSqrt3, tau);
}

BangBangTrajectory concat(const Schedule& schedule, const HalfPlanePoint& z0, double star_margin) {
    return BangBangTrajectory(schedule, z0, star_margin);
}

}  // namespace reinhardt
