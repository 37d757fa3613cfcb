#ifndef REINHARDT_LINKS_HPP
#define REINHARDT_LINKS_HPP

#include <utility>
#include <vector>

#include "reinhardt/control.hpp"

namespace reinhardt {

// constants of a straight-line link y = alpha (x + m) through (-m, 0)
struct LinkParams {
    double m = 0.0;      // +-1/sqrt3
    double c0 = 0.0;     // x(0) + m, nonzero
    double alpha = 0.0;  // y(0)/c0, nonzero; >0 away from the fixed point, <0 toward it
};

LinkParams link_params(const HalfPlanePoint& z0, double m);

// x(t) = -m + c0 e^{alpha t}, y(t) = c0 alpha e^{alpha t}
HalfPlanePoint link_state(const HalfPlanePoint& z0, double m, double t);

// g(0) = I solving g' = gX along the link; the (1,2) entry of the bracket is
// (c0 - m)(m - c0 s) - alpha^2 c0^2 s, the unique choice making det g = 1.
GroupElement link_group(const HalfPlanePoint& z0, double m, double t);

// closed-form integral of cost_rate along the link
double link_cost(const HalfPlanePoint& z0, double m, double t);

// base trajectory with constant control e3
inline GroupElement gamma0(const HalfPlanePoint& z, double t) {
    return link_group(z, 1.0 / std::sqrt(3.0), t);
}

// R^i gamma0 R^-i held at I before T1 and frozen after T2
GroupElement rotated_link(int i, const HalfPlanePoint& z, double T1, double T2, double t);

// vertex control R^k . e3; period 3 in k
Control control_of_rotation(int k);
int control_vertex_index(int k);  // 0,1,2 for e1,e2,e3

// (rotation index, duration >= 0) pairs
struct Schedule {
    std::vector<std::pair<int, double>> items;

    std::size_t size() const { return items.size(); }
    double total_time() const {
        double s = 0.0;
        for (auto& it : items) s += it.second;
        return s;
    }
};

class BangBangTrajectory {
  public:
    BangBangTrajectory(Schedule schedule, HalfPlanePoint z0, double star_margin = 0.0);

    const Schedule& schedule() const { return schedule_; }
    const std::vector<double>& switch_times() const { return T_; }          // T_0..T_n
    const std::vector<HalfPlanePoint>& frame_points() const { return zf_; } // z_{i-1} per link
    const std::vector<LinkParams>& link_params() const { return params_; }

    double total_time() const { return T_.back(); }
    double total_cost() const { return total_cost_; }
    const GroupElement& terminal_group() const { return terminal_g_; }
    const HalfPlanePoint& terminal_state() const { return terminal_z_; }

    int link_index(double t) const;
    Control control_at(double t) const;
    GroupElement group_at(double t) const;
    AlgebraElement x_at(double t) const;       // X(kappa, z0, t)
    HalfPlanePoint state_at(double t) const;   // X(kappa, z0, t) in half-plane coordinates
    double cost_at(double t) const;

  private:
    Schedule schedule_;
    HalfPlanePoint z0_;
    std::vector<double> T_;
    std::vector<HalfPlanePoint> zf_;
    std::vector<LinkParams> params_;
    std::vector<GroupElement> prefix_;  // product of frozen factors 1..i
    std::vector<double> cost_prefix_;
    GroupElement terminal_g_;
    HalfPlanePoint terminal_z_;
    double total_cost_ = 0.0;
};

// concatenate links per the schedule; throws StarExit if an intermediate point
// leaves the star region
BangBangTrajectory concat(const Schedule& schedule, const HalfPlanePoint& z0,
                          double star_margin = 0.0);

}  // namespace reinhardt

#endif
