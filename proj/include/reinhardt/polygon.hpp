#ifndef REINHARDT_POLYGON_HPP
#define REINHARDT_POLYGON_HPP

#include <array>
#include <string>
#include <vector>

#include "reinhardt/links.hpp"

namespace reinhardt {

enum class PolygonFamily { Plus, Minus };  // 6k+2 and 6k-2 gons

inline const char* family_name(PolygonFamily f) {
    return f == PolygonFamily::Plus ? "plus" : "minus";
}

// number of links: 3k+1 (Plus) or 3k-1 (Minus)
int polygon_links(PolygonFamily family, int k);
// sides of the smoothed polygon, n = 6k +- 2
int polygon_sides(PolygonFamily family, int k);

struct PolygonParams {
    double y_k = 0.0;      // z_k = i y_k
    double t_k = 0.0;      // common link duration
    double theta_k = 0.0;  // trace angle, trace = 2 cos(theta_k)
    double trace_residual = 0.0;
};

// link duration tied to the height: |ln((1+3y^2)/4)| / (sqrt3 y)
double polygon_link_time(PolygonFamily family, double y);

// start point of the first link in its own e3 frame (z_k for Plus, R^-1.z_k for Minus)
HalfPlanePoint polygon_frame_start(PolygonFamily family, double y);

// Solve the trace and period equations for the link height y_k and duration
// t_k. Bisection on the trace residual, then Newton polish. k may be
// non-integral for the interpolated-family diagnostics.
PolygonParams solve_polygon_params(PolygonFamily family, double k);

struct SmoothedPolygon {
    PolygonFamily family;
    int k;
    double y_k;
    double t_k;
    double theta_k;
    double t_f;
    double area;  // cost integral over [0, t_f]
    Schedule schedule;
    BangBangTrajectory trajectory;
    std::vector<double> boundary_times;
    std::array<std::vector<std::array<double, 2>>, 6> boundary;  // sigma_j samples
    double closure_g_residual;
    double closure_z_residual;
};

// Build the full smoothed polygon: solve parameters, assemble the schedule,
// concatenate links, verify closure and sample the six boundary branches.
SmoothedPolygon build_polygon(PolygonFamily family, int k, int samples_per_link = 64);

// stored boundary branches sigma_0..sigma_5
const std::array<std::vector<std::array<double, 2>>, 6>& boundary_samples(const SmoothedPolygon& p);

// area via the cost integral
double polygon_area(const SmoothedPolygon& p);

// shoelace area of the densely sampled boundary (cross-check oracle path)
double shoelace_area(const SmoothedPolygon& p);

// area of the interpolated family at non-integral k: (3k +- 1) times the
// one-link cost; diagnostic for the k -> 1 rectangle limit of the Minus family
double polygon_area_interpolated(PolygonFamily family, double k);

}  // namespace reinhardt

#endif
