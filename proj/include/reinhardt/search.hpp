#ifndef REINHARDT_SEARCH_HPP
#define REINHARDT_SEARCH_HPP

#include <string>

#include "reinhardt/costate.hpp"

namespace reinhardt {

// Chart on the 5-dimensional manifold of extremal initial conditions:
// lambda_cost = -1, nu2 = 0 (start at an e3/e2 switching time) and H = 0 with
// the Lambda entry L12 eliminated; H is affine in Lambda with the L12
// coefficient c21(X) = 1/y, nonzero on the whole chart.
struct ReducedInitial {
    std::array<double, 5> c{};  // (L11, L21, nu1, x, y)
};

// lifted state at t = 0 with g = I satisfying both constraints by construction
LiftedState embed(const ReducedInitial& r);

// inverse chart: rescale so lambda_cost = -1, then drop (L12, nu2)
ReducedInitial reduce(const LiftedState& s);

enum class ShootKind {
    TerminalHit,
    CostBoundReject,
    SingularNeighborhood,
    StarExit,
    SwitchOverflow,
};

inline const char* shoot_kind_name(ShootKind k) {
    switch (k) {
        case ShootKind::TerminalHit: return "terminal_hit";
        case ShootKind::CostBoundReject: return "cost_bound_reject";
        case ShootKind::SingularNeighborhood: return "singular_neighborhood";
        case ShootKind::StarExit: return "star_exit";
        default: return "switch_overflow";
    }
}

struct ShootOptions {
    double atol = 1e-10;
    double rtol = 1e-10;
    double terminal_tol = 1e-6;
    double eps_sing = 1e-3;
    int max_switches = 64;
    double star_margin = 1e-6;
    double t_max = M_PI / 3.0;
};

struct ShootOutcome {
    ShootKind kind = ShootKind::CostBoundReject;
    double t_end = 0.0;
    double cost = 0.0;
    std::vector<double> switch_times;
    int links = 0;
    double terminal_g_residual = 0.0;
    double terminal_z_residual = 0.0;
    double hamiltonian_end = 0.0;  // vanishes along every synthesized extremal
    int tie_events = 0;
};

// Bang-bang shooting with PMP-maximizing control synthesis: integrate with the
// argmax vertex control, locate switching-function sign changes by bisection,
// stop on the terminal conditions, the pi/3 cost bound, the singular
// neighborhood, star exit or switch overflow.
ShootOutcome shoot(const ReducedInitial& r, const ShootOptions& opt = {});

struct GridBox {
    std::array<double, 5> center{};
    std::array<double, 5> half_width{};
    int resolution = 0;  // points per dimension; 0 gives an empty table
};

struct GridRecord {
    long index = 0;
    ReducedInitial point;
    ShootOutcome outcome;
};

struct GridResult {
    std::vector<GridRecord> records;
    long best_index = -1;  // lowest-cost TerminalHit, -1 if none
};

// Deterministic enumeration of the box; results are keyed by grid index so the
// table is independent of worker count and scheduling.
GridResult grid_search(const GridBox& box, const ShootOptions& opt = {}, int threads = 1);

std::string outcomes_to_csv(const GridResult& g);
std::string outcomes_to_json(const GridResult& g, const GridBox& box, int threads);

}  // namespace reinhardt

#endif
