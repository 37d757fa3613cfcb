#include "reinhardt/pmp.hpp"

#include <algorithm>
#include <cmath>

namespace reinhardt {

namespace {
const double kSqrt3 = std::sqrt(3.0);

// Gaussian elimination with partial pivoting; pivot tolerance flags rank loss.
void gauss_solve(int n, std::vector<double>& A, std::vector<double>& b, double pivot_tol) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(A[r * n + col]) > std::abs(A[piv * n + col])) piv = r;
        if (std::abs(A[piv * n + col]) < pivot_tol)
            throw Error(ErrorCode::SingularSystem, "rank-deficient linear system");
        if (piv != col) {
            for (int c = col; c < n; ++c) std::swap(A[piv * n + c], A[col * n + c]);
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            double f = A[r * n + col] / A[col * n + col];
            for (int c = col; c < n; ++c) A[r * n + c] -= f * A[col * n + c];
            b[r] -= f * b[col];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < n; ++c) s -= A[r * n + c] * b[c];
        b[r] = s / A[r * n + r];
    }
}

struct LinkSetup {
    HalfPlanePoint z0;  // world start, z_k = i y_k
    double m;           // +1/sqrt3 (e3 link) or -1/sqrt3 (e2 link)
    Control u;
    ControlMatrix Z0;
    GroupElement Q;     // per-link shift: R^-1 for Plus, R for Minus
    double t_k;
};

LinkSetup link_setup(PolygonFamily family, double y_k) {
    LinkSetup s{HalfPlanePoint(0.0, y_k),
                family == PolygonFamily::Plus ? 1.0 / kSqrt3 : -1.0 / kSqrt3,
                family == PolygonFamily::Plus ? Control::e3() : Control::e2(),
                {},
                family == PolygonFamily::Plus ? rot_R_pow(-1) : rot_R_pow(1),
                polygon_link_time(family, y_k)};
    s.Z0 = control_matrix(s.u);
    return s;
}

// adjoint flow (L11, L12, L21, nu1, nu2) along the closed-form link state
void adjoint5_rhs(const LinkSetup& ls, double lambda_cost, double t,
                  const std::array<double, 5>& v, std::array<double, 5>& out) {
    HalfPlanePoint z = link_state(ls.z0, ls.m, t);
    double x = z.x, y = z.y;
    AlgebraElement X = x_of_z(z);

    Mat2 L{v[0], v[1], v[2], -v[0]};
    Mat2 dl = commutator(L, X.m);
    out[0] = dl.c11;
    out[1] = dl.c12;
    out[2] = dl.c21;

    Mat2 B = L;
    B.c12 += 1.5 * lambda_cost;
    B.c21 -= 1.5 * lambda_cost;
    double bx = 2.0 * B.c11 / y - 2.0 * x * B.c21 / y;
    double by = -2.0 * x * B.c11 / (y * y) - B.c12 / (y * y) + B.c21 * (x * x / (y * y) - 1.0);
    VelocityJacobian vj = velocity_jacobian(z, ls.Z0);
    out[3] = -bx - v[3] * vj.f1x - v[4] * vj.f2x;
    out[4] = -by - v[3] * vj.f1y - v[4] * vj.f2y;
}

std::array<double, 5> integrate_adjoint(const LinkSetup& ls, double lambda_cost,
                                        const std::array<double, 5>& v0, double t0, double t1,
                                        std::vector<Rk45<5>::Segment>* segments = nullptr) {
    if (t0 == t1) return v0;
    Rk45<5> stepper(
        [&ls, lambda_cost](double t, const std::array<double, 5>& v, std::array<double, 5>& out) {
            adjoint5_rhs(ls, lambda_cost, t, v, out);
        },
        {1e-12, 1e-12});
    stepper.start(t0, v0);
    double dir = t1 > t0 ? 1.0 : -1.0;
    while (dir > 0 ? stepper.time() < t1 - 1e-15 : stepper.time() > t1 + 1e-15) {
        if (stepper.advance(t1) == Rk45<5>::StepStatus::Underflow)
            throw Error(ErrorCode::StepSizeUnderflow, "adjoint integration stalled");
        if (segments) segments->push_back(stepper.segment());
    }
    return stepper.state();
}

std::array<double, 5> costate5(const Costate& c) {
    return {c.Lambda.m.c11, c.Lambda.m.c12, c.Lambda.m.c21, c.nu1, c.nu2};
}

Costate costate_from5(const std::array<double, 5>& v, double lambda_cost) {
    Costate c;
    c.Lambda = AlgebraElement(v[0], v[1], v[2]);
    c.nu1 = v[3];
    c.nu2 = v[4];
    c.lambda_cost = lambda_cost;
    return c;
}

// residuals of the five BVP equations for initial costate v and given lambda_cost
std::array<double, 5> bvp_residual(const LinkSetup& ls, double lambda_cost,
                                   const std::array<double, 5>& v) {
    std::array<double, 5> vT = integrate_adjoint(ls, lambda_cost, v, 0.0, ls.t_k);

    Mat2 LT{vT[0], vT[1], vT[2], -vT[0]};
    Mat2 L0{v[0], v[1], v[2], -v[0]};
    // per-link shift z -> Q.z carries the costate to Q Lambda(0) Q^-1
    Mat2 want = ls.Q.m * L0 * ls.Q.inverse().m;
    Mat2 dl = LT - want;

    AlgebraElement X0 = x_of_z(ls.z0);
    double jx = X0.m.c12 - X0.m.c21;  // <J, X>
    Velocity f = velocity(ls.z0, ls.u);
    double H0 = 2.0 * v[0] * X0.m.c11 + v[1] * X0.m.c21 + v[2] * X0.m.c12 -
                1.5 * lambda_cost * jx + v[3] * f.f1 + v[4] * f.f2;

    // z(t_k) = Q.z(0); F maps T_z(0) to T_z(t_k), its transpose pulls nu back
    LinMap2 Ft = mobius_jacobian(ls.Q, ls.z0).transpose();
    double n1, n2;
    Ft.apply(vT[3], vT[4], n1, n2);

    return {dl.c11, dl.c12, H0, n1 - v[3], n2 - v[4]};
}
}  // namespace

LinkCostateTrace::LinkCostateTrace(PolygonFamily family, double y_k, Costate c0,
                                   double solve_residual)
    : family_(family), y_k_(y_k), t_k_(polygon_link_time(family, y_k)), c0_(c0),
      residual_(solve_residual) {
    LinkSetup ls = link_setup(family_, y_k_);
    integrate_adjoint(ls, c0_.lambda_cost, costate5(c0_), 0.0, t_k_, &fwd_);
    t_hi_ = t_k_;
}

void LinkCostateTrace::extend_to(double t) const {
    LinkSetup ls = link_setup(family_, y_k_);
    while (t > t_hi_) {
        double next = t_hi_ + 0.5 * t_k_;
        std::array<double, 5> v = fwd_.empty() ? costate5(c0_) : fwd_.back().eval(t_hi_);
        integrate_adjoint(ls, c0_.lambda_cost, v, t_hi_, next, &fwd_);
        t_hi_ = next;
    }
    while (t < t_lo_) {
        double next = t_lo_ - 0.5 * t_k_;
        std::array<double, 5> v = bwd_.empty() ? costate5(c0_) : bwd_.back().eval(t_lo_);
        integrate_adjoint(ls, c0_.lambda_cost, v, t_lo_, next, &bwd_);
        t_lo_ = next;
    }
}

Costate LinkCostateTrace::at(double t) const {
    if (t == 0.0) return c0_;
    extend_to(t);
    const auto& segs = t > 0.0 ? fwd_ : bwd_;
    if (segs.empty()) return c0_;
    for (const auto& s : segs) {
        double lo = std::min(s.t0, s.t1), hi = std::max(s.t0, s.t1);
        if (t >= lo - 1e-15 && t <= hi + 1e-15) return costate_from5(s.eval(t), c0_.lambda_cost);
    }
    // t beyond the last stored segment by roundoff
    return costate_from5(segs.back().eval(t), c0_.lambda_cost);
}

LiftedState LinkCostateTrace::lifted_at(double t) const {
    LinkSetup ls = link_setup(family_, y_k_);
    LiftedState s;
    s.g = link_group(ls.z0, ls.m, t);
    s.z = link_state(ls.z0, ls.m, t);
    s.costate = at(t);
    s.t = t;
    s.accumulated_cost = link_cost(ls.z0, ls.m, t);
    return s;
}

LinkCostateTrace solve_link_costate(PolygonFamily family, double y_k) {
    LinkSetup ls = link_setup(family, y_k);
    const double lambda_cost = -1.0;

    // residual is affine: r(v) = A v + lambda_cost * c
    std::array<double, 5> zero{};
    std::array<double, 5> c = bvp_residual(ls, 1.0, zero);
    std::vector<double> A(25), b(5);
    for (int j = 0; j < 5; ++j) {
        std::array<double, 5> e{};
        e[j] = 1.0;
        std::array<double, 5> r = bvp_residual(ls, 0.0, e);
        for (int i = 0; i < 5; ++i) A[i * 5 + j] = r[i];
    }
    for (int i = 0; i < 5; ++i) b[i] = -lambda_cost * c[i];

    double scale = 0.0;
    for (double a : A) scale = std::max(scale, std::abs(a));
    gauss_solve(5, A, b, 1e-9 * std::max(1.0, scale));

    std::array<double, 5> v{b[0], b[1], b[2], b[3], b[4]};
    std::array<double, 5> r = bvp_residual(ls, lambda_cost, v);
    double res = 0.0;
    for (double x : r) res = std::max(res, std::abs(x));

    return LinkCostateTrace(family, y_k, costate_from5(v, lambda_cost), res);
}

Costate solve_costate_bvp(const SmoothedPolygon& p, double* residual) {
    LinkCostateTrace tr = solve_link_costate(p.family, p.y_k);
    if (residual) *residual = tr.solve_residual();
    return tr.initial();
}

namespace {
struct CheckData {
    double h_sup = 0.0;
    std::vector<double> margins;      // per link, active-dominance interior minimum
    std::vector<double> rev_margins;  // per link, reversed-dominance interior minimum
    double transversality_lambda = 0.0;
    double transversality_nu = 0.0;
    double nu2_min = 0.0;
    bool nu2_zero_free = true;
    double switch_residual = 0.0;
    double time_symmetry = 0.0;
    double det_drift = 0.0;
};

CheckData run_checks(const SmoothedPolygon& p, const Costate& c0, const VerifyOptions& opt) {
    CheckData out;
    const auto& traj = p.trajectory;
    const int n = static_cast<int>(p.schedule.size());
    const auto& T = traj.switch_times();

    LiftedState cur;
    cur.g = GroupElement::identity();
    cur.z = traj.state_at(0.0);
    cur.costate = c0;
    cur.t = 0.0;
    cur.accumulated_cost = 0.0;

    double det0 = c0.Lambda.det();
    Control vertices[3] = {Control::e1(), Control::e2(), Control::e3()};

    // t = 0 is a switching time against the periodic extension's previous control
    {
        int k1 = p.schedule.items[0].first;
        Control prev = control_of_rotation(k1 + (p.family == PolygonFamily::Plus ? 1 : -1));
        out.switch_residual =
            std::abs(hamiltonian(cur, traj.control_at(0.0)) - hamiltonian(cur, prev));
    }

    std::vector<LiftedState> link1_states;  // for nu2 shape and time symmetry
    PropagateOptions popt;
    popt.atol = opt.atol;
    popt.rtol = opt.rtol;
    popt.enforce_star = false;  // polygon paths were star-checked at construction

    for (int i = 0; i < n; ++i) {
        Control u = traj.control_at(0.5 * (T[i] + T[i + 1]));
        int act = 0;
        for (int j = 0; j < 3; ++j)
            if (vertices[j][0] == u.u0 && vertices[j][1] == u.u1 && vertices[j][2] == u.u2) act = j;

        int ns = (i == 0 && p.family == PolygonFamily::Plus)
                     ? std::max(opt.nu2_samples, opt.margin_samples)
                     : opt.margin_samples;
        std::vector<double> ts(ns);
        for (int j = 0; j < ns; ++j) ts[j] = T[i] + (T[i + 1] - T[i]) * j / (ns - 1.0);

        auto res = propagate(
            cur, [&u](double, const LiftedState&) { return u; }, T[i], T[i + 1], popt, ts);
        if (res.reason != StopReason::Completed)
            throw Error(ErrorCode::StepSizeUnderflow, "lifted propagation did not finish a link");

        double margin = 1e300, rev = 1e300;
        for (int j = 0; j < ns; ++j) {
            const LiftedState& s = res.samples[j];
            double h[3];
            for (int m = 0; m < 3; ++m) h[m] = hamiltonian(s, vertices[m]);
            out.h_sup = std::max(out.h_sup, std::abs(h[act]));
            out.det_drift = std::max(out.det_drift, std::abs(s.costate.Lambda.det() - det0));
            double other_max = -1e300, other_min = 1e300;
            for (int m = 0; m < 3; ++m) {
                if (m == act) continue;
                other_max = std::max(other_max, h[m]);
                other_min = std::min(other_min, h[m]);
            }
            if (j > 0 && j < ns - 1) {
                margin = std::min(margin, h[act] - other_max);
                rev = std::min(rev, other_min - h[act]);
            }
        }
        out.margins.push_back(margin);
        out.rev_margins.push_back(rev);
        if (i == 0) link1_states = res.samples;

        // switch-point tie residual between consecutive active controls
        const LiftedState& send = res.final_state;
        Control u_next = i + 1 < n ? traj.control_at(0.5 * (T[i + 1] + T[i + 2]))
                                   : control_of_rotation(p.schedule.items[i].first +
                                                         (p.family == PolygonFamily::Plus ? -1 : 1));
        out.switch_residual = std::max(
            out.switch_residual, std::abs(hamiltonian(send, u) - hamiltonian(send, u_next)));

        cur = send;
        cur.t = T[i + 1];
    }

    // full-period transversality
    GroupElement Rm = rot_R();
    Mat2 want = Rm.inverse().m * c0.Lambda.m * Rm.m;
    out.transversality_lambda = (cur.costate.Lambda.m - want).norm_inf();
    HalfPlanePoint z0 = traj.state_at(0.0);
    LinMap2 Ft = mobius_jacobian(Rm.inverse(), z0).transpose();
    double n1, n2;
    Ft.apply(cur.costate.nu1, cur.costate.nu2, n1, n2);
    out.transversality_nu = std::hypot(n1 - c0.nu1, n2 - c0.nu2);

    // first-link nu2 shape and the time-reflection identity (Plus family)
    if (p.family == PolygonFamily::Plus && !link1_states.empty()) {
        int ns = static_cast<int>(link1_states.size());
        out.nu2_min = 1e300;
        for (const auto& s : link1_states) out.nu2_min = std::min(out.nu2_min, s.costate.nu2);
        for (int j = 1; j + 2 < ns; ++j) {
            double a = link1_states[j].costate.nu2, b = link1_states[j + 1].costate.nu2;
            if ((a > 0) != (b > 0) && std::min(std::abs(a), std::abs(b)) > opt.nu2_tol)
                out.nu2_zero_free = false;
        }
        for (int j = 0; j < ns; ++j) {
            const LiftedState& s = link1_states[j];
            const LiftedState& sm = link1_states[ns - 1 - j];  // at t_k - t
            double chi_e2 = hamiltonian(s, Control::e3()) - hamiltonian(s, Control::e2());
            double chi_e1_m = hamiltonian(sm, Control::e3()) - hamiltonian(sm, Control::e1());
            out.time_symmetry = std::max(out.time_symmetry, std::abs(chi_e1_m - chi_e2));
        }
    }
    return out;
}
}  // namespace

ExtremalityReport verify_extremal(const SmoothedPolygon& p, const Costate& c0,
                                  const VerifyOptions& opt) {
    ExtremalityReport rep;
    rep.family = family_name(p.family);
    rep.k = p.k;

    if (!c0.projectively_nonzero(1e-14)) {
        rep.lambda_cost_sign = MultiplierSign::Abnormal;
        rep.pass = false;
        rep.reasons.push_back("costate projectively zero");
        return rep;
    }

    CheckData cd = run_checks(p, c0, opt);
    double margin = *std::min_element(cd.margins.begin(), cd.margins.end());
    double rev = *std::min_element(cd.rev_margins.begin(), cd.rev_margins.end());

    bool dominance = margin >= -opt.nu2_tol;
    bool reversed = rev >= -opt.nu2_tol;

    if (!dominance && reversed) {
        // the maximality pattern holds for the sign-flipped costate: the
        // multiplier wants to be positive
        Costate flipped = c0;
        flipped.Lambda = AlgebraElement(-c0.Lambda.m.c11, -c0.Lambda.m.c12, -c0.Lambda.m.c21);
        flipped.nu1 = -c0.nu1;
        flipped.nu2 = -c0.nu2;
        flipped.lambda_cost = 1.0;
        CheckData fd = run_checks(p, flipped, opt);
        rep.lambda_cost_sign = MultiplierSign::WrongSign;
        rep.switching_margins = fd.margins;
        rep.dominance_gap = *std::min_element(fd.margins.begin(), fd.margins.end());
        rep.hamiltonian_sup_norm = fd.h_sup;
        rep.transversality_lambda = fd.transversality_lambda;
        rep.transversality_nu = fd.transversality_nu;
        rep.nu2_min = fd.nu2_min;
        rep.nu2_interior_zero_free = fd.nu2_zero_free;
        rep.switch_point_residual = fd.switch_residual;
        rep.time_symmetry_residual = fd.time_symmetry;
        rep.det_lambda_drift = fd.det_drift;
        rep.pass = false;
        rep.reasons.push_back("Pontryagin multiplier has the wrong sign (maximality holds for lambda_cost = +1)");
        return rep;
    }

    rep.lambda_cost_sign = MultiplierSign::Normal;
    rep.switching_margins = cd.margins;
    rep.dominance_gap = margin;
    rep.hamiltonian_sup_norm = cd.h_sup;
    rep.transversality_lambda = cd.transversality_lambda;
    rep.transversality_nu = cd.transversality_nu;
    rep.nu2_min = cd.nu2_min;
    rep.nu2_interior_zero_free = cd.nu2_zero_free;
    rep.switch_point_residual = cd.switch_residual;
    rep.time_symmetry_residual = cd.time_symmetry;
    rep.det_lambda_drift = cd.det_drift;

    rep.pass = true;
    if (!dominance) {
        rep.pass = false;
        rep.reasons.push_back("active control fails to maximize the Hamiltonian on a link interior");
    }
    if (cd.h_sup > opt.h_tol) {
        rep.pass = false;
        rep.reasons.push_back("Hamiltonian does not vanish along the lifted trajectory");
    }
    if (cd.transversality_lambda > opt.transversality_tol ||
        cd.transversality_nu > opt.transversality_tol) {
        rep.pass = false;
        rep.reasons.push_back("endpoint transversality residual too large");
    }
    if (p.family == PolygonFamily::Plus) {
        if (cd.nu2_min < -opt.nu2_tol) {
            rep.pass = false;
            rep.reasons.push_back("nu2 dips negative on the first link");
        }
        if (!cd.nu2_zero_free) {
            rep.pass = false;
            rep.reasons.push_back("nu2 vanishes in the interior of the first link");
        }
    }
    return rep;
}

double f_triangle_from_trace(const LinkCostateTrace& tr, double y, double v, double y0) {
    double y_k = std::sqrt((y - 1.0) / 3.0);
    double t = std::log(v / y) / (kSqrt3 * y_k);
    return 3.0 * kSqrt3 * std::pow(y0, 5) * v * v * tr.nu2_at(t);
}

double f_triangle(double y, double v, double y0) {
    if (!(y > 1.0)) throw Error(ErrorCode::InvalidArgument, "triangle variable y must exceed 1");
    double y_k = std::sqrt((y - 1.0) / 3.0);
    LinkCostateTrace tr = solve_link_costate(PolygonFamily::Plus, y_k);
    return f_triangle_from_trace(tr, y, v, y0);
}

double f_triangle(double y, double v) { return f_triangle(y, v, std::sqrt((y - 1.0) / 3.0)); }

namespace {
struct DeformationEval {
    std::array<double, 5> residual;
    double cost;
};

DeformationEval deformation_eval(double y1, double t1, const std::array<double, 6>& eta) {
    Schedule s;
    s.items = {{0, t1 + eta[0]}, {-1, t1 + eta[1]}, {-2, t1 + eta[2]}, {-3, t1 + eta[3]}};
    HalfPlanePoint z0(eta[4], y1 + eta[5]);
    BangBangTrajectory traj(s, z0, 0.0);
    GroupElement R = rot_R();
    Mat2 E = traj.terminal_group().m * R.inverse().m;
    HalfPlanePoint zt = traj.terminal_state();
    HalfPlanePoint zexp = mobius(R.inverse(), z0);
    return {{E.c11 - 1.0, E.c12, E.c21, zt.x - zexp.x, zt.y - zexp.y}, traj.total_cost()};
}

// solve the five closure equations for eta_2..eta_6 at fixed eta_1
std::array<double, 6> deformation_solve(double y1, double t1, double eta1,
                                        std::array<double, 6> guess, double* cost) {
    guess[0] = eta1;
    const double fd = 1e-6;
    for (int it = 0; it < 60; ++it) {
        DeformationEval e = deformation_eval(y1, t1, guess);
        double rmax = 0.0;
        for (double r : e.residual) rmax = std::max(rmax, std::abs(r));
        if (rmax < 1e-12) {
            if (cost) *cost = e.cost;
            return guess;
        }
        std::vector<double> J(25), b(5);
        for (int j = 0; j < 5; ++j) {
            std::array<double, 6> ep = guess, em = guess;
            ep[j + 1] += fd;
            em[j + 1] -= fd;
            auto rp = deformation_eval(y1, t1, ep).residual;
            auto rm = deformation_eval(y1, t1, em).residual;
            for (int i = 0; i < 5; ++i) J[i * 5 + j] = (rp[i] - rm[i]) / (2.0 * fd);
        }
        for (int i = 0; i < 5; ++i) b[i] = -e.residual[i];
        gauss_solve(5, J, b, 1e-14);
        for (int j = 0; j < 5; ++j) guess[j + 1] += b[j];
    }
    throw Error(ErrorCode::NewtonDivergence, "deformation continuation did not converge");
}
}  // namespace

DeformationQuadratic local_deformation_quadratic(const SmoothedPolygon& octagon) {
    if (octagon.family != PolygonFamily::Plus || octagon.k != 1)
        throw Error(ErrorCode::InvalidArgument, "deformation quadratic is defined for the octagon");
    double y1 = octagon.y_k, t1 = octagon.t_k;

    DeformationQuadratic q;
    q.base_cost = octagon.area;
    q.eta1 = {-4e-3, -2e-3, -1e-3, 0.0, 1e-3, 2e-3, 4e-3};

    // continuation outward from eta1 = 0 on both sides
    std::array<std::array<double, 6>, 7> sol{};
    sol[3] = {0, 0, 0, 0, 0, 0};
    q.cost[3] = octagon.area;
    for (int i = 4; i < 7; ++i) sol[i] = deformation_solve(y1, t1, q.eta1[i], sol[i - 1], &q.cost[i]);
    for (int i = 2; i >= 0; --i) sol[i] = deformation_solve(y1, t1, q.eta1[i], sol[i + 1], &q.cost[i]);

    // first-order response of eta_2..eta_4 to eta_1 (central difference at 1e-3)
    q.a_first[0] = 1.0;
    for (int j = 1; j < 4; ++j) q.a_first[j] = (sol[4][j] - sol[2][j]) / (2.0 * 1e-3);

    // cubic least squares fit cost ~ c0 + b1 x + c2 x^2 + c3 x^3; the cubic
    // term keeps it from leaking into b1 at these sample offsets
    double S[7] = {0, 0, 0, 0, 0, 0, 0}, T[4] = {0, 0, 0, 0};
    for (int i = 0; i < 7; ++i) {
        double x = q.eta1[i], xp = 1.0;
        for (int d = 0; d < 7; ++d) {
            S[d] += xp;
            if (d < 4) T[d] += q.cost[i] * xp;
            xp *= x;
        }
    }
    std::vector<double> A = {S[0], S[1], S[2], S[3], S[1], S[2], S[3], S[4],
                             S[2], S[3], S[4], S[5], S[3], S[4], S[5], S[6]};
    std::vector<double> b = {T[0], T[1], T[2], T[3]};
    gauss_solve(4, A, b, 1e-20);
    q.b1 = b[1];
    q.b2 = 2.0 * b[2];  // curvature cost''(0); the reference 4.7976 uses this scale
    return q;
}

}  // namespace reinhardt
