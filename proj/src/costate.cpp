#include "reinhardt/costate.hpp"

#include <algorithm>

namespace reinhardt {

namespace {
const double kSqrt3 = std::sqrt(3.0);

Mat2 b_matrix(const Costate& c) {
    // B = Lambda - (3/2) lambda_cost J
    Mat2 B = c.Lambda.m;
    B.c12 += 1.5 * c.lambda_cost;
    B.c21 -= 1.5 * c.lambda_cost;
    return B;
}
}  // namespace

double hamiltonian_lie(const LiftedState& s) {
    AlgebraElement X = x_of_z(s.z);
    return inner(b_matrix(s.costate), X.m);
}

double hamiltonian_h(const LiftedState& s, const Control& u) {
    Velocity f = velocity(s.z, u);
    return s.costate.nu1 * f.f1 + s.costate.nu2 * f.f2;
}

double hamiltonian(const LiftedState& s, const Control& u) {
    return hamiltonian_lie(s) + hamiltonian_h(s, u);
}

double hamiltonian(const LiftedState& s, const ControlMatrix& Z0) {
    Velocity f = velocity(s.z, Z0);
    return hamiltonian_lie(s) + s.costate.nu1 * f.f1 + s.costate.nu2 * f.f2;
}

AdjointRhs adjoint_rhs(const LiftedState& s, const Control& u) {
    double x = s.z.x, y = s.z.y;
    AlgebraElement X = x_of_z(s.z);
    Mat2 B = b_matrix(s.costate);

    // hand-derived partials of X(x,y) = [[x/y, -x^2/y - y], [1/y, -x/y]]:
    //   dX/dx = [[1/y, -2x/y], [0, -1/y]]
    //   dX/dy = [[-x/y^2, x^2/y^2 - 1], [-1/y^2, x/y^2]]
    // contracted against the traceless B (finite differences guard this below
    // in the test suite)
    double bx = 2.0 * B.c11 / y - 2.0 * x * B.c21 / y;
    double by = -2.0 * x * B.c11 / (y * y) - B.c12 / (y * y) + B.c21 * (x * x / (y * y) - 1.0);

    ControlMatrix Z0 = control_matrix(u);
    VelocityJacobian vj = velocity_jacobian(s.z, Z0);

    AdjointRhs r;
    Mat2 dl = commutator(s.costate.Lambda.m, X.m);
    double tr = 0.5 * dl.trace();  // strip roundoff so the sl2 invariant survives
    r.dLambda = AlgebraElement(Mat2{dl.c11 - tr, dl.c12, dl.c21, dl.c22 - tr});
    r.dnu1 = -bx - s.costate.nu1 * vj.f1x - s.costate.nu2 * vj.f2x;
    r.dnu2 = -by - s.costate.nu1 * vj.f1y - s.costate.nu2 * vj.f2y;
    return r;
}

SwitchingValues switching(const LiftedState& s) {
    double h1 = hamiltonian_h(s, Control::e1());
    double h2 = hamiltonian_h(s, Control::e2());
    double h3 = hamiltonian_h(s, Control::e3());
    SwitchingValues sv;
    sv.chi12 = h1 - h2;
    sv.chi13 = h1 - h3;
    sv.chi23 = sv.chi13 - sv.chi12;
    return sv;
}

CanonicalPoint canonical(const LiftedState& s) {
    double x = s.z.x, y = s.z.y;
    double d = 1.0 + kSqrt3 * x;
    CanonicalPoint c;
    c.xi1 = x;
    c.xi2 = (3.0 * (x * x + y * y) + kSqrt3 * x) / d;
    double dxi2_dx = kSqrt3 * (d * d - 3.0 * y * y) / (d * d);
    double dxi2_dy = 6.0 * y / d;
    c.mu2 = s.costate.nu2 / dxi2_dy;
    c.mu1 = s.costate.nu1 - c.mu2 * dxi2_dx;
    return c;
}

LiftedState singular_state() {
    LiftedState s;
    s.g = GroupElement::identity();
    s.z = HalfPlanePoint(0.0, 1.0);
    s.costate.Lambda = AlgebraElement(0.0, 1.5, -1.5);  // -(3/2) J
    s.costate.nu1 = 0.0;
    s.costate.nu2 = 0.0;
    s.costate.lambda_cost = -1.0;
    return s;
}

double distance_to_singular(const LiftedState& s) {
    LiftedState sing = singular_state();
    double d2 = 0.0;
    Mat2 dl = s.costate.Lambda.m - sing.costate.Lambda.m;
    d2 += dl.c11 * dl.c11 + dl.c12 * dl.c12 + dl.c21 * dl.c21 + dl.c22 * dl.c22;
    d2 += s.costate.nu1 * s.costate.nu1 + s.costate.nu2 * s.costate.nu2;
    d2 += (s.z.x - 0.0) * (s.z.x - 0.0) + (s.z.y - 1.0) * (s.z.y - 1.0);
    return std::sqrt(d2);
}

double nu2_singular_link(double t) {
    return (-1.0 + std::exp(-2.0 * kSqrt3 * t) + 2.0 * kSqrt3 * t * std::exp(-kSqrt3 * t)) / kSqrt3;
}

LiftedState rotate_lifted(const LiftedState& s, const GroupElement& rho) {
    LiftedState out = s;
    out.g = rho * s.g * rho.inverse();
    LinMap2 Ft_inv = mobius_jacobian(rho, s.z).transpose().inverse();
    out.z = mobius(rho, s.z);
    out.costate.Lambda = conjugate(rho, s.costate.Lambda);
    Ft_inv.apply(s.costate.nu1, s.costate.nu2, out.costate.nu1, out.costate.nu2);
    return out;
}

LiftedVec pack_lifted(const LiftedState& s) {
    return {s.g.m.c11, s.g.m.c12, s.g.m.c21, s.g.m.c22,
            s.z.x,     s.z.y,
            s.costate.Lambda.m.c11, s.costate.Lambda.m.c12, s.costate.Lambda.m.c21,
            s.costate.nu1, s.costate.nu2, s.accumulated_cost};
}

LiftedState unpack_lifted(const LiftedVec& v, double lambda_cost, double t) {
    LiftedState s;
    s.g.m = {v[0], v[1], v[2], v[3]};
    s.z = HalfPlanePoint(v[4], v[5]);
    s.costate.Lambda = AlgebraElement(v[6], v[7], v[8]);
    s.costate.nu1 = v[9];
    s.costate.nu2 = v[10];
    s.costate.lambda_cost = lambda_cost;
    s.t = t;
    s.accumulated_cost = v[11];
    return s;
}

void lifted_rhs(const LiftedVec& v, const ControlMatrix& Z0, double lambda_cost, LiftedVec& out) {
    double x = v[4], y = v[5];
    if (!(y > 0.0)) throw Error(ErrorCode::StarExit, "left the upper half-plane");
    HalfPlanePoint z(x, y);
    AlgebraElement X = x_of_z(z);
    Velocity f = velocity(z, Z0);

    // g' = g X
    out[0] = v[0] * X.m.c11 + v[1] * X.m.c21;
    out[1] = v[0] * X.m.c12 + v[1] * X.m.c22;
    out[2] = v[2] * X.m.c11 + v[3] * X.m.c21;
    out[3] = v[2] * X.m.c12 + v[3] * X.m.c22;
    out[4] = f.f1;
    out[5] = f.f2;

    Mat2 L{v[6], v[7], v[8], -v[6]};
    Mat2 dl = commutator(L, X.m);
    out[6] = dl.c11;
    out[7] = dl.c12;
    out[8] = dl.c21;

    Mat2 B = L;
    B.c12 += 1.5 * lambda_cost;
    B.c21 -= 1.5 * lambda_cost;
    double bx = 2.0 * B.c11 / y - 2.0 * x * B.c21 / y;
    double by = -2.0 * x * B.c11 / (y * y) - B.c12 / (y * y) + B.c21 * (x * x / (y * y) - 1.0);
    VelocityJacobian vj = velocity_jacobian(z, Z0);
    out[9] = -bx - v[9] * vj.f1x - v[10] * vj.f2x;
    out[10] = -by - v[9] * vj.f1y - v[10] * vj.f2y;

    out[11] = cost_rate(z);
}

PropagateResult propagate(const LiftedState& s0, const ControlLaw& u_fn, double t0, double t1,
                          const PropagateOptions& opt, const std::vector<double>& sample_times) {
    PropagateResult res;
    res.sample_times = sample_times;
    std::sort(res.sample_times.begin(), res.sample_times.end());

    double dir = (t1 >= t0) ? 1.0 : -1.0;
    std::vector<double> breaks = opt.break_times;
    breaks.push_back(t1);
    std::sort(breaks.begin(), breaks.end());
    if (dir < 0) std::reverse(breaks.begin(), breaks.end());

    LiftedState cur = s0;
    cur.t = t0;
    res.hamiltonian_initial = hamiltonian(cur, u_fn(t0, cur));
    double h0 = res.hamiltonian_initial;

    std::size_t next_sample = 0;
    auto emit_samples_upto = [&](double t_hi, const Rk45<12>::Segment& seg, double lambda_cost) {
        while (next_sample < res.sample_times.size()) {
            double ts = res.sample_times[next_sample];
            bool in = dir > 0 ? (ts <= t_hi + 1e-15 && ts >= seg.t0 - 1e-15)
                              : (ts >= t_hi - 1e-15 && ts <= seg.t0 + 1e-15);
            if (!in) break;
            res.samples.push_back(unpack_lifted(seg.eval(ts), lambda_cost, ts));
            ++next_sample;
        }
    };

    for (double tb : breaks) {
        if (dir > 0 ? (tb <= cur.t + 1e-15) : (tb >= cur.t - 1e-15)) continue;
        // constant control on this subinterval, sampled just inside it
        double probe_t = cur.t + dir * 1e-12 * std::max(1.0, std::abs(tb - cur.t));
        Control u = u_fn(probe_t, cur);
        ControlMatrix Z0 = control_matrix(u);
        double lc = cur.costate.lambda_cost;

        Rk45<12> stepper(
            [&Z0, lc](double, const LiftedVec& v, LiftedVec& out) { lifted_rhs(v, Z0, lc, out); },
            {opt.atol, opt.rtol});
        stepper.start(cur.t, pack_lifted(cur));

        while (dir > 0 ? stepper.time() < tb - 1e-15 : stepper.time() > tb + 1e-15) {
            Rk45<12>::StepStatus st;
            try {
                st = stepper.advance(tb);
            } catch (const Error& e) {
                res.reason = e.code() == ErrorCode::StarExit ? StopReason::StarExit
                                                             : StopReason::DegenerateDenominator;
                res.final_state = unpack_lifted(stepper.state(), lc, stepper.time());
                return res;
            }
            if (st == Rk45<12>::StepStatus::Underflow) {
                res.reason = StopReason::StepSizeUnderflow;
                res.final_state = unpack_lifted(stepper.state(), lc, stepper.time());
                return res;
            }
            const auto& seg = stepper.segment();
            emit_samples_upto(stepper.time(), seg, lc);

            LiftedState snap = unpack_lifted(stepper.state(), lc, stepper.time());
            if (opt.enforce_star && !star_contains(snap.z, opt.star_margin)) {
                // bisect the margin crossing on the dense segment
                double lo = seg.t0, hi = seg.t1;
                for (int i = 0; i < 80 && std::abs(hi - lo) > 1e-13; ++i) {
                    double mid = 0.5 * (lo + hi);
                    LiftedState sm = unpack_lifted(seg.eval(mid), lc, mid);
                    if (star_contains(sm.z, opt.star_margin)) lo = mid; else hi = mid;
                }
                res.reason = StopReason::StarExit;
                res.final_state = unpack_lifted(seg.eval(lo), lc, lo);
                return res;
            }
            double h = hamiltonian(snap, u);
            res.hamiltonian_drift = std::max(res.hamiltonian_drift, std::abs(h - h0));
        }
        cur = unpack_lifted(stepper.state(), lc, stepper.time());
    }
    res.final_state = cur;
    return res;
}

}  // namespace reinhardt
