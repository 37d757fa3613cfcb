#include "reinhardt/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <thread>

#include "reinhardt/jsonout.hpp"

namespace reinhardt {

namespace {
const Control kVertices[3] = {Control::e1(), Control::e2(), Control::e3()};

double terminal_distance(const LiftedState& s, const Mat2& R, const HalfPlanePoint& z_target) {
    double dg = (s.g.m - R).norm_inf();
    double dz = std::hypot(s.z.x - z_target.x, s.z.y - z_target.y);
    return std::max(dg, dz);
}

// single fixed RK4 step of the lifted system, for tie probing only
LiftedVec rk4_step(const LiftedVec& v0, const ControlMatrix& Z0, double lc, double h) {
    LiftedVec k1, k2, k3, k4, tmp;
    lifted_rhs(v0, Z0, lc, k1);
    for (int i = 0; i < 12; ++i) tmp[i] = v0[i] + 0.5 * h * k1[i];
    lifted_rhs(tmp, Z0, lc, k2);
    for (int i = 0; i < 12; ++i) tmp[i] = v0[i] + 0.5 * h * k2[i];
    lifted_rhs(tmp, Z0, lc, k3);
    for (int i = 0; i < 12; ++i) tmp[i] = v0[i] + h * k3[i];
    lifted_rhs(tmp, Z0, lc, k4);
    LiftedVec out;
    for (int i = 0; i < 12; ++i)
        out[i] = v0[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

// among near-tied maximizers, pick the vertex that stays maximal a probe step ahead
int resolve_tie(const LiftedState& s, const std::vector<int>& cands, double lc) {
    int best = cands[0];
    double best_margin = -1e300;
    for (int c : cands) {
        ControlMatrix Z0 = control_matrix(kVertices[c]);
        LiftedState probe;
        try {
            probe = unpack_lifted(rk4_step(pack_lifted(s), Z0, lc, 1e-6), lc, s.t + 1e-6);
        } catch (const Error&) {
            continue;
        }
        double h[3];
        for (int m = 0; m < 3; ++m) h[m] = hamiltonian(probe, kVertices[m]);
        double other = -1e300;
        for (int m = 0; m < 3; ++m)
            if (m != c) other = std::max(other, h[m]);
        double margin = h[c] - other;
        if (margin > best_margin) {
            best_margin = margin;
            best = c;
        }
    }
    return best;
}
}  // namespace

LiftedState embed(const ReducedInitial& r) {
    double x = r.c[3], y = r.c[4];
    if (!(y > 0.0)) throw Error(ErrorCode::ChartFailure, "chart point has y <= 0");
    HalfPlanePoint z(x, y);
    if (!star_contains(z, 0.0))
        throw Error(ErrorCode::ChartFailure, "chart point outside the star region");

    AlgebraElement X = x_of_z(z);
    double jx = X.m.c12 - X.m.c21;  // <J, X>
    Velocity f = velocity(z, Control::e3());
    // H = 2 L11 X11 + L12 X21 + L21 X12 + (3/2)<J,X> + nu1 f1 = 0, solved for L12
    double L11 = r.c[0], L21 = r.c[1], nu1 = r.c[2];
    double L12 = -(2.0 * L11 * X.m.c11 + L21 * X.m.c12 + 1.5 * jx + nu1 * f.f1) / X.m.c21;

    LiftedState s;
    s.g = GroupElement::identity();
    s.z = z;
    s.costate.Lambda = AlgebraElement(L11, L12, L21);
    s.costate.nu1 = nu1;
    s.costate.nu2 = 0.0;
    s.costate.lambda_cost = -1.0;
    return s;
}

ReducedInitial reduce(const LiftedState& s) {
    if (!(s.costate.lambda_cost < 0.0))
        throw Error(ErrorCode::ChartFailure, "chart requires a normal multiplier");
    double scale = -1.0 / s.costate.lambda_cost;
    ReducedInitial r;
    r.c = {scale * s.costate.Lambda.m.c11, scale * s.costate.Lambda.m.c21,
           scale * s.costate.nu1, s.z.x, s.z.y};
    return r;
}

ShootOutcome shoot(const ReducedInitial& r, const ShootOptions& opt) {
    ShootOutcome out;
    LiftedState s0 = embed(r);
    const double lc = -1.0;
    const Mat2 R = rot_R().m;
    const HalfPlanePoint z_target = mobius(rot_R().inverse(), s0.z);

    if (distance_to_singular(s0) < opt.eps_sing) {
        out.kind = ShootKind::SingularNeighborhood;
        out.t_end = 0.0;
        return out;
    }

    // initial control: argmax vertex, ties resolved by a probe step
    int active = 2;
    {
        double h[3];
        for (int m = 0; m < 3; ++m) h[m] = hamiltonian(s0, kVertices[m]);
        double hmax = std::max({h[0], h[1], h[2]});
        std::vector<int> cands;
        for (int m = 0; m < 3; ++m)
            if (h[m] > hmax - 1e-9) cands.push_back(m);
        if (cands.size() > 1) ++out.tie_events;
        out.links = 1;
        active = cands.size() == 1 ? cands[0] : resolve_tie(s0, cands, lc);
    }

    ControlMatrix Z0 = control_matrix(kVertices[active]);
    // hmax keeps each dense segment short enough that the event checks below
    // (terminal dip, star margin, singular proximity) cannot be stepped over
    Rk45<12> stepper(
        [&Z0](double, const LiftedVec& v, LiftedVec& o) { lifted_rhs(v, Z0, -1.0, o); },
        {opt.atol, opt.rtol, 0.05});
    stepper.start(0.0, pack_lifted(s0));

    auto state_at = [&](const Rk45<12>::Segment& seg, double t) {
        return unpack_lifted(seg.eval(t), lc, t);
    };
    auto margin_at = [&](const Rk45<12>::Segment& seg, double t, int act) {
        LiftedState s = state_at(seg, t);
        double h[3];
        for (int m = 0; m < 3; ++m) h[m] = hamiltonian(s, kVertices[m]);
        double other = -1e300;
        for (int m = 0; m < 3; ++m)
            if (m != act) other = std::max(other, h[m]);
        return h[act] - other;
    };

    auto finish = [&](ShootKind kind, const LiftedState& s) {
        out.kind = kind;
        out.t_end = s.t;
        out.cost = s.accumulated_cost;
        out.terminal_g_residual = (s.g.m - R).norm_inf();
        out.terminal_z_residual = std::hypot(s.z.x - z_target.x, s.z.y - z_target.y);
        try {
            out.hamiltonian_end = hamiltonian(s, kVertices[active]);
        } catch (const Error&) {
            out.hamiltonian_end = 0.0;
        }
        return out;
    };

    while (true) {
        if (stepper.time() >= opt.t_max - 1e-15)
            return finish(ShootKind::CostBoundReject, unpack_lifted(stepper.state(), lc, stepper.time()));

        Rk45<12>::StepStatus st;
        try {
            st = stepper.advance(opt.t_max);
        } catch (const Error&) {
            return finish(ShootKind::StarExit, unpack_lifted(stepper.state(), lc, stepper.time()));
        }
        if (st == Rk45<12>::StepStatus::Underflow)
            return finish(ShootKind::StarExit, unpack_lifted(stepper.state(), lc, stepper.time()));

        const auto seg = stepper.segment();

        // earliest dominance loss inside this segment
        double t_sw = seg.t1;
        bool has_switch = false;
        if (margin_at(seg, seg.t1, active) < -1e-12) {
            double lo = seg.t0, hi = seg.t1;
            for (int i = 0; i < 90 && hi - lo > 1e-13; ++i) {
                double mid = 0.5 * (lo + hi);
                if (margin_at(seg, mid, active) < -1e-12) hi = mid; else lo = mid;
            }
            t_sw = hi;
            has_switch = true;
        }

        // terminal approach: refine the distance minimum over [t0, t_sw]
        {
            double a = seg.t0, b = t_sw;
            double da = terminal_distance(state_at(seg, a), R, z_target);
            double db = terminal_distance(state_at(seg, b), R, z_target);
            if (std::min(da, db) < 0.25) {
                double x1 = a, x2 = b;
                const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
                double c1 = x2 - gr * (x2 - x1), c2 = x1 + gr * (x2 - x1);
                double f1 = terminal_distance(state_at(seg, c1), R, z_target);
                double f2 = terminal_distance(state_at(seg, c2), R, z_target);
                for (int i = 0; i < 80 && x2 - x1 > 1e-13; ++i) {
                    if (f1 < f2) {
                        x2 = c2; c2 = c1; f2 = f1;
                        c1 = x2 - gr * (x2 - x1);
                        f1 = terminal_distance(state_at(seg, c1), R, z_target);
                    } else {
                        x1 = c1; c1 = c2; f1 = f2;
                        c2 = x1 + gr * (x2 - x1);
                        f2 = terminal_distance(state_at(seg, c2), R, z_target);
                    }
                }
                double t_star = 0.5 * (x1 + x2);
                LiftedState s_star = state_at(seg, t_star);
                double d_star = terminal_distance(s_star, R, z_target);
                d_star = std::min({d_star, da, db});
                if (da <= d_star) { t_star = a; s_star = state_at(seg, a); }
                if (db < std::min(da, d_star)) { t_star = b; s_star = state_at(seg, b); }
                if (terminal_distance(s_star, R, z_target) <= opt.terminal_tol)
                    return finish(ShootKind::TerminalHit, s_star);
            }
        }

        // star margin and singular proximity up to the switch point
        for (double t : {0.5 * (seg.t0 + t_sw), t_sw}) {
            LiftedState s = state_at(seg, t);
            if (!star_contains(s.z, opt.star_margin)) {
                double lo = seg.t0, hi = t;
                for (int i = 0; i < 80 && hi - lo > 1e-13; ++i) {
                    double mid = 0.5 * (lo + hi);
                    if (star_contains(state_at(seg, mid).z, opt.star_margin)) lo = mid; else hi = mid;
                }
                return finish(ShootKind::StarExit, state_at(seg, lo));
            }
            if (distance_to_singular(s) < opt.eps_sing)
                return finish(ShootKind::SingularNeighborhood, s);
        }

        if (has_switch) {
            LiftedState s_sw = state_at(seg, t_sw);
            double h[3];
            for (int m = 0; m < 3; ++m) h[m] = hamiltonian(s_sw, kVertices[m]);
            double hmax = std::max({h[0], h[1], h[2]});
            std::vector<int> cands;
            for (int m = 0; m < 3; ++m)
                if (m != active && h[m] > hmax - 1e-9) cands.push_back(m);
            if (cands.empty()) cands.push_back(active == 0 ? 1 : 0);
            if (cands.size() > 1) ++out.tie_events;
            int next = cands.size() == 1 ? cands[0] : resolve_tie(s_sw, cands, lc);

            out.switch_times.push_back(t_sw);
            ++out.links;
            if (static_cast<int>(out.switch_times.size()) > opt.max_switches)
                return finish(ShootKind::SwitchOverflow, s_sw);

            active = next;
            Z0 = control_matrix(kVertices[active]);
            stepper.start(t_sw, pack_lifted(s_sw));
        }
    }
}

GridResult grid_search(const GridBox& box, const ShootOptions& opt, int threads) {
    GridResult result;
    if (box.resolution <= 0) return result;
    long n = 1;
    for (int d = 0; d < 5; ++d) n *= box.resolution;
    result.records.resize(n);

    auto point_of = [&](long idx) {
        ReducedInitial r;
        long rem = idx;
        for (int d = 4; d >= 0; --d) {
            int j = static_cast<int>(rem % box.resolution);
            rem /= box.resolution;
            double frac = box.resolution == 1 ? 0.5 : static_cast<double>(j) / (box.resolution - 1);
            r.c[d] = box.center[d] - box.half_width[d] + 2.0 * box.half_width[d] * frac;
        }
        return r;
    };

    auto worker = [&](std::atomic<long>& counter) {
        for (;;) {
            long idx = counter.fetch_add(1);
            if (idx >= n) return;
            GridRecord& rec = result.records[idx];
            rec.index = idx;
            rec.point = point_of(idx);
            try {
                rec.outcome = shoot(rec.point, opt);
            } catch (const Error&) {
                rec.outcome = ShootOutcome{};
                rec.outcome.kind = ShootKind::StarExit;
            }
        }
    };

    std::atomic<long> counter{0};
    if (threads <= 1) {
        worker(counter);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back([&] { worker(counter); });
        for (auto& t : pool) t.join();
    }

    for (const auto& rec : result.records) {
        if (rec.outcome.kind != ShootKind::TerminalHit) continue;
        if (result.best_index < 0 ||
            rec.outcome.cost < result.records[result.best_index].outcome.cost)
            result.best_index = rec.index;
    }
    return result;
}

std::string outcomes_to_csv(const GridResult& g) {
    std::string out =
        "index,c0,c1,c2,c3,c4,kind,t_end,cost,switches,links,res_g,res_z,h_end,tie_events\n";
    char buf[512];
    for (const auto& rec : g.records) {
        const auto& o = rec.outcome;
        std::snprintf(
            buf, sizeof(buf),
            "%ld,%.17g,%.17g,%.17g,%.17g,%.17g,%s,%.17g,%.17g,%zu,%d,%.17g,%.17g,%.17g,%d\n",
            rec.index, rec.point.c[0], rec.point.c[1], rec.point.c[2], rec.point.c[3],
            rec.point.c[4], shoot_kind_name(o.kind), o.t_end, o.cost, o.switch_times.size(),
            o.links, o.terminal_g_residual, o.terminal_z_residual, o.hamiltonian_end,
            o.tie_events);
        out += buf;
    }
    return out;
}

std::string outcomes_to_json(const GridResult& g, const GridBox& box, int threads) {
    JsonWriter w;
    w.begin_object();
    w.key("schema").value("reinhardt-search/1");
    w.key("box").begin_object();
    w.key("center").value(std::vector<double>(box.center.begin(), box.center.end()));
    w.key("half_width").value(std::vector<double>(box.half_width.begin(), box.half_width.end()));
    w.key("resolution").value(box.resolution);
    w.end_object();
    w.key("threads").value(threads);
    w.key("best_index").value(g.best_index);
    w.key("records").begin_array();
    for (const auto& rec : g.records) {
        const auto& o = rec.outcome;
        w.begin_object();
        w.key("index").value(rec.index);
        w.key("point").value(std::vector<double>(rec.point.c.begin(), rec.point.c.end()));
        w.key("kind").value(shoot_kind_name(o.kind));
        w.key("t_end").value(o.t_end);
        w.key("cost").value(o.cost);
        w.key("switch_times").value(o.switch_times);
        w.key("links").value(o.links);
        w.key("terminal_g_residual").value(o.terminal_g_residual);
        w.key("terminal_z_residual").value(o.terminal_z_residual);
        w.key("hamiltonian_end").value(o.hamiltonian_end);
        w.key("tie_events").value(o.tie_events);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

}  // namespace reinhardt
