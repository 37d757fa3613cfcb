// Command-line front end: build smoothed polygons, certify extremality, run
// the direct search, export CSV/JSON/SVG artifacts.

#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "reinhardt/jsonout.hpp"
#include "reinhardt/pmp.hpp"
#include "reinhardt/search.hpp"
#include "reinhardt/svg.hpp"

using namespace reinhardt;

namespace {

struct RunConfig {
    std::string command;
    std::string family = "plus";
    int k = 1;
    int samples = 64;
    std::string out;
    std::string config_path;
    int threads = 1;
    double tol_ode = 1e-10;
    long seed = 0;
    int kmax = 8;
    bool overlay = false;
};

PolygonFamily family_of(const std::string& name) {
    if (name == "plus") return PolygonFamily::Plus;
    if (name == "minus") return PolygonFamily::Minus;
    throw Error(ErrorCode::InvalidArgument, "family must be plus or minus");
}

void validate_k(const RunConfig& rc, PolygonFamily fam) {
    if (fam == PolygonFamily::Plus && rc.k < 1)
        throw Error(ErrorCode::InvalidArgument, "plus family needs --k >= 1");
    if (fam == PolygonFamily::Minus && rc.k < 2)
        throw Error(ErrorCode::InvalidArgument, "minus family needs --k >= 2");
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open output file " + path);
    f << body;
}

void emit_metadata(JsonWriter& w, const RunConfig& rc) {
    w.key("metadata").begin_object();
    w.key("command").value(rc.command);
    w.key("family").value(rc.family);
    w.key("k").value(rc.k);
    w.key("samples").value(rc.samples);
    w.key("threads").value(rc.threads);
    w.key("tol_ode").value(rc.tol_ode);
    w.key("seed").value(rc.seed);
    w.key("version").value("1.0.0");
    w.end_object();
}

std::string trajectory_document(const RunConfig& rc, const SmoothedPolygon& p) {
    JsonWriter w;
    w.begin_object();
    w.key("schema").value("reinhardt-trajectory/1");
    emit_metadata(w, rc);
    w.key("y_k").value(p.y_k);
    w.key("t_k").value(p.t_k);
    w.key("theta_k").value(p.theta_k);
    w.key("t_f").value(p.t_f);
    w.key("area").value(p.area);
    w.key("shoelace_area").value(shoelace_area(p));

    w.key("time_grid").value(p.boundary_times);
    w.key("samples").begin_object();
    std::vector<double> g11, g12, g21, g22, xs, ys, cost;
    std::vector<int> active;
    for (double t : p.boundary_times) {
        GroupElement g = p.trajectory.group_at(t);
        HalfPlanePoint z = p.trajectory.state_at(t);
        g11.push_back(g.m.c11);
        g12.push_back(g.m.c12);
        g21.push_back(g.m.c21);
        g22.push_back(g.m.c22);
        xs.push_back(z.x);
        ys.push_back(z.y);
        cost.push_back(p.trajectory.cost_at(t));
        Control u = p.trajectory.control_at(std::min(t, p.t_f * (1.0 - 1e-12)));
        active.push_back(u.u0 == 1.0 ? 1 : (u.u1 == 1.0 ? 2 : 3));
    }
    w.key("g11").value(g11);
    w.key("g12").value(g12);
    w.key("g21").value(g21);
    w.key("g22").value(g22);
    w.key("x").value(xs);
    w.key("y").value(ys);
    w.key("active_control").value(active);
    w.key("accumulated_cost").value(cost);
    w.end_object();

    std::vector<double> switches(p.trajectory.switch_times().begin() + 1,
                                 p.trajectory.switch_times().end() - 1);
    w.key("switch_times").value(switches);
    w.key("terminal_residuals").begin_object();
    w.key("g").value(p.closure_g_residual);
    w.key("z").value(p.closure_z_residual);
    w.end_object();
    w.end_object();
    return w.str();
}

std::string boundary_csv(const SmoothedPolygon& p) {
    std::string out = "branch,t,px,py\n";
    char buf[160];
    for (int j = 0; j < 6; ++j)
        for (std::size_t i = 0; i < p.boundary_times.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g\n", j, p.boundary_times[i],
                          p.boundary[j][i][0], p.boundary[j][i][1]);
            out += buf;
        }
    return out;
}

int cmd_polygon(const RunConfig& rc) {
    PolygonFamily fam = family_of(rc.family);
    validate_k(rc, fam);
    SmoothedPolygon p = build_polygon(fam, rc.k, rc.samples);

    std::string prefix = rc.out.empty() ? ("polygon_" + rc.family + std::to_string(rc.k)) : rc.out;
    write_file(prefix + ".json", trajectory_document(rc, p));
    write_file(prefix + "_boundary.csv", boundary_csv(p));
    std::vector<std::vector<std::array<double, 2>>> branches(p.boundary.begin(), p.boundary.end());
    SvgOptions svg_opt;
    svg_opt.hexagram_overlay = rc.overlay;
    write_file(prefix + ".svg", svg_curves(branches, svg_opt));

    std::printf("family=%s k=%d n=%d links=%zu\n", rc.family.c_str(), rc.k,
                polygon_sides(fam, rc.k), p.schedule.size());
    std::printf("y_k=%.12g t_k=%.12g t_f=%.12g\n", p.y_k, p.t_k, p.t_f);
    std::printf("area=%.12g shoelace=%.12g\n", p.area, shoelace_area(p));
    std::printf("closure |g - R|=%.3e |z - R^-1.z0|=%.3e\n", p.closure_g_residual,
                p.closure_z_residual);
    if (fam == PolygonFamily::Plus && rc.k == 1) {
        GroupElement g1 = gamma0(HalfPlanePoint(0.0, p.y_k), p.t_k);
        double tr = (rot_R_pow(-1).m * g1.m).trace();
        std::printf("trace check |trace(R^-1 g1) - sqrt2| = %.3e\n",
                    std::abs(tr - std::sqrt(2.0)));
    }
    std::printf("wrote %s.json %s_boundary.csv %s.svg\n", prefix.c_str(), prefix.c_str(),
                prefix.c_str());
    return 0;
}

std::string report_document(const RunConfig& rc, const ExtremalityReport& rep, double bvp_res) {
    JsonWriter w;
    w.begin_object();
    w.key("schema").value("reinhardt-extremality/1");
    emit_metadata(w, rc);
    w.key("lambda_cost_sign").value(multiplier_sign_name(rep.lambda_cost_sign));
    w.key("hamiltonian_sup_norm").value(rep.hamiltonian_sup_norm);
    w.key("switching_margins").value(rep.switching_margins);
    w.key("dominance_gap").value(rep.dominance_gap);
    w.key("transversality_residuals").begin_object();
    w.key("lambda").value(rep.transversality_lambda);
    w.key("nu").value(rep.transversality_nu);
    w.key("reduced_period_solve").value(bvp_res);
    w.end_object();
    w.key("nu2_min").value(rep.nu2_min);
    w.key("nu2_interior_zero_free").value(rep.nu2_interior_zero_free);
    w.key("switch_point_residual").value(rep.switch_point_residual);
    w.key("time_symmetry_residual").value(rep.time_symmetry_residual);
    w.key("det_lambda_drift").value(rep.det_lambda_drift);
    w.key("verdict").value(rep.pass ? "pass" : "fail");
    w.key("reasons").begin_array();
    for (const auto& r : rep.reasons) w.value(r);
    w.end_array();
    // tolerances here are engineering choices standing in for the unpublished
    // interval-arithmetic pipeline
    w.key("tolerance_note").value("floating-point tolerances, not certified bounds");
    w.end_object();
    return w.str();
}

int cmd_verify(const RunConfig& rc) {
    PolygonFamily fam = family_of(rc.family);
    validate_k(rc, fam);
    SmoothedPolygon p = build_polygon(fam, rc.k, rc.samples);
    double bvp_res = 0.0;
    Costate c0 = solve_costate_bvp(p, &bvp_res);
    ExtremalityReport rep = verify_extremal(p, c0);

    std::string path = rc.out.empty() ? ("verify_" + rc.family + std::to_string(rc.k) + ".json")
                                      : rc.out;
    write_file(path, report_document(rc, rep, bvp_res));

    std::printf("family=%s k=%d multiplier=%s verdict=%s\n", rc.family.c_str(), rc.k,
                multiplier_sign_name(rep.lambda_cost_sign), rep.pass ? "pass" : "fail");
    std::printf("H sup=%.3e gap=%.3e transversality=(%.3e, %.3e) nu2_min=%.3e\n",
                rep.hamiltonian_sup_norm, rep.dominance_gap, rep.transversality_lambda,
                rep.transversality_nu, rep.nu2_min);
    for (const auto& r : rep.reasons) std::printf("note: %s\n", r.c_str());
    std::printf("wrote %s\n", path.c_str());

    if (fam == PolygonFamily::Plus) return rep.pass ? 0 : 2;
    return rep.lambda_cost_sign == MultiplierSign::WrongSign ? 0 : 2;
}

ShootOptions shoot_options_from(const nlohmann::json& j) {
    ShootOptions opt;
    if (j.contains("terminal_tol")) opt.terminal_tol = j["terminal_tol"].get<double>();
    if (j.contains("eps_sing")) opt.eps_sing = j["eps_sing"].get<double>();
    if (j.contains("max_switches")) opt.max_switches = j["max_switches"].get<int>();
    if (j.contains("star_margin")) opt.star_margin = j["star_margin"].get<double>();
    if (j.contains("t_max")) opt.t_max = j["t_max"].get<double>();
    if (j.contains("atol")) opt.atol = j["atol"].get<double>();
    if (j.contains("rtol")) opt.rtol = j["rtol"].get<double>();
    return opt;
}

int cmd_search(const RunConfig& rc) {
    std::ifstream f(rc.config_path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot read config " + rc.config_path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("config parse error: ") + e.what());
    }

    static const std::vector<std::string> allowed = {
        "schema",   "anchor",       "center",      "center_offset", "half_width", "resolution",
        "terminal_tol", "eps_sing", "max_switches", "star_margin",  "t_max",      "atol",
        "rtol"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw Error(ErrorCode::InvalidArgument, "unknown config key: " + it.key());
    if (j.contains("schema") && j["schema"] != "reinhardt-search/1")
        throw Error(ErrorCode::InvalidArgument, "unsupported config schema");

    GridBox box;
    if (j.contains("anchor")) {
        if (j["anchor"] != "octagon")
            throw Error(ErrorCode::InvalidArgument, "unknown anchor (only octagon is defined)");
        SmoothedPolygon p = build_polygon(PolygonFamily::Plus, 1, 4);
        Costate c0 = solve_costate_bvp(p);
        LiftedState s;
        s.z = p.trajectory.state_at(0.0);
        s.costate = c0;
        box.center = reduce(s).c;
    } else if (j.contains("center")) {
        auto c = j["center"].get<std::vector<double>>();
        if (c.size() != 5) throw Error(ErrorCode::InvalidArgument, "center must have 5 entries");
        std::copy(c.begin(), c.end(), box.center.begin());
    } else {
        throw Error(ErrorCode::InvalidArgument, "config needs either center or anchor");
    }
    if (j.contains("center_offset")) {
        auto c = j["center_offset"].get<std::vector<double>>();
        if (c.size() != 5)
            throw Error(ErrorCode::InvalidArgument, "center_offset must have 5 entries");
        for (int d = 0; d < 5; ++d) box.center[d] += c[d];
    }
    if (!j.contains("half_width") || !j.contains("resolution"))
        throw Error(ErrorCode::InvalidArgument, "config needs half_width and resolution");
    if (j["half_width"].is_number()) {
        box.half_width.fill(j["half_width"].get<double>());
    } else {
        auto hw = j["half_width"].get<std::vector<double>>();
        if (hw.size() != 5)
            throw Error(ErrorCode::InvalidArgument, "half_width must be a number or 5 entries");
        std::copy(hw.begin(), hw.end(), box.half_width.begin());
    }
    box.resolution = j["resolution"].get<int>();

    ShootOptions opt = shoot_options_from(j);
    GridResult g = grid_search(box, opt, rc.threads);

    std::string prefix = rc.out.empty() ? "search" : rc.out;
    write_file(prefix + ".csv", outcomes_to_csv(g));
    write_file(prefix + ".json", outcomes_to_json(g, box, rc.threads));

    std::printf("shots=%zu threads=%d\n", g.records.size(), rc.threads);
    if (g.best_index >= 0) {
        const auto& best = g.records[g.best_index];
        std::printf("best terminal hit: index=%ld cost=%.12g links=%d t_end=%.12g\n", best.index,
                    best.outcome.cost, best.outcome.links, best.outcome.t_end);
    } else {
        std::printf("no terminal hit in the box\n");
    }
    std::printf("wrote %s.csv %s.json\n", prefix.c_str(), prefix.c_str());
    return 0;
}

int cmd_table(const RunConfig& rc) {
    if (rc.kmax < 1) throw Error(ErrorCode::InvalidArgument, "--kmax must be >= 1");
    std::string csv = "family,k,n,area\n";
    char buf[96];
    bool plus_mono = true, minus_mono = true;
    double prev = 0.0;
    for (int k = 1; k <= rc.kmax; ++k) {
        double a = build_polygon(PolygonFamily::Plus, k, 4).area;
        plus_mono = plus_mono && a > prev && a < M_PI;
        prev = a;
        std::snprintf(buf, sizeof(buf), "plus,%d,%d,%.17g\n", k, 6 * k + 2, a);
        csv += buf;
    }
    prev = 1e300;
    for (int k = 2; k <= rc.kmax; ++k) {
        double a = build_polygon(PolygonFamily::Minus, k, 4).area;
        minus_mono = minus_mono && a < prev && a > M_PI;
        prev = a;
        std::snprintf(buf, sizeof(buf), "minus,%d,%d,%.17g\n", k, 6 * k - 2, a);
        csv += buf;
    }
    if (!rc.out.empty()) write_file(rc.out, csv);
    std::fputs(csv.c_str(), stdout);
    std::printf("plus_monotone=%s minus_monotone=%s\n", plus_mono ? "increasing" : "violated",
                minus_mono ? "decreasing" : "violated");
    return 0;
}

int cmd_circle(const RunConfig& rc) {
    LiftedState s = singular_state();
    PropagateOptions opt;
    opt.atol = opt.rtol = std::min(rc.tol_ode, 1e-12);
    auto res = propagate(
        s, [](double, const LiftedState&) { return Control::barycenter(); }, 0.0, M_PI / 3.0, opt,
        {M_PI / 3.0});
    const LiftedState& f = res.final_state;
    std::printf("circle diagnostic over [0, pi/3]\n");
    std::printf("cost=%.17g pi=%.17g |cost - pi|=%.3e\n", f.accumulated_cost, M_PI,
                std::abs(f.accumulated_cost - M_PI));
    std::printf("state drift |x|=%.3e |y-1|=%.3e H drift=%.3e\n", std::abs(f.z.x),
                std::abs(f.z.y - 1.0), res.hamiltonian_drift);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal trajectories of the Reinhardt optimal control problem"};
    app.require_subcommand(1);

    RunConfig rc;

    auto add_common = [&rc](CLI::App* cmd) {
        cmd->add_option("--threads", rc.threads, "worker threads")->check(CLI::PositiveNumber);
        cmd->add_option("--tol-ode", rc.tol_ode, "integrator tolerance");
        cmd->add_option("--seed", rc.seed, "seed recorded in metadata");
    };

    CLI::App* poly = app.add_subcommand("polygon", "build a smoothed polygon and export it");
    poly->add_option("--family", rc.family, "plus or minus")
        ->check(CLI::IsMember({"plus", "minus"}));
    poly->add_option("--k", rc.k, "family index")->required();
    poly->add_option("--samples", rc.samples, "boundary samples per link");
    poly->add_option("--out", rc.out, "output path prefix");
    poly->add_flag("--overlay", rc.overlay, "draw the hexagram guide triangles");
    add_common(poly);

    CLI::App* verify = app.add_subcommand("verify", "certify Pontryagin extremality");
    verify->add_option("--family", rc.family, "plus or minus")
        ->check(CLI::IsMember({"plus", "minus"}));
    verify->add_option("--k", rc.k, "family index")->required();
    verify->add_option("--samples", rc.samples, "boundary samples per link");
    verify->add_option("--out", rc.out, "report path");
    add_common(verify);

    CLI::App* search = app.add_subcommand("search", "grid search over extremal initial conditions");
    search->add_option("--config", rc.config_path, "JSON box specification")->required();
    search->add_option("--out", rc.out, "output path prefix");
    add_common(search);

    CLI::App* table = app.add_subcommand("table", "area table for both families");
    table->add_option("--kmax", rc.kmax, "largest family index");
    table->add_option("--out", rc.out, "CSV path");
    add_common(table);

    CLI::App* circle = app.add_subcommand("circle", "circular singular arc diagnostic");
    add_common(circle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (poly->parsed()) { rc.command = "polygon"; return cmd_polygon(rc); }
        if (verify->parsed()) { rc.command = "verify"; return cmd_verify(rc); }
        if (search->parsed()) { rc.command = "search"; return cmd_search(rc); }
        if (table->parsed()) { rc.command = "table"; return cmd_table(rc); }
        if (circle->parsed()) { rc.command = "circle"; return cmd_circle(rc); }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        switch (e.code()) {
            case ErrorCode::InvalidArgument:
            case ErrorCode::ChartFailure:
                return 1;
            default:
                return 2;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
    return 3;
}
