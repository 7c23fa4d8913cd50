#include "bohmh/cli/commands.hpp"

#include "bohmh/errors.hpp"
#include "bohmh/integrator.hpp"
#include "bohmh/kinematics.hpp"
#include "bohmh/rotated_frame.hpp"
#include "bohmh/wavefunctions.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

namespace bohmh::cli {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::vector<std::string> kOrbitColumns{"t_s", "x_m", "y_m", "z_m", "vx", "vy", "vz",
                                             "Lx",  "Ly",  "Lz",  "Fx",  "Fy", "Fz"};

std::vector<double> orbit_row(double t, const Vec3& r, const Vec3& v, const Vec3& L, const Vec3& F) {
    return {t, r.x, r.y, r.z, v.x, v.y, v.z, L.x, L.y, L.z, F.x, F.y, F.z};
}

void put_state(Json& meta, const QuantumNumbers& qn) {
    meta["n"] = qn.n();
    meta["l"] = qn.l();
    meta["m"] = qn.m();
}

void put_geometry(Json& meta, const OrbitGeometry& g) {
    meta["r_e_m"] = g.r_e;
    meta["r_0_m"] = g.r_0;
    meta["z_0_m"] = g.z_0;
    meta["theta_e_deg"] = g.theta_e / kDeg;
    meta["period_s"] = g.period;
    meta["omega_rad_s"] = g.omega;
    meta["speed_m_s"] = speed(g);
    meta["sense"] = g.sense == RotationSense::Counterclockwise ? "counterclockwise" : "clockwise";
}

double radius_for(const RunSpec& spec, const QuantumNumbers& qn, const PhysConsts& c) {
    const double r = spec.re_m.value_or(most_probable_radius(qn.n(), c));
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw DomainError("--re-m must be positive");
    }
    return r;
}

void check_run_lengths(const RunSpec& spec) {
    if (!(spec.periods >= 0.0) || !std::isfinite(spec.periods)) {
        throw DomainError("--periods must be >= 0");
    }
    if (spec.dt_divisor < 1) {
        throw DomainError("--dt-divisor must be >= 1");
    }
    if (spec.record_every < 1) {
        throw DomainError("--record-every must be >= 1");
    }
}

struct Range {
    double lo, hi;
    int count;
    double at(int i) const { return count == 1 ? lo : lo + (hi - lo) * i / (count - 1); }
};

Range parse_range(const std::string& s) {
    std::stringstream ss(s);
    std::string a, b, n;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, n) ) {
        throw DomainError("--grid: expected lo:hi:count, got '" + s + "'");
    }
    try {
        Range r{std::stod(a), std::stod(b), std::stoi(n)};
        if (r.count < 1) {
            throw DomainError("--grid: count must be >= 1");
        }
        return r;
    } catch (const std::logic_error&) {
        throw DomainError("--grid: bad number in '" + s + "'");
    }
}

std::vector<SphericalPoint> parse_grid(const std::string& grid) {
    std::stringstream ss(grid);
    std::string part;
    std::vector<Range> ranges;
    while (std::getline(ss, part, ',')) {
        ranges.push_back(parse_range(part));
    }
    if (ranges.size() != 3) {
        throw DomainError("--grid: expected three ranges r,theta,phi");
    }
    std::vector<SphericalPoint> pts;
    for (int i = 0; i < ranges[0].count; ++i) {
        for (int j = 0; j < ranges[1].count; ++j) {
            for (int k = 0; k < ranges[2].count; ++k) {
                const double r = ranges[0].at(i);
                if (r < 0.0) {
                    throw DomainError("--grid: r must be >= 0");
                }
                pts.push_back({r, ranges[1].at(j) * kDeg, ranges[2].at(k) * kDeg});
            }
        }
    }
    return pts;
}

std::string fixed3(double v) {
    char buf[32];
    const double r = std::round(v * 1000.0) / 1000.0;
    std::snprintf(buf, sizeof buf, "%8.3f", r == 0.0 ? 0.0 : r);
    return buf;
}

void emit(const Table& t, const RunSpec& spec, std::ostream& out) {
    std::ofstream file;
    std::ostream* dst = &out;
    if (!spec.out.empty()) {
        file.open(spec.out, std::ios::out | std::ios::trunc);
        if (!file) {
            throw DomainError("cannot open output file '" + spec.out + "'");
        }
        dst = &file;
    }
    if (spec.format == "json") {
        write_json(t, *dst);
    } else {
        write_csv(t, *dst);
    }
}

void emit_text(const std::string& s, const RunSpec& spec, std::ostream& out) {
    if (spec.out.empty()) {
        out << s;
        return;
    }
    std::ofstream file(spec.out, std::ios::out | std::ios::trunc);
    if (!file) {
        throw DomainError("cannot open output file '" + spec.out + "'");
    }
    file << s;
}

std::string point_text(const Vec3& p) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.9g, %.9g, %.9g)", p.x, p.y, p.z);
    return buf;
}

} // namespace

Table orbit_table(const RunSpec& spec, const PhysConsts& c) {
    check_run_lengths(spec);
    const QuantumNumbers qn(spec.n, spec.l, spec.m);
    const double r_e = radius_for(spec, qn, c);
    const double phase = spec.phase_deg.value_or(0.0) * kDeg;

    Table t;
    t.columns = kOrbitColumns;
    t.meta["command"] = "orbit";
    put_state(t.meta, qn);
    t.meta["phase_deg"] = phase / kDeg;

    if (qn.m() == 0) {
        const Vec3 p = SphericalPoint{r_e, spec.theta_deg * kDeg, phase}.to_cartesian();
        t.meta["stationary"] = true;
        t.meta["r_e_m"] = r_e;
        t.meta["theta_deg"] = spec.theta_deg;
        t.rows.push_back(orbit_row(0.0, p, {}, {}, {}));
        return t;
    }

    const OrbitGeometry g = orbit_geometry(qn, c, r_e, phase);
    put_geometry(t.meta, g);
    const double dt = g.period / static_cast<double>(spec.dt_divisor);
    const long steps = std::lround(spec.periods * static_cast<double>(spec.dt_divisor));
    t.meta["dt_s"] = dt;
    t.meta["steps"] = steps;
    t.meta["record_every"] = spec.record_every;
    for (long k = 0; k <= steps; k += spec.record_every) {
        const double tt = k * dt;
        const SphericalPoint sp{g.r_e, g.theta_e, azimuth(g, tt)};
        t.rows.push_back(orbit_row(tt, position(g, tt), velocity(g, tt),
                                   angular_momentum_trajectory(g, tt), net_force(qn, sp, c)));
    }
    return t;
}

Table rotated_orbit_table(const RunSpec& spec, const PhysConsts& c) {
    check_run_lengths(spec);
    if (spec.n != 2 || spec.l != 1) {
        throw DomainError("rotated-orbit requires n=2, l=1");
    }
    const QuantumNumbers qn(spec.n, spec.l, spec.m);
    const RotatedState st(spec.m, spec.beta_deg * kDeg);
    const double r_e = radius_for(spec, qn, c);
    const double phase = spec.phase_deg.value_or(90.0) * kDeg;

    Table t;
    t.columns = kOrbitColumns;
    t.meta["command"] = "rotated-orbit";
    put_state(t.meta, qn);
    t.meta["beta_deg"] = spec.beta_deg;
    t.meta["phase_deg"] = phase / kDeg;

    if (qn.m() == 0) {
        const Vec3 p = SphericalPoint{r_e, spec.theta_deg * kDeg, phase}.to_cartesian();
        t.meta["stationary"] = true;
        t.meta["r_e_m"] = r_e;
        t.meta["theta_deg"] = spec.theta_deg;
        t.rows.push_back(orbit_row(0.0, st.config().rotate(p), {}, {}, {}));
        return t;
    }

    const OrbitGeometry g = orbit_geometry(qn, c, r_e, phase);
    put_geometry(t.meta, g);
    const IntegratorConfig cfg =
        config_for_period(g.period, spec.periods, spec.dt_divisor, spec.record_every);
    const VectorField rhs = [&](const Vec3& p) { return eom_rhs(st, p, c); };
    Observers obs;
    obs.L = [&](const Vec3& p) { return angular_momentum_rotated(st, p, c); };
    obs.F_net = [&](const Vec3& p) { return net_force_rotated(st, p, c); };
    const Trajectory traj = integrate(rhs, initial_condition(st, g), cfg, obs, "rotated-orbit");

    double deviation = 0.0;
    for (const TrajectorySample& s : traj.samples) {
        deviation = std::max(deviation, norm(st.config().unrotate(s.position) - position(g, s.t)));
        t.rows.push_back(orbit_row(s.t, s.position, s.velocity, s.L, s.F_net));
    }
    t.meta["dt_s"] = cfg.dt;
    t.meta["steps"] = cfg.steps;
    t.meta["record_every"] = cfg.record_every;
    t.meta["closure_error_m"] =
        norm(traj.samples.back().position - traj.samples.front().position);
    t.meta["max_deviation_from_analytic_m"] = deviation;
    return t;
}

Table fields_table(const RunSpec& spec, const PhysConsts& c) {
    const QuantumNumbers qn(spec.n, spec.l, spec.m);
    const double r_e = radius_for(spec, qn, c);

    std::vector<SphericalPoint> pts;
    Table t;
    t.meta["command"] = "fields";
    put_state(t.meta, qn);
    if (!spec.grid.empty()) {
        pts = parse_grid(spec.grid);
        t.meta["grid"] = spec.grid;
    } else if (qn.m() != 0) {
        const int count = spec.ring > 0 ? spec.ring : 16;
        const OrbitGeometry g = orbit_geometry(qn, c, r_e);
        for (int i = 0; i < count; ++i) {
            pts.push_back({g.r_e, g.theta_e, 2.0 * std::numbers::pi * i / count});
        }
        t.meta["ring_points"] = count;
        t.meta["theta_e_deg"] = g.theta_e / kDeg;
    } else {
        if (spec.ring > 0) {
            throw DomainError("--ring needs m != 0; an m = 0 electron has no orbit");
        }
        for (int j = 0; j < 11; ++j) {
            for (int k = 0; k < 4; ++k) {
                pts.push_back({r_e, (15.0 + 15.0 * j) * kDeg, 90.0 * k * kDeg});
            }
        }
        t.meta["grid"] = "default: r_e, theta 15..165 deg, phi 0..270 deg";
    }
    t.meta["r_e_m"] = r_e;
    t.meta["E_n_J"] = bohr_energy(qn.n(), c);
    t.meta["flag"] = "0 ok, 1 node of R (Q_fd undefined), 2 singular point";

    t.columns = {"r_m", "theta_deg", "phi_deg", "x_m", "y_m", "z_m", "S", "gradS_abs",
                 "KE",  "V",         "Q",       "Q_fd", "E_sum", "Fx", "Fy", "Fz",
                 "F_abs", "Lx", "Ly", "Lz", "flag"};

    for (const SphericalPoint& sp : pts) {
        const Vec3 x = sp.to_cartesian();
        std::vector<double> row{sp.r, sp.theta / kDeg, sp.phi / kDeg, x.x, x.y, x.z};
        try {
            const FieldSample fs = field_sample(qn, sp, 0.0, c, r_e);
            const double ke = dot(fs.gradS, fs.gradS) / (2.0 * c.m_e());
            double q_fd = kNaN;
            double flag = 0.0;
            try {
                q_fd = quantum_potential_numeric(qn, x, c);
            } catch (const NodeError&) {
                flag = 1.0;
            }
            row.insert(row.end(), {fs.S, norm(fs.gradS), ke, fs.V, fs.Q, q_fd, fs.Q + ke + fs.V,
                                   fs.F_net.x, fs.F_net.y, fs.F_net.z, norm(fs.F_net), fs.L.x,
                                   fs.L.y, fs.L.z, flag});
        } catch (const SingularityError&) {
            row.resize(t.columns.size() - 1, kNaN);
            row.push_back(2.0);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Json report_json(const RunSpec& spec, const PhysConsts& c) {
    const QuantumNumbers qn(spec.n, spec.l, spec.m);
    const double r_e = radius_for(spec, qn, c);
    const EnergyReport r = energy_report(qn, c, r_e);
    Json j;
    j["n"] = qn.n();
    j["l"] = qn.l();
    j["m"] = qn.m();
    j["r_e_m"] = r_e;
    const std::pair<const char*, double> fields[] = {
        {"E_n", r.E_n},     {"phi_term", r.phi_term}, {"E_CI", r.E_CI}, {"KE_CI", r.KE_CI},
        {"KE_Bohr", r.KE_Bohr}, {"V", r.V},           {"Q", r.Q}};
    Json joules = Json::object();
    Json display = Json::object();
    for (const auto& [name, v] : fields) {
        joules[name] = v;
        display[name] = std::round(v / 1e-19 * 1000.0) / 1000.0 + 0.0;
    }
    j["joules"] = joules;
    j["units_1e-19_J_3dp"] = display;
    j["closure_residual_J"] = r.E_n - (r.KE_CI + r.V + r.Q);
    return j;
}

std::string report_text(const RunSpec& spec, const PhysConsts& c) {
    const QuantumNumbers qn(spec.n, spec.l, spec.m);
    const double r_e = radius_for(spec, qn, c);
    const EnergyReport r = energy_report(qn, c, r_e);
    std::ostringstream os;
    char head[128];
    std::snprintf(head, sizeof head, "state (n,l,m) = (%d,%d,%d)  r_e = %.6e m\n", qn.n(), qn.l(),
                  qn.m(), r_e);
    os << head << "energies in units of 1e-19 J\n";
    const std::pair<const char*, double> fields[] = {
        {"E_n", r.E_n},     {"phi_term", r.phi_term}, {"E_CI", r.E_CI}, {"KE_CI", r.KE_CI},
        {"KE_Bohr", r.KE_Bohr}, {"V", r.V},           {"Q", r.Q}};
    for (const auto& [name, v] : fields) {
        char line[64];
        std::snprintf(line, sizeof line, "  %-9s%s\n", name, fixed3(v / 1e-19).c_str());
        os << line;
    }
    os << "  E_n - (KE_CI + V + Q) = " << fixed3((r.E_n - (r.KE_CI + r.V + r.Q)) / 1e-19) << '\n';
    return os.str();
}

Json check_json(const std::vector<verify::CheckResult>& acceptance,
                const std::vector<verify::CheckResult>& invariants) {
    const auto list = [](const std::vector<verify::CheckResult>& rs) {
        Json a = Json::array();
        for (const auto& r : rs) {
            a.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        }
        return a;
    };
    Json j;
    j["passed"] = verify::all_passed(acceptance) && verify::all_passed(invariants);
    j["acceptance"] = list(acceptance);
    j["invariants"] = list(invariants);
    Json failures = Json::array();
    for (const auto* rs : {&acceptance, &invariants}) {
        for (const auto& r : *rs) {
            if (!r.passed) {
                failures.push_back(r.name);
            }
        }
    }
    j["failures"] = failures;
    return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Causal (de Broglie-Bohm) electron orbits in hydrogen", "bohmh"};
    app.require_subcommand(1);
    RunSpec spec;

    const auto common = [&](CLI::App* sub, bool tables) {
        sub->add_option("--n", spec.n, "principal quantum number");
        sub->add_option("--l", spec.l, "orbital quantum number");
        sub->add_option("--m", spec.m, "magnetic quantum number");
        sub->add_option("--re-m", spec.re_m, "orbit radius r_e in metres (default n^2 a_mu / Z)");
        sub->add_option("--constants", spec.constants,
                        std::string("constants override file (else $") + kConstantsEnvVar + ")");
        sub->add_option("--out", spec.out, "output path (default stdout)");
        if (tables) {
            sub->add_option("--format", spec.format, "csv or json")
                ->check(CLI::IsMember({"csv", "json"}));
        } else {
            sub->add_option("--format", spec.format, "text or json")
                ->check(CLI::IsMember({"text", "json"}));
        }
    };
    const auto timing = [&](CLI::App* sub) {
        sub->add_option("--phase-deg", spec.phase_deg, "azimuth at t = 0, degrees");
        sub->add_option("--theta-deg", spec.theta_deg, "polar angle of an m = 0 rest point");
        sub->add_option("--periods", spec.periods, "duration in orbital periods");
        sub->add_option("--dt-divisor", spec.dt_divisor, "steps per period (dt = T / divisor)");
        sub->add_option("--record-every", spec.record_every, "record every k-th step");
    };

    CLI::App* orbit = app.add_subcommand("orbit", "analytic orbit samples");
    common(orbit, true);
    timing(orbit);

    CLI::App* rotated = app.add_subcommand("rotated-orbit", "RK4 orbit in axes rotated about y");
    common(rotated, true);
    timing(rotated);
    rotated->add_option("--beta-deg", spec.beta_deg, "rotation angle about y, degrees");

    CLI::App* fields = app.add_subcommand("fields", "S, Q, V, F_net and L on a grid");
    common(fields, true);
    fields->add_option("--grid", spec.grid,
                       "r0:r1:nr,th0:th1:nth,ph0:ph1:nph (metres, degrees)");
    fields->add_option("--ring", spec.ring, "points around the orbit (m != 0)");

    CLI::App* report = app.add_subcommand("report", "energy bookkeeping on the orbit");
    common(report, false);

    CLI::App* check = app.add_subcommand("check", "run acceptance and invariant checks");
    check->add_option("--constants", spec.constants, "constants override file");
    check->add_option("--format", spec.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    check->add_option("--out", spec.out, "output path (default stdout)");
    check->add_option("--suite", spec.suite, "all, acceptance or invariants")
        ->check(CLI::IsMember({"all", "acceptance", "invariants"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const PhysConsts c =
            spec.constants.empty() ? load_constants_from_env() : load_constants(spec.constants);

        if (*orbit) {
            emit(orbit_table(spec, c), spec, out);
        } else if (*rotated) {
            emit(rotated_orbit_table(spec, c), spec, out);
        } else if (*fields) {
            emit(fields_table(spec, c), spec, out);
        } else if (*report) {
            if (spec.format == "json") {
                emit_text(report_json(spec, c).dump(2) + "\n", spec, out);
            } else {
                emit_text(report_text(spec, c), spec, out);
            }
        } else if (*check) {
            std::vector<verify::CheckResult> acc;
            std::vector<verify::CheckResult> inv;
            if (spec.suite != "invariants") {
                acc = verify::acceptance_checks(c);
            }
            if (spec.suite != "acceptance") {
                inv = verify::invariant_checks(c);
            }
            const Json j = check_json(acc, inv);
            if (spec.format == "json") {
                emit_text(j.dump(2) + "\n", spec, out);
            } else {
                std::ostringstream os;
                for (const auto* rs : {&acc, &inv}) {
                    for (const auto& r : *rs) {
                        os << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  [" << r.detail
                           << "]\n";
                    }
                }
                os << (j["passed"].get<bool>() ? "all checks passed\n"
                                                : "failed: " + j["failures"].dump() + "\n");
                emit_text(os.str(), spec, out);
            }
            return j["passed"].get<bool>() ? kOk : kCheckFailed;
        }
    } catch (const IntegrationError& e) {
        err << "bohmh: " << e.what() << " at t = " << e.t() << " s, point "
            << point_text(e.point()) << " m\n";
        return e.at_node() ? kNode : kCheckFailed;
    } catch (const NodeError& e) {
        err << "bohmh: " << e.what() << " at " << point_text(e.point()) << " m\n";
        return kNode;
    } catch (const DomainError& e) {
        err << "bohmh: " << e.what() << '\n';
        return kUsage;
    } catch (const StationaryElectron& e) {
        err << "bohmh: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "bohmh: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kOk;
}

} // namespace bohmh::cli
