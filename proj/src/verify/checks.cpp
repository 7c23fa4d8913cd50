#include "bohmh/verify/checks.hpp"

#include "bohmh/errors.hpp"
#include "bohmh/integrator.hpp"
#include "bohmh/kinematics.hpp"
#include "bohmh/rotated_frame.hpp"
#include "bohmh/verify/finite_difference.hpp"
#include "bohmh/verify/quadrature.hpp"
#include "bohmh/wavefunctions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace bohmh::verify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;
constexpr std::uint64_t kSeed = 0x5eed2024;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double rel(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

double round_sf(double v, int sf) {
    if (v == 0.0) {
        return 0.0;
    }
    const double scale = std::pow(10.0, sf - 1 - static_cast<int>(std::floor(std::log10(std::abs(v)))));
    return std::round(v * scale) / scale;
}

double round_dp(double v, int dp) {
    const double scale = std::pow(10.0, dp);
    const double r = std::round(v * scale) / scale;
    return r == 0.0 ? 0.0 : r;
}

// Collects sub-checks of one named check; at most a handful of failures are
// spelled out in the detail string.
class Tally {
public:
    explicit Tally(std::string name) : name_(std::move(name)) {}

    bool expect(bool ok, const std::string& what) {
        ++total_;
        if (!ok) {
            if (++failed_ <= 6) {
                failures_ += (failures_.empty() ? "" : "; ") + what;
            }
        }
        return ok;
    }

    bool expect_rel(double got, double want, double tol, const std::string& what) {
        return expect(rel(got, want) <= tol,
                      what + " got " + num(got) + " want " + num(want) + " (tol " + num(tol) + ")");
    }

    bool expect_abs(double got, double want, double tol, const std::string& what) {
        return expect(std::abs(got - want) <= tol,
                      what + " got " + num(got) + " want " + num(want) + " (tol " + num(tol) + ")");
    }

    // Equality after rounding to the printed significant figures.
    bool expect_sf(double got, double printed, int sf, const std::string& what) {
        const double r = round_sf(got, sf);
        return expect(rel(r, printed) < 1e-9, what + " computed " + num(got) + " rounds to " +
                                                  num(r) + ", printed " + num(printed));
    }

    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }

    CheckResult finish() const {
        CheckResult r{name_, failed_ == 0, {}};
        r.detail = std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " sub-checks";
        if (!notes_.empty()) {
            r.detail += "; " + notes_;
        }
        if (failed_ > 0) {
            r.detail += "; FAILED: " + failures_;
            if (failed_ > 6) {
                r.detail += "; ... " + std::to_string(failed_ - 6) + " more";
            }
        }
        return r;
    }

private:
    std::string name_;
    int total_{0};
    int failed_{0};
    std::string failures_;
    std::string notes_;
};

std::string label(int n, int l, int m) {
    return "(" + std::to_string(n) + "," + std::to_string(l) + "," + std::to_string(m) + ")";
}

double max_deviation(const Trajectory& traj, const OrbitGeometry& g, const RotationConfig& rc) {
    double worst = 0.0;
    for (const TrajectorySample& s : traj.samples) {
        worst = std::max(worst, norm(rc.unrotate(s.position) - position(g, s.t)) / g.r_e);
    }
    return worst;
}

Trajectory rotated_run(const RotatedState& st, const OrbitGeometry& g, const PhysConsts& c,
                       long divisor, long record_every = 1) {
    const VectorField rhs = [&](const Vec3& p) { return eom_rhs(st, p, c); };
    const IntegratorConfig cfg = config_for_period(g.period, 1.0, divisor, record_every);
    return integrate(rhs, initial_condition(st, g), cfg);
}

// Endpoint error after one period against the analytic orbit.
double endpoint_error(const RotatedState& st, const OrbitGeometry& g, const PhysConsts& c,
                      long divisor) {
    const Trajectory traj = rotated_run(st, g, c, divisor, divisor);
    const TrajectorySample& last = traj.samples.back();
    return norm(st.config().unrotate(last.position) - position(g, last.t)) / g.r_e;
}

OrbitGeometry n2_geometry(int m, const PhysConsts& c, double phase = kPi / 2.0) {
    return orbit_geometry(QuantumNumbers(2, 1, m), c, std::nullopt, phase);
}

// ---- acceptance table ----------------------------------------------------

CheckResult geometry_n2(const PhysConsts& c) {
    Tally t("C1 orbit geometry n=2 l=1");
    const double re = most_probable_radius(2, c);
    t.expect_sf(re, 2.12e-10, 3, "r_e");
    for (int m : {1, -1}) {
        const OrbitGeometry g = orbit_geometry(QuantumNumbers(2, 1, m), c);
        const std::string s = "m=" + std::to_string(m) + " ";
        t.expect_sf(g.theta_e / kDeg, m > 0 ? 45.0 : 135.0, 3, s + "theta_e");
        t.expect_sf(g.r_0, 1.50e-10, 3, s + "r_0");
        t.expect_sf(g.z_0, m > 0 ? 1.50e-10 : -1.50e-10, 3, s + "z_0");
    }
    return t.finish();
}

CheckResult geometry_n4(const PhysConsts& c) {
    Tally t("C2 orbit geometry n=4 l=3");
    constexpr double tol = 5e-3;
    struct Row {
        int m;
        double theta_deg, r0, z0;
    };
    const Row rows[] = {
        {1, 16.8, 2.45e-10, 8.11e-10},   {2, 35.3, 4.89e-10, 6.92e-10},
        {3, 60.0, 7.34e-10, 4.23e-10},   {-3, 120.0, 7.34e-10, -4.23e-10},
        {-2, 145.0, 4.89e-10, -6.92e-10}, {-1, 163.0, 2.45e-10, -8.11e-10},
    };
    t.expect_rel(most_probable_radius(4, c), 8.47e-10, tol, "r_e");
    for (const Row& row : rows) {
        const OrbitGeometry g = orbit_geometry(QuantumNumbers(4, 3, row.m), c);
        const std::string s = "m=" + std::to_string(row.m) + " ";
        t.expect_rel(g.theta_e / kDeg, row.theta_deg, tol, s + "theta_e");
        t.expect_rel(g.r_0, row.r0, tol, s + "r_0");
        t.expect_rel(g.z_0, row.z0, tol, s + "z_0");
    }
    bool stationary = false;
    try {
        (void)orbit_geometry(QuantumNumbers(4, 3, 0), c);
    } catch (const StationaryElectron&) {
        stationary = true;
    }
    t.expect(stationary, "m=0 row should have no orbit geometry");
    return t.finish();
}

CheckResult speeds(const PhysConsts& c) {
    Tally t("C3 orbital speeds");
    for (int m : {1, -1}) {
        t.expect_rel(speed(orbit_geometry(QuantumNumbers(2, 1, m), c)), 7.73e5, 5e-3,
                     "n=2 m=" + std::to_string(m));
    }
    for (int m : {1, 2, 3, -1, -2, -3}) {
        t.expect_rel(speed(orbit_geometry(QuantumNumbers(4, 3, m), c)), 4.73e5, 5e-3,
                     "n=4 m=" + std::to_string(m));
    }
    return t.finish();
}

CheckResult net_force_magnitude(const PhysConsts& c) {
    Tally t("C4 net force magnitude");
    constexpr double want = 3.64e-9;
    for (int m : {1, -1}) {
        const QuantumNumbers qn(2, 1, m);
        const OrbitGeometry g = orbit_geometry(qn, c);
        for (int k = 0; k < 8; ++k) {
            const double tt = k * g.period / 8.0;
            const SphericalPoint p{g.r_e, g.theta_e, azimuth(g, tt)};
            t.expect_rel(norm(net_force(qn, p, c)), want, 1e-2, "unrotated m=" + std::to_string(m));
        }
        const RotatedState st(m, 30.0 * kDeg);
        const OrbitGeometry g2 = n2_geometry(m, c);
        for (int k = 0; k < 8; ++k) {
            const Vec3 p = st.config().rotate(position(g2, k * g2.period / 8.0));
            t.expect_rel(norm(net_force_rotated(st, p, c)), want, 1e-2,
                         "rotated m=" + std::to_string(m));
        }
    }
    return t.finish();
}

CheckResult angular_momentum_magnitude(const PhysConsts& c) {
    Tally t("C5 angular momentum magnitude");
    constexpr double want = 1.49e-34;
    t.expect_rel(std::sqrt(2.0) * c.hbar(), want, 5e-3, "sqrt(2) hbar");
    for (int m : {1, -1}) {
        const QuantumNumbers qn(2, 1, m);
        const OrbitGeometry g = orbit_geometry(qn, c);
        const RotatedState st(m, 30.0 * kDeg);
        const OrbitGeometry g2 = n2_geometry(m, c);
        for (int k = 0; k < 8; ++k) {
            const double tt = k * g.period / 8.0;
            const Vec3 L = angular_momentum(qn, {g.r_e, g.theta_e, azimuth(g, tt)}, c);
            t.expect_rel(norm(L), want, 5e-3, "unrotated |L| m=" + std::to_string(m));
            t.expect_rel(L.z, m * c.hbar(), 1e-12, "L_z m=" + std::to_string(m));
            const Vec3 p = st.config().rotate(position(g2, tt));
            t.expect_rel(norm(angular_momentum_rotated(st, p, c)), want, 5e-3,
                         "rotated |L| m=" + std::to_string(m));
        }
    }
    return t.finish();
}

CheckResult energy_table(const PhysConsts& c) {
    Tally t("C6 energy table (1e-19 J, 3 decimals)");
    const auto expect3 = [&](double joules, double printed, const std::string& what) {
        const double v = joules / 1e-19;
        t.expect(round_dp(v, 3) == printed,
                 what + " computed " + num(v) + " rounds to " + num(round_dp(v, 3)) +
                     ", printed " + num(printed));
    };
    for (int m : {1, -1, 0}) {
        const EnergyReport r = energy_report(QuantumNumbers(2, 1, m), c);
        const std::string s = "m=" + std::to_string(m) + " ";
        expect3(r.E_n, -5.447, s + "E");
        expect3(r.E_CI, m == 0 ? -5.447 : -0.003, s + "E_CI");
        expect3(r.KE_CI, m == 0 ? 0.0 : 2.722, s + "KE_CI");
        expect3(r.V, -10.894, s + "V");
        expect3(r.Q, m == 0 ? 5.447 : 2.725, s + "Q");
    }
    return t.finish();
}

CheckResult oracle_equivalence(const PhysConsts& c) {
    Tally t("C7 finite-difference oracles");
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Q: Laplacian form vs Hamilton-Jacobi form on the n=2 orbits.
    double worst_q = 0.0;
    for (int i = 0; i < 20; ++i) {
        const int m = (i % 2 == 0) ? 1 : -1;
        const QuantumNumbers qn(2, 1, m);
        const OrbitGeometry g = orbit_geometry(qn, c, std::nullopt, 2.0 * kPi * unit(rng));
        const SphericalPoint sp{g.r_e, g.theta_e, azimuth(g, 0.0)};
        const double q_fd = quantum_potential_numeric(qn, sp.to_cartesian(), c);
        const double q_alg = quantum_potential(qn, sp, c);
        worst_q = std::max(worst_q, rel(q_fd, q_alg));
        t.expect_rel(q_fd, q_alg, 1e-3, "Q at orbit point " + std::to_string(i));
    }
    t.note("max Q rel diff " + num(worst_q));

    // ∇S in the unrotated frame, S = ħmφ at t = 0.
    const double period = 2.0 * kPi * c.hbar();
    double worst_g = 0.0;
    const int states[][3] = {{2, 1, 1}, {2, 1, -1}, {4, 3, 1}, {4, 3, -2}, {4, 3, 3}};
    for (int i = 0; i < 50; ++i) {
        const int* s = states[i % 5];
        const QuantumNumbers qn(s[0], s[1], s[2]);
        const double re = most_probable_radius(qn.n(), c);
        const SphericalPoint sp{re * (0.3 + 2.0 * unit(rng)), 0.15 + (kPi - 0.3) * unit(rng),
                                kPi * (2.0 * unit(rng) - 1.0)};
        const ScalarField S = [&](const Vec3& p) {
            return phase(qn, SphericalPoint::from_cartesian(p), 0.0, c);
        };
        const Vec3 fd = phase_gradient(S, sp.to_cartesian(), 1e-4 * re, period);
        const Vec3 an = momentum_field(qn, sp, c);
        const double e = norm(fd - an) / norm(an);
        worst_g = std::max(worst_g, e);
        t.expect(e <= 1e-6, "unrotated gradS " + label(s[0], s[1], s[2]) + " rel " + num(e));
    }

    // ∇S in rotated frames.
    const double re = most_probable_radius(2, c);
    for (int i = 0; i < 50; ++i) {
        const RotatedState st((i % 2 == 0) ? 1 : -1, 2.0 * kPi * unit(rng));
        Vec3 p;
        do {
            p = Vec3{2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0} * (2.0 * re);
        } while (phi_modulus_squared(st, p) < 0.01 * re * re);
        const ScalarField S = [&](const Vec3& q) { return phase_jet(st, q, c).S; };
        const Vec3 fd = phase_gradient(S, p, 1e-4 * re, period);
        const Vec3 an = phase_jet(st, p, c).grad;
        const double e = norm(fd - an) / norm(an);
        worst_g = std::max(worst_g, e);
        t.expect(e <= 1e-6, "rotated gradS m=" + std::to_string(st.m()) + " rel " + num(e));
    }
    t.note("max gradS rel diff " + num(worst_g));
    return t.finish();
}

CheckResult dynamics_equivalence(const PhysConsts& c) {
    Tally t("C8 RK4 dynamics vs closed form");
    for (int m : {1, -1}) {
        const OrbitGeometry g = n2_geometry(m, c);
        const RotatedState flat(m, 0.0);
        const double d0 = max_deviation(rotated_run(flat, g, c, 2048), g, flat.config());
        t.expect(d0 <= 1e-6, "beta=0 m=" + std::to_string(m) + " deviation " + num(d0));
        const RotatedState tilted(m, 30.0 * kDeg);
        const double d30 = max_deviation(rotated_run(tilted, g, c, 2048), g, tilted.config());
        t.expect(d30 <= 1e-5, "beta=30 m=" + std::to_string(m) + " deviation " + num(d30));
    }
    const RotatedState st(1, 30.0 * kDeg);
    const OrbitGeometry g = n2_geometry(1, c);
    const double e256 = endpoint_error(st, g, c, 256);
    const double e512 = endpoint_error(st, g, c, 512);
    const double e1024 = endpoint_error(st, g, c, 1024);
    const double p1 = std::log2(e256 / e512);
    const double p2 = std::log2(e512 / e1024);
    t.expect(p1 >= 3.7 && p1 <= 4.3, "order T/256->T/512 " + num(p1));
    t.expect(p2 >= 3.7 && p2 <= 4.3, "order T/512->T/1024 " + num(p2));
    t.note("orders " + num(p1) + ", " + num(p2));
    return t.finish();
}

CheckResult property_suite(const PhysConsts& c) {
    Tally t("C9 vector-model property suite");
    constexpr double tol = 1e-12;
    std::mt19937_64 rng(kSeed + 9);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int l = 1; l <= 4; ++l) {
        std::vector<int> ns{l + 1};
        if (l + 1 != 5) {
            ns.push_back(5);
        }
        for (int n : ns) {
            for (int m = -l; m <= l; ++m) {
                const QuantumNumbers qn(n, l, m);
                const std::string s = label(n, l, m) + " ";
                if (m == 0) {
                    const double re = most_probable_radius(n, c);
                    const SphericalPoint p{re * (0.5 + unit(rng)), kPi * unit(rng),
                                           2.0 * kPi * unit(rng)};
                    t.expect(norm(momentum_field(qn, p, c)) == 0.0, s + "velocity nonzero");
                    t.expect(norm(angular_momentum(qn, p, c)) == 0.0, s + "L nonzero");
                    t.expect(norm(net_force(qn, p, c)) == 0.0, s + "F_net nonzero");
                    t.expect_rel(quantum_potential(qn, p, c),
                                 bohr_energy(n, c) - coulomb_potential(p.r, c), tol, s + "Q");
                    continue;
                }
                const OrbitGeometry g =
                    orbit_geometry(qn, c, std::nullopt, 2.0 * kPi * unit(rng));
                const double L_mag = std::sqrt(double(l) * (l + 1)) * c.hbar();
                const double v = speed(g);
                for (int k = 0; k < 4; ++k) {
                    const double tt = g.period * unit(rng);
                    const Vec3 r = position(g, tt);
                    const SphericalPoint sp{g.r_e, g.theta_e, azimuth(g, tt)};
                    const Vec3 L_orbit = angular_momentum_trajectory(g, tt);
                    const Vec3 L_field = angular_momentum(qn, sp, c);
                    t.expect_rel(norm(L_orbit), L_mag, tol, s + "|L| orbit");
                    t.expect_rel(norm(L_field), L_mag, tol, s + "|L| field");
                    t.expect_rel(L_field.z, m * c.hbar(), tol, s + "L_z");
                    t.expect_rel(norm(r), g.r_e, tol, s + "|r|");
                    t.expect(std::abs(r.z - g.z_0) <= tol * g.r_e, s + "z(t) = z_0");
                    t.expect_rel(norm(net_force(qn, sp, c)), c.m_e() * v * v / g.r_0, tol,
                                 s + "centripetal");
                }
            }
        }
    }
    return t.finish();
}

CheckResult normalization(const PhysConsts& c) {
    Tally t("C10 normalization and radial mode");
    for (int n : {2, 4}) {
        const int l = n - 1;
        for (int m = -l; m <= l; ++m) {
            const QuantumNumbers qn(n, l, m);
            const double I = normalization_integral(qn, c);
            t.expect_abs(I, 1.0, 1e-6, "norm " + label(n, l, m));
        }
        const GridArgmax am = radial_distribution_argmax(QuantumNumbers(n, l, 0), c);
        const double want = n * n * c.a_mu() / c.Z();
        t.expect(std::abs(am.r - want) <= am.spacing,
                 "argmax D n=" + std::to_string(n) + " at " + num(am.r) + " want " + num(want));
    }
    return t.finish();
}

// ---- module invariants ---------------------------------------------------

CheckResult constants_invariants(const PhysConsts& c) {
    Tally t("constants: reduced mass and radii");
    t.expect(c.mu() < c.m_e(), "mu < m_e");
    t.expect_rel(c.mu(), c.m_e() * c.M_nucleus() / (c.m_e() + c.M_nucleus()), 1e-15, "mu");
    t.expect_rel(c.a_mu() / c.a0(), c.m_e() / c.mu(), 1e-14, "a_mu/a0");
    return t.finish();
}

CheckResult normalization_all(const PhysConsts& c) {
    Tally t("wavefunctions: normalization n <= 4");
    for (int n = 1; n <= 4; ++n) {
        for (int l = 0; l < n; ++l) {
            for (int m = -l; m <= l; ++m) {
                t.expect_abs(normalization_integral(QuantumNumbers(n, l, m), c), 1.0, 1e-6,
                             "norm " + label(n, l, m));
            }
        }
    }
    return t.finish();
}

CheckResult energy_closure(const PhysConsts& c) {
    Tally t("kinematics: E = KE + V + Q and numeric Q identity");
    std::mt19937_64 rng(kSeed + 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int n = 1; n <= 4; ++n) {
        for (int l = 0; l < n; ++l) {
            for (int m = -l; m <= l; ++m) {
                const QuantumNumbers qn(n, l, m);
                const EnergyReport r = energy_report(qn, c);
                t.expect_rel(r.KE_CI + r.V + r.Q, r.E_n, 1e-12, "closure " + label(n, l, m));
                const double re = most_probable_radius(n, c);
                // Stay clear of the nodes: sample until both factors are sizeable.
                for (int k = 0; k < 3; ++k) {
                    SphericalPoint sp;
                    double q = 0.0;
                    bool ok = false;
                    for (int tries = 0; tries < 50 && !ok; ++tries) {
                        sp = {re * (0.3 + 1.5 * unit(rng)), 0.2 + (kPi - 0.4) * unit(rng),
                              2.0 * kPi * unit(rng)};
                        const double R = amplitude(qn, sp.r, sp.theta, c);
                        const double scale = amplitude(qn, re, kPi / 3.0, c);
                        if (std::abs(R) < 1e-2 * std::abs(scale == 0.0 ? 1.0 : scale)) {
                            continue;
                        }
                        try {
                            q = quantum_potential_numeric(qn, sp.to_cartesian(), c);
                            ok = true;
                        } catch (const NodeError&) {
                        }
                    }
                    if (!ok) {
                        continue;
                    }
                    const Vec3 gs = momentum_field(qn, sp, c);
                    const double want = bohr_energy(n, c) - dot(gs, gs) / (2.0 * c.mu()) -
                                        coulomb_potential(sp.r, c);
                    t.expect(std::abs(q - want) <= 1e-7 * std::abs(bohr_energy(n, c)),
                             "numeric Q " + label(n, l, m) + " got " + num(q) + " want " +
                                 num(want));
                }
            }
        }
    }
    return t.finish();
}

CheckResult rotated_invariants(const PhysConsts& c) {
    Tally t("rotated frame: Hessian, |phi|^2, decomposition, frame invariance");
    std::mt19937_64 rng(kSeed + 2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double re = most_probable_radius(2, c);

    for (int i = 0; i < 40; ++i) {
        const RotatedState st((i % 2 == 0) ? 1 : -1, 2.0 * kPi * unit(rng));
        Vec3 p;
        do {
            p = Vec3{2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0} * (2.0 * re);
        } while (phi_modulus_squared(st, p) < 0.01 * re * re);

        const PhaseJet jet = phase_jet(st, p, c);
        const VecField grad = [&](const Vec3& q) { return phase_jet(st, q, c).grad; };
        const Mat3 J = jacobian(grad, p, 1e-4 * re);
        double hmax = 0.0;
        for (double v : jet.hess.a) {
            hmax = std::max(hmax, std::abs(v));
        }
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
                t.expect(std::abs(jet.hess(a, b) - jet.hess(b, a)) <= 1e-12 * hmax, "symmetry");
                t.expect(std::abs(jet.hess(a, b) - J(a, b)) <= 1e-4 * hmax,
                         "hess(" + std::to_string(a) + "," + std::to_string(b) + ") vs FD " +
                             num(jet.hess(a, b)) + " / " + num(J(a, b)));
            }
        }
        t.expect_rel(phi_modulus_squared(st, p), std::norm(phi_21m(st, p)), 1e-12, "|phi|^2");

        const RotatedState mirror(-st.m(), st.beta());
        const Vec3 L = angular_momentum_rotated(st, p, c);
        t.expect(norm(L + angular_momentum_rotated(mirror, p, c)) <= 1e-12 * norm(L),
                 "L(m=-1) = -L(m=+1)");
    }

    for (int i = 0; i < 20; ++i) {
        const double beta = 2.0 * kPi * unit(rng);
        const auto r1 = decompose(RotatedState(1, beta));
        const auto r0 = decompose(RotatedState(0, beta));
        const auto rm = decompose(RotatedState(-1, beta));
        const std::array<std::array<double, 3>, 3> M{r1, r0, rm};
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) {
                    s += M[a][k] * M[b][k];
                }
                t.expect(std::abs(s - (a == b ? 1.0 : 0.0)) <= 1e-12, "M M^T = I");
            }
        }
    }

    for (int m : {1, -1}) {
        const QuantumNumbers qn(2, 1, m);
        const OrbitGeometry g = n2_geometry(m, c);
        const RotatedState st(m, 30.0 * kDeg);
        const Vec3 p = initial_condition(st, g);
        const SphericalPoint sp{g.r_e, g.theta_e, azimuth(g, 0.0)};
        const Vec3 axis = st.config().rotate({0.0, 0.0, 1.0});
        const double radius = norm(p - dot(p, axis) * axis);
        t.expect_rel(norm(angular_momentum_rotated(st, p, c)), norm(angular_momentum(qn, sp, c)),
                     1e-6, "|L| frame invariance");
        t.expect_rel(norm(net_force_rotated(st, p, c)), norm(net_force(qn, sp, c)), 1e-6,
                     "|F| frame invariance");
        t.expect_rel(norm(eom_rhs(st, p, c)), speed(g), 1e-6, "speed frame invariance");
        t.expect_rel(radius, g.r_0, 1e-6, "orbit radius frame invariance");

        const Trajectory traj = rotated_run(st, g, c, 2048);
        const double r0 = norm(traj.samples.front().position);
        const double v0 = norm(traj.samples.front().velocity);
        const double L0 = norm(angular_momentum_rotated(st, traj.samples.front().position, c));
        double dr = 0.0, dv = 0.0, dL = 0.0;
        for (const TrajectorySample& s : traj.samples) {
            dr = std::max(dr, rel(norm(s.position), r0));
            dv = std::max(dv, rel(norm(s.velocity), v0));
            dL = std::max(dL, rel(norm(angular_momentum_rotated(st, s.position, c)), L0));
        }
        t.expect(dr < 1e-6, "|r| drift " + num(dr));
        t.expect(dv < 1e-6, "speed drift " + num(dv));
        t.expect(dL < 1e-6, "|L| drift " + num(dL));
    }
    return t.finish();
}

CheckResult integrator_invariants(const PhysConsts& c) {
    Tally t("integrator: circle oracle and determinism");
    const double w = 2.0 * kPi;
    const VectorField circle = [&](const Vec3& y) { return cross(Vec3{0.0, 0.0, w}, y); };
    const Vec3 y0{1.0, 0.0, 0.5};
    const Trajectory tr = integrate(circle, y0, config_for_period(1.0, 1.0, 1024, 1024));
    t.expect(norm(tr.samples.back().position - y0) <= 1e-8 * norm(y0), "circle closure");

    const RotatedState st(1, 30.0 * kDeg);
    const OrbitGeometry g = n2_geometry(1, c);
    const Trajectory a = rotated_run(st, g, c, 256);
    const Trajectory b = rotated_run(st, g, c, 256);
    bool same = a.samples.size() == b.samples.size();
    for (std::size_t i = 0; same && i < a.samples.size(); ++i) {
        same = a.samples[i].position == b.samples[i].position && a.samples[i].t == b.samples[i].t;
    }
    t.expect(same, "bit-identical reruns");
    const Trajectory full = rotated_run(st, g, c, 2048);
    const double d = norm(full.samples.back().position - full.samples.front().position) / g.r_e;
    t.expect(d <= 1e-6, "closed orbit after one period at T/2048: " + num(d));
    return t.finish();
}

} // namespace

std::vector<CheckResult> acceptance_checks(const PhysConsts& c) {
    using Fn = CheckResult (*)(const PhysConsts&);
    const Fn checks[] = {geometry_n2,       geometry_n4,          speeds,
                         net_force_magnitude, angular_momentum_magnitude, energy_table,
                         oracle_equivalence,  dynamics_equivalence,      property_suite,
                         normalization};
    std::vector<CheckResult> out;
    for (Fn f : checks) {
        try {
            out.push_back(f(c));
        } catch (const std::exception& e) {
            out.push_back({"criterion raised", false, e.what()});
        }
    }
    return out;
}

std::vector<CheckResult> invariant_checks(const PhysConsts& c) {
    using Fn = CheckResult (*)(const PhysConsts&);
    const Fn checks[] = {constants_invariants, normalization_all, energy_closure,
                         rotated_invariants, integrator_invariants};
    std::vector<CheckResult> out;
    for (Fn f : checks) {
        try {
            out.push_back(f(c));
        } catch (const std::exception& e) {
            out.push_back({"invariant raised", false, e.what()});
        }
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

} // namespace bohmh::verify
