#include "bohmh/kinematics.hpp"

#include "bohmh/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace bohmh {

namespace {

constexpr double kAxisTolerance = 1e-12;

double checked_sin(const QuantumNumbers& qn, double theta) {
    const double s = std::sin(theta);
    if (qn.m() != 0 && std::abs(s) < kAxisTolerance) {
        throw SingularityError("field is singular on the z-axis for m != 0");
    }
    return s;
}

double default_radius(const QuantumNumbers& qn, const PhysConsts& c, std::optional<double> r_e) {
    const double r = r_e.value_or(most_probable_radius(qn.n(), c));
    if (!(r > 0.0)) {
        throw DomainError("orbit radius must be positive");
    }
    return r;
}

// Fourth-order 5-point second derivative of f along unit axis e.
template <typename F>
double second_difference(const F& f, const Vec3& p, const Vec3& e, double h, double f0) {
    const double fp1 = f(p + h * e);
    const double fm1 = f(p - h * e);
    const double fp2 = f(p + 2.0 * h * e);
    const double fm2 = f(p - 2.0 * h * e);
    return (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
}

} // namespace

OrbitGeometry orbit_geometry(const QuantumNumbers& qn, const PhysConsts& c,
                             std::optional<double> r_e, double phase) {
    const int l = qn.l();
    const int m = qn.m();
    if (m == 0) {
        throw StationaryElectron("m = 0 electron is at rest; no orbit geometry");
    }
    const double r = default_radius(qn, c, r_e);

    const double alpha = std::acos(m / std::sqrt(double(l) * (l + 1)));
    const double theta_e = (m > 0 ? 0.5 : 1.5) * std::numbers::pi - alpha;
    const double s = std::sin(theta_e);
    const double omega = m * c.hbar() / (c.m_e() * r * r * s * s);

    return OrbitGeometry{
        .qn = qn,
        .alpha = alpha,
        .theta_e = theta_e,
        .r_e = r,
        .r_0 = r * s,
        .z_0 = r * std::cos(theta_e),
        .omega = omega,
        .c = phase,
        .period = 2.0 * std::numbers::pi / std::abs(omega),
        .sense = m > 0 ? RotationSense::Counterclockwise : RotationSense::Clockwise,
        .L_z = m * c.hbar(),
    };
}

double azimuth(const OrbitGeometry& g, double t) { return g.omega * t + g.c; }

Vec3 position(const OrbitGeometry& g, double t) {
    const double ph = azimuth(g, t);
    return {g.r_0 * std::cos(ph), g.r_0 * std::sin(ph), g.z_0};
}

Vec3 velocity(const OrbitGeometry& g, double t) {
    const double ph = azimuth(g, t);
    const double v = g.omega * g.r_0;
    return {-v * std::sin(ph), v * std::cos(ph), 0.0};
}

double speed(const OrbitGeometry& g) { return std::abs(g.omega) * g.r_0; }

Vec3 angular_momentum_trajectory(const OrbitGeometry& g, double t) {
    const double ph = azimuth(g, t);
    const double lc = -g.L_z * std::cos(g.theta_e) / std::sin(g.theta_e);
    return {lc * std::cos(ph), lc * std::sin(ph), g.L_z};
}

Vec3 momentum_field(const QuantumNumbers& qn, const SphericalPoint& p, const PhysConsts& c) {
    if (qn.m() == 0) {
        return {};
    }
    const double s = checked_sin(qn, p.theta);
    if (!(p.r > 0.0)) {
        throw SingularityError("momentum field is singular at r = 0 for m != 0");
    }
    const double mag = qn.m() * c.hbar() / (p.r * s);
    return {-mag * std::sin(p.phi), mag * std::cos(p.phi), 0.0};
}

Vec3 angular_momentum(const QuantumNumbers& qn, const SphericalPoint& p, const PhysConsts& c) {
    if (qn.m() == 0) {
        return {};
    }
    const double s = checked_sin(qn, p.theta);
    const double mh = qn.m() * c.hbar();
    const double cot = std::cos(p.theta) / s;
    return {-mh * cot * std::cos(p.phi), -mh * cot * std::sin(p.phi), mh};
}

double l_squared(const QuantumNumbers& qn, double theta, const PhysConsts& c) {
    if (qn.m() == 0) {
        return 0.0;
    }
    const double s = checked_sin(qn, theta);
    const double mh = qn.m() * c.hbar();
    return mh * mh / (s * s);
}

Vec3 net_force(const QuantumNumbers& qn, const SphericalPoint& p, const PhysConsts& c) {
    if (qn.m() == 0) {
        return {};
    }
    const double s = checked_sin(qn, p.theta);
    if (!(p.r > 0.0)) {
        throw SingularityError("net force is singular at r = 0 for m != 0");
    }
    const double mh = qn.m() * c.hbar();
    const double mag = mh * mh / (c.m_e() * p.r * p.r * p.r * s * s * s);
    return {-mag * std::cos(p.phi), -mag * std::sin(p.phi), 0.0};
}

double bohr_energy(int n, const PhysConsts& c) {
    if (n < 1) {
        throw DomainError("bohr_energy: n must be >= 1");
    }
    const double k = c.coulomb_k();
    return -c.mu() / (2.0 * c.hbar() * c.hbar()) * k * k / (double(n) * n);
}

double bohr_kinetic(int n, const PhysConsts& c) { return -bohr_energy(n, c); }

double coulomb_potential(double r, const PhysConsts& c) {
    if (!(r > 0.0)) {
        throw SingularityError("Coulomb potential is singular at r = 0");
    }
    return -c.coulomb_k() / r;
}

EnergyReport energy_report(const QuantumNumbers& qn, const PhysConsts& c,
                           std::optional<double> r_e) {
    const double r = default_radius(qn, c, r_e);
    EnergyReport rep{};
    rep.E_n = bohr_energy(qn.n(), c);
    rep.KE_Bohr = -rep.E_n;
    rep.V = coulomb_potential(r, c);
    if (qn.m() != 0) {
        const OrbitGeometry g = orbit_geometry(qn, c, r);
        rep.phi_term = -qn.m() * c.hbar() * g.omega;
        const double v = speed(g);
        rep.KE_CI = 0.5 * c.m_e() * v * v;
    }
    rep.E_CI = rep.E_n - rep.phi_term;
    rep.Q = rep.E_n - rep.KE_CI - rep.V;
    return rep;
}

double phase(const QuantumNumbers& qn, const SphericalPoint& p, double t, const PhysConsts& c,
             std::optional<double> r_e) {
    const double e_ci = energy_report(qn, c, r_e).E_CI;
    return c.hbar() * qn.m() * p.phi - e_ci * t;
}

double quantum_potential(const QuantumNumbers& qn, const SphericalPoint& p, const PhysConsts& c) {
    const Vec3 mom = momentum_field(qn, p, c);
    return bohr_energy(qn.n(), c) - dot(mom, mom) / (2.0 * c.m_e()) - coulomb_potential(p.r, c);
}

double quantum_potential_numeric(const QuantumNumbers& qn, const Vec3& p, const PhysConsts& c) {
    const double r = norm(p);
    if (!(r > 0.0)) {
        throw SingularityError("quantum potential is singular at r = 0");
    }

    // Node test on the factors separately, so the exponential tail of R_nl is
    // not mistaken for a node.
    const double cos_theta = std::clamp(p.z / r, -1.0, 1.0);
    const double angular =
        spherical_norm(qn.l(), qn.m()) * assoc_legendre(qn.l(), qn.m(), cos_theta);
    const double rho = 2.0 * c.Z() * r / (qn.n() * c.a_mu());
    const double laguerre = assoc_laguerre(qn.n() - qn.l() - 1, 2 * qn.l() + 1, rho);
    if (std::abs(angular) < 1e-9 || std::abs(laguerre) < 1e-9) {
        throw NodeError("quantum potential undefined on a node of R", p);
    }

    const auto R = [&](const Vec3& q) { return amplitude(qn, q, c); };
    const double R0 = R(p);
    const std::array<Vec3, 3> axes{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};

    const double h = 1e-3 * qn.n() * c.a_mu() / c.Z();
    double lap_h = 0.0;
    double lap_2h = 0.0;
    for (const Vec3& e : axes) {
        lap_h += second_difference(R, p, e, h, R0);
        lap_2h += second_difference(R, p, e, 2.0 * h, R0);
    }
    const double laplacian = (16.0 * lap_h - lap_2h) / 15.0;

    return -c.hbar() * c.hbar() / (2.0 * c.mu()) * laplacian / R0;
}

FieldSample field_sample(const QuantumNumbers& qn, const SphericalPoint& p, double t,
                         const PhysConsts& c, std::optional<double> r_e) {
    FieldSample fs{};
    fs.point = p;
    fs.S = phase(qn, p, t, c, r_e);
    fs.gradS = momentum_field(qn, p, c);
    fs.V = coulomb_potential(p.r, c);
    fs.Q = bohr_energy(qn.n(), c) - dot(fs.gradS, fs.gradS) / (2.0 * c.m_e()) - fs.V;
    fs.F_net = net_force(qn, p, c);
    fs.L = angular_momentum(qn, p, c);
    return fs;
}

} // namespace bohmh
