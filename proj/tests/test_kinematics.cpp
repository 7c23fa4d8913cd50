#include "doctest.h"

#include "approx.hpp"

#include "bohmh/errors.hpp"
#include "bohmh/kinematics.hpp"
#include "bohmh/verify/finite_difference.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace bohmh;

namespace {
const PhysConsts C = default_constants();
constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;
} // namespace

TEST_CASE("orbit geometry, n=2 l=1") {
    const OrbitGeometry up = orbit_geometry(QuantumNumbers(2, 1, 1), C);
    CHECK(up.theta_e / kDeg == approx(45.0).epsilon(1e-12));
    CHECK(up.r_0 == approx(1.4975543e-10).epsilon(1e-6));
    CHECK(up.z_0 == approx(1.4975543e-10).epsilon(1e-6));
    CHECK(up.sense == RotationSense::Counterclockwise);
    CHECK(speed(up) == approx(7.7304e5).epsilon(1e-4));

    const OrbitGeometry down = orbit_geometry(QuantumNumbers(2, 1, -1), C);
    CHECK(down.theta_e / kDeg == approx(135.0).epsilon(1e-12));
    CHECK(down.z_0 == approx(-up.z_0));
    CHECK(down.omega == approx(-up.omega));
    CHECK(down.sense == RotationSense::Clockwise);

    CHECK_THROWS_AS(orbit_geometry(QuantumNumbers(2, 1, 0), C), StationaryElectron);
    CHECK_THROWS_AS(orbit_geometry(QuantumNumbers(2, 1, 1), C, -1.0), DomainError);
}

TEST_CASE("orbit geometry, n=4 l=3") {
    const double theta[] = {0, 16.779, 35.264, 60.0};
    const double r0[] = {0, 2.4455e-10, 4.8910e-10, 7.3365e-10};
    const double z0[] = {0, 8.1108e-10, 6.9169e-10, 4.2357e-10};
    for (int m = 1; m <= 3; ++m) {
        const OrbitGeometry g = orbit_geometry(QuantumNumbers(4, 3, m), C);
        const OrbitGeometry h = orbit_geometry(QuantumNumbers(4, 3, -m), C);
        CHECK(g.theta_e / kDeg == approx(theta[m]).epsilon(1e-4));
        CHECK(h.theta_e / kDeg == approx(180.0 - theta[m]).epsilon(1e-4));
        CHECK(g.r_0 == approx(r0[m]).epsilon(1e-4));
        CHECK(g.z_0 == approx(z0[m]).epsilon(1e-4));
        CHECK(h.z_0 == approx(-z0[m]).epsilon(1e-4));
        CHECK(speed(g) == approx(4.73391e5).epsilon(1e-5));
    }
}

TEST_CASE("orbit kinematics: velocity is the time derivative of position") {
    const OrbitGeometry g = orbit_geometry(QuantumNumbers(4, 3, -2), C, std::nullopt, 0.3);
    const double h = g.period * 1e-4;
    for (int k = 0; k < 6; ++k) {
        const double t = k * g.period / 6.0;
        const Vec3 fd = (position(g, t + h) - position(g, t - h)) / (2 * h);
        CHECK(norm(fd - velocity(g, t)) < 1e-6 * speed(g));
        CHECK(norm(velocity(g, t)) == approx(speed(g)).epsilon(1e-12));
    }
    CHECK(norm(position(g, g.period) - position(g, 0.0)) < 1e-12 * g.r_e);
}

TEST_CASE("L = r x p on the orbit and precession with the electron") {
    for (int m : {-3, -1, 2, 3}) {
        const QuantumNumbers qn(4, 3, m);
        const OrbitGeometry g = orbit_geometry(qn, C, std::nullopt, 1.0);
        for (int k = 0; k < 5; ++k) {
            const double t = k * g.period / 5.0;
            const SphericalPoint sp{g.r_e, g.theta_e, azimuth(g, t)};
            const Vec3 p = momentum_field(qn, sp, C);
            const Vec3 L = cross(position(g, t), p);
            CHECK(norm(L - angular_momentum(qn, sp, C)) < 1e-12 * norm(L));
            CHECK(norm(L - angular_momentum_trajectory(g, t)) < 1e-12 * norm(L));
            CHECK(norm(p - C.m_e() * velocity(g, t)) < 1e-12 * norm(p));
            CHECK(l_squared(qn, g.theta_e, C) ==
                  approx(12.0 * C.hbar() * C.hbar()).epsilon(1e-12));
        }
    }
}

TEST_CASE("momentum field is the gradient of S (finite-difference oracle)") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 30; ++i) {
        const QuantumNumbers qn(3, 2, (i % 5) - 2);
        if (qn.m() == 0) {
            continue;
        }
        const SphericalPoint sp{C.a_mu() * (1 + 8 * u(rng)), 0.2 + 2.7 * u(rng), kPi * (2 * u(rng) - 1)};
        const auto S = [&](const Vec3& p) {
            return phase(qn, SphericalPoint::from_cartesian(p), 1e-17, C);
        };
        const Vec3 fd = verify::phase_gradient(S, sp.to_cartesian(), 1e-4 * sp.r, 2 * kPi * C.hbar());
        const Vec3 an = momentum_field(qn, sp, C);
        CHECK(norm(fd - an) < 1e-7 * norm(an));
    }
}

TEST_CASE("net force is the gradient of |grad S|^2 / 2 m_e") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 30; ++i) {
        const QuantumNumbers qn(2, 1, i % 2 ? 1 : -1);
        const SphericalPoint sp{C.a_mu() * (1 + 5 * u(rng)), 0.3 + 2.5 * u(rng), kPi * (2 * u(rng) - 1)};
        const auto ke = [&](const Vec3& p) {
            const Vec3 g = momentum_field(qn, SphericalPoint::from_cartesian(p), C);
            return dot(g, g) / (2 * C.m_e());
        };
        const Vec3 fd = verify::gradient(ke, sp.to_cartesian(), 1e-4 * sp.r);
        const Vec3 an = net_force(qn, sp, C);
        CHECK(norm(fd - an) < 1e-7 * norm(an));
        CHECK(an.z == 0.0);
        // Points at the z-axis.
        const Vec3 x = sp.to_cartesian();
        CHECK(dot(an, Vec3{x.x, x.y, 0.0}) < 0.0);
    }
}

TEST_CASE("fields vanish for m = 0 and are singular on the axis otherwise") {
    const QuantumNumbers zero(2, 1, 0);
    const SphericalPoint p{1e-10, 0.4, 0.2};
    CHECK(norm(momentum_field(zero, p, C)) == 0.0);
    CHECK(norm(angular_momentum(zero, p, C)) == 0.0);
    CHECK(norm(net_force(zero, p, C)) == 0.0);
    CHECK(l_squared(zero, 0.4, C) == 0.0);

    const QuantumNumbers one(2, 1, 1);
    CHECK_THROWS_AS(momentum_field(one, {1e-10, 0.0, 0.0}, C), SingularityError);
    CHECK_THROWS_AS(net_force(one, {1e-10, kPi, 0.0}, C), SingularityError);
    CHECK_THROWS_AS(coulomb_potential(0.0, C), SingularityError);
}

TEST_CASE("energy report, n=2 l=1") {
    const EnergyReport r = energy_report(QuantumNumbers(2, 1, 1), C);
    CHECK(r.E_n / 1e-19 == approx(-5.44671).epsilon(1e-5));
    CHECK(r.phi_term / 1e-19 == approx(-5.44375).epsilon(1e-5));
    CHECK(r.E_CI / 1e-19 == approx(-0.00296).epsilon(1e-2));
    CHECK(r.KE_CI / 1e-19 == approx(2.72187).epsilon(1e-5));
    CHECK(r.V / 1e-19 == approx(-10.89343).epsilon(1e-5));
    CHECK(r.Q / 1e-19 == approx(2.72484).epsilon(1e-5));
    CHECK(r.KE_Bohr == approx(-r.E_n));
    CHECK(r.V == approx(2.0 * r.E_n).epsilon(1e-14));

    const EnergyReport z = energy_report(QuantumNumbers(2, 1, 0), C);
    CHECK(z.KE_CI == 0.0);
    CHECK(z.E_CI == z.E_n);
    CHECK(z.Q / 1e-19 == approx(5.44671).epsilon(1e-5));

    const EnergyReport m = energy_report(QuantumNumbers(2, 1, -1), C);
    CHECK(m.E_CI == approx(r.E_CI));
    CHECK(m.Q == approx(r.Q));
}

TEST_CASE("energy closure E = KE + V + Q, all states n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (int l = 0; l < n; ++l) {
            for (int m = -l; m <= l; ++m) {
                const EnergyReport r = energy_report(QuantumNumbers(n, l, m), C);
                CHECK(r.KE_CI + r.V + r.Q == approx(r.E_n).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("numeric quantum potential equals E - |grad S|^2/2mu - V") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int tested = 0;
    for (int i = 0; i < 60; ++i) {
        const int n = 2 + i % 3;
        const int l = n - 1;
        const QuantumNumbers qn(n, l, (i % (2 * l + 1)) - l);
        const SphericalPoint sp{most_probable_radius(n, C) * (0.5 + u(rng)), 0.3 + 2.5 * u(rng),
                                2 * kPi * u(rng)};
        double q = 0.0;
        try {
            q = quantum_potential_numeric(qn, sp.to_cartesian(), C);
        } catch (const NodeError&) {
            continue;
        }
        ++tested;
        const Vec3 g = momentum_field(qn, sp, C);
        const double want =
            bohr_energy(n, C) - dot(g, g) / (2 * C.mu()) - coulomb_potential(sp.r, C);
        CHECK(std::abs(q - want) < 1e-7 * std::abs(bohr_energy(n, C)));
    }
    CHECK(tested > 40);
}

TEST_CASE("numeric quantum potential errors") {
    // cos(theta) = 0 is the nodal plane of psi_210.
    CHECK_THROWS_AS(quantum_potential_numeric(QuantumNumbers(2, 1, 0), {1e-10, 0.0, 0.0}, C),
                    NodeError);
    // r = 2 a_mu is the radial node of psi_200.
    CHECK_THROWS_AS(
        quantum_potential_numeric(QuantumNumbers(2, 0, 0), {2.0 * C.a_mu(), 0.0, 0.0}, C),
        NodeError);
    CHECK_THROWS_AS(quantum_potential_numeric(QuantumNumbers(1, 0, 0), {0.0, 0.0, 0.0}, C),
                    SingularityError);
}

TEST_CASE("m = 0: quantum potential cancels the Coulomb energy against E_n") {
    const QuantumNumbers qn(4, 3, 0);
    for (double r : {1e-10, 5e-10, 2e-9}) {
        const SphericalPoint p{r, 1.0, 2.0};
        CHECK(quantum_potential(qn, p, C) ==
              approx(bohr_energy(4, C) - coulomb_potential(r, C)).epsilon(1e-14));
        const FieldSample fs = field_sample(qn, p, 0.0, C);
        CHECK(norm(fs.F_net) == 0.0);
        CHECK(norm(fs.gradS) == 0.0);
    }
}

TEST_CASE("phase of the m = 0 state is purely temporal") {
    const QuantumNumbers qn(2, 1, 0);
    const double t = 3e-16;
    const double S = phase(qn, {1e-10, 0.5, 1.3}, t, C);
    CHECK(S == approx(-bohr_energy(2, C) * t).epsilon(1e-14));
}
