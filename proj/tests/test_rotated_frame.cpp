#include "doctest.h"

#include "approx.hpp"

#include "bohmh/errors.hpp"
#include "bohmh/kinematics.hpp"
#include "bohmh/rotated_frame.hpp"
#include "bohmh/verify/finite_difference.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace bohmh;

namespace {

const PhysConsts C = default_constants();
constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;
const double kRe = most_probable_radius(2, C);

Vec3 random_point(std::mt19937_64& rng, const RotatedState& st) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vec3 p;
    do {
        p = Vec3{u(rng), u(rng), u(rng)} * (2.0 * kRe);
    } while (phi_modulus_squared(st, p) < 0.01 * kRe * kRe);
    return p;
}

// Primed eigenstates with the common radial prefactor removed.
ComplexAmplitude primed_eigen(int m, const Vec3& p) {
    switch (m) {
    case 1:
        return {-p.x, -p.y};
    case -1:
        return {p.x, -p.y};
    default:
        return {std::numbers::sqrt2 * p.z, 0.0};
    }
}

} // namespace

TEST_CASE("rotate and unrotate are inverse isometries") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const RotationConfig rc{kPi * u(rng)};
        const Vec3 v{u(rng), u(rng), u(rng)};
        CHECK(norm(rc.unrotate(rc.rotate(v)) - v) < 1e-15);
        CHECK(norm(rc.rotate(v)) == approx(norm(v)).epsilon(1e-15));
        CHECK(rc.rotate(v).y == v.y);
    }
    // Defining relations x = z' sin b + x' cos b, z = z' cos b - x' sin b.
    const RotationConfig rc{30 * kDeg};
    const Vec3 primed{0.3, -0.2, 0.9};
    const Vec3 plain = rc.unrotate(primed);
    CHECK(plain.x == approx(primed.z * 0.5 + primed.x * std::sqrt(3.0) / 2));
    CHECK(plain.z == approx(primed.z * std::sqrt(3.0) / 2 - primed.x * 0.5));
}

TEST_CASE("state selector") {
    CHECK_THROWS_AS(RotatedState(2, 0.0), DomainError);
    CHECK_THROWS_AS(RotatedState(-2, 0.0), DomainError);
    CHECK(RotatedState(-1, 0.5).beta() == 0.5);
}

TEST_CASE("phi is psi_21m of the unrotated frame evaluated at the unrotated point") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 30; ++i) {
        for (int m : {-1, 0, 1}) {
            const RotatedState st(m, 2 * kPi * (i / 30.0));
            const Vec3 p = random_point(rng, RotatedState(1, st.beta()));
            const Vec3 x = st.config().unrotate(p);
            CHECK(std::abs(phi_21m(st, p) - primed_eigen(m, x)) < 1e-12 * kRe);
        }
    }
}

TEST_CASE("|phi|^2 expanded form matches the complex modulus") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 100; ++i) {
        const RotatedState st(i % 2 ? 1 : -1, 0.1 * i);
        const Vec3 p = random_point(rng, st);
        CHECK(phi_modulus_squared(st, p) ==
              approx(std::norm(phi_21m(st, p))).epsilon(1e-12));
    }
}

TEST_CASE("decomposition coefficients") {
    SUBCASE("identity rotation") {
        const auto c = decompose(RotatedState(1, 0.0));
        CHECK(c[0] == 1.0);
        CHECK(c[1] == 0.0);
        CHECK(c[2] == 0.0);
    }
    SUBCASE("m = 0 at 30 degrees") {
        const auto c = decompose(RotatedState(0, 30 * kDeg));
        CHECK(c[0] == approx(0.35355).epsilon(1e-4));
        CHECK(c[1] == approx(0.86603).epsilon(1e-4));
        CHECK(c[2] == approx(-0.35355).epsilon(1e-4));
    }
    SUBCASE("coefficients rebuild phi from primed eigenstates") {
        std::mt19937_64 rng(34);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int i = 0; i < 50; ++i) {
            for (int m : {-1, 0, 1}) {
                const RotatedState st(m, kPi * u(rng));
                const Vec3 p{u(rng) * kRe, u(rng) * kRe, u(rng) * kRe};
                const auto c = decompose(st);
                const ComplexAmplitude sum =
                    c[0] * primed_eigen(1, p) + c[1] * primed_eigen(0, p) + c[2] * primed_eigen(-1, p);
                CHECK(std::abs(sum - phi_21m(st, p)) < 1e-12 * kRe);
            }
        }
    }
}

TEST_CASE("phase jet: gradient and Hessian against finite differences") {
    std::mt19937_64 rng(35);
    const double period = 2 * kPi * C.hbar();
    for (int i = 0; i < 60; ++i) {
        const RotatedState st(i % 2 ? 1 : -1, 2 * kPi * (i / 60.0));
        const Vec3 p = random_point(rng, st);
        const PhaseJet jet = phase_jet(st, p, C);
        const Vec3 g = verify::phase_gradient([&](const Vec3& q) { return phase_jet(st, q, C).S; },
                                              p, 1e-4 * kRe, period);
        CHECK(norm(g - jet.grad) < 1e-7 * norm(jet.grad));
        const Mat3 J = verify::jacobian([&](const Vec3& q) { return phase_jet(st, q, C).grad; }, p,
                                        1e-4 * kRe);
        double scale = 0.0;
        for (double v : jet.hess.a) {
            scale = std::max(scale, std::abs(v));
        }
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
                CHECK(std::abs(J(a, b) - jet.hess(a, b)) < 1e-6 * scale);
                CHECK(jet.hess(a, b) == jet.hess(b, a));
            }
        }
    }
}

TEST_CASE("S is harmonic off the nodal line: trace of the Hessian vanishes") {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 50; ++i) {
        const RotatedState st(1, 0.13 * i);
        const Vec3 p = random_point(rng, st);
        const Mat3 H = phase_jet(st, p, C).hess;
        double scale = 0.0;
        for (double v : H.a) {
            scale = std::max(scale, std::abs(v));
        }
        CHECK(std::abs(H(0, 0) + H(1, 1) + H(2, 2)) < 1e-12 * scale);
    }
}

TEST_CASE("beta = 0 reduces to the unrotated fields") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 30; ++i) {
        const int m = i % 2 ? 1 : -1;
        const RotatedState st(m, 0.0);
        const Vec3 p = random_point(rng, st);
        const SphericalPoint sp = SphericalPoint::from_cartesian(p);
        const QuantumNumbers qn(2, 1, m);
        CHECK(norm(phase_jet(st, p, C).grad - momentum_field(qn, sp, C)) <
              1e-12 * norm(momentum_field(qn, sp, C)));
        CHECK(norm(net_force_rotated(st, p, C) - net_force(qn, sp, C)) <
              1e-12 * norm(net_force(qn, sp, C)));
        CHECK(norm(angular_momentum_rotated(st, p, C) - angular_momentum(qn, sp, C)) <
              1e-12 * norm(angular_momentum(qn, sp, C)));
    }
}

TEST_CASE("angular momentum closed form and mirror symmetry") {
    std::mt19937_64 rng(38);
    for (int i = 0; i < 50; ++i) {
        const double b = 0.2 * i;
        const RotatedState st(1, b);
        const Vec3 p = random_point(rng, st);
        const double s = std::sin(b), c = std::cos(b);
        const double P = phi_modulus_squared(st, p);
        const double h = C.hbar() / P;
        const Vec3 closed{-h * ((p.y * p.y + p.z * p.z) * s + p.x * p.z * c),
                          h * (p.x * p.y * s - p.y * p.z * c),
                          h * (p.x * p.z * s + (p.x * p.x + p.y * p.y) * c)};
        const Vec3 L = angular_momentum_rotated(st, p, C);
        CHECK(norm(L - closed) < 1e-12 * norm(L));
        CHECK(norm(L + angular_momentum_rotated(RotatedState(-1, b), p, C)) < 1e-12 * norm(L));
    }
}

TEST_CASE("m = 0 has no phase gradient") {
    const RotatedState st(0, 0.4);
    const Vec3 p{1e-10, 2e-10, -0.5e-10};
    const PhaseJet jet = phase_jet(st, p, C);
    CHECK(jet.S == 0.0);
    CHECK(norm(jet.grad) == 0.0);
    CHECK(norm(eom_rhs(st, p, C)) == 0.0);
    CHECK(norm(net_force_rotated(st, p, C)) == 0.0);
    CHECK(norm(angular_momentum_rotated(st, p, C)) == 0.0);
}

TEST_CASE("nodal line is rejected") {
    const RotatedState st(1, 30 * kDeg);
    // The rotated z-axis: X = z' sin b + x' cos b = 0 and y' = 0.
    const Vec3 on_axis = st.config().rotate({0.0, 0.0, kRe});
    CHECK_THROWS_AS(phase_jet(st, on_axis, C), NodeError);
    try {
        (void)eom_rhs(st, on_axis, C);
    } catch (const NodeError& e) {
        CHECK(e.point() == on_axis);
    }
}

TEST_CASE("rotated-frame start points") {
    const double b = 30 * kDeg;
    const double q = std::cos(45 * kDeg);
    for (int m : {1, -1}) {
        const OrbitGeometry g = orbit_geometry(QuantumNumbers(2, 1, m), C, std::nullopt, kPi / 2);
        const Vec3 p = initial_condition(RotatedState(m, b), g);
        CHECK(p.x == approx(-m * kRe * q * std::sin(b)).epsilon(1e-12));
        CHECK(p.y == approx(kRe * std::sin(45 * kDeg)).epsilon(1e-12));
        CHECK(p.z == approx(m * kRe * q * std::cos(b)).epsilon(1e-12));
        CHECK(norm(RotationConfig{b}.unrotate(p) - position(g, 0.0)) < 1e-15 * kRe);
    }
    const OrbitGeometry g = orbit_geometry(QuantumNumbers(2, 1, 1), C, std::nullopt, kPi / 2);
    const Vec3 p = initial_condition(RotatedState(1, b), g);
    CHECK(p.x == approx(-0.749e-10).epsilon(1e-3));
    CHECK(p.y == approx(1.50e-10).epsilon(3e-3));
    CHECK(p.z == approx(1.30e-10).epsilon(3e-3));

    CHECK_THROWS_AS(initial_condition(RotatedState(0, b), g), StationaryElectron);
    CHECK_THROWS_AS(initial_condition(RotatedState(-1, b), g), DomainError);
}

TEST_CASE("scalar quantities are frame invariant on the orbit") {
    for (int m : {1, -1}) {
        const QuantumNumbers qn(2, 1, m);
        const OrbitGeometry g = orbit_geometry(qn, C, std::nullopt, kPi / 2);
        for (double b : {0.1, 30 * kDeg, 1.2, 2.9}) {
            const RotatedState st(m, b);
            for (int k = 0; k < 6; ++k) {
                const double t = k * g.period / 6;
                const Vec3 p = st.config().rotate(position(g, t));
                const SphericalPoint sp{g.r_e, g.theta_e, azimuth(g, t)};
                CHECK(norm(eom_rhs(st, p, C)) == approx(speed(g)).epsilon(1e-12));
                CHECK(norm(net_force_rotated(st, p, C)) ==
                      approx(norm(net_force(qn, sp, C))).epsilon(1e-12));
                CHECK(norm(angular_momentum_rotated(st, p, C)) ==
                      approx(std::sqrt(2.0) * C.hbar()).epsilon(1e-12));
                // Velocity is the rotated unrotated velocity.
                CHECK(norm(eom_rhs(st, p, C) - st.config().rotate(velocity(g, t))) <
                      1e-12 * speed(g));
            }
        }
    }
}
