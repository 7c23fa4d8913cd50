#include "bohmh/rotated_frame.hpp"

#include "bohmh/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bohmh {

Vec3 RotationConfig::rotate(const Vec3& v) const {
    const double s = std::sin(beta);
    const double c = std::cos(beta);
    return {v.x * c - v.z * s, v.y, v.x * s + v.z * c};
}

Vec3 RotationConfig::unrotate(const Vec3& v) const {
    const double s = std::sin(beta);
    const double c = std::cos(beta);
    return {v.z * s + v.x * c, v.y, v.z * c - v.x * s};
}

RotatedState::RotatedState(int m, double beta) : m_(m), beta_(beta) {
    if (m < -1 || m > 1) {
        throw DomainError("rotated states are defined for n=2, l=1, m in {-1,0,1}; got m=" +
                          std::to_string(m));
    }
}

ComplexAmplitude phi_21m(const RotatedState& s, const Vec3& p) {
    const double sb = std::sin(s.beta());
    const double cb = std::cos(s.beta());
    const double X = p.z * sb + p.x * cb;
    switch (s.m()) {
    case 1:
        return {-X, -p.y};
    case -1:
        return {X, -p.y};
    default:
        return {std::numbers::sqrt2 * (p.z * cb - p.x * sb), 0.0};
    }
}

double phi_modulus_squared(const RotatedState& s, const Vec3& p) {
    if (s.m() == 0) {
        return std::norm(phi_21m(s, p));
    }
    const double sb = std::sin(s.beta());
    const double cb = std::cos(s.beta());
    return p.z * p.z * sb * sb + p.x * p.x * cb * cb + p.y * p.y + 2.0 * p.x * p.z * sb * cb;
}

PhaseJet phase_jet(const RotatedState& s, const Vec3& p, const PhysConsts& c) {
    PhaseJet jet;
    if (s.m() == 0) {
        // φ is real, so φ/φ* = 1 and S = (ħ/2i) ln 1 = 0 identically.
        return jet;
    }

    const double r_e = 4.0 * c.a_mu() / c.Z();
    const double P = phi_modulus_squared(s, p);
    if (P < 1e-12 * r_e * r_e) {
        throw NodeError("phase S undefined on the nodal line of the rotated state", p);
    }

    const double hbar = c.hbar();
    const double sb = std::sin(s.beta());
    const double cb = std::cos(s.beta());
    const double X = p.z * sb + p.x * cb;
    const double y = p.y;
    const double P2 = P * P;

    const ComplexAmplitude ph = phi_21m(s, p);
    jet.S = hbar * std::atan2(ph.imag(), ph.real());

    // Closed forms for m = +1.
    jet.grad = {-hbar * y * cb / P, hbar * X / P, -hbar * y * sb / P};

    const double xy_term = 2.0 * hbar * y * X / P2;
    const double diff_term = hbar * (X * X - y * y) / P2;
    Mat3& H = jet.hess;
    H(0, 0) = xy_term * cb * cb;
    H(1, 1) = -xy_term;
    H(2, 2) = xy_term * sb * sb;
    H(0, 1) = H(1, 0) = -diff_term * cb;
    H(0, 2) = H(2, 0) = xy_term * cb * sb;
    H(1, 2) = H(2, 1) = -diff_term * sb;

    if (s.m() == -1) {
        jet.grad = -jet.grad;
        for (double& v : jet.hess.a) {
            v = -v;
        }
    }
    return jet;
}

Vec3 eom_rhs(const RotatedState& s, const Vec3& p, const PhysConsts& c) {
    return phase_jet(s, p, c).grad / c.m_e();
}

Vec3 net_force_rotated(const RotatedState& s, const Vec3& p, const PhysConsts& c) {
    const PhaseJet jet = phase_jet(s, p, c);
    return (jet.hess * jet.grad) / c.m_e();
}

Vec3 angular_momentum_rotated(const RotatedState& s, const Vec3& p, const PhysConsts& c) {
    return cross(p, phase_jet(s, p, c).grad);
}

std::array<double, 3> decompose(const RotatedState& s) {
    const double sb = std::sin(s.beta());
    const double cb = std::cos(s.beta());
    const double k = sb / std::numbers::sqrt2;
    switch (s.m()) {
    case 1:
        return {(1.0 + cb) / 2.0, -k, (1.0 - cb) / 2.0};
    case -1:
        return {(1.0 - cb) / 2.0, k, (1.0 + cb) / 2.0};
    default:
        return {k, cb, -k};
    }
}

Vec3 initial_condition(const RotatedState& s, const OrbitGeometry& geom) {
    if (s.m() == 0) {
        throw StationaryElectron("m = 0 electron is at rest; no orbit start point");
    }
    if (geom.qn.n() != 2 || geom.qn.l() != 1 || geom.qn.m() != s.m()) {
        throw DomainError("initial_condition: geometry must be for (2, 1, " +
                          std::to_string(s.m()) + ")");
    }
    return s.config().rotate(position(geom, 0.0));
}

} // namespace bohmh
