#include "bohmh/wavefunctions.hpp"

#include "bohmh/errors.hpp"
#include "bohmh/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace bohmh {

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

std::string describe(int n, int l, int m) {
    return "(n=" + std::to_string(n) + ", l=" + std::to_string(l) + ", m=" + std::to_string(m) + ")";
}

// P_l^m for m >= 0 via the upward recurrence in l from the sectoral seed.
double legendre_nonneg(int l, int m, double x) {
    const double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
    double pmm = 1.0;
    double fact = 1.0;
    for (int i = 1; i <= m; ++i) {
        pmm *= -fact * somx2;
        fact += 2.0;
    }
    if (l == m) {
        return pmm;
    }
    double pmmp1 = x * (2 * m + 1) * pmm;
    if (l == m + 1) {
        return pmmp1;
    }
    double pll = 0.0;
    for (int ll = m + 2; ll <= l; ++ll) {
        pll = (x * (2 * ll - 1) * pmmp1 - (ll + m - 1) * pmm) / (ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pll;
}

} // namespace

QuantumNumbers::QuantumNumbers(int n, int l, int m) : n_(n), l_(l), m_(m) {
    if (n < 1 || l < 0 || l > n - 1 || std::abs(m) > l) {
        throw DomainError("invalid quantum numbers " + describe(n, l, m));
    }
}

Vec3 SphericalPoint::to_cartesian() const {
    const double s = std::sin(theta);
    return {r * s * std::cos(phi), r * s * std::sin(phi), r * std::cos(theta)};
}

SphericalPoint SphericalPoint::from_cartesian(const Vec3& p) {
    const double r = norm(p);
    if (r == 0.0) {
        return {};
    }
    return {r, std::acos(std::clamp(p.z / r, -1.0, 1.0)), std::atan2(p.y, p.x)};
}

double assoc_legendre(int l, int m, double x) {
    if (l < 0 || std::abs(m) > l) {
        throw DomainError("assoc_legendre: need |m| <= l, got l=" + std::to_string(l) +
                          " m=" + std::to_string(m));
    }
    if (!(std::abs(x) <= 1.0)) {
        throw DomainError("assoc_legendre: |x| must be <= 1");
    }
    if (m >= 0) {
        return legendre_nonneg(l, m, x);
    }
    const int am = -m;
    const double sign = (am % 2 == 0) ? 1.0 : -1.0;
    return sign * factorial(l - am) / factorial(l + am) * legendre_nonneg(l, am, x);
}

double assoc_laguerre(int k, double alpha, double x) {
    if (k < 0) {
        throw DomainError("assoc_laguerre: degree must be >= 0");
    }
    double prev = 1.0;
    if (k == 0) {
        return prev;
    }
    double curr = 1.0 + alpha - x;
    for (int j = 1; j < k; ++j) {
        const double next = ((2 * j + 1 + alpha - x) * curr - (j + alpha) * prev) / (j + 1);
        prev = curr;
        curr = next;
    }
    return curr;
}

double spherical_norm(int l, int m) {
    if (l < 0 || std::abs(m) > l) {
        throw DomainError("spherical_norm: need |m| <= l");
    }
    return std::sqrt((2 * l + 1) / (4.0 * std::numbers::pi) * factorial(l - m) / factorial(l + m));
}

double radial(const QuantumNumbers& qn, double r, const PhysConsts& c) {
    if (!(r >= 0.0)) {
        throw DomainError("radial: r must be >= 0");
    }
    const int n = qn.n();
    const int l = qn.l();
    const double scale = 2.0 * c.Z() / (n * c.a_mu()); // 1/m
    const double rho = scale * r;
    const double norm2 = scale * scale * scale * factorial(n - l - 1) / (2.0 * n * factorial(n + l));
    return std::sqrt(norm2) * std::exp(-rho / 2.0) * std::pow(rho, l) *
           assoc_laguerre(n - l - 1, 2 * l + 1, rho);
}

double amplitude(const QuantumNumbers& qn, double r, double theta, const PhysConsts& c) {
    return spherical_norm(qn.l(), qn.m()) * radial(qn, r, c) *
           assoc_legendre(qn.l(), qn.m(), std::cos(theta));
}

double amplitude(const QuantumNumbers& qn, const Vec3& p, const PhysConsts& c) {
    const double r = norm(p);
    const double x = (r == 0.0) ? 1.0 : std::clamp(p.z / r, -1.0, 1.0);
    return spherical_norm(qn.l(), qn.m()) * radial(qn, r, c) * assoc_legendre(qn.l(), qn.m(), x);
}

ComplexAmplitude psi(const QuantumNumbers& qn, const SphericalPoint& p, double t,
                     const PhysConsts& c) {
    const double R = amplitude(qn, p.r, p.theta, c);
    const double phase = qn.m() * p.phi - bohr_energy(qn.n(), c) * t / c.hbar();
    return std::polar(1.0, phase) * R;
}

double radial_distribution(const QuantumNumbers& qn, double r, const PhysConsts& c) {
    const double R = radial(qn, r, c);
    return r * r * R * R;
}

double most_probable_radius(int n, const PhysConsts& c) {
    if (n < 1) {
        throw DomainError("most_probable_radius: n must be >= 1");
    }
    return n * n * c.a_mu() / c.Z();
}

} // namespace bohmh
