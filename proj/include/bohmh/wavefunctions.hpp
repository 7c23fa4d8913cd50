#pragma once

#include "bohmh/constants.hpp"
#include "bohmh/vec3.hpp"

#include <complex>

namespace bohmh {

/// (n, l, m) label of a hydrogenic eigenstate. Always valid once constructed:
/// n >= 1, 0 <= l <= n-1, |m| <= l.
class QuantumNumbers {
public:
    /// Throws DomainError when the triple is not allowed.
    QuantumNumbers(int n, int l, int m);

    int n() const noexcept { return n_; }
    int l() const noexcept { return l_; }
    int m() const noexcept { return m_; }

    friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;

private:
    int n_;
    int l_;
    int m_;
};

/// Spherical polar point; theta measured from +z.
struct SphericalPoint {
    double r{0.0};     // m
    double theta{0.0}; // rad, [0, π]
    double phi{0.0};   // rad

    Vec3 to_cartesian() const;
    /// phi in (-π, π]; the origin maps to (0, 0, 0).
    static SphericalPoint from_cartesian(const Vec3& p);
};

using ComplexAmplitude = std::complex<double>;

/// Associated Legendre function P_l^m(x) including the Condon-Shortley phase
/// (-1)^m, so P_1^1(x) = -sqrt(1-x²). Negative m uses
/// P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.
double assoc_legendre(int l, int m, double x);

/// Generalised Laguerre polynomial L_k^alpha(x) by three-term recurrence.
double assoc_laguerre(int k, double alpha, double x);

/// Spherical-harmonic normalisation sqrt((2l+1)/(4π) · (l-m)!/(l+m)!).
double spherical_norm(int l, int m);

/// Normalised radial function R_nl(r) in m^(-3/2), scaled by the modified
/// Bohr radius a_mu and nuclear charge Z.
double radial(const QuantumNumbers& qn, double r, const PhysConsts& c);

/// Real amplitude R(r, θ) = N_sp R_nl(r) P_l^m(cos θ); the modulus of psi up
/// to sign.
double amplitude(const QuantumNumbers& qn, double r, double theta, const PhysConsts& c);

/// Same, evaluated at a Cartesian point.
double amplitude(const QuantumNumbers& qn, const Vec3& p, const PhysConsts& c);

/// psi_nlm(r, θ, φ, t) = N_sp R_nl P_l^m(cos θ) e^{imφ} e^{-i E_n t/ħ}.
ComplexAmplitude psi(const QuantumNumbers& qn, const SphericalPoint& p, double t,
                     const PhysConsts& c);

/// Radial distribution D_nl(r) = r² R_nl(r)², in 1/m.
double radial_distribution(const QuantumNumbers& qn, double r, const PhysConsts& c);

/// Mode of D_nl for l = n-1 states: n² a_mu / Z.
double most_probable_radius(int n, const PhysConsts& c);

} // namespace bohmh
