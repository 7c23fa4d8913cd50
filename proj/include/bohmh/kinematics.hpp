#pragma once

#include "bohmh/constants.hpp"
#include "bohmh/vec3.hpp"
#include "bohmh/wavefunctions.hpp"

#include <optional>

namespace bohmh {

enum class RotationSense { Counterclockwise, Clockwise };

/**
 * Fixed orbit of an m != 0 electron in the eigenstate psi_nlm.
 *
 * The electron circles the z-axis at polar angle theta_e on a sphere of
 * radius r_e: cos(alpha) = m/sqrt(l(l+1)), theta_e = π/2 - alpha (m > 0) or
 * 3π/2 - alpha (m < 0), so sin(theta_e) > 0 in both cases. The azimuth
 * advances as φ(t) = omega·t + c with omega = mħ/(m_e r_e² sin²theta_e).
 */
struct OrbitGeometry {
    QuantumNumbers qn;
    double alpha;   // rad
    double theta_e; // rad
    double r_e;     // m
    double r_0;     // m, orbit radius r_e sin(theta_e)
    double z_0;     // m, height r_e cos(theta_e), signed
    double omega;   // rad/s, dφ/dt, signed like m
    double c;       // rad, phase at t = 0
    double period;  // s, 2π/|omega|
    RotationSense sense;
    double L_z;     // kg·m²/s, mħ
};

/// Throws StationaryElectron for m = 0 (no orbit exists). r_e defaults to
/// the most probable radius n² a_mu / Z.
OrbitGeometry orbit_geometry(const QuantumNumbers& qn, const PhysConsts& c,
                             std::optional<double> r_e = std::nullopt, double phase = 0.0);

double azimuth(const OrbitGeometry& g, double t);
Vec3 position(const OrbitGeometry& g, double t);
Vec3 velocity(const OrbitGeometry& g, double t);
/// |m|ħ/(m_e r_0); constant along the orbit.
double speed(const OrbitGeometry& g);
/// Angular momentum along the orbit; precesses with the electron at rate omega.
Vec3 angular_momentum_trajectory(const OrbitGeometry& g, double t);

// Field layer: functions of an arbitrary point, not just the orbit.

/// p = ∇S = (mħ/(r sinθ)) ê_φ. Zero for m = 0; SingularityError on the z-axis
/// when m != 0.
Vec3 momentum_field(const QuantumNumbers& qn, const SphericalPoint& p, const PhysConsts& c);

/// L = r × ∇S = -(mħ/sinθ) ê_θ.
Vec3 angular_momentum(const QuantumNumbers& qn, const SphericalPoint& p, const PhysConsts& c);

/// L·L = m²ħ²/sin²θ.
double l_squared(const QuantumNumbers& qn, double theta, const PhysConsts& c);

/// Net (quantum + Coulomb) force ∇[(∇S)²/2m_e]
///   = -(m²ħ²/(m_e r³ sin³θ)) (cos φ, sin φ, 0).
/// Points at the z-axis, not the nucleus. Zero for m = 0.
Vec3 net_force(const QuantumNumbers& qn, const SphericalPoint& p, const PhysConsts& c);

/// Bohr level E_n = -(mu/2ħ²)(Ze²/4πε₀)²/n².
double bohr_energy(int n, const PhysConsts& c);
double bohr_kinetic(int n, const PhysConsts& c);
/// -Ze²/(4πε₀ r); SingularityError at r = 0.
double coulomb_potential(double r, const PhysConsts& c);

/// Energy bookkeeping on the orbit of radius r_e, in joules.
struct EnergyReport {
    double E_n;      // total (Bohr) energy
    double phi_term; // -mħ dφ/dt
    double E_CI;     // E_n - phi_term
    double KE_CI;    // (∇S)²/2m_e on the orbit
    double KE_Bohr;  // -E_n
    double V;        // Coulomb energy at r_e
    double Q;        // E_n - KE_CI - V
};

EnergyReport energy_report(const QuantumNumbers& qn, const PhysConsts& c,
                           std::optional<double> r_e = std::nullopt);

/// Phase S = ħ m φ - E_CI t, with E_CI taken from energy_report at r_e.
double phase(const QuantumNumbers& qn, const SphericalPoint& p, double t, const PhysConsts& c,
             std::optional<double> r_e = std::nullopt);

/// Q rearranged from the Hamilton-Jacobi equation: E_n - (∇S)²/2m_e - V(r).
double quantum_potential(const QuantumNumbers& qn, const SphericalPoint& p, const PhysConsts& c);

/**
 * Q = -(ħ²/2mu) ∇²R / R with the Laplacian of R = N_sp R_nl P_l^m taken by
 * 5-point central differences along x, y and z (step 1e-3 n a_mu / Z, one
 * Richardson extrapolation against step 2h).
 *
 * The prefactor uses the reduced mass, which is the mass R_nl is an
 * eigenfunction for; with it, Q equals E_n - (∇S)²/2mu - V exactly.
 * Throws NodeError on a nodal surface of R and SingularityError at r = 0.
 */
double quantum_potential_numeric(const QuantumNumbers& qn, const Vec3& p, const PhysConsts& c);

/// S, ∇S, Q, V, F_net and L evaluated at one spacetime point.
struct FieldSample {
    SphericalPoint point;
    double S;
    Vec3 gradS;
    double Q;
    double V;
    Vec3 F_net;
    Vec3 L;
};

FieldSample field_sample(const QuantumNumbers& qn, const SphericalPoint& p, double t,
                         const PhysConsts& c, std::optional<double> r_e = std::nullopt);

} // namespace bohmh
