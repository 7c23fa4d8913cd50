#pragma once

// psi_21m seen from coordinate axes rotated by beta about the y-axis.
//
// Convention: unprimed (x, y, z) is the frame in which psi_21m is an L_z
// eigenstate; primed coordinates satisfy
//   x = z' sin β + x' cos β,   y = y',   z = z' cos β - x' sin β.
// All dynamics in this module are evaluated in primed coordinates.

#include "bohmh/constants.hpp"
#include "bohmh/kinematics.hpp"
#include "bohmh/vec3.hpp"
#include "bohmh/wavefunctions.hpp"

#include <array>

namespace bohmh {

struct RotationConfig {
    double beta{0.0}; // rad

    /// Unprimed -> primed: x' = x cos β - z sin β, y' = y, z' = x sin β + z cos β.
    Vec3 rotate(const Vec3& v) const;
    /// Primed -> unprimed.
    Vec3 unrotate(const Vec3& v) const;
};

/// psi_21m with m in {-1, 0, +1} viewed in a frame rotated by beta.
class RotatedState {
public:
    /// Throws DomainError unless m is -1, 0 or +1.
    RotatedState(int m, double beta);

    int m() const noexcept { return m_; }
    double beta() const noexcept { return beta_; }
    RotationConfig config() const noexcept { return {beta_}; }

private:
    int m_;
    double beta_;
};

/// S with its gradient and Hessian with respect to (x', y', z').
struct PhaseJet {
    double S{0.0}; // J·s
    Vec3 grad;     // kg·m/s
    Mat3 hess;     // kg/s
};

/// psi_21m stripped of the radial prefactor A R_21(r')/r':
///   m = +1: -(z' sin β + x' cos β + i y')
///   m =  0: sqrt2 (z' cos β - x' sin β)
///   m = -1:  (z' sin β + x' cos β - i y')
/// Units of length.
ComplexAmplitude phi_21m(const RotatedState& s, const Vec3& p);

/// φφ* for m = ±1 in expanded form
///   z'² sin²β + x'² cos²β + y'² + 2 x' z' sin β cos β.
double phi_modulus_squared(const RotatedState& s, const Vec3& p);

/// S = ħ arg φ (principal branch) and closed-form derivatives. For m = -1 the
/// derivatives are the negatives of the m = +1 ones; m = 0 gives all zeros.
/// Throws NodeError when |φ|² < 1e-12 r_e² (r_e = 4 a_mu / Z) for m = ±1.
PhaseJet phase_jet(const RotatedState& s, const Vec3& p, const PhysConsts& c);

/// Guidance velocity ∇'S / m_e.
Vec3 eom_rhs(const RotatedState& s, const Vec3& p, const PhysConsts& c);

/// F = ∇'[(∇'S)²/2m_e] = Hess(S)·∇S / m_e.
Vec3 net_force_rotated(const RotatedState& s, const Vec3& p, const PhysConsts& c);

/// L = r' × ∇'S.
Vec3 angular_momentum_rotated(const RotatedState& s, const Vec3& p, const PhysConsts& c);

/// Coefficients of psi_21m on the primed eigenstates (psi'_211, psi'_210,
/// psi'_21-1). The 3×3 matrix they form over m = +1, 0, -1 is orthogonal.
std::array<double, 3> decompose(const RotatedState& s);

/// Start point in the primed frame matching the unrotated orbit at t = 0:
/// rotate(position(geom, 0)). With geom.c = π/2 this reproduces the usual
/// (-r_e cos θ_e sin β, r_e sin θ_e, r_e cos θ_e cos β) start for m = +1.
/// Throws StationaryElectron for m = 0.
Vec3 initial_condition(const RotatedState& s, const OrbitGeometry& geom);

} // namespace bohmh
