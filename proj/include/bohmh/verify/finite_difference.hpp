#pragma once

#include "bohmh/vec3.hpp"

#include <functional>

namespace bohmh::verify {

using ScalarField = std::function<double(const Vec3&)>;
using VecField = std::function<Vec3(const Vec3&)>;

/// Fourth-order central difference gradient with step h along each axis.
Vec3 gradient(const ScalarField& f, const Vec3& p, double h);

/// Gradient of a phase defined modulo `period` (e.g. 2πħ for S). Differences
/// are wrapped into (-period/2, period/2] before use, so a branch cut of the
/// principal value inside the stencil does no harm.
Vec3 phase_gradient(const ScalarField& f, const Vec3& p, double h, double period);

/// Jacobian J(i, j) = ∂g_i/∂x_j of a vector field, fourth-order central.
Mat3 jacobian(const VecField& g, const Vec3& p, double h);

/// Laplacian of f by the 5-point stencil along x, y, z.
double laplacian(const ScalarField& f, const Vec3& p, double h);

} // namespace bohmh::verify
