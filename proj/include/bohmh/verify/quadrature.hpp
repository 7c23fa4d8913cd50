#pragma once

#include "bohmh/constants.hpp"
#include "bohmh/wavefunctions.hpp"

#include <functional>
#include <vector>

namespace bohmh::verify {

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, nodes by Newton iteration on P_n.
GaussRule gauss_legendre(int n);

/// Fixed rule mapped onto [a, b].
double integrate(const std::function<double(double)>& f, double a, double b, const GaussRule& rule);

/// Adaptive bisection with a 20-point rule; a panel is accepted when it agrees
/// with its two halves to abs_tol (scaled by panel width fraction).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 30);

/**
 * ∫|psi_nlm|² dV over r in [0, r_max], cos θ in [-1, 1], φ in [0, 2π).
 * The angular integral runs over x = cos θ with a 32-point rule (exact for
 * the polynomial |P_l^m|² up to l = 31); φ contributes 2π. r_max defaults
 * to 40·n·a_mu/Z.
 */
double normalization_integral(const QuantumNumbers& qn, const PhysConsts& c, double r_max = 0.0);

struct GridArgmax {
    double r;       // m
    double spacing; // m
};

/// Location of the largest D_nl(r) on a uniform grid of `points` nodes over
/// (0, r_max]; r_max defaults to 4·n²·a_mu/Z.
GridArgmax radial_distribution_argmax(const QuantumNumbers& qn, const PhysConsts& c,
                                      int points = 20001, double r_max = 0.0);

} // namespace bohmh::verify
