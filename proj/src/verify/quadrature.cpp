#include "bohmh/verify/quadrature.hpp"

#include "bohmh/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bohmh::verify {

GaussRule gauss_legendre(int n) {
    if (n < 1) {
        throw DomainError("gauss_legendre: n must be >= 1");
    }
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

double integrate(const std::function<double(double)>& f, double a, double b, const GaussRule& rule) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * sum;
}

namespace {

double adaptive(const std::function<double(double)>& f, double a, double b, double whole,
                double tol, int depth, const GaussRule& rule) {
    const double m = 0.5 * (a + b);
    const double left = integrate(f, a, m, rule);
    const double right = integrate(f, m, b, rule);
    if (depth <= 0 || std::abs(left + right - whole) <= tol) {
        return left + right;
    }
    return adaptive(f, a, m, left, 0.5 * tol, depth - 1, rule) +
           adaptive(f, m, b, right, 0.5 * tol, depth - 1, rule);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
    static const GaussRule rule = gauss_legendre(20);
    return adaptive(f, a, b, integrate(f, a, b, rule), abs_tol, max_depth, rule);
}

double normalization_integral(const QuantumNumbers& qn, const PhysConsts& c, double r_max) {
    if (r_max <= 0.0) {
        r_max = 40.0 * qn.n() * c.a_mu() / c.Z();
    }
    static const GaussRule angular = gauss_legendre(32);
    const auto shell = [&](double r) {
        const auto density = [&](double x) {
            const double R = amplitude(qn, r, std::acos(x), c);
            return R * R;
        };
        return r * r * integrate(density, -1.0, 1.0, angular);
    };
    // Split the radial range so the first panel resolves the peak region.
    const double knee = 4.0 * qn.n() * qn.n() * c.a_mu() / c.Z();
    const double inner = integrate_adaptive(shell, 0.0, std::min(knee, r_max), 1e-13);
    const double outer = knee < r_max ? integrate_adaptive(shell, knee, r_max, 1e-13) : 0.0;
    return 2.0 * std::numbers::pi * (inner + outer);
}

GridArgmax radial_distribution_argmax(const QuantumNumbers& qn, const PhysConsts& c, int points,
                                      double r_max) {
    if (points < 2) {
        throw DomainError("radial_distribution_argmax: need at least 2 points");
    }
    if (r_max <= 0.0) {
        r_max = 4.0 * qn.n() * qn.n() * c.a_mu() / c.Z();
    }
    const double h = r_max / points;
    double best_r = h;
    double best = -1.0;
    for (int i = 1; i <= points; ++i) {
        const double r = i * h;
        const double d = radial_distribution(qn, r, c);
        if (d > best) {
            best = d;
            best_r = r;
        }
    }
    return {best_r, h};
}

} // namespace bohmh::verify
