#include "bohmh/verify/finite_difference.hpp"

#include <array>
#include <cmath>

namespace bohmh::verify {

namespace {

const std::array<Vec3, 3> kAxes{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};

double wrap(double d, double period) { return d - period * std::round(d / period); }

} // namespace

Vec3 gradient(const ScalarField& f, const Vec3& p, double h) {
    Vec3 g;
    for (std::size_t i = 0; i < 3; ++i) {
        const Vec3& e = kAxes[i];
        g[i] = (-f(p + 2.0 * h * e) + 8.0 * f(p + h * e) - 8.0 * f(p - h * e) + f(p - 2.0 * h * e)) /
               (12.0 * h);
    }
    return g;
}

Vec3 phase_gradient(const ScalarField& f, const Vec3& p, double h, double period) {
    const double f0 = f(p);
    Vec3 g;
    for (std::size_t i = 0; i < 3; ++i) {
        const Vec3& e = kAxes[i];
        const double dp2 = wrap(f(p + 2.0 * h * e) - f0, period);
        const double dp1 = wrap(f(p + h * e) - f0, period);
        const double dm1 = wrap(f(p - h * e) - f0, period);
        const double dm2 = wrap(f(p - 2.0 * h * e) - f0, period);
        g[i] = (-dp2 + 8.0 * dp1 - 8.0 * dm1 + dm2) / (12.0 * h);
    }
    return g;
}

Mat3 jacobian(const VecField& g, const Vec3& p, double h) {
    Mat3 J;
    for (std::size_t j = 0; j < 3; ++j) {
        const Vec3& e = kAxes[j];
        const Vec3 d = (-1.0 * g(p + 2.0 * h * e) + 8.0 * g(p + h * e) - 8.0 * g(p - h * e) +
                        g(p - 2.0 * h * e)) /
                       (12.0 * h);
        for (std::size_t i = 0; i < 3; ++i) {
            J(i, j) = d[i];
        }
    }
    return J;
}

double laplacian(const ScalarField& f, const Vec3& p, double h) {
    const double f0 = f(p);
    double sum = 0.0;
    for (const Vec3& e : kAxes) {
        sum += (-f(p + 2.0 * h * e) + 16.0 * f(p + h * e) - 30.0 * f0 + 16.0 * f(p - h * e) -
                f(p - 2.0 * h * e)) /
               (12.0 * h * h);
    }
    return sum;
}

} // namespace bohmh::verify
