#pragma once

#include "bohmh/errors.hpp"
#include "bohmh/vec3.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace bohmh {

using VectorField = std::function<Vec3(const Vec3&)>;

struct IntegratorConfig {
    double dt{0.0};         // s, > 0
    long steps{0};          // >= 0; 0 records only the initial sample
    long record_every{1};   // >= 1

    /// Throws DomainError on dt <= 0, steps < 0 or record_every < 1.
    void validate() const;
};

/// Classical RK4 for an autonomous field. Errors thrown by rhs propagate.
Vec3 rk4_step(const VectorField& rhs, const Vec3& y, double dt);

struct TrajectorySample {
    double t;
    Vec3 position;
    Vec3 velocity;
    Vec3 L;
    Vec3 F_net;
};

struct Trajectory {
    std::string label;
    IntegratorConfig config;
    std::vector<TrajectorySample> samples;
};

/// Optional evaluators sampled at recorded points; unset ones record zero.
struct Observers {
    VectorField L;
    VectorField F_net;
};

/// Raised when a step fails; carries the time and position at the start of
/// the failing step, and whether the cause was a NodeError.
class IntegrationError : public Error {
public:
    IntegrationError(const std::string& what, double t, const Vec3& point, bool at_node)
        : Error(what), t_(t), point_(point), at_node_(at_node) {}
    double t() const noexcept { return t_; }
    const Vec3& point() const noexcept { return point_; }
    bool at_node() const noexcept { return at_node_; }

private:
    double t_;
    Vec3 point_;
    bool at_node_;
};

/// Sample count is steps / record_every + 1 (integer division).
Trajectory integrate(const VectorField& rhs, const Vec3& y0, const IntegratorConfig& config,
                     const Observers& observers = {}, std::string label = {});

/// dt = period / divisor; the default divisor is 2048.
IntegratorConfig config_for_period(double period, double periods = 1.0, long divisor = 2048,
                                   long record_every = 1);

} // namespace bohmh
