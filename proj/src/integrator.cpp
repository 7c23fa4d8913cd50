#include "bohmh/integrator.hpp"

#include <cmath>
#include <utility>

namespace bohmh {

void IntegratorConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw DomainError("integrator: dt must be positive and finite");
    }
    if (steps < 0) {
        throw DomainError("integrator: steps must be >= 0");
    }
    if (record_every < 1) {
        throw DomainError("integrator: record_every must be >= 1");
    }
}

Vec3 rk4_step(const VectorField& rhs, const Vec3& y, double dt) {
    const Vec3 k1 = rhs(y);
    const Vec3 k2 = rhs(y + (0.5 * dt) * k1);
    const Vec3 k3 = rhs(y + (0.5 * dt) * k2);
    const Vec3 k4 = rhs(y + dt * k3);
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

namespace {

TrajectorySample sample_at(const VectorField& rhs, const Observers& obs, double t, const Vec3& y) {
    TrajectorySample s{t, y, rhs(y), {}, {}};
    if (obs.L) {
        s.L = obs.L(y);
    }
    if (obs.F_net) {
        s.F_net = obs.F_net(y);
    }
    return s;
}

} // namespace

Trajectory integrate(const VectorField& rhs, const Vec3& y0, const IntegratorConfig& config,
                     const Observers& observers, std::string label) {
    config.validate();
    if (!is_finite(y0)) {
        throw DomainError("integrator: initial point is not finite");
    }

    Trajectory traj{std::move(label), config, {}};
    traj.samples.reserve(static_cast<std::size_t>(config.steps / config.record_every + 1));

    Vec3 y = y0;
    double t = 0.0;
    try {
        traj.samples.push_back(sample_at(rhs, observers, t, y));
    } catch (const NodeError& e) {
        throw IntegrationError(std::string("initial point rejected: ") + e.what(), t, y, true);
    } catch (const Error& e) {
        throw IntegrationError(std::string("initial point rejected: ") + e.what(), t, y, false);
    }

    for (long k = 1; k <= config.steps; ++k) {
        try {
            const Vec3 next = rk4_step(rhs, y, config.dt);
            if (!is_finite(next)) {
                throw Error("non-finite state");
            }
            y = next;
            // t from the step index, so rounding does not accumulate.
            t = k * config.dt;
            if (k % config.record_every == 0) {
                traj.samples.push_back(sample_at(rhs, observers, t, y));
            }
        } catch (const NodeError& e) {
            throw IntegrationError(std::string("step aborted: ") + e.what(), t, y, true);
        } catch (const Error& e) {
            throw IntegrationError(std::string("step aborted: ") + e.what(), t, y, false);
        }
    }
    return traj;
}

IntegratorConfig config_for_period(double period, double periods, long divisor,
                                   long record_every) {
    if (!(period > 0.0) || !(periods >= 0.0) || divisor < 1) {
        throw DomainError("config_for_period: need period > 0, periods >= 0, divisor >= 1");
    }
    IntegratorConfig cfg;
    cfg.dt = period / static_cast<double>(divisor);
    cfg.steps = std::lround(periods * static_cast<double>(divisor));
    cfg.record_every = record_every;
    cfg.validate();
    return cfg;
}

} // namespace bohmh
