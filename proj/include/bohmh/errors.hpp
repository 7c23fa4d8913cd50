#pragma once

#include "bohmh/vec3.hpp"

#include <stdexcept>
#include <string>

namespace bohmh {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument: bad quantum numbers, out-of-range cosine, bad config.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested quantity is undefined because the electron is at rest
/// (m = 0): there is no orbit, period or orbit angle.
class StationaryElectron : public Error {
public:
    using Error::Error;
};

/// Evaluation on the z-axis (sin θ = 0) or at r = 0 where a field diverges.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Evaluation on a nodal surface of the wavefunction, where S or Q is
/// undefined. Carries the offending point (Cartesian, metres).
class NodeError : public Error {
public:
    NodeError(const std::string& what, const Vec3& point) : Error(what), point_(point) {}
    const Vec3& point() const noexcept { return point_; }

private:
    Vec3 point_;
};

} // namespace bohmh
