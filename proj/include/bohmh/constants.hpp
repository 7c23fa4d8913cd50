#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

namespace bohmh {

/**
 * Physical constants in SI units plus the derived reduced mass and Bohr radii.
 *
 * Instances are immutable; build them through default_constants() or
 * PhysConsts::make(), which computes the derived fields:
 *   mu   = m_e·M/(m_e + M)
 *   a0   = 4π·eps0·hbar²/(m_e·e²)
 *   a_mu = 4π·eps0·hbar²/(mu·e²) = (m_e/mu)·a0
 */
class PhysConsts {
public:
    static PhysConsts make(double hbar, double m_e, double M_nucleus, double e_charge, double eps0,
                           int Z);

    double hbar() const noexcept { return hbar_; }
    double m_e() const noexcept { return m_e_; }
    double M_nucleus() const noexcept { return M_nucleus_; }
    double e_charge() const noexcept { return e_charge_; }
    double eps0() const noexcept { return eps0_; }
    int Z() const noexcept { return Z_; }

    double mu() const noexcept { return mu_; }
    double a0() const noexcept { return a0_; }
    double a_mu() const noexcept { return a_mu_; }

    /// Z·e²/(4π·eps0), the Coulomb coupling in J·m.
    double coulomb_k() const noexcept { return coulomb_k_; }

private:
    PhysConsts() = default;

    double hbar_{};
    double m_e_{};
    double M_nucleus_{};
    double e_charge_{};
    double eps0_{};
    int Z_{1};
    double mu_{};
    double a0_{};
    double a_mu_{};
    double coulomb_k_{};
};

/// CODATA 2018 values, Z = 1, proton nucleus.
PhysConsts default_constants();

/// Parse `key = value` lines (keys: hbar, m_e, M_nucleus, e_charge, eps0, Z),
/// starting from the defaults. Blank lines and `#` comments are ignored.
/// Throws DomainError on unknown keys or malformed values.
PhysConsts parse_constants(std::istream& in);
PhysConsts load_constants(const std::filesystem::path& path);

/// Environment variable naming an override file for load_constants_from_env().
inline constexpr const char* kConstantsEnvVar = "BOHMH_CONSTANTS";

/// Defaults, or the file named by $BOHMH_CONSTANTS when set.
PhysConsts load_constants_from_env();

} // namespace bohmh
