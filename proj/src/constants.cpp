#include "bohmh/constants.hpp"

#include "bohmh/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

namespace bohmh {

namespace {

// CODATA 2018.
constexpr double kHbar = 1.054571817e-34;        // J·s
constexpr double kElectronMass = 9.1093837015e-31; // kg
constexpr double kProtonMass = 1.67262192369e-27;  // kg
constexpr double kElementaryCharge = 1.602176634e-19; // C
constexpr double kEpsilon0 = 8.8541878128e-12;   // F/m

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw DomainError("constants: value for '" + key + "' is not a number: " + text);
    }
    if (used != text.size()) {
        throw DomainError("constants: trailing characters in value for '" + key + "': " + text);
    }
    return value;
}

} // namespace

PhysConsts PhysConsts::make(double hbar, double m_e, double M_nucleus, double e_charge, double eps0,
                            int Z) {
    for (double v : {hbar, m_e, M_nucleus, e_charge, eps0}) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw DomainError("constants: all physical constants must be finite and positive");
        }
    }
    if (Z < 1) {
        throw DomainError("constants: Z must be an integer >= 1");
    }

    PhysConsts c;
    c.hbar_ = hbar;
    c.m_e_ = m_e;
    c.M_nucleus_ = M_nucleus;
    c.e_charge_ = e_charge;
    c.eps0_ = eps0;
    c.Z_ = Z;
    c.mu_ = m_e * M_nucleus / (m_e + M_nucleus);

    const double four_pi_eps0 = 4.0 * std::numbers::pi * eps0;
    c.a0_ = four_pi_eps0 * hbar * hbar / (m_e * e_charge * e_charge);
    c.a_mu_ = four_pi_eps0 * hbar * hbar / (c.mu_ * e_charge * e_charge);
    c.coulomb_k_ = Z * e_charge * e_charge / four_pi_eps0;
    return c;
}

PhysConsts default_constants() {
    return PhysConsts::make(kHbar, kElectronMass, kProtonMass, kElementaryCharge, kEpsilon0, 1);
}

PhysConsts parse_constants(std::istream& in) {
    const PhysConsts d = default_constants();
    double hbar = d.hbar();
    double m_e = d.m_e();
    double M = d.M_nucleus();
    double e = d.e_charge();
    double eps0 = d.eps0();
    int Z = d.Z();

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw DomainError("constants: line " + std::to_string(lineno) + " has no '='");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "hbar") {
            hbar = parse_double(key, value);
        } else if (key == "m_e") {
            m_e = parse_double(key, value);
        } else if (key == "M_nucleus") {
            M = parse_double(key, value);
        } else if (key == "e_charge") {
            e = parse_double(key, value);
        } else if (key == "eps0") {
            eps0 = parse_double(key, value);
        } else if (key == "Z") {
            const double z = parse_double(key, value);
            if (z != std::floor(z)) {
                throw DomainError("constants: Z must be an integer");
            }
            Z = static_cast<int>(z);
        } else {
            throw DomainError("constants: unknown key '" + key + "'");
        }
    }
    return PhysConsts::make(hbar, m_e, M, e, eps0, Z);
}

PhysConsts load_constants(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("constants: cannot open " + path.string());
    }
    return parse_constants(in);
}

PhysConsts load_constants_from_env() {
    const char* path = std::getenv(kConstantsEnvVar);
    if (path == nullptr || *path == '\0') {
        return default_constants();
    }
    return load_constants(path);
}

} // namespace bohmh
