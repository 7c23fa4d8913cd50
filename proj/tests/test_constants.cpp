#include "doctest.h"

#include "approx.hpp"

#include "bohmh/constants.hpp"
#include "bohmh/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

using namespace bohmh;

TEST_CASE("CODATA 2018 defaults") {
    const PhysConsts c = default_constants();
    CHECK(c.hbar() == 1.054571817e-34);
    CHECK(c.m_e() == 9.1093837015e-31);
    CHECK(c.M_nucleus() == 1.67262192369e-27);
    CHECK(c.e_charge() == 1.602176634e-19);
    CHECK(c.eps0() == 8.8541878128e-12);
    CHECK(c.Z() == 1);
}

TEST_CASE("derived reduced mass and Bohr radii") {
    const PhysConsts c = default_constants();
    const double mu = c.m_e() * c.M_nucleus() / (c.m_e() + c.M_nucleus());
    CHECK(c.mu() == approx(mu).epsilon(1e-15));
    CHECK(c.mu() < c.m_e());
    // Inputs are rounded to 10-11 digits, so a0 reproduces the tabulated value to ~1e-9.
    CHECK(c.a0() == approx(5.29177210903e-11).epsilon(5e-9));
    CHECK(c.a_mu() == approx(5.29465e-11).epsilon(1e-5));
    CHECK(c.a_mu() / c.a0() == approx(c.m_e() / c.mu()).epsilon(1e-14));
    const double k = c.e_charge() * c.e_charge() / (4.0 * std::numbers::pi * c.eps0());
    CHECK(c.coulomb_k() == approx(k).epsilon(1e-15));
}

TEST_CASE("make rejects non-physical values") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(PhysConsts::make(-1.0, 1, 1, 1, 1, 1), DomainError);
    CHECK_THROWS_AS(PhysConsts::make(1, 0.0, 1, 1, 1, 1), DomainError);
    CHECK_THROWS_AS(PhysConsts::make(1, 1, nan, 1, 1, 1), DomainError);
    CHECK_THROWS_AS(PhysConsts::make(1, 1, 1, 1, INFINITY, 1), DomainError);
    CHECK_THROWS_AS(PhysConsts::make(1, 1, 1, 1, 1, 0), DomainError);
}

TEST_CASE("Z scales a_mu down and the Coulomb coupling up") {
    const PhysConsts h = default_constants();
    const PhysConsts he =
        PhysConsts::make(h.hbar(), h.m_e(), 4.0 * h.M_nucleus(), h.e_charge(), h.eps0(), 2);
    CHECK(he.coulomb_k() == approx(2.0 * h.coulomb_k()).epsilon(1e-15));
    CHECK(he.a_mu() < h.a_mu());
}

TEST_CASE("parse_constants") {
    SUBCASE("overrides start from the defaults") {
        std::istringstream in("# comment\n\nhbar = 1.1e-34  # trailing\n Z=2\n");
        const PhysConsts c = parse_constants(in);
        CHECK(c.hbar() == 1.1e-34);
        CHECK(c.Z() == 2);
        CHECK(c.m_e() == default_constants().m_e());
    }
    SUBCASE("unknown key") {
        std::istringstream in("planck = 6.6e-34\n");
        CHECK_THROWS_AS(parse_constants(in), DomainError);
    }
    SUBCASE("malformed value") {
        std::istringstream in("m_e = heavy\n");
        CHECK_THROWS_AS(parse_constants(in), DomainError);
    }
    SUBCASE("trailing garbage") {
        std::istringstream in("m_e = 9.1e-31kg\n");
        CHECK_THROWS_AS(parse_constants(in), DomainError);
    }
    SUBCASE("missing equals sign") {
        std::istringstream in("m_e 9.1e-31\n");
        CHECK_THROWS_AS(parse_constants(in), DomainError);
    }
    SUBCASE("fractional Z") {
        std::istringstream in("Z = 1.5\n");
        CHECK_THROWS_AS(parse_constants(in), DomainError);
    }
    SUBCASE("negative value") {
        std::istringstream in("eps0 = -1\n");
        CHECK_THROWS_AS(parse_constants(in), DomainError);
    }
}

TEST_CASE("load_constants and the environment override") {
    CHECK_THROWS_AS(load_constants("/nonexistent/bohmh.constants"), DomainError);

    const auto path = std::filesystem::temp_directory_path() / "bohmh_test_constants.txt";
    {
        std::ofstream f(path);
        f << "M_nucleus = 1e-20\n";
    }
    CHECK(load_constants(path).M_nucleus() == 1e-20);

    ::setenv(kConstantsEnvVar, path.c_str(), 1);
    CHECK(load_constants_from_env().M_nucleus() == 1e-20);
    ::unsetenv(kConstantsEnvVar);
    CHECK(load_constants_from_env().M_nucleus() == default_constants().M_nucleus());
    std::filesystem::remove(path);
}
