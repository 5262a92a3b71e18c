#include <doctest.h>

#include "diracwell/constants.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace diracwell;

TEST_CASE("codata values")
{
    CHECK(codata2018.hbar_c == 197.3269804);
    CHECK(codata2018.rest_energy == 510998.95);
    CHECK(codata2018.elementary_charge == 1.602176634e-19);
}

TEST_CASE("to_internal accepts the reference well unchanged")
{
    const WellConfig c = to_internal({10.0, 0.01, 0});
    CHECK(c.radius_nm == 10.0);
    CHECK(c.potential_ev == 0.01);
}

TEST_CASE("to_internal rejects invalid wells")
{
    CHECK_THROWS_AS(to_internal({10.0, 600000.0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(to_internal({10.0, codata2018.rest_energy, 0}), std::invalid_argument);
    CHECK_THROWS_AS(to_internal({0.0, 0.01, 0}), std::invalid_argument);
    CHECK_THROWS_AS(to_internal({-1.0, 0.01, 0}), std::invalid_argument);
    CHECK_THROWS_AS(to_internal({10.0, -0.01, 0}), std::invalid_argument);
    CHECK_THROWS_AS(to_internal({10.0, 0.01, -1}), std::invalid_argument);
    CHECK_THROWS_AS(to_internal({10.0, 0.01, 0, 1.0}), std::invalid_argument);
}

TEST_CASE("unit conversions round trip")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> exponent(-12.0, 12.0);
    for (int i = 0; i < 1000; ++i) {
        const double v = std::pow(10.0, exponent(rng));
        CHECK(std::abs(units::per_m_to_per_nm(units::per_nm_to_per_m(v)) - v) <= 1e-15 * v);
        CHECK(std::abs(units::mev_to_ev(units::ev_to_mev(v)) - v) <= 1e-15 * v);
    }
}
