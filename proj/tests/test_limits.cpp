#include <doctest.h>

#include "bessel_oracle.hpp"
#include "diracwell/dirac_field.hpp"
#include "diracwell/limits.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace diracwell;

namespace {

double rel(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

const std::vector<double> kPotentials = {0.01, 0.1, 1.0, 10.0};

} // namespace

TEST_CASE("zeros of J0 against the oracle")
{
    for (int n = 1; n <= 20; ++n) {
        CAPTURE(n);
        CHECK(rel(bessel_j0_zero(n), oracle::bessel_j_zero(0, n)) < 1e-14);
    }
    CHECK(std::abs(bessel_j0_zero(2) - 5.520078) < 1e-6);
    CHECK_THROWS_AS(bessel_j0_zero(0), std::invalid_argument);
}

TEST_CASE("infinite-well wavenumber")
{
    const WellConfig c{10.0, 0.01, 0};
    CHECK(std::abs(units::per_nm_to_per_m(infinite_well_zeta(c)) - 2.40e8) < 0.005e8);
    CHECK(rel(infinite_well_zeta(c, 2), oracle::bessel_j_zero(0, 2) / 10.0) < 1e-14);
    CHECK(rel(infinite_well_zeta(WellConfig{20.0, 0.01, 0}), infinite_well_zeta(c) / 2) < 1e-15);
    CHECK_THROWS_AS(infinite_well_zeta(WellConfig{10.0, 0.01, 1}), std::invalid_argument);
    CHECK_THROWS_AS(infinite_well_zeta(c, 0), std::invalid_argument);
}

TEST_CASE("convergence report for the reference sweep")
{
    const auto r = convergence_report(10.0, kPotentials);
    REQUIRE(r.ground_states.size() == 4);
    CHECK(r.radius_nm == 10.0);
    const double zeta_table[] = {2.00e8, 2.26e8, 2.36e8, 2.39e8};
    for (std::size_t i = 0; i < 4; ++i) {
        CAPTURE(i);
        CHECK(rel(units::per_nm_to_per_m(r.zeta_ground[i]), zeta_table[i]) < 0.01);
        CHECK(r.zeta_ground[i] == r.ground_states[i].wave_numbers.zeta);
        CHECK(r.zeta_ratio(i) < 1.0);
        if (i > 0) {
            CHECK(r.zeta_ratio(i) > r.zeta_ratio(i - 1));
            CHECK(r.skin_depths[i] < r.skin_depths[i - 1]);
            CHECK(r.outside_fractions[i] < r.outside_fractions[i - 1]);
        }
    }
    CHECK(r.zeta_ratio(3) > 0.99);
    // the gap to the hard wall shrinks roughly like the skin depth over R
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(1.0 - r.zeta_ratio(i) < 1.5 * r.skin_depths[i] / r.radius_nm);
}

TEST_CASE("convergence report matches per-depth solves")
{
    const auto r = convergence_report(10.0, kPotentials);
    for (std::size_t i = 0; i < kPotentials.size(); ++i) {
        const WellConfig c{10.0, kPotentials[i], 0};
        const auto s = find_eigenstates(c, 1).front();
        CHECK(r.ground_states[i].kinetic_energy == s.kinetic_energy);
        CHECK(r.outside_fractions[i] == doctest::Approx(normalization_integral(s, c).outside_fraction()));
    }
}

TEST_CASE("convergence report input validation")
{
    const std::vector<double> unsorted = {0.1, 0.01};
    const std::vector<double> repeated = {0.1, 0.1};
    const std::vector<double> empty;
    CHECK_THROWS_AS(convergence_report(10.0, unsorted), std::invalid_argument);
    CHECK_THROWS_AS(convergence_report(10.0, repeated), std::invalid_argument);
    CHECK_THROWS_AS(convergence_report(10.0, empty), std::invalid_argument);
    const std::vector<double> too_deep = {1.0, 600000.0};
    CHECK_THROWS_AS(convergence_report(10.0, too_deep), std::invalid_argument);
}

TEST_CASE("deep-well profile approaches the hard-wall profile")
{
    double prev = INFINITY;
    for (double u : kPotentials) {
        const WellConfig c{10.0, u, 0};
        const double d = infinite_well_profile_deviation(find_eigenstates(c, 1).front(), c);
        CAPTURE(u);
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < 0.02);
}
