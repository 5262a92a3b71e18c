#pragma once

#include "diracwell/constants.hpp"
#include "diracwell/eigensolver.hpp"

#include <span>
#include <vector>

namespace diracwell {

/// n-th positive zero of J_0, bisected on bessel_j inside a bracket around
/// the McMahon estimate (n - 1/4) pi.
double bessel_j0_zero(int n);

/// Wavenumber of the n-th l = 0 state when the wavefunction is forced to
/// vanish at rho = R, nm^-1. Throws std::invalid_argument for l != 0 or n < 1.
double infinite_well_zeta(const WellConfig& config, int n = 1);

/// Ground-state behaviour of a fixed-radius well as its depth grows.
struct LimitReport {
    double radius_nm = 0.0;
    std::vector<double> potentials;          ///< eV, ascending
    std::vector<EigenState> ground_states;
    std::vector<double> zeta_ground;         ///< nm^-1
    double zeta_infinite = 0.0;              ///< nm^-1
    std::vector<double> skin_depths;         ///< nm
    std::vector<double> outside_fractions;

    /// zeta_ground[i] / zeta_infinite
    double zeta_ratio(std::size_t i) const { return zeta_ground[i] / zeta_infinite; }
};

/// Solves the l = 0 ground state for every depth (in parallel). The
/// potentials must be strictly ascending; throws std::invalid_argument
/// otherwise and propagates solver errors.
LimitReport convergence_report(double radius_nm, std::span<const double> potentials,
                               const PhysicalConstants& c = codata2018);

/// max over [0, R] of |J_0(zeta rho) - J_0(zeta_inf rho)|: the finite-well
/// large component (unit value on the axis) against the infinite-well
/// profile. Sampled on `samples` evenly spaced radii.
double infinite_well_profile_deviation(const EigenState& ground, const WellConfig& config, int samples = 1001);

} // namespace diracwell
