#pragma once

#include "diracwell/constants.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace diracwell {

/// Inside-well wavenumber zeta and outside decay constant xi, both in nm^-1.
struct WaveNumbers {
    double zeta = 0.0;
    double xi = 0.0;
};

/// A value stored as sign * exp(log_abs); used for kappa, which overflows
/// double precision for deep wells.
struct SignedLog {
    double log_abs = 0.0;
    int sign = 1;
};

/// One bound state. Energies are kinetic, E - m c^2, in eV; the total energy
/// is never formed internally because m c^2 would swallow the meV scale.
struct EigenState {
    int azimuthal_l = 0;
    int radial_n = 1; ///< 1 for the lowest state of a given l
    double kinetic_energy = 0.0;
    WaveNumbers wave_numbers;
    SignedLog kappa;              ///< outside/inside amplitude ratio
    double boundary_residual = 0; ///< |D| / (|inside term| + |outside term|)

    double kinetic_energy_mev() const { return units::ev_to_mev(kinetic_energy); }
    double total_energy(const PhysicalConstants& c = codata2018) const { return c.rest_energy + kinetic_energy; }
    double ln_kappa() const { return kappa.log_abs; }
};

/// Thrown when bisection inside a sign-change bracket fails.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double bracket_lo, double bracket_hi)
        : std::runtime_error(what), lo(bracket_lo), hi(bracket_hi) {}
    double lo; ///< kinetic energy bracket, eV
    double hi;
};

struct SolverOptions {
    int scan_points = 2000;          ///< minimum sign-change scan resolution
    double relative_tolerance = 1e-12;
    double guard_fraction = 1e-9;    ///< endpoints of (0, U) excluded by this fraction of U
};

/// The two sides of the combined matching condition at rho = R, with K
/// replaced by e^{xi R} K so that the common exponential drops out:
///   inside  = xi J_l(zeta R) Kt_{l+1}(xi R)
///   outside = (E - U + mc^2)/(E + mc^2) zeta Kt_l(xi R) J_{l+1}(zeta R)
struct MatchingTerms {
    double inside = 0.0;
    double outside = 0.0;
    double residual() const { return inside - outside; }
    double relative_residual() const;
};

/// zeta and xi at a kinetic energy in the open bound window (0, U).
/// Throws std::domain_error outside that window.
WaveNumbers wave_numbers(double kinetic_ev, const WellConfig& config, const PhysicalConstants& c = codata2018);

MatchingTerms matching_terms(double kinetic_ev, const WellConfig& config, const PhysicalConstants& c = codata2018);

/// Matching defect D(E); its zeros in (0, U) are the bound states.
double boundary_residual(double kinetic_ev, const WellConfig& config, const PhysicalConstants& c = codata2018);

/// ln|kappa| and sign from kappa K_l(xi R) = J_l(zeta R), in log space.
SignedLog ln_kappa(const EigenState& state, const WellConfig& config, const PhysicalConstants& c = codata2018);

/// All bound states of `config` in increasing energy, at most `max_states`.
/// An empty result means no sign change was found.
std::vector<EigenState> find_eigenstates(const WellConfig& config, int max_states,
                                         const PhysicalConstants& c = codata2018,
                                         const SolverOptions& options = {});

/// Number of scan points actually used for `config` (grows with the number
/// of oscillations of J over the window).
int scan_resolution(const WellConfig& config, const PhysicalConstants& c, const SolverOptions& options);

/// Skin depth 1/xi of the evanescent amplitude, nm.
double skin_depth(const EigenState& state);

} // namespace diracwell
