#pragma once

// Physical constants and well description. Everything internal is expressed
// in eV for energies and nm for lengths; SI units appear only at the output
// boundary.

namespace diracwell {

struct PhysicalConstants {
    double hbar_c = 197.3269804;                ///< eV nm
    double rest_energy = 510998.95;             ///< electron m c^2, eV
    double elementary_charge = 1.602176634e-19; ///< C (electron charge is -e)
    double speed_of_light = 299792458.0;        ///< m/s
};

/// CODATA 2018 values.
inline constexpr PhysicalConstants codata2018{};

/// Cylindrical well of depth `potential_ev` for rho > radius, zero inside.
struct WellConfig {
    double radius_nm = 10.0;
    double potential_ev = 0.01;
    int azimuthal_l = 0;
    double pz = 0.0; ///< only the pz = 0 sector is supported
};

/// Validates a configuration and returns it in internal (eV, nm) units.
/// Throws std::invalid_argument for a degenerate geometry, a non-positive
/// depth, a depth at or above the rest energy, negative l, or pz != 0.
WellConfig to_internal(const WellConfig& config, const PhysicalConstants& constants = codata2018);

namespace units {

inline constexpr double nm_per_m = 1e9;

constexpr double per_nm_to_per_m(double k) { return k * nm_per_m; }
constexpr double per_m_to_per_nm(double k) { return k / nm_per_m; }
constexpr double ev_to_mev(double e) { return e * 1e3; }
constexpr double mev_to_ev(double e) { return e / 1e3; }
/// nm^-3 -> m^-3
constexpr double per_nm3_to_per_m3(double d) { return d * 1e27; }

} // namespace units

} // namespace diracwell
