#pragma once

#include "diracwell/constants.hpp"
#include "diracwell/eigensolver.hpp"

#include <Eigen/Dense>

namespace diracwell {

using Spinor = Eigen::Vector4cd;

/// Cylindrical alpha matrices at azimuth phi.
Eigen::Matrix4cd alpha_rho(double phi);
Eigen::Matrix4cd alpha_phi(double phi);
Eigen::Matrix4cd alpha_z();

/// How field amplitudes are scaled.
///
/// raw: the inside J_l coefficient is 1. Spinor components are
/// dimensionless, charge density is reported in units of e and current
/// density in units of e c.
///
/// unit_charge: the spinor carries one electron per nm of z-length.
/// Spinor components are in nm^{-3/2}, charge density in C/m^3 and current
/// density in A/m^2.
enum class Normalization { raw, unit_charge };

struct SpinorSample {
    double rho = 0.0; ///< nm
    double phi = 0.0; ///< rad
    Spinor psi = Spinor::Zero();
};

struct FieldSample {
    double rho = 0.0;
    double phi = 0.0;
    Eigen::Vector3d current = Eigen::Vector3d::Zero(); ///< (j_rho, j_phi, j_z)
    double charge_density = 0.0;

    double j_rho() const { return current[0]; }
    double j_phi() const { return current[1]; }
    double j_z() const { return current[2]; }
};

/// Radial profiles of the spin-up state: psi_1 = e^{i l phi} upper(rho),
/// psi_4 = i e^{i (l+1) phi} lower(rho), psi_2 = psi_3 = 0.
struct RadialAmplitudes {
    double upper = 0.0;
    double lower = 0.0;
};

struct NormalizationOptions {
    double cutoff_decay_lengths = 40.0; ///< outside quadrature runs to R + this / xi
    double tolerance = 1e-12;
};

/// Pieces of 2 pi int_0^inf psi^dagger psi rho d rho for the raw spinor, nm^2.
struct NormalizationIntegral {
    double inside = 0.0;
    double outside = 0.0; ///< includes the analytic tail beyond the cutoff
    double tail = 0.0;
    double total() const { return inside + outside; }
    double outside_fraction() const { return outside / total(); }
};

/// A solved bound state bound to its well, ready for point evaluation.
/// Outside the well every amplitude is assembled in log space,
/// ln kappa - xi rho + ln(e^{xi rho} K), and exponentiated once.
class BoundStateField {
public:
    BoundStateField(const EigenState& state, const WellConfig& config,
                    const PhysicalConstants& constants = codata2018,
                    Normalization normalization = Normalization::raw);

    RadialAmplitudes radial(double rho) const;
    SpinorSample spinor(double rho, double phi) const;

    /// -e c psi^dagger alpha_k psi from the explicit alpha matrices.
    FieldSample field(double rho, double phi) const;
    double charge_density(double rho) const;

    /// j_phi from the closed-form Bessel products, for cross-checking
    /// the bilinear:
    ///   inside  C zeta J_l J_{l+1} / (E + mc^2)
    ///   outside C kappa^2 xi K_l K_{l+1} / (E - U + mc^2)
    double closed_form_j_phi(double rho) const;

    const EigenState& state() const { return state_; }
    const WellConfig& config() const { return config_; }
    Normalization normalization() const { return normalization_; }
    /// Multiplies psi to reach the selected normalization.
    double amplitude_scale() const { return amplitude_scale_; }

private:
    double charge_unit() const;
    double current_unit() const;

    EigenState state_;
    WellConfig config_;
    PhysicalConstants constants_;
    Normalization normalization_;
    double amplitude_scale_ = 1.0;
    double inside_factor_ = 0.0;  // hbar c / (E + mc^2)
    double outside_factor_ = 0.0; // hbar c / (E - U + mc^2)
};

SpinorSample evaluate_spinor(const EigenState& state, const WellConfig& config, double rho, double phi,
                             const PhysicalConstants& c = codata2018);
FieldSample current_density(const EigenState& state, const WellConfig& config, double rho, double phi,
                            const PhysicalConstants& c = codata2018);
/// Raw -psi^dagger psi in units of e.
double charge_density(const EigenState& state, const WellConfig& config, double rho,
                      const PhysicalConstants& c = codata2018);

/// Adaptive Gauss-Kronrod on [0, R] and [R, R + cutoff/xi] plus the leading
/// exponential tail. Throws std::runtime_error if the error estimate does not
/// reach 1e-8 relative.
NormalizationIntegral normalization_integral(const EigenState& state, const WellConfig& config,
                                             const PhysicalConstants& c = codata2018,
                                             const NormalizationOptions& options = {});

} // namespace diracwell
