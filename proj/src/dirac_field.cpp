#include "diracwell/dirac_field.hpp"

#include "diracwell/bessel.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace diracwell {

namespace {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};

// amplitudes below 1e-300 are flushed to zero
const double kLogFloor = std::log(1e-300);

double exp_or_zero(double log_value)
{
    return log_value < kLogFloor ? 0.0 : std::exp(log_value);
}

} // namespace

Eigen::Matrix4cd alpha_rho(double phi)
{
    const cd e = std::polar(1.0, phi);
    const cd ec = std::conj(e);
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 3) = ec;
    m(1, 2) = e;
    m(2, 1) = ec;
    m(3, 0) = e;
    return m;
}

Eigen::Matrix4cd alpha_phi(double phi)
{
    const cd e = std::polar(1.0, phi);
    const cd ec = std::conj(e);
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 3) = -I * ec;
    m(1, 2) = I * e;
    m(2, 1) = -I * ec;
    m(3, 0) = I * e;
    return m;
}

Eigen::Matrix4cd alpha_z()
{
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 2) = 1.0;
    m(1, 3) = -1.0;
    m(2, 0) = 1.0;
    m(3, 1) = -1.0;
    return m;
}

BoundStateField::BoundStateField(const EigenState& state, const WellConfig& config,
                                 const PhysicalConstants& constants, Normalization normalization)
    : state_(state), config_(to_internal(config, constants)), constants_(constants), normalization_(normalization)
{
    const double two_mc2 = 2.0 * constants_.rest_energy;
    inside_factor_ = constants_.hbar_c / (state_.kinetic_energy + two_mc2);
    outside_factor_ = constants_.hbar_c / (state_.kinetic_energy - config_.potential_ev + two_mc2);
    if (normalization_ == Normalization::unit_charge) {
        // one electron per nm of z: psi^dagger psi integrates to 1 over the
        // cross-section times 1 nm
        const double n = normalization_integral(state_, config_, constants_).total();
        amplitude_scale_ = 1.0 / std::sqrt(n);
    }
}

RadialAmplitudes BoundStateField::radial(double rho) const
{
    if (!(rho >= 0.0) || !std::isfinite(rho))
        throw std::domain_error("radial coordinate must be finite and >= 0, got " + std::to_string(rho));
    const int l = state_.azimuthal_l;
    const auto [zeta, xi] = state_.wave_numbers;
    if (rho <= config_.radius_nm) {
        return {bessel_j(l, zeta * rho), -inside_factor_ * zeta * bessel_j(l + 1, zeta * rho)};
    }
    const double x = xi * rho;
    const double common = state_.kappa.log_abs - x;
    const double s = state_.kappa.sign;
    return {s * exp_or_zero(common + std::log(bessel_k_scaled(l, x))),
            -s * outside_factor_ * xi * exp_or_zero(common + std::log(bessel_k_scaled(l + 1, x)))};
}

SpinorSample BoundStateField::spinor(double rho, double phi) const
{
    const auto [upper, lower] = radial(rho);
    const int l = state_.azimuthal_l;
    SpinorSample out;
    out.rho = rho;
    out.phi = phi;
    out.psi(0) = std::polar(amplitude_scale_ * upper, l * phi);
    out.psi(1) = 0.0;
    out.psi(2) = 0.0;
    out.psi(3) = I * std::polar(amplitude_scale_ * lower, (l + 1) * phi);
    return out;
}

double BoundStateField::charge_unit() const
{
    if (normalization_ == Normalization::raw) return 1.0;
    return constants_.elementary_charge * units::per_nm3_to_per_m3(1.0);
}

double BoundStateField::current_unit() const
{
    if (normalization_ == Normalization::raw) return 1.0;
    return constants_.elementary_charge * constants_.speed_of_light * units::per_nm3_to_per_m3(1.0);
}

FieldSample BoundStateField::field(double rho, double phi) const
{
    const SpinorSample s = spinor(rho, phi);
    const Spinor& psi = s.psi;
    FieldSample f;
    f.rho = rho;
    f.phi = phi;
    // electron charge is -e
    const double jc = -current_unit();
    f.current[0] = jc * psi.dot(alpha_rho(phi) * psi).real();
    f.current[1] = jc * psi.dot(alpha_phi(phi) * psi).real();
    f.current[2] = jc * psi.dot(alpha_z() * psi).real();
    f.charge_density = -charge_unit() * psi.squaredNorm();
    return f;
}

double BoundStateField::charge_density(double rho) const
{
    const auto [upper, lower] = radial(rho);
    const double a2 = amplitude_scale_ * amplitude_scale_;
    return -charge_unit() * a2 * (upper * upper + lower * lower);
}

double BoundStateField::closed_form_j_phi(double rho) const
{
    if (!(rho >= 0.0)) throw std::domain_error("radial coordinate must be >= 0");
    const int l = state_.azimuthal_l;
    const auto [zeta, xi] = state_.wave_numbers;
    const double c = 2.0 * amplitude_scale_ * amplitude_scale_ * current_unit();
    if (rho <= config_.radius_nm) {
        return c * inside_factor_ * zeta * bessel_j(l, zeta * rho) * bessel_j(l + 1, zeta * rho);
    }
    const double x = xi * rho;
    const double log_product = 2.0 * (state_.kappa.log_abs - x) + std::log(bessel_k_scaled(l, x))
        + std::log(bessel_k_scaled(l + 1, x));
    return c * outside_factor_ * xi * exp_or_zero(log_product);
}

SpinorSample evaluate_spinor(const EigenState& state, const WellConfig& config, double rho, double phi,
                             const PhysicalConstants& c)
{
    return BoundStateField(state, config, c).spinor(rho, phi);
}

FieldSample current_density(const EigenState& state, const WellConfig& config, double rho, double phi,
                            const PhysicalConstants& c)
{
    return BoundStateField(state, config, c).field(rho, phi);
}

double charge_density(const EigenState& state, const WellConfig& config, double rho, const PhysicalConstants& c)
{
    return BoundStateField(state, config, c).charge_density(rho);
}

NormalizationIntegral normalization_integral(const EigenState& state, const WellConfig& config,
                                             const PhysicalConstants& c, const NormalizationOptions& options)
{
    using Quadrature = boost::math::quadrature::gauss_kronrod<double, 61>;
    const BoundStateField field(state, config, c);
    const double r = field.config().radius_nm;
    const double xi = state.wave_numbers.xi;
    auto density = [&](double rho) {
        const auto [upper, lower] = field.radial(rho);
        return (upper * upper + lower * lower) * rho;
    };
    auto integrate = [&](double a, double b) {
        double error = 0.0;
        const double value = Quadrature::integrate(density, a, b, 20, options.tolerance, &error);
        if (!std::isfinite(value) || error > 1e-8 * std::abs(value))
            throw std::runtime_error("normalization quadrature did not converge on [" + std::to_string(a) + ", "
                                     + std::to_string(b) + "] nm");
        return value;
    };

    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double cutoff = r + options.cutoff_decay_lengths / xi;
    NormalizationIntegral out;
    out.inside = two_pi * integrate(0.0, r);
    // the density behaves like e^{-2 xi rho} beyond the cutoff
    out.tail = two_pi * density(cutoff) / (2.0 * xi);
    out.outside = two_pi * integrate(r, cutoff) + out.tail;
    return out;
}

} // namespace diracwell
