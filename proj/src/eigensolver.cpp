#include "diracwell/eigensolver.hpp"

#include "diracwell/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace diracwell {

namespace {

std::string bracket_message(const char* what, double lo, double hi)
{
    std::ostringstream os;
    os.precision(17);
    os << what << " in kinetic-energy bracket [" << lo << ", " << hi << "] eV";
    return os.str();
}

EigenState make_state(double kinetic, int n, const WellConfig& config, const PhysicalConstants& c)
{
    EigenState s;
    s.azimuthal_l = config.azimuthal_l;
    s.radial_n = n;
    s.kinetic_energy = kinetic;
    s.wave_numbers = wave_numbers(kinetic, config, c);
    s.kappa = ln_kappa(s, config, c);
    s.boundary_residual = matching_terms(kinetic, config, c).relative_residual();
    return s;
}

} // namespace

double MatchingTerms::relative_residual() const
{
    const double scale = std::abs(inside) + std::abs(outside);
    return scale > 0.0 ? std::abs(residual()) / scale : 0.0;
}

WaveNumbers wave_numbers(double kinetic_ev, const WellConfig& config, const PhysicalConstants& c)
{
    const double u = config.potential_ev;
    if (!(kinetic_ev > 0.0 && kinetic_ev < u))
        throw std::domain_error("kinetic energy " + std::to_string(kinetic_ev) + " eV outside the bound window (0, "
                                + std::to_string(u) + ") eV");
    const double mc2 = c.rest_energy;
    // E^2 - (mc^2)^2 and (mc^2)^2 - (E-U)^2 factored to avoid cancellation
    const double zeta2 = kinetic_ev * (kinetic_ev + 2.0 * mc2);
    const double xi2 = (u - kinetic_ev) * (2.0 * mc2 + kinetic_ev - u);
    return {std::sqrt(zeta2) / c.hbar_c, std::sqrt(xi2) / c.hbar_c};
}

MatchingTerms matching_terms(double kinetic_ev, const WellConfig& config, const PhysicalConstants& c)
{
    const auto [zeta, xi] = wave_numbers(kinetic_ev, config, c);
    const int l = config.azimuthal_l;
    const double r = config.radius_nm;
    const double mc2 = c.rest_energy;
    const double ratio = (kinetic_ev - config.potential_ev + 2.0 * mc2) / (kinetic_ev + 2.0 * mc2);
    MatchingTerms t;
    t.inside = xi * bessel_j(l, zeta * r) * bessel_k_scaled(l + 1, xi * r);
    t.outside = ratio * zeta * bessel_k_scaled(l, xi * r) * bessel_j(l + 1, zeta * r);
    return t;
}

double boundary_residual(double kinetic_ev, const WellConfig& config, const PhysicalConstants& c)
{
    return matching_terms(kinetic_ev, config, c).residual();
}

SignedLog ln_kappa(const EigenState& state, const WellConfig& config, const PhysicalConstants&)
{
    const double r = config.radius_nm;
    const auto [zeta, xi] = state.wave_numbers;
    const double j = bessel_j(state.azimuthal_l, zeta * r);
    SignedLog out;
    out.sign = j < 0.0 ? -1 : 1;
    // kappa = J_l(zeta R) / K_l(xi R) = J_l / (Kt_l e^{-xi R})
    out.log_abs = std::log(std::abs(j)) - std::log(bessel_k_scaled(state.azimuthal_l, xi * r)) + xi * r;
    return out;
}

int scan_resolution(const WellConfig& config, const PhysicalConstants& c, const SolverOptions& options)
{
    // roots are spaced roughly pi/R apart in zeta; keep >= 20 samples per gap
    const double zeta_max = std::sqrt(config.potential_ev * (config.potential_ev + 2.0 * c.rest_energy)) / c.hbar_c;
    const double gaps = zeta_max * config.radius_nm / std::numbers::pi;
    return std::max(options.scan_points, static_cast<int>(20.0 * gaps) + 2);
}

std::vector<EigenState> find_eigenstates(const WellConfig& raw, int max_states, const PhysicalConstants& c,
                                         const SolverOptions& options)
{
    const WellConfig config = to_internal(raw, c);
    std::vector<EigenState> states;
    if (max_states <= 0) return states;

    const double u = config.potential_ev;
    const double guard = options.guard_fraction * u;
    const double span = u - 2.0 * guard;
    const int points = scan_resolution(config, c, options);

    // quadratic spacing: uniform in zeta near the bottom of the window
    auto grid = [&](int i) {
        const double s = static_cast<double>(i) / (points - 1);
        return guard + span * s * s;
    };
    auto residual = [&](double e) {
        const double d = boundary_residual(e, config, c);
        if (!std::isfinite(d)) throw SolverError(bracket_message("non-finite matching residual", e, e), e, e);
        return d;
    };

    double e_prev = grid(0);
    double d_prev = residual(e_prev);
    for (int i = 1; i < points && static_cast<int>(states.size()) < max_states; ++i) {
        const double e = grid(i);
        const double d = residual(e);
        if (d_prev == 0.0) {
            states.push_back(make_state(e_prev, static_cast<int>(states.size()) + 1, config, c));
        } else if ((d_prev < 0.0) != (d < 0.0) && d != 0.0) {
            double lo = e_prev, hi = e, d_lo = d_prev;
            int iterations = 0;
            while (hi - lo > options.relative_tolerance * hi) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                const double d_mid = residual(mid);
                if (d_mid == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((d_mid < 0.0) == (d_lo < 0.0)) {
                    lo = mid;
                    d_lo = d_mid;
                } else {
                    hi = mid;
                }
                if (++iterations > 400) throw SolverError(bracket_message("bisection did not converge", lo, hi), lo, hi);
            }
            states.push_back(make_state(0.5 * (lo + hi), static_cast<int>(states.size()) + 1, config, c));
        }
        e_prev = e;
        d_prev = d;
    }
    return states;
}

double skin_depth(const EigenState& state)
{
    return 1.0 / state.wave_numbers.xi;
}

} // namespace diracwell
