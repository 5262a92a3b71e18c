#include "diracwell/limits.hpp"

#include "diracwell/bessel.hpp"
#include "diracwell/dirac_field.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>
#include <string>

namespace diracwell {

double bessel_j0_zero(int n)
{
    if (n < 1) throw std::invalid_argument("zero index must be >= 1");
    const double guess = (n - 0.25) * std::numbers::pi;
    double lo = guess - 0.5;
    double hi = guess + 0.5;
    double f_lo = bessel_j(0, lo);
    if ((f_lo < 0.0) == (bessel_j(0, hi) < 0.0))
        throw std::runtime_error("no sign change of J0 around zero " + std::to_string(n));
    for (;;) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) return mid;
        const double f_mid = bessel_j(0, mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
}

double infinite_well_zeta(const WellConfig& config, int n)
{
    if (config.azimuthal_l != 0) throw std::invalid_argument("infinite-well comparison is defined for l = 0 only");
    if (!(config.radius_nm > 0.0)) throw std::invalid_argument("well radius must be positive");
    return bessel_j0_zero(n) / config.radius_nm;
}

LimitReport convergence_report(double radius_nm, std::span<const double> potentials, const PhysicalConstants& c)
{
    if (potentials.empty()) throw std::invalid_argument("convergence report needs at least one potential");
    if (std::adjacent_find(potentials.begin(), potentials.end(), std::greater_equal<>()) != potentials.end())
        throw std::invalid_argument("potentials must be strictly ascending");

    struct Row {
        EigenState ground;
        double outside_fraction;
    };
    std::vector<std::future<Row>> jobs;
    jobs.reserve(potentials.size());
    for (double u : potentials) {
        jobs.push_back(std::async(std::launch::async, [=, &c] {
            const WellConfig config{radius_nm, u, 0};
            auto states = find_eigenstates(config, 1, c);
            if (states.empty())
                throw std::runtime_error("no bound state for U = " + std::to_string(u) + " eV");
            const double fraction = normalization_integral(states.front(), config, c).outside_fraction();
            return Row{states.front(), fraction};
        }));
    }

    LimitReport report;
    report.radius_nm = radius_nm;
    report.potentials.assign(potentials.begin(), potentials.end());
    report.zeta_infinite = infinite_well_zeta(WellConfig{radius_nm, potentials.front(), 0});
    for (auto& job : jobs) {
        Row row = job.get();
        report.zeta_ground.push_back(row.ground.wave_numbers.zeta);
        report.skin_depths.push_back(skin_depth(row.ground));
        report.outside_fractions.push_back(row.outside_fraction);
        report.ground_states.push_back(row.ground);
    }
    return report;
}

double infinite_well_profile_deviation(const EigenState& ground, const WellConfig& config, int samples)
{
    if (samples < 2) throw std::invalid_argument("profile comparison needs at least two samples");
    const double r = config.radius_nm;
    const double zeta_inf = infinite_well_zeta(config);
    const BoundStateField field(ground, config);
    const double peak = field.radial(0.0).upper;
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double rho = r * i / (samples - 1);
        worst = std::max(worst, std::abs(field.radial(rho).upper / peak - bessel_j(0, zeta_inf * rho)));
    }
    return worst;
}

} // namespace diracwell
