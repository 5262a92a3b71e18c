// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "bessel_oracle.hpp"
#include "commands.hpp"
#include "diracwell/bessel.hpp"
#include "diracwell/dirac_field.hpp"
#include "diracwell/limits.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace diracwell;

namespace {

constexpr double kRadius = 10.0;
const std::vector<double> kPotentials = {0.01, 0.1, 1.0, 10.0};

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail)
{
    std::printf("%s %d %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
    if (!pass) ++failures;
}

double rel(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

EigenState ground(double u)
{
    return find_eigenstates(WellConfig{kRadius, u, 0}, 1).front();
}

void table1()
{
    const double energy[] = {1.53, 1.95, 2.12, 2.18};
    const double zeta[] = {2.00e8, 2.26e8, 2.36e8, 2.39e8};
    const double xi[] = {4.71e8, 1.60e9, 5.12e9, 1.62e10};
    const double log10_kappa[] = {1.644, 6.348, 21.365, 69.243};

    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    double worst_e = 0, worst_zeta = 0, worst_xi = 0, worst_k = 0;
    for (int i = 0; i < 4; ++i) {
        const auto s = ground(kPotentials[i]);
        const double de = std::abs(s.kinetic_energy_mev() - energy[i]);
        const double dz = rel(units::per_nm_to_per_m(s.wave_numbers.zeta), zeta[i]);
        const double dx = rel(units::per_nm_to_per_m(s.wave_numbers.xi), xi[i]);
        const double dk = std::abs(s.kappa.log_abs / std::numbers::ln10 - log10_kappa[i]);
        pass = pass && de <= 0.01 && dz <= 0.01 && dx <= 0.01 && dk <= 0.11 && s.kappa.sign > 0;
        worst_e = std::max(worst_e, de);
        worst_zeta = std::max(worst_zeta, dz);
        worst_xi = std::max(worst_xi, dx);
        worst_k = std::max(worst_k, dk);
    }

    // the CLI path end to end, output discarded
    const auto dir = std::filesystem::temp_directory_path() / "diracwell-acceptance";
    std::filesystem::create_directories(dir);
    setenv("DIRACWELL_OUTPUT_DIR", dir.c_str(), 1);
    std::ostringstream out, err;
    const int code = cli::run_cli({"table1"}, out, err);
    std::filesystem::remove_all(dir);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    pass = pass && code == 0 && seconds < 10.0;

    report(1, "reference ground-state table", pass,
           "max |dE| " + fmt("%.2e", worst_e) + " meV, max rel dzeta " + fmt("%.2e", worst_zeta) + ", max rel dxi "
               + fmt("%.2e", worst_xi) + ", max |dlog10 kappa| " + fmt("%.3f", worst_k) + ", cli exit "
               + std::to_string(code) + ", " + fmt("%.3f", seconds) + " s");
}

void state_count()
{
    const auto states = find_eigenstates(WellConfig{kRadius, 0.01, 0}, 100);
    bool pass = states.size() == 2;
    std::string detail = std::to_string(states.size()) + " states";
    for (const auto& s : states) detail += ", " + fmt("%.4f", s.kinetic_energy_mev()) + " meV";
    if (pass) {
        pass = std::abs(states[0].kinetic_energy_mev() - 1.53) <= 0.01
            && std::abs(states[1].kinetic_energy_mev() - 7.63) <= 0.01;
    }
    report(2, "state count and excited state", pass, detail + " (expected 2 states, second 7.63 +- 0.01 meV)");
}

void infinite_well()
{
    const WellConfig config{kRadius, 10.0, 0};
    const double zeta_inf = units::per_nm_to_per_m(infinite_well_zeta(config));
    const double zeta_deep = units::per_nm_to_per_m(ground(10.0).wave_numbers.zeta);
    const bool three_figures = std::abs(zeta_inf - 2.40e8) < 0.005e8;
    const double gap = rel(zeta_deep, zeta_inf);
    report(3, "infinite-well limit", three_figures && gap <= 0.005,
           "zeta_inf " + fmt("%.6e", zeta_inf) + " /m, zeta(10 eV) " + fmt("%.6e", zeta_deep) + " /m, gap "
               + fmt("%.3f", 100 * gap) + "% (limit 0.5%); gap to the rounded 2.40e8 is "
               + fmt("%.3f", 100 * rel(zeta_deep, 2.40e8)) + "%");
}

void continuity()
{
    double worst = 0;
    for (double u : kPotentials) {
        const WellConfig config{kRadius, u, 0};
        const BoundStateField f(ground(u), config);
        const double r = kRadius;
        const double rp = std::nextafter(r, 2 * r);
        const auto in = f.spinor(r, 0.4);
        const auto out = f.spinor(rp, 0.4);
        worst = std::max(worst, std::abs(out.psi(0) - in.psi(0)) / std::abs(in.psi(0)));
        worst = std::max(worst, std::abs(out.psi(3) - in.psi(3)) / std::abs(in.psi(3)));
        worst = std::max(worst, rel(f.field(rp, 0.4).j_phi(), f.field(r, 0.4).j_phi()));
        worst = std::max(worst, rel(f.charge_density(rp), f.charge_density(r)));
    }
    report(4, "continuity at rho = R", worst < 1e-10, "max relative mismatch " + fmt("%.2e", worst));
}

void current_structure()
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> phi(0.0, 2 * std::numbers::pi);
    double worst_ratio = 0, worst_closed = 0;
    for (double u : kPotentials) {
        const WellConfig config{kRadius, u, 0};
        const auto s = ground(u);
        const BoundStateField f(s, config);
        std::uniform_real_distribution<double> rho(0.0, kRadius + 10.0 / s.wave_numbers.xi);
        std::vector<FieldSample> samples;
        double max_phi = 0;
        for (int i = 0; i < 1000; ++i) {
            samples.push_back(f.field(rho(rng), phi(rng)));
            max_phi = std::max(max_phi, std::abs(samples.back().j_phi()));
        }
        for (const auto& x : samples) {
            worst_ratio = std::max({worst_ratio, std::abs(x.j_rho()) / max_phi, std::abs(x.j_z()) / max_phi});
            const double closed = f.closed_form_j_phi(x.rho);
            if (closed != 0.0) worst_closed = std::max(worst_closed, rel(x.j_phi(), closed));
        }
    }
    report(5, "current structure", worst_ratio < 1e-15 && worst_closed < 1e-10,
           "max |j_rho|,|j_z| / max|j_phi| " + fmt("%.2e", worst_ratio) + ", bilinear vs closed form "
               + fmt("%.2e", worst_closed));
}

void special_functions()
{
    double worst = 0;
    for (int l = 0; l <= 5; ++l) {
        for (int i = 0; i < 200; ++i) {
            const double t = i / 199.0;
            const double xj = 1e-6 * std::pow(1e9, t);  // up to 1e3
            const double xi = 1e-6 * std::pow(7e8, t);  // up to 700
            worst = std::max(worst, rel(bessel_j(l, xj), oracle::bessel_j(l, xj)));
            worst = std::max(worst, rel(bessel_i(l, xi), oracle::bessel_i(l, xi)));
            worst = std::max(worst, rel(bessel_k_scaled(l, xj), oracle::bessel_k_scaled(l, xj)));
        }
    }

    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> arg(0.1, 30.0);
    double identity = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double x = arg(rng);
        const double e = std::exp(-x);
        for (int l = 0; l <= 5; ++l) {
            const double w = bessel_i(l, x) * bessel_k_scaled(l + 1, x) * e
                + bessel_i(l + 1, x) * bessel_k_scaled(l, x) * e;
            identity = std::max(identity, std::abs(x * w - 1.0));
            if (l > 0) {
                const double a = bessel_j(l - 1, x) + bessel_j(l + 1, x);
                const double b = 2.0 * l / x * bessel_j(l, x);
                const double scale = std::max({std::abs(bessel_j(l - 1, x)), std::abs(bessel_j(l + 1, x)),
                                               std::abs(b)});
                identity = std::max(identity, std::abs(a - b) / scale);
                const double k = bessel_k_scaled(l + 1, x) - bessel_k_scaled(l - 1, x);
                identity = std::max(identity, std::abs(k - 2.0 * l / x * bessel_k_scaled(l, x))
                                                  / bessel_k_scaled(l + 1, x));
            }
        }
    }
    report(6, "special functions", worst < 1e-12 && identity < 1e-11,
           "max oracle rel error " + fmt("%.2e", worst) + ", max identity residual " + fmt("%.2e", identity));
}

void physics()
{
    const double hc = codata2018.hbar_c, mc2 = codata2018.rest_energy;
    double nonrel = 0;
    for (double u : kPotentials) {
        const auto s = ground(u);
        const double z = s.wave_numbers.zeta;
        nonrel = std::max(nonrel, rel(s.kinetic_energy, hc * z * hc * z / (2 * mc2)));
    }
    const auto r = convergence_report(kRadius, kPotentials);
    bool skin = true, fraction = true;
    for (std::size_t i = 1; i < kPotentials.size(); ++i) {
        skin = skin && r.skin_depths[i] < r.skin_depths[i - 1];
        fraction = fraction && r.outside_fractions[i] < r.outside_fractions[i - 1];
    }
    const WellConfig deep{kRadius, 10.0, 0};
    const double profile = infinite_well_profile_deviation(r.ground_states.back(), deep);
    report(7, "physics cross-checks", nonrel < 1e-5 && skin && fraction && profile < 0.02,
           "non-relativistic rel " + fmt("%.2e", nonrel) + ", skin depth decreasing " + (skin ? "yes" : "no")
               + ", outside fraction decreasing " + (fraction ? "yes" : "no") + ", profile deviation "
               + fmt("%.4f", profile));
}

} // namespace

int main()
{
    table1();
    state_count();
    infinite_well();
    continuity();
    current_structure();
    special_functions();
    physics();
    std::printf("%d of 7 criteria failed\n", failures);
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
