#pragma once

// Integer-order Bessel kernels on the non-negative real axis.
//
// K is only available in exponentially scaled form, e^x K_n(x): the
// evanescent tail of a deep well samples K at arguments of a few hundred,
// where the unscaled value underflows.

namespace diracwell {

/// J_n(x), n >= 0, x >= 0. Throws std::domain_error for negative or
/// non-finite x and std::invalid_argument for negative n.
double bessel_j(int n, double x);

/// e^x K_n(x), n >= 0, x > 0. Throws std::domain_error for x <= 0.
double bessel_k_scaled(int n, double x);

/// ln K_n(x), computed without forming K_n(x) itself.
double log_bessel_k(int n, double x);

/// I_n(x), n >= 0, 0 <= x <= 700. Throws std::overflow_error above 700.
double bessel_i(int n, double x);

} // namespace diracwell
