#include "bessel_oracle.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <stdexcept>

namespace oracle {

namespace {

using boost::multiprecision::mpfr_float;

unsigned digits_for(double x)
{
    // largest series term is ~ e^x, the result ~ 1/sqrt(x)
    return static_cast<unsigned>(40.0 + 0.4343 * x);
}

mpfr_float series(int n, double x, int sign)
{
    const mpfr_float half = mpfr_float(x) / 2;
    mpfr_float term = 1;
    for (int k = 1; k <= n; ++k) term *= half / k;
    const mpfr_float q = sign * half * half;
    mpfr_float sum = term;
    const mpfr_float tiny = pow(mpfr_float(10), -static_cast<int>(mpfr_float::default_precision()) + 5);
    for (int k = 1;; ++k) {
        term *= q / (mpfr_float(k) * (k + n));
        sum += term;
        if (k > x && abs(term) <= tiny * abs(sum)) break;
        if (k > 100000) throw std::runtime_error("oracle series did not converge");
    }
    return sum;
}

} // namespace

double bessel_j(int n, double x)
{
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    mpfr_float::default_precision(digits_for(x));
    return series(n, x, -1).convert_to<double>();
}

double bessel_i(int n, double x)
{
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    mpfr_float::default_precision(40);
    return series(n, x, 1).convert_to<double>();
}

double bessel_k_scaled(int n, double x)
{
    using real = long double;
    const real xl = x;
    auto integrand = [&](real t) {
        const real sh = std::sinh(t / 2);
        return std::exp(-2 * xl * sh * sh) * std::cosh(n * t);
    };
    auto log_integrand = [&](real t) {
        const real sh = std::sinh(t / 2);
        return -2 * xl * sh * sh + n * t;
    };
    real upper = 0.25L;
    while (log_integrand(upper) > -75.0L) upper += 0.25L;

    int panels = 64;
    real h = upper / panels;
    real sum = integrand(0) / 2 + integrand(upper) / 2;
    for (int i = 1; i < panels; ++i) sum += integrand(i * h);
    real estimate = h * sum;
    for (int level = 0; level < 24; ++level) {
        real mids = 0;
        for (int i = 0; i < panels; ++i) mids += integrand((i + 0.5L) * h);
        sum += mids;
        panels *= 2;
        h /= 2;
        const real refined = h * sum;
        const real change = std::fabs(refined - estimate);
        estimate = refined;
        if (level >= 3 && change <= 1e-18L * std::fabs(estimate)) return static_cast<double>(estimate);
    }
    throw std::runtime_error("oracle K quadrature did not converge");
}

double bessel_j_zero(int n, int k)
{
    // walk sign changes of the oracle on a fine grid, then bisect
    const double step = 0.05;
    double a = n > 0 ? 0.5 * n : step;
    double fa = bessel_j(n, a);
    int found = 0;
    for (;;) {
        const double b = a + step;
        const double fb = bessel_j(n, b);
        if ((fa < 0) != (fb < 0) && ++found == k) {
            double lo = a, hi = b, flo = fa;
            while (true) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) return mid;
                const double fm = bessel_j(n, mid);
                if ((fm < 0) == (flo < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
        }
        a = b;
        fa = fb;
    }
}

} // namespace oracle
