#include "diracwell/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace diracwell {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Above this argument J0/J1 come from the Hankel expansion, whose smallest
// term is of order e^{-2x}.
constexpr double kJAsymptoticMin = 25.0;
constexpr double kJSeriesMax = 2.0;
constexpr double kISeriesMax = 30.0;
constexpr double kIOverflow = 700.0;
constexpr double kKSeriesMax = 2.0;

void check_order(int n, const char* who)
{
    if (n < 0)
        throw std::invalid_argument(std::string(who) + ": negative order " + std::to_string(n));
}

// sum_k (-x^2/4)^k / (k! (k+n)!) scaled by (x/2)^n; sign = -1 gives J, +1 gives I.
double power_series(int n, double x, double sign)
{
    const double half = 0.5 * x;
    double term = 1.0;
    for (int k = 1; k <= n; ++k) term *= half / k;
    if (term == 0.0) return 0.0;
    const double q = sign * half * half;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<double>(k) * (k + n));
        sum += term;
        if (std::abs(term) < 0.25 * kEps * std::abs(sum)) break;
    }
    return sum;
}

// Hankel expansion coefficients: P and Q for order nu at argument x.
std::pair<double, double> hankel_pq(int nu, double x)
{
    const double mu = 4.0 * nu * nu;
    double p = 1.0, q = 0.0;
    double term = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (8.0 * k * x);
        const double mag = std::abs(term);
        if (mag > last) break; // asymptotic series started to diverge
        last = mag;
        // k = 1,2,3,4,... contributes +Q, -P, -Q, +P, ...
        switch (k % 4) {
        case 1: q += term; break;
        case 2: p -= term; break;
        case 3: q -= term; break;
        case 0: p += term; break;
        }
        if (mag < 0.25 * kEps) break;
    }
    return {p, q};
}

// J0 and J1 for x >= kJAsymptoticMin.
std::pair<double, double> j01_asymptotic(double x)
{
    const double c = std::cos(x);
    const double s = std::sin(x);
    const double amp = 1.0 / std::sqrt(std::numbers::pi * x); // sqrt(2/(pi x)) / sqrt(2)
    auto [p0, q0] = hankel_pq(0, x);
    auto [p1, q1] = hankel_pq(1, x);
    // chi0 = x - pi/4, chi1 = x - 3pi/4, expanded so no pi rounding enters.
    const double j0 = amp * (p0 * (c + s) - q0 * (s - c));
    const double j1 = amp * (p1 * (s - c) + q1 * (s + c));
    return {j0, j1};
}

// Miller's backward recurrence, normalised by J0 + 2 sum J_2k = 1.
double j_miller(int n, double x)
{
    const double top = std::max(static_cast<double>(n), std::ceil(x));
    int start = static_cast<int>(top + 30.0 + std::sqrt(80.0 * top));
    start += start % 2;

    constexpr double big = 1e200;
    const double two_over_x = 2.0 / x;
    double next = 0.0; // J_{k+1}
    double cur = 1e-30; // J_k, arbitrary seed
    double result = 0.0;
    double even_sum = 0.0;
    for (int k = start; k > 0; --k) {
        const double prev = k * two_over_x * cur - next;
        next = cur;
        cur = prev; // now holds J_{k-1}
        if (std::abs(cur) > big) {
            cur /= big;
            next /= big;
            result /= big;
            even_sum /= big;
        }
        if ((k - 1) % 2 == 0 && k - 1 > 0) even_sum += cur;
        if (k - 1 == n) result = cur;
    }
    return result / (2.0 * even_sum + cur);
}

// e^x K0(x), e^x K1(x) for 0 < x <= 2 from the logarithmic series.
std::pair<double, double> k01_series(double x)
{
    constexpr double euler = std::numbers::egamma;
    const double q = 0.25 * x * x;
    const double log_half = std::log(0.5 * x);

    double i0 = 1.0, i1 = 0.5 * x;
    double s0 = 0.0;              // sum_k>=1 q^k/(k!)^2 H_k
    double s1 = 1.0 - 2.0 * euler; // sum_k>=0 (psi(k+1)+psi(k+2)) q^k/(k!(k+1)!)
    double t0 = 1.0;              // q^k/(k!)^2
    double t1 = 1.0;              // q^k/(k!(k+1)!)
    double harmonic = 0.0;        // H_k
    for (int k = 1; k < 200; ++k) {
        t0 *= q / (static_cast<double>(k) * k);
        t1 *= q / (static_cast<double>(k) * (k + 1));
        harmonic += 1.0 / k;
        i0 += t0;
        i1 += 0.5 * x * t1;
        s0 += t0 * harmonic;
        // psi(k+1) + psi(k+2) = -2 gamma + H_k + H_{k+1}
        s1 += t1 * (-2.0 * euler + harmonic + harmonic + 1.0 / (k + 1));
        if (t0 * harmonic < 0.25 * kEps * std::abs(s0) && t1 < 0.25 * kEps) break;
    }
    const double k0 = -(log_half + euler) * i0 + s0;
    const double k1 = 1.0 / x + log_half * i1 - 0.25 * x * s1;
    const double scale = std::exp(x);
    return {k0 * scale, k1 * scale};
}

// e^x K0(x), e^x K1(x) for x > 2 from Steed's continued fraction (Temme's
// normalisation), order zero.
std::pair<double, double> k01_continued_fraction(double x)
{
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= 100000; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < 0.5 * kEps) break;
    }
    if (i > 100000)
        throw std::runtime_error("bessel_k_scaled: continued fraction did not converge at x = " + std::to_string(x));
    h *= a1;
    const double k0 = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
    const double k1 = k0 * (x + 0.5 - h) / x;
    return {k0, k1};
}

} // namespace

double bessel_j(int n, double x)
{
    check_order(n, "bessel_j");
    if (!std::isfinite(x) || x < 0.0)
        throw std::domain_error("bessel_j: argument must be finite and >= 0, got " + std::to_string(x));
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (x <= kJSeriesMax) return power_series(n, x, -1.0);
    if (x < kJAsymptoticMin || n > x) return j_miller(n, x);

    auto [jm, j] = j01_asymptotic(x);
    if (n == 0) return jm;
    for (int k = 1; k < n; ++k) {
        const double jp = 2.0 * k / x * j - jm;
        jm = j;
        j = jp;
    }
    return j;
}

double bessel_k_scaled(int n, double x)
{
    check_order(n, "bessel_k_scaled");
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("bessel_k_scaled: argument must be finite and > 0, got " + std::to_string(x));
    auto [km, k] = x <= kKSeriesMax ? k01_series(x) : k01_continued_fraction(x);
    if (n == 0) return km;
    for (int m = 1; m < n; ++m) {
        const double kp = km + 2.0 * m / x * k;
        km = k;
        k = kp;
    }
    return k;
}

double log_bessel_k(int n, double x)
{
    return std::log(bessel_k_scaled(n, x)) - x;
}

double bessel_i(int n, double x)
{
    check_order(n, "bessel_i");
    if (!std::isfinite(x) || x < 0.0)
        throw std::domain_error("bessel_i: argument must be finite and >= 0, got " + std::to_string(x));
    if (x > kIOverflow)
        throw std::overflow_error("bessel_i: argument " + std::to_string(x) + " exceeds " + std::to_string(kIOverflow));
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (x <= kISeriesMax || static_cast<double>(n) * n > x) return power_series(n, x, 1.0);

    // e^x / sqrt(2 pi x) * sum_k (-1)^k a_k(n) / x^k
    const double mu = 4.0 * n * n;
    double sum = 1.0;
    double term = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (8.0 * k * x);
        const double mag = std::abs(term);
        if (mag > last) break;
        last = mag;
        sum += term;
        if (mag < 0.25 * kEps * std::abs(sum)) break;
    }
    // split the exponential so the intermediate stays finite up to x = 700
    const double half = std::exp(0.5 * x);
    return half * (half * sum / std::sqrt(2.0 * std::numbers::pi * x));
}

} // namespace diracwell
