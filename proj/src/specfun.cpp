#include "qes2/specfun.hpp"

#include <cmath>
#include <numbers>

#include "qes2/numerics.hpp"

namespace qes2 {
namespace {

void require_m_nonzero(double m) {
    if (m == 0.0) throw InvalidParameter("m must be nonzero");
}

constexpr double kSeriesCut = 0.5;

} // namespace

namespace detail {

double f_integrand(double m, double y) {
    // ((y^2+1)^(m/2) - 1)/y^2 -> m/2 as y -> 0. The naive form loses all
    // digits to cancellation for small y; expm1/log1p keeps it exact down
    // to the Taylor switchover.
    const double y2 = y * y;
    if (std::abs(y) < 1e-3) {
        // m/2 + m(m-2)/8 y^2 + m(m-2)(m-4)/48 y^4
        const double c0 = 0.5 * m;
        const double c1 = m * (m - 2.0) / 8.0;
        const double c2 = m * (m - 2.0) * (m - 4.0) / 48.0;
        return c0 + y2 * (c1 + y2 * c2);
    }
    return std::expm1(0.5 * m * std::log1p(y2)) / y2;
}

double hyp_f_series(double m, double x) {
    // 2F1(a, b; c; z) with a = -1/2, b = -m/2, c = 1/2, z = -x^2.
    const double z = -x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 500; ++k) {
        term *= (k - 1.5) * (k - 1.0 - 0.5 * m) / ((k - 0.5) * k) * z;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

double hyp_f_prime_series(double m, double x) {
    // d/dx sum_k t_k x^(2k) = sum_k 2k t_k x^(2k-1)
    if (x == 0.0) return 0.0;
    const double z = -x * x;
    double term = 1.0, sum = 0.0;
    for (int k = 1; k < 500; ++k) {
        term *= (k - 1.5) * (k - 1.0 - 0.5 * m) / ((k - 0.5) * k) * z;
        const double contrib = 2.0 * k * term / x;
        sum += contrib;
        if (std::abs(contrib) <= 1e-17 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

double hyp_f_integral(double m, double x) {
    const double ax = std::abs(x);
    const double integral = num::adaptive_simpson(
        [m](double y) { return f_integrand(m, y); }, 0.0, ax);
    return 1.0 - ax * integral;
}

} // namespace detail

double hyp_f(double m, double x) {
    require_m_nonzero(m);
    const double ax = std::abs(x);
    return ax <= kSeriesCut ? detail::hyp_f_series(m, ax)
                            : detail::hyp_f_integral(m, ax);
}

double hyp_f_prime(double m, double x) {
    return hyp_f_eval(m, x).f_prime;
}

FValue hyp_f_eval(double m, double x) {
    require_m_nonzero(m);
    const double ax = std::abs(x);
    double f, fp;
    if (ax <= kSeriesCut) {
        f = detail::hyp_f_series(m, ax);
        fp = detail::hyp_f_prime_series(m, ax);
    } else {
        f = detail::hyp_f_integral(m, ax);
        // F' = (F - (1+x^2)^(m/2)) / x, from d/dx(F/x) = -(1+x^2)^(m/2)/x^2
        fp = (f - std::pow(1.0 + ax * ax, 0.5 * m)) / ax;
    }
    if (x < 0.0) fp = -fp; // F even
    return {x, f, fp};
}

double f_positive_root(double m) {
    require_m_nonzero(m);
    if (m < 0.0)
        throw NoPositiveRoot("F is increasing for m < 0 and has no positive zero");

    // F(0) = 1 and F is strictly decreasing for x > 0; expand until the sign flips.
    double lo = 0.0, hi = 1.0;
    double fhi = hyp_f(m, hi);
    int guard = 0;
    while (fhi > 0.0) {
        lo = hi;
        hi *= 2.0;
        fhi = hyp_f(m, hi);
        if (++guard > 20)
            throw NoPositiveRoot("no sign change of F found up to 2^20");
    }
    return num::brent_root([m](double x) { return hyp_f(m, x); }, lo, hi, 1e-14);
}

double f_asymptotic_slope(double m) {
    require_m_nonzero(m);
    if (m >= 1.0)
        throw UnsupportedAsymptoticBranch(
            "F grows faster than linearly for m >= 1");
    return std::sqrt(std::numbers::pi) * gamma_fn(0.5 * (1.0 - m)) /
           gamma_fn(-0.5 * m);
}

} // namespace qes2
