#pragma once

#include "qes2/errors.hpp"

namespace qes2 {

// Value of the profile hypergeometric F(x) = 2F1(-1/2, -m/2; 1/2; -x^2)
// together with its first derivative.
struct FValue {
    double x;
    double f;
    double f_prime;
};

// F(x). Even in x by construction; F(0) = 1.
double hyp_f(double m, double x);

// F'(x) = F(x)/x - (1+x^2)^(m/2)/x for x != 0, and 0 at x = 0.
double hyp_f_prime(double m, double x);

// F and F' with a single evaluation of the expensive part.
FValue hyp_f_eval(double m, double x);

// The unique x0 > 0 with F(x0) = 0; exists only for m > 0.
double f_positive_root(double m);

// lim_{x->inf} F(x)/x = sqrt(pi) Gamma((1-m)/2) / Gamma(-m/2),
// valid for m < 0 and 0 < m < 1 (linear growth branch).
double f_asymptotic_slope(double m);

namespace detail {

// Power-series route, accurate for |x| <= ~0.7; terminates exactly for
// even positive integer m.
double hyp_f_series(double m, double x);
double hyp_f_prime_series(double m, double x);

// Integral route F(x) = 1 - x * int_0^x ((y^2+1)^(m/2) - 1)/y^2 dy,
// valid for all x.
double hyp_f_integral(double m, double x);

// Integrand of the representation above, with the removable singularity
// at y = 0 handled by a Taylor expansion.
double f_integrand(double m, double y);

} // namespace detail
} // namespace qes2
