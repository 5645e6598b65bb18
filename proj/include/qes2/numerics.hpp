#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>
#include <utility>

#include "qes2/errors.hpp"

namespace qes2 {

// Lanczos approximation (g = 7, 9 coefficients), reflection formula for
// arguments below 1/2. Relative error ~1e-14 over the real line away from
// the poles.
double gamma_fn(double x);

namespace num {

// Adaptive Simpson quadrature of f over [a, b].
//
// Refinement stops when the Richardson estimate |S2 - S1|/15 of a panel
// drops below its share of max(abs_tol, rel_tol*|whole|), or at max_depth.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol = 1e-14,
                        double rel_tol = 1e-13, int max_depth = 60) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double eps = std::max(abs_tol, rel_tol * std::abs(whole));

    struct Rec {
        const std::remove_reference_t<F>& g;
        double run(double lo, double hi, double flo, double fmid, double fhi,
                   double s, double tol, int depth) const {
            const double mid = 0.5 * (lo + hi);
            const double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
            const double flm = g(lm), frm = g(rm);
            const double sl = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
            const double sr = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
            const double s2 = sl + sr;
            // Second disjunct: the panel has hit the rounding floor of the
            // integrand; refining further only chases noise.
            if (depth <= 0 || std::abs(s2 - s) <= 15.0 * tol ||
                std::abs(s2 - s) <= 4e-16 * (std::abs(sl) + std::abs(sr)))
                return s2 + (s2 - s) / 15.0;
            return run(lo, mid, flo, flm, fmid, sl, 0.5 * tol, depth - 1) +
                   run(mid, hi, fmid, frm, fhi, sr, 0.5 * tol, depth - 1);
        }
    };
    Rec rec{f};
    return rec.run(a, b, fa, fm, fb, whole, eps, max_depth);
}

// Brent's method on [a, b]; requires f(a)*f(b) <= 0.
template <class F>
double brent_root(F&& f, double a, double b, double xtol, int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw Error("brent_root: endpoints do not bracket a root");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 0; it < max_iter; ++it) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // inverse quadratic / secant step
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
    }
    return b;
}

// Golden-section minimisation on [a, b]; assumes a single interior minimum.
// Returns (argmin, min).
template <class F>
std::pair<double, double> golden_min(F&& f, double a, double b, double xtol,
                                     int max_iter = 400) {
    constexpr double invphi = 0.6180339887498948482;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 < f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

// Five-point central difference for d/dx.
template <class F>
double fd_derivative(F&& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

} // namespace num
} // namespace qes2
