#include "qes2/numerics.hpp"

#include <cmath>
#include <numbers>

namespace qes2 {

double gamma_fn(double x) {
    // Classic g=7, n=9 coefficient set.
    static const double coef[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,     -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,   9.9843695780195716e-6,  1.5056327351493116e-7};
    constexpr double pi = std::numbers::pi;

    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
    }
    x -= 1.0;
    double acc = coef[0];
    for (int i = 1; i < 9; ++i) acc += coef[i] / (x + i);
    const double t = x + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

} // namespace qes2
