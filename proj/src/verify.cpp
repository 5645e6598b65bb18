#include "qes2/verify.hpp"

#include <cmath>
#include <numbers>

#include "qes2/numerics.hpp"
#include "qes2/prolongation.hpp"

namespace qes2 {
namespace {

constexpr double kPi = std::numbers::pi;

double max3(double a, double b, double c) { return std::max(a, std::max(b, c)); }

} // namespace

std::vector<double> chebyshev_grid(double x1, double x2, int n) {
    std::vector<double> xs(n);
    const double mid = 0.5 * (x1 + x2), half = 0.5 * (x2 - x1);
    for (int k = 0; k < n; ++k)
        xs[k] = mid + half * std::cos(kPi * (2.0 * k + 1.0) / (2.0 * n));
    return xs;
}

ResidualReport run_verification(const SphereSolution& sol, int grid_n,
                                double tol_scale) {
    ResidualReport rep;
    const auto add = [&](const std::string& name, double max_res, int n, double tol) {
        tol *= tol_scale;
        rep[name] = CheckResult{max_res, n, tol, max_res <= tol};
    };

    const double m = sol.params.m, lam = sol.params.lambda;
    const std::vector<double> grid = chebyshev_grid(sol.roots.x1, sol.roots.x2, grid_n);
    const double width = sol.roots.x2 - sol.roots.x1;

    // quasi-Einstein tensor equation
    double qe_max = 0.0;
    for (double x : grid) {
        const Sym2 e = qe_residual(sol, x);
        const double scale = 1.0 + std::abs(sol.profile.B2_direct(x));
        qe_max = std::max(qe_max, max3(std::abs(e.xx), std::abs(e.xp), std::abs(e.pp)) / scale);
    }
    add("quasi_einstein", qe_max, grid_n, 1e-8);

    // governing ODE, both derivative routes
    double ode_max = 0.0;
    for (double x : grid) {
        const double scale = 1.0 + std::abs(sol.profile.B2_direct(x));
        ode_max = std::max(ode_max, std::abs(sol.profile.ode_residual(x)) / scale);
    }
    add("ode", ode_max, grid_n, 1e-8);

    // first-order identity (skip the axis where it is singular)
    double fo_max = 0.0;
    int fo_n = 0;
    for (double x : grid) {
        if (std::abs(x) < 1e-3 * width) continue;
        const double rhs = -std::pow(1.0 + x * x, 0.5 * m) *
                           (sol.profile.alpha() + lam * x * x) / (x * x);
        const double scale = std::max(1.0, std::abs(rhs));
        fo_max = std::max(fo_max, std::abs(sol.profile.first_order_residual(x)) / scale);
        ++fo_n;
    }
    add("first_order", fo_max, fo_n, 1e-6);

    // Kahler potential PDE (defined away from the poles)
    double ka_max = 0.0;
    int ka_n = 0;
    for (double x : grid) {
        if (std::min(x - sol.roots.x1, sol.roots.x2 - x) < 1.0001e-3 * width) continue;
        const KahlerResult k = kahler_residual(sol, x);
        ka_max = std::max(ka_max, k.lhs / k.scale);
        ++ka_n;
    }
    add("kahler", ka_max, ka_n, 1e-6);

    // prolongation system
    double p1_max = 0.0, p2_max = 0.0, s1_max = 0.0, om_max = 0.0;
    for (double x : grid) {
        const double B = sol.profile.B(x);
        const double R = -sol.profile.B2(x);
        const double dR = -sol.profile.B3(x);
        const double Xx = drift_x(m, x), Xp = drift_p(m, B, x);
        const double om = omega(sol, x);

        const Mat2 p1 = pqe1_residual(sol, x);
        const double p1_scale =
            1.0 + max3(std::abs(lam - 0.5 * R) * std::max(1.0 / B, B),
                       std::abs(Xx * Xx / m) + std::abs(Xp * Xp / m), 0.5 * std::abs(om));
        p1_max = std::max(p1_max,
                          std::max(max3(std::abs(p1.xx), std::abs(p1.xp), std::abs(p1.px)),
                                   std::abs(p1.pp)) /
                              p1_scale);

        const OneForm p2 = pqe2_residual(sol, x);
        const double coeff = (2.0 * lam - (m + 1.0) * R) / m;
        const double p2_scale =
            1.0 + max3(std::abs(B * dR), std::abs(coeff) * (std::abs(Xp) / B + B * std::abs(Xx)),
                       3.0 / std::abs(m) * std::abs(om) * (std::abs(Xx) + std::abs(Xp)));
        p2_max = std::max(p2_max, std::max(std::abs(p2.x), std::abs(p2.p)) / p2_scale);

        const double s1 = step1_residual(sol, x);
        const double lapR = sol.profile.B1(x) * dR + B * (-sol.profile.B4(x));
        const double Xnorm2 = m * m * B / (1.0 + x * x);
        const double s1_scale =
            1.0 + max3(std::abs(lapR), std::abs((1.0 + 4.0 / m) * B * Xx * dR),
                       std::abs(3.0 / m * om * om) +
                           std::abs((2.0 * lam - (m + 1.0) * R) *
                                    (2.0 * Xnorm2 - 2.0 * lam * m + m * R) / (m * m)));
        s1_max = std::max(s1_max, std::abs(s1) / s1_scale);

        // Omega against a five-point finite difference of the dphi component
        const double h = 1e-5 * std::max(1.0, std::abs(x));
        if (x - 2 * h > sol.roots.x1 && x + 2 * h < sol.roots.x2) {
            const double fd = num::fd_derivative(
                [&](double t) { return drift_p(m, sol.profile.B(t), t); }, x, h);
            om_max = std::max(om_max, std::abs(om - fd) / std::max(1.0, std::abs(om)));
        }
    }
    add("pqe1", p1_max, grid_n, 1e-8);
    add("pqe2", p2_max, grid_n, 1e-7);
    add("step1", s1_max, grid_n, 1e-6);
    add("omega_fd", om_max, grid_n, 1e-7);

    // global identities
    const auto [chi_exact, chi_quad] = gauss_bonnet(sol);
    add("gauss_bonnet_exact", std::abs(chi_exact - 2.0), 1, 1e-9);
    add("gauss_bonnet_quadrature", std::abs(chi_quad - 2.0), 1, 1e-6);
    add("x_norm_integral", std::abs(x_norm_constraint(sol) - 8.0 * kPi), 1, 1e-6);
    add("conical_north", std::abs(conical_check(sol, Pole::North) - 1.0), 1, 1e-5);
    add("conical_south", std::abs(conical_check(sol, Pole::South) - 1.0), 1, 1e-5);

    double ki_max = 0.0;
    for (double x : grid) ki_max = std::max(ki_max, killing_identity_residual(sol, x));
    add("killing_identity", ki_max, grid_n, 1e-12);

    return rep;
}

bool all_pass(const ResidualReport& report) {
    for (const auto& [name, r] : report)
        if (!r.pass) return false;
    return true;
}

} // namespace qes2
