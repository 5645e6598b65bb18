#include "qes2/prolongation.hpp"

#include <cmath>

namespace qes2 {
namespace {

double omega_of(double m, double x, double B, double B1) {
    const double u = 1.0 + x * x;
    return m * (B1 * u - 2.0 * x * B) / (u * u);
}

void require_interior(const SphereSolution& sol, double x) {
    if (!(x > sol.roots.x1 && x < sol.roots.x2))
        throw DomainError("evaluation point is at or beyond the chart's poles");
}

} // namespace

double omega(const SphereSolution& sol, double x) {
    // The formula stays finite at the poles themselves; allow the closed chart.
    if (!(x >= sol.roots.x1 && x <= sol.roots.x2))
        throw DomainError("evaluation point is beyond the chart's poles");
    return omega_of(sol.params.m, x, sol.profile.B(x), sol.profile.B1(x));
}

ProlongedState prolonged_state(const SphereSolution& sol, double x) {
    require_interior(sol, x);
    const double m = sol.params.m;
    const double B = sol.profile.B(x), B1 = sol.profile.B1(x);
    return {x,
            drift_x(m, x),
            drift_p(m, B, x),
            omega_of(m, x, B, B1),
            -sol.profile.B2(x),
            -sol.profile.B3(x)};
}

Mat2 pqe1_residual(const SphereSolution& sol, double x) {
    require_interior(sol, x);
    const double m = sol.params.m, lam = sol.params.lambda;
    const double u = 1.0 + x * x;
    const double B = sol.profile.B(x);
    const double B1 = sol.profile.B1(x);
    const double R = -sol.profile.B2(x);

    const Christoffels G = christoffels(B, B1);
    const double Xx = drift_x(m, x), Xp = drift_p(m, B, x);
    const double dXx = -m * (1.0 - x * x) / (u * u);
    const double dXp = omega_of(m, x, B, B1); // d/dx of Xp

    const double covxXx = dXx - G.x_xx * Xx;
    const double covxXp = dXp - G.p_xp * Xp;
    const double covpXx = -G.p_xp * Xp;
    const double covpXp = -G.x_pp * Xx;

    const double om = dXp;
    const double sxx = (lam - 0.5 * R) / B;
    const double spp = (lam - 0.5 * R) * B;

    return {covxXx - Xx * Xx / m - sxx,
            covxXp - Xx * Xp / m - 0.5 * om,
            covpXx - Xp * Xx / m + 0.5 * om,
            covpXp - Xp * Xp / m - spp};
}

OneForm pqe2_residual(const SphereSolution& sol, double x) {
    require_interior(sol, x);
    const double m = sol.params.m, lam = sol.params.lambda;
    const double u = 1.0 + x * x;
    const double B = sol.profile.B(x);
    const double B1 = sol.profile.B1(x);
    const double B2 = sol.profile.B2(x);
    const double R = -B2;
    const double dR = -sol.profile.B3(x);

    const double Xx = drift_x(m, x), Xp = drift_p(m, B, x);
    const double om = omega_of(m, x, B, B1);
    const double dom = m * ((B2 * u - 2.0 * B) * u - 4.0 * x * (B1 * u - 2.0 * x * B)) /
                       (u * u * u);

    const double coeff = (2.0 * lam - (m + 1.0) * R) / m;
    // (*dR)_x = 0, (*dR)_p = -B dR; (*Xb)_x = Xp/B, (*Xb)_p = -B Xx
    return {dom - (3.0 / m) * om * Xx - coeff * Xp / B,
            -(3.0 / m) * om * Xp + B * dR + coeff * B * Xx};
}

double step1_residual(const SphereSolution& sol, double x) {
    require_interior(sol, x);
    const double m = sol.params.m, lam = sol.params.lambda;
    const double u = 1.0 + x * x;
    const double B = sol.profile.B(x);
    const double B1 = sol.profile.B1(x);
    const double R = -sol.profile.B2(x);
    const double dR = -sol.profile.B3(x);
    const double d2R = -sol.profile.B4(x);

    const double Xx = drift_x(m, x);
    const double om = omega_of(m, x, B, B1);

    const double lapR = B1 * dR + B * d2R;       // (1/sqrt g) d_a(sqrt g g^ab d_b R)
    const double XdR = B * Xx * dR;              // g^xx Xb_x dR
    const double Xnorm2 = m * m * B / u;         // |X|^2

    return -lapR + (1.0 + 4.0 / m) * XdR + (3.0 / m) * om * om +
           (2.0 * lam - (m + 1.0) * R) * (2.0 * Xnorm2 - 2.0 * lam * m + m * R) /
               (m * m);
}

Mat2 affine_ricci(const Profile& profile, const AffineConnectionSpec& spec, double x) {
    const double m = profile.params().m;
    const double p = spec.p, q = spec.q;
    const double u = 1.0 + x * x;
    const double B = profile.B(x);
    if (!(B > 0.0)) throw DomainError("affine connection needs B > 0 at x");
    const double B1 = profile.B1(x);
    const double B2 = profile.B2(x);

    const double X[2] = {drift_x(m, x), drift_p(m, B, x)};
    const double dX[2] = {-m * (1.0 - x * x) / (u * u), omega_of(m, x, B, B1)};

    // G[a][b][c]: coefficient of D along direction b acting on index c.
    double G[2][2][2] = {};
    double dG[2][2][2] = {};
    const Christoffels lc = christoffels(B, B1);
    G[0][0][0] = lc.x_xx;
    G[0][1][1] = lc.x_pp;
    G[1][0][1] = lc.p_xp;
    G[1][1][0] = lc.p_xp;
    dG[0][0][0] = -B2 / (2.0 * B) + B1 * B1 / (2.0 * B * B);
    dG[0][1][1] = -(B1 * B1 + B * B2) / 2.0;
    dG[1][0][1] = B2 / (2.0 * B) - B1 * B1 / (2.0 * B * B);
    dG[1][1][0] = dG[1][0][1];

    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                if (a == c) {
                    G[a][b][c] -= p * X[b];
                    dG[a][b][c] -= p * dX[b];
                }
                if (a == b) {
                    G[a][b][c] -= q * X[c];
                    dG[a][b][c] -= q * dX[c];
                }
            }

    // Ric_bd = sum_a [ d_a G[a][d][b] - d_d G[a][a][b]
    //                  + sum_e ( G[a][a][e] G[e][d][b] - G[a][d][e] G[e][a][b] ) ]
    // with d_a nonzero only along x (a = 0).
    double ric[2][2];
    for (int b = 0; b < 2; ++b)
        for (int d = 0; d < 2; ++d) {
            double r = dG[0][d][b];
            if (d == 0) r -= dG[0][0][b] + dG[1][1][b];
            for (int a = 0; a < 2; ++a)
                for (int e = 0; e < 2; ++e)
                    r += G[a][a][e] * G[e][d][b] - G[a][d][e] * G[e][a][b];
            ric[b][d] = r;
        }
    return {ric[0][0], ric[0][1], ric[1][0], ric[1][1]};
}

Mat2 skew_ricci_residual(const Profile& profile, const AffineConnectionSpec& spec,
                         double x) {
    if (profile.params().m != -1.0 || profile.params().lambda != 0.0)
        throw NotApplicable("the Ricci-flat connection exists for m = -1, lambda = 0");
    return affine_ricci(profile, spec, x);
}

} // namespace qes2
