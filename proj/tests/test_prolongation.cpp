#include <doctest.h>

#include <cmath>
#include <tuple>

#include "qes2/numerics.hpp"
#include "qes2/prolongation.hpp"
#include "qes2/verify.hpp"

#include "oracles.hpp"

using namespace qes2;

namespace {

double max_abs(const Mat2& m) {
    return std::max({std::abs(m.xx), std::abs(m.xp), std::abs(m.px), std::abs(m.pp)});
}

} // namespace

TEST_CASE("omega values and finite-difference cross-check") {
    const SphereSolution kerr = build_solution(2.0, 0.0, 1.0);
    CHECK(omega(kerr, 0.0) == 0.0);
    CHECK(omega(kerr, 1.0) == doctest::Approx(-1.0).epsilon(1e-11));

    for (int i = 0; i < 100; ++i) {
        const double x = oracles::uniform(-0.95, 0.95) * kerr.roots.x2;
        const double om = omega(kerr, x);
        const double h = 1e-5;
        const double fd = num::fd_derivative(
            [&](double t) { return drift_p(2.0, kerr.profile.B(t), t); }, x, h);
        CHECK(std::abs(om - fd) <= 1e-7 * std::max(1.0, std::abs(om)));
    }

    // the rotation function is not identically zero (non-gradient drift)
    for (auto [m, lam, c] : {std::tuple{2.0, 0.0, 1.0}, std::tuple{3.0, 1.0, 1.0},
                             std::tuple{3.0, -1.0, 3.0}, std::tuple{-3.0, 1.0, -0.2},
                             std::tuple{-0.5, 1.0, 3.0}, std::tuple{-1.0, 1.0, 1.0}}) {
        const SphereSolution sol = build_solution(m, lam, c);
        double om_max = 0.0;
        for (double x : chebyshev_grid(sol.roots.x1, sol.roots.x2, 128))
            om_max = std::max(om_max, std::abs(omega(sol, x)));
        CHECK(om_max > 1e-6);
    }
}

TEST_CASE("prolonged state fields") {
    const SphereSolution sol = build_solution(3.0, 1.0, 1.0);
    const double x = 0.3;
    const ProlongedState st = prolonged_state(sol, x);
    CHECK(st.Xx == drift_x(3.0, x));
    CHECK(st.R == -sol.profile.B2(x));
    const double h = 1e-5;
    const double fdR = num::fd_derivative([&](double t) { return -sol.profile.B2(t); }, x, h);
    CHECK(st.dR == doctest::Approx(fdR).epsilon(1e-7));
}

TEST_CASE("first prolongation equation holds; its parts decompose") {
    const SphereSolution sol = build_solution(3.0, 1.0, 1.0);
    for (double x : {-0.4, 0.0, 0.5 * sol.roots.x2}) {
        const Mat2 r = pqe1_residual(sol, x);
        CHECK(max_abs(r) <= 1e-8 * 10.0);
        // antisymmetric part of grad Xb equals (1/2) Omega vol exactly,
        // so the residual's antisymmetric part collapses to zero
        CHECK(std::abs(0.5 * (r.xp - r.px)) <= 1e-10);
    }

    // symmetrised residual reproduces the quasi-Einstein residual
    for (double x : {-0.2, 0.35}) {
        const Mat2 r = pqe1_residual(sol, x);
        const Sym2 e = qe_residual(sol, x);
        CHECK(std::abs(r.xx - e.xx) <= 1e-10 * (1.0 + std::abs(e.xx)));
        CHECK(std::abs(0.5 * (r.xp + r.px) - e.xp) <= 1e-10);
        CHECK(std::abs(r.pp - e.pp) <= 1e-10 * (1.0 + std::abs(e.pp)));
    }
}

TEST_CASE("second prolongation equation pins the hodge convention") {
    const SphereSolution kerr = build_solution(2.0, 0.0, 1.0);
    const OneForm r1 = pqe2_residual(kerr, 0.4);
    CHECK(std::abs(r1.x) <= 1e-7 * 10.0);
    CHECK(std::abs(r1.p) <= 1e-7 * 10.0);

    const SphereSolution b = build_solution(-1.0, 1.0, 1.0);
    const OneForm r2 = pqe2_residual(b, -0.6);
    CHECK(std::abs(r2.x) <= 1e-7 * 10.0);
    CHECK(std::abs(r2.p) <= 1e-7 * 10.0);

    // flipping the star's sign leaves O(1) residuals
    {
        const double m = 2.0, x = 0.4;
        const double B = kerr.profile.B(x);
        const double R = -kerr.profile.B2(x);
        const double dR = -kerr.profile.B3(x);
        const double Xx = drift_x(m, x), Xp = drift_p(m, B, x);
        const double om = omega(kerr, x);
        const double u = 1.0 + x * x;
        const double dom = m *
                           ((kerr.profile.B2(x) * u - 2.0 * B) * u -
                            4.0 * x * (kerr.profile.B1(x) * u - 2.0 * x * B)) /
                           (u * u * u);
        const double coeff = (2.0 * 0.0 - (m + 1.0) * R) / m;
        const double flipped_x = dom - (3.0 / m) * om * Xx + coeff * Xp / B;
        const double flipped_p = -(3.0 / m) * om * Xp - B * dR - coeff * B * Xx;
        CHECK(std::max(std::abs(flipped_x), std::abs(flipped_p)) > 1e-1);
    }
}

TEST_CASE("scalar constraint of the prolongation") {
    const SphereSolution sol = build_solution(3.0, 1.0, 1.0);
    CHECK(std::abs(step1_residual(sol, 0.25)) <= 1e-6 * 100.0);
    const SphereSolution kerr = build_solution(2.0, 0.0, 1.0);
    CHECK(std::abs(step1_residual(kerr, 0.0)) <= 1e-8 * 100.0);

    // lambda shift in the constraint only: linear response
    SphereSolution shifted = sol;
    shifted.params.lambda += 1e-3;
    const double x = 0.25;
    const double m = sol.params.m, lam = sol.params.lambda;
    const double B = sol.profile.B(x);
    const double R = -sol.profile.B2(x);
    const double Xn2 = m * m * B / (1.0 + x * x);
    const double dconstraint_dlam =
        (2.0 * (2.0 * Xn2 - 2.0 * lam * m + m * R) +
         (2.0 * lam - (m + 1.0) * R) * (-2.0 * m)) /
        (m * m);
    const double got = step1_residual(shifted, x);
    CHECK(got == doctest::Approx(1e-3 * dconstraint_dlam).epsilon(1e-5));
    CHECK(std::abs(got) > 1e-6);
}

TEST_CASE("ricci-flat affine connection exists exactly at m=-1, lambda=0") {
    const Profile local({-1.0, 0.0, 0.0, 1.0, BetaBranch::NonClosed}); // B = 1 + x^2
    CHECK(local.B(0.3) == doctest::Approx(1.09).epsilon(1e-14));

    const AffineConnectionSpec flat{-0.5, 1.0};
    for (double x : {0.3, -0.8, 1.7}) {
        const Mat2 r = skew_ricci_residual(local, flat, x);
        CHECK(max_abs(r) <= 1e-8 * (1.0 + std::abs(local.B2(x))));
    }

    // undeformed connection: plain Levi-Civita Ricci (R/2) g
    const Mat2 lc = affine_ricci(local, {0.0, 0.0}, 0.5);
    const double B = local.B(0.5), R = -local.B2(0.5);
    CHECK(lc.xx == doctest::Approx(0.5 * R / B).epsilon(1e-12));
    CHECK(lc.pp == doctest::Approx(0.5 * R * B).epsilon(1e-12));

    // the "iff" direction: the same (p, q) on an m = 2 profile does not work
    const Profile wrong({2.0, 0.0, 0.0, 1.0, BetaBranch::NonClosed});
    CHECK(max_abs(affine_ricci(wrong, flat, 0.3)) > 1e-3);
    CHECK_THROWS_AS(skew_ricci_residual(wrong, flat, 0.3), NotApplicable);
    const Profile wrong_lam({-1.0, 1.0, 0.0, 1.0, BetaBranch::NonClosed});
    CHECK_THROWS_AS(skew_ricci_residual(wrong_lam, flat, 0.3), NotApplicable);
}

TEST_CASE("skew part of the deformed ricci follows -(2p+q)/2 dXb") {
    const Profile local({-1.0, 0.0, 0.0, 1.0, BetaBranch::NonClosed});
    const Profile other({3.0, 1.0, 0.0, 1.0, BetaBranch::NonClosed});
    for (int draw = 0; draw < 25; ++draw) {
        const AffineConnectionSpec spec{oracles::uniform(-2.0, 2.0),
                                        oracles::uniform(-2.0, 2.0)};
        for (const Profile* pr : {&local, &other}) {
            const double x = oracles::uniform(-0.4, 0.4);
            const double m = pr->params().m;
            const double u = 1.0 + x * x;
            const double om =
                m * (pr->B1(x) * u - 2.0 * x * pr->B(x)) / (u * u); // dXb = om vol
            const Mat2 ric = affine_ricci(*pr, spec, x);
            const double skew = 0.5 * (ric.xp - ric.px);
            const double want = -0.5 * (2.0 * spec.p + spec.q) * om;
            CHECK(std::abs(skew - want) <= 1e-7 * std::max(1.0, std::abs(want)));
        }
    }
}
