#include <doctest.h>

#include <cmath>

#include "qes2/numerics.hpp"
#include "qes2/profile.hpp"

#include "oracles.hpp"

using namespace qes2;

namespace {

ModelParams nc(double m, double lambda, double b, double c) {
    return {m, lambda, b, c, BetaBranch::NonClosed};
}

ModelParams closed(double m, double lambda, double b, double c) {
    return {m, lambda, b, c, BetaBranch::Closed};
}

} // namespace

TEST_CASE("construction and branch guards") {
    CHECK_THROWS_AS(Profile(nc(0.0, 0.0, 0.0, 1.0)), InvalidParameter);
    CHECK_THROWS_AS(Profile(nc(-1.0 + 1e-13, 1.0, 0.0, 1.0)), AmbiguousBranch);
    CHECK_THROWS_AS(Profile(nc(1.0 - 1e-13, 0.0, 0.0, 1.0)), AmbiguousBranch);
    CHECK_NOTHROW(Profile(nc(-1.0, 1.0, 0.0, 1.0)));
    CHECK_NOTHROW(Profile(closed(1.0, 0.0, 1.0, 0.0)));
}

TEST_CASE("m=2 horizon profile equals (1-x^2)/(1+x^2)") {
    const Profile p(nc(2.0, 0.0, 0.0, 1.0));
    for (int i = 0; i <= 500; ++i) {
        const double x = -3.0 + 6.0 * i / 500.0;
        const double want = (1.0 - x * x) / (1.0 + x * x);
        CHECK(std::abs(p.B(x) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
    // pinned jet at x = 1
    CHECK(std::abs(p.B(1.0)) < 1e-14);
    CHECK(p.B1(1.0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(p.B2(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.B2_direct(1.0) == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("m=2 family reduction with general lambda and c") {
    for (auto [lam, c] : {std::pair{1.0, 2.0}, std::pair{-0.7, 3.1}}) {
        const Profile p(nc(2.0, lam, 0.0, c));
        for (double x = -4.0; x <= 4.0; x += 0.13) {
            const double want =
                c * (1.0 - x * x) / (1.0 + x * x) - lam * (1.0 + x * x) / 3.0;
            CHECK(std::abs(p.B(x) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("m=-1 arcsinh closed form") {
    const Profile p(nc(-1.0, 1.0, 0.0, 1.0));
    for (double x : {-2.0, -0.4, 0.0, 0.7, 1.9}) {
        const double want =
            -x * std::asinh(x) * std::sqrt(x * x + 1.0) + (x * x + 1.0);
        CHECK(p.B(x) == doctest::Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("closed-branch forms") {
    const Profile plog(closed(1.0, 0.0, 1.0, 0.0));
    CHECK(plog.B(2.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(plog.B(1.0) == 0.0);
    CHECK(plog.B1(2.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(plog.B(-1.0), DomainError);

    const Profile ppow(closed(3.0, 2.0, 0.5, 1.0)); // B = 0.5 x^-2 + 1 - x^2/2
    CHECK(ppow.B(2.0) == doctest::Approx(0.125 + 1.0 - 2.0).epsilon(1e-14));
    CHECK_THROWS_AS(ppow.B(0.0), DomainError);

    const Profile pneg(closed(-1.0, 1.0, 2.0, 3.0)); // B = 3x^2 + 2 - x^2 ln x
    CHECK(pneg.B(2.0) == doctest::Approx(12.0 + 2.0 - 4.0 * std::log(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(pneg.B(-0.5), DomainError);
}

TEST_CASE("axis values: B(0) = alpha, B1(0) = 0") {
    const Profile p(nc(3.0, 1.0, 0.0, 1.0));
    CHECK(p.alpha() == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(p.B(0.0) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(p.eval(0.0).B1 == 0.0);
    // B''(0) = -2 lambda - 2 m B(0)
    CHECK(p.B2(0.0) == doctest::Approx(-2.0 - 6.0 * 0.75).epsilon(1e-13));
}

TEST_CASE("parity of the even family and of the odd part") {
    for (const auto& params :
         {nc(2.7, 0.8, 0.0, 1.4), nc(-2.2, 1.0, 0.0, -0.3), nc(-1.0, 0.6, 0.0, 2.0)}) {
        const Profile p(params);
        for (int i = 0; i < 1000; ++i) {
            const double x = oracles::uniform(1e-3, 5.0);
            CHECK(p.B(x) == p.B(-x));
            CHECK(p.B1(x) == -p.B1(-x));
            CHECK(p.B2(x) == p.B2(-x));
        }
    }
    // the b-term x (1+x^2)^(-m/2) is odd
    const Profile even_part(nc(1.7, 0.5, 0.0, 1.1));
    const Profile with_b(nc(1.7, 0.5, 0.7, 1.1));
    for (double x = 0.05; x < 4.0; x += 0.21) {
        const double odd_plus = with_b.B(x) - even_part.B(x);
        const double odd_minus = with_b.B(-x) - even_part.B(-x);
        CHECK(std::abs(odd_plus + odd_minus) <= 1e-13 * std::max(1.0, std::abs(odd_plus)));
    }
}

TEST_CASE("closed forms solve the governing ODE") {
    for (int draw = 0; draw < 20; ++draw) {
        double m = oracles::uniform(-4.0, 4.0);
        if (std::abs(m) < 0.05) m = 0.5;
        if (std::abs(m - 1.0) < 1e-3) m = 1.2;
        if (std::abs(m + 1.0) < 1e-3) m = -1.2;
        const double lam = oracles::uniform(-2.0, 2.0);
        const double b = oracles::uniform(-2.0, 2.0);
        const double c = oracles::uniform(-2.0, 2.0);

        const Profile p(nc(m, lam, b, c));
        for (double x = -5.0; x <= 5.0; x += 0.5) {
            const double scale = 1.0 + std::abs(p.B2_direct(x));
            CHECK(std::abs(p.ode_residual(x)) <= 1e-8 * scale);
        }
        const Profile q(closed(m, lam, b, c));
        for (double x = 0.25; x <= 5.0; x += 0.5) {
            const double scale = 1.0 + std::abs(q.B2_direct(x));
            CHECK(std::abs(q.ode_residual(x)) <= 1e-8 * scale);
        }
    }
    // the special closed branches
    for (const auto& params : {closed(1.0, 0.7, 1.3, 0.4), closed(-1.0, 0.9, 0.2, 1.5)}) {
        const Profile p(params);
        for (double x = 0.25; x <= 5.0; x += 0.25) {
            CHECK(std::abs(p.ode_residual(x)) <= 1e-8 * (1.0 + std::abs(p.B2_direct(x))));
        }
    }
    // NonClosed branch at m = -1 and m = 1
    for (const auto& params : {nc(-1.0, 1.2, 0.4, 0.9), nc(1.0, -0.5, 0.1, 2.0)}) {
        const Profile p(params);
        for (double x = -5.0; x <= 5.0; x += 0.25) {
            CHECK(std::abs(p.ode_residual(x)) <= 1e-8 * (1.0 + std::abs(p.B2_direct(x))));
        }
    }
}

TEST_CASE("derivatives agree with finite differences") {
    for (const auto& params :
         {nc(2.5, 0.3, 0.0, 1.0), nc(-1.8, 1.1, 0.6, -0.4), nc(-1.0, 0.8, 0.3, 1.2)}) {
        const Profile p(params);
        for (double x : {-2.1, -0.6, 0.37, 1.9, 3.3}) {
            const double h = 1e-4;
            const double fd1 = num::fd_derivative([&](double t) { return p.B(t); }, x, h);
            CHECK(std::abs(p.B1(x) - fd1) <= 1e-8 * (1.0 + std::abs(fd1)));
            const double fd2 = num::fd_derivative([&](double t) { return p.B1(t); }, x, h);
            CHECK(std::abs(p.B2_direct(x) - fd2) <= 1e-7 * (1.0 + std::abs(fd2)));
            const double fd3 = num::fd_derivative([&](double t) { return p.B2(t); }, x, h);
            CHECK(std::abs(p.B3(x) - fd3) <= 1e-6 * (1.0 + std::abs(fd3)));
            const double fd4 = num::fd_derivative([&](double t) { return p.B3(t); }, x, h);
            CHECK(std::abs(p.B4(x) - fd4) <= 1e-5 * (1.0 + std::abs(fd4)));
        }
    }
}

TEST_CASE("third and fourth derivatives of the horizon profile") {
    // B = (1-x^2)/(1+x^2): B''' = 48 x (1-x^2)/(1+x^2)^4, B''''(0) = 48
    const Profile p(nc(2.0, 0.0, 0.0, 1.0));
    for (double x : {0.0, 0.5, -1.3, 2.0}) {
        const double u = 1.0 + x * x;
        const double want = 48.0 * x * (1.0 - x * x) / (u * u * u * u);
        CHECK(p.B3(x) == doctest::Approx(want).epsilon(1e-11).scale(1.0));
    }
    CHECK(p.B4(0.0) == doctest::Approx(48.0).epsilon(1e-12));
}

TEST_CASE("first-order identity residual") {
    const Profile kerr(nc(2.0, 0.0, 0.0, 1.0));
    CHECK(std::abs(kerr.first_order_residual(1.5)) <= 1e-7 * 10.0);
    const Profile p31(nc(3.0, 1.0, 0.0, 1.0));
    CHECK(std::abs(p31.first_order_residual(0.8)) <= 1e-7 * 10.0);
    // near the axis the residual stays finite (alpha cancellation)
    const double near_axis = kerr.first_order_residual(1e-6);
    CHECK(std::isfinite(near_axis));

    CHECK_THROWS_AS(Profile(nc(2.0, 0.0, 0.5, 1.0)).first_order_residual(1.0), NotApplicable);
    CHECK_THROWS_AS(Profile(closed(2.0, 0.0, 0.0, 1.0)).first_order_residual(1.0),
                    NotApplicable);
    CHECK_THROWS_AS(kerr.first_order_residual(0.0), DomainError);
}

TEST_CASE("ode_lhs flags a perturbed profile") {
    // B -> B + eps x^2 shifts the lhs by eps (2 + m (2x^2(1+x^2) + 2x^2)/(1+x^2)^2);
    // at m=2, x=1 that is 5 eps.
    const Profile p(nc(2.0, 0.0, 0.0, 1.0));
    const double eps = 1e-3, x = 1.0;
    const double lhs = ode_lhs(2.0, 0.0, 1.0, x, p.B(x) + eps * x * x,
                               p.B1(x) + 2.0 * eps * x, p.B2_direct(x) + 2.0 * eps);
    CHECK(lhs == doctest::Approx(5.0 * eps).epsilon(1e-9));
    CHECK(std::abs(lhs) > 1e-5);
}
