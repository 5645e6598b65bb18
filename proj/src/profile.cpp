#include "qes2/profile.hpp"

#include <cmath>
#include <limits>

#include "qes2/specfun.hpp"

namespace qes2 {
namespace {

constexpr double kBranchGuard = 1e-12;
constexpr double kAxisTaylor = 1e-4;

bool is_integer(double v) { return std::rint(v) == v; }

} // namespace

double ode_lhs(double m, double lambda, double beta_sq, double x, double B,
               double B1, double B2) {
    const double d = beta_sq + x * x;
    return B2 + m * (d * x * B1 + 2.0 * beta_sq * B) / (d * d) + 2.0 * lambda;
}

Profile::Profile(const ModelParams& params) : p_(params), form_(Form::General), alpha_(0.0) {
    const double m = p_.m;
    if (m == 0.0) throw InvalidParameter("m must be nonzero");
    if (m != -1.0 && std::abs(m + 1.0) < kBranchGuard)
        throw AmbiguousBranch("m within 1e-12 of -1: branch selection refused");
    if (m != 1.0 && std::abs(m - 1.0) < kBranchGuard)
        throw AmbiguousBranch("m within 1e-12 of 1: branch selection refused");

    if (p_.beta_branch == BetaBranch::NonClosed) {
        form_ = (m == -1.0) ? Form::Arcsinh : Form::General;
        alpha_ = (m == -1.0) ? p_.c : p_.c - p_.lambda / (m + 1.0);
    } else {
        if (m == -1.0)
            form_ = Form::ClosedNegOne;
        else if (m == 1.0)
            form_ = Form::ClosedLog;
        else
            form_ = Form::ClosedPower;
        alpha_ = std::numeric_limits<double>::quiet_NaN();
    }
}

double Profile::alpha() const {
    if (p_.beta_branch != BetaBranch::NonClosed)
        throw NotApplicable("alpha is defined for the NonClosed branch");
    return alpha_;
}

void Profile::check_domain(double x) const {
    switch (form_) {
    case Form::General:
    case Form::Arcsinh:
        return;
    case Form::ClosedPower: {
        const double e = 1.0 - p_.m;
        if (p_.b != 0.0) {
            if (!is_integer(e) && x <= 0.0)
                throw DomainError("x^(1-m) with non-integer exponent needs x > 0");
            if (is_integer(e) && e < 0.0 && x == 0.0)
                throw DomainError("x^(1-m) with negative exponent needs x != 0");
        }
        return;
    }
    case Form::ClosedLog:
        if (p_.b != 0.0 && x <= 0.0) throw DomainError("ln x needs x > 0");
        return;
    case Form::ClosedNegOne:
        if (p_.lambda != 0.0 && x <= 0.0) throw DomainError("x^2 ln x needs x > 0");
        return;
    }
}

double Profile::B(double x) const {
    check_domain(x);
    const double m = p_.m, lam = p_.lambda, b = p_.b, c = p_.c;
    switch (form_) {
    case Form::General: {
        const double w = std::pow(1.0 + x * x, -0.5 * m);
        return b * x * w + c * w * hyp_f(m, x) - lam * (1.0 + x * x) / (m + 1.0);
    }
    case Form::Arcsinh: {
        const double s = std::sqrt(1.0 + x * x);
        return x * (b - lam * std::asinh(x)) * s + c * (1.0 + x * x);
    }
    case Form::ClosedPower:
        return b * std::pow(x, 1.0 - m) + c - lam * x * x / (m + 1.0);
    case Form::ClosedLog:
        return (b != 0.0 ? b * std::log(x) : 0.0) + c - 0.5 * lam * x * x;
    case Form::ClosedNegOne:
        return c * x * x + b - (lam != 0.0 ? lam * x * x * std::log(x) : 0.0);
    }
    return 0.0;
}

double Profile::B1(double x) const {
    check_domain(x);
    const double m = p_.m, lam = p_.lambda, b = p_.b, c = p_.c;
    switch (form_) {
    case Form::General: {
        if (b == 0.0) {
            if (std::abs(x) < kAxisTaylor) {
                const double a2 = -(c * m + lam / (m + 1.0));
                const double a4 = c * m * (m + 1.0) / 3.0;
                return 2.0 * a2 * x + 4.0 * a4 * x * x * x;
            }
            const double Bx = B(x);
            return (Bx - alpha_ - lam * x * x) / x - m * x * Bx / (1.0 + x * x);
        }
        const FValue fv = hyp_f_eval(m, x);
        const double u = 1.0 + x * x;
        const double w = std::pow(u, -0.5 * m);
        const double w1 = -m * x * std::pow(u, -0.5 * m - 1.0);
        return b * (w + x * w1) + c * (w1 * fv.f + w * fv.f_prime) -
               2.0 * lam * x / (m + 1.0);
    }
    case Form::Arcsinh: {
        if (b == 0.0 && std::abs(x) < kAxisTaylor) {
            const double a2 = c - lam;
            const double a4 = -lam / 3.0;
            return 2.0 * a2 * x + 4.0 * a4 * x * x * x;
        }
        if (b == 0.0) {
            const double Bx = B(x);
            return (Bx - alpha_ - lam * x * x) / x + x * Bx / (1.0 + x * x);
        }
        const double s = std::sqrt(1.0 + x * x);
        const double a = b - lam * std::asinh(x);
        return a * (1.0 + 2.0 * x * x) / s - lam * x + 2.0 * c * x;
    }
    case Form::ClosedPower:
        return b * (1.0 - m) * std::pow(x, -m) - 2.0 * lam * x / (m + 1.0);
    case Form::ClosedLog:
        return (b != 0.0 ? b / x : 0.0) - lam * x;
    case Form::ClosedNegOne:
        return 2.0 * c * x - (lam != 0.0 ? lam * (2.0 * x * std::log(x) + x) : 0.0);
    }
    return 0.0;
}

double Profile::B2(double x) const {
    if (p_.beta_branch == BetaBranch::NonClosed) {
        const double u = 1.0 + x * x;
        return -2.0 * p_.lambda -
               p_.m * (x * u * B1(x) + 2.0 * B(x)) / (u * u);
    }
    if (x == 0.0) return B2_direct(0.0);
    return -2.0 * p_.lambda - p_.m * B1(x) / x;
}

double Profile::B2_direct(double x) const {
    check_domain(x);
    const double m = p_.m, lam = p_.lambda, b = p_.b, c = p_.c;
    switch (form_) {
    case Form::General: {
        const FValue fv = hyp_f_eval(m, x);
        const double u = 1.0 + x * x;
        const double w = std::pow(u, -0.5 * m);
        const double w1 = -m * x * std::pow(u, -0.5 * m - 1.0);
        const double w2 = -m * std::pow(u, -0.5 * m - 2.0) * (1.0 - (m + 1.0) * x * x);
        const double f2 = -m * std::pow(u, 0.5 * m - 1.0);
        return b * (2.0 * w1 + x * w2) +
               c * (w2 * fv.f + 2.0 * w1 * fv.f_prime + w * f2) -
               2.0 * lam / (m + 1.0);
    }
    case Form::Arcsinh: {
        const double u = 1.0 + x * x;
        const double a = b - lam * std::asinh(x);
        return -lam * (1.0 + 2.0 * x * x) / u +
               a * x * (3.0 + 2.0 * x * x) / (u * std::sqrt(u)) - lam + 2.0 * c;
    }
    case Form::ClosedPower:
        return -b * m * (1.0 - m) * std::pow(x, -m - 1.0) - 2.0 * lam / (m + 1.0);
    case Form::ClosedLog:
        return (b != 0.0 ? -b / (x * x) : 0.0) - lam;
    case Form::ClosedNegOne:
        return 2.0 * c - (lam != 0.0 ? lam * (2.0 * std::log(x) + 3.0) : 0.0);
    }
    return 0.0;
}

double Profile::B3(double x) const {
    const double m = p_.m;
    const double b0 = B(x), b1 = B1(x), b2 = B2(x);
    if (p_.beta_branch == BetaBranch::NonClosed) {
        const double u = 1.0 + x * x;
        const double num = u * (3.0 - x * x) * b1 + x * u * u * b2 - 8.0 * x * b0;
        return -m * num / (u * u * u);
    }
    return -m * (x * b2 - b1) / (x * x);
}

double Profile::B4(double x) const {
    const double m = p_.m;
    const double b0 = B(x), b1 = B1(x), b2 = B2(x), b3 = B3(x);
    if (p_.beta_branch == BetaBranch::NonClosed) {
        const double u = 1.0 + x * x;
        const double P = u * (3.0 - x * x) * b1 + x * u * u * b2 - 8.0 * x * b0;
        const double P1 = -4.0 * x * u * b1 + 4.0 * u * u * b2 + x * u * u * b3 - 8.0 * b0;
        return -m * (P1 * u - 6.0 * x * P) / (u * u * u * u);
    }
    return -m * (b3 / x - 2.0 * b2 / (x * x) + 2.0 * b1 / (x * x * x));
}

ProfileEval Profile::eval(double x) const {
    return {x, B(x), B1(x), B2(x)};
}

double Profile::ode_residual(double x) const {
    return ode_lhs(p_.m, p_.lambda, beta_sq(), x, B(x), B1(x), B2_direct(x));
}

double Profile::first_order_residual(double x) const {
    if (p_.b != 0.0)
        throw NotApplicable("first-order identity stated for the even family (b = 0)");
    if (p_.beta_branch != BetaBranch::NonClosed)
        throw NotApplicable("first-order identity needs the NonClosed branch");
    if (x == 0.0) throw DomainError("identity is singular at x = 0");

    const double m = p_.m, lam = p_.lambda;
    const auto bracket = [&](double t) {
        return B(t) * std::pow(t * t + 1.0, 0.5 * m) / t;
    };
    // The bracket behaves like alpha/x near the axis, so the step must
    // shrink with x to keep the truncation error below the scale there.
    const double h = std::abs(x) >= 0.1 ? 1e-5 * std::max(std::abs(x), 1.0)
                                        : 1e-4 * std::abs(x);
    const double lhs = (bracket(x + h) - bracket(x - h)) / (2.0 * h);
    const double rhs =
        -std::pow(1.0 + x * x, 0.5 * m) * (alpha_ + lam * x * x) / (x * x);
    return lhs - rhs;
}

} // namespace qes2
