#pragma once

#include "qes2/errors.hpp"

namespace qes2 {

// Whether the dual one-form of the drift field is closed. All global sphere
// solutions live on the NonClosed branch (normalised so beta = 1); the
// Closed (beta = 0) branch is supported for local evaluation only.
enum class BetaBranch { NonClosed, Closed };

struct ModelParams {
    double m = 2.0;
    double lambda = 0.0;
    double b = 0.0;
    double c = 1.0;
    BetaBranch beta_branch = BetaBranch::NonClosed;
};

struct ProfileEval {
    double x;
    double B;
    double B1; // dB/dx
    double B2; // d^2B/dx^2, via the governing ODE rearranged
};

// Left-hand side of the governing second-order ODE
//   B'' + m ((beta^2 + x^2) x B' + 2 beta^2 B) / (beta^2 + x^2)^2 + 2 lambda
// as a pure function of the supplied jet, so callers can probe perturbed data.
double ode_lhs(double m, double lambda, double beta_sq, double x, double B,
               double B1, double B2);

class Profile {
public:
    explicit Profile(const ModelParams& params);

    const ModelParams& params() const { return p_; }
    bool even() const { return p_.b == 0.0; }

    // B(0) for the even family; the constant appearing in the first-order
    // identity. NonClosed branch only.
    double alpha() const;

    double B(double x) const;

    // First derivative. For the even NonClosed family this uses the
    // first-order identity B' = (B - alpha - lambda x^2)/x - m x B/(1+x^2),
    // with a short even Taylor expansion around the axis; direct
    // differentiation of the closed form otherwise.
    double B1(double x) const;

    // Second derivative from the ODE rearranged (the route stored in
    // ProfileEval) and from direct differentiation of the closed form.
    double B2(double x) const;
    double B2_direct(double x) const;

    // Higher derivatives by differentiating the ODE.
    double B3(double x) const;
    double B4(double x) const;

    ProfileEval eval(double x) const;

    // ODE check with the second derivative taken from the independent
    // direct-differentiation route, so the test is not circular.
    double ode_residual(double x) const;

    // Residual of the first-order identity
    //   d/dx [ B (x^2+1)^(m/2) / x ] = -(1+x^2)^(m/2) (alpha + lambda x^2)/x^2
    // with the derivative taken by central differences of the bracket.
    // Even NonClosed family only.
    double first_order_residual(double x) const;

private:
    enum class Form { General, Arcsinh, ClosedPower, ClosedLog, ClosedNegOne };

    ModelParams p_;
    Form form_;
    double alpha_;

    void check_domain(double x) const;
    double beta_sq() const { return p_.beta_branch == BetaBranch::NonClosed ? 1.0 : 0.0; }
};

inline Profile make_profile(const ModelParams& params) { return Profile(params); }

} // namespace qes2
