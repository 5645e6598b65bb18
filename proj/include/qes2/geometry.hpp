#pragma once

#include <utility>

#include "qes2/admissibility.hpp"
#include "qes2/profile.hpp"

namespace qes2 {

// Thrown by build_solution when the parameters fail the regularity table.
class NotAdmissible : public Error {
public:
    NotAdmissible(const Verdict& v, const std::string& what) : Error(what), verdict_(v) {}
    const Verdict& verdict() const { return verdict_; }

private:
    Verdict verdict_;
};

// A globally regular axisymmetric solution on the chart (x, phi),
// x in (x1, x2), phi of period `period`, with
//   g = B^-1 dx^2 + B dphi^2,
//   Xb = -m/(1+x^2) (x dx - B dphi).
struct SphereSolution {
    ModelParams params;
    Profile profile;
    RootPair roots;
    double period;

    SphereSolution(Profile pr, RootPair r, double p)
        : params(pr.params()), profile(std::move(pr)), roots(r), period(p) {}

    // Scale function of the Killing identity: K^b = Gamma X^b + (m/2) dGamma.
    double gamma_scale(double x) const { return (1.0 + x * x) / params.m; }
};

SphereSolution build_solution(double m, double lambda, double c);

struct MetricPoint {
    double x;
    double g_xx; // 1/B
    double g_pp; // B
    double Xx;   // -m x/(1+x^2)
    double Xp;   // m B/(1+x^2)
    double R;    // scalar curvature, -B''
};

// Symmetric 2x2 residual in the (dx, dphi) component basis.
struct Sym2 {
    double xx;
    double xp;
    double pp;
};

// Levi-Civita Christoffel symbols of the diagonal metric; the three
// nonzero ones are Gx_xx = -B'/(2B), Gx_pp = -B B'/2, Gp_xp = B'/(2B).
struct Christoffels {
    double x_xx;
    double x_pp;
    double p_xp;
};
Christoffels christoffels(double B, double B1);

// Components of the drift one-form.
double drift_x(double m, double x);
double drift_p(double m, double B, double x);

MetricPoint metric_at(const SphereSolution& sol, double x);

// Componentwise residual of the quasi-Einstein equation
//   Ric - (1/m) Xb (x) Xb + 1/2 L_X g - lambda g,
// with the Ricci tensor built from the independently differentiated B''.
Sym2 qe_residual(const SphereSolution& sol, double x);

// Euler characteristic two ways: from the boundary derivatives
// -(p/4pi)[B']_{x1}^{x2} and by quadrature of the curvature integrand.
// Both equal 2 for a regular solution.
std::pair<double, double> gauss_bonnet(const SphereSolution& sol);

// Integral of (|X|^2/m + 2 lambda) over the surface; equals 8 pi for genus 0.
double x_norm_constraint(const SphereSolution& sol);

enum class Pole { North, South }; // North = x2, South = x1

// Circumference-to-radius ratio normalised by 2 pi, sampled at geodesic
// distances 1e-2, 1e-3, 1e-4 from the pole and extrapolated to zero.
// Equals 1 exactly when the cone angle is absent.
double conical_check(const SphereSolution& sol, Pole pole);

// Max-abs component of Gamma Xb + (m/2) dGamma - B dphi; an algebraic
// identity, zero to rounding.
double killing_identity_residual(const SphereSolution& sol, double x);

struct KahlerResult {
    double lhs;   // value of the fourth-order potential PDE's left side
    double scale; // magnitude of its largest single term
};

// Evaluates the Kahler-potential PDE through the axisymmetric chain rule,
// in the log-radial gauge normalised at the evaluation point.
KahlerResult kahler_residual(const SphereSolution& sol, double x);

} // namespace qes2
