#pragma once

#include "qes2/geometry.hpp"

namespace qes2 {

// Data of the closed first-order system: the drift one-form, the rotation
// function Omega with dXb = Omega vol, the scalar curvature and its
// x-derivative.
struct ProlongedState {
    double x;
    double Xx;
    double Xp;
    double Omega;
    double R;  // -B''
    double dR; // -B'''
};

// Full (non-symmetric) 2x2 tensor of components T_ab, a,b in {x, phi}.
struct Mat2 {
    double xx, xp, px, pp;
};

struct OneForm {
    double x, p;
};

double omega(const SphereSolution& sol, double x);

ProlongedState prolonged_state(const SphereSolution& sol, double x);

// Residual of  grad Xb = (1/m) Xb (x) Xb + (lambda - R/2) g + (1/2) Omega vol.
Mat2 pqe1_residual(const SphereSolution& sol, double x);

// Residual of  dOmega = (3/m) Omega Xb + *dR + (1/m)(2 lambda - (m+1) R) *Xb,
// with (*w)_x = w_p/B, (*w)_p = -B w_x for vol = dx ^ dphi.
OneForm pqe2_residual(const SphereSolution& sol, double x);

// Residual of the scalar constraint
//   0 = -Lap R + (1 + 4/m) <X, dR> + (3/m) Omega^2
//       + (1/m^2)(2 lambda - (m+1) R)(2 |X|^2 - 2 lambda m + m R).
double step1_residual(const SphereSolution& sol, double x);

// Deformation coefficients of the affine connection
//   D = LC - p Xb (x) Id - q Id (x) Xb.
struct AffineConnectionSpec {
    double p;
    double q;
};

// Ricci tensor of D (convention Ric_bd = R^a_{b a d}, contraction over the
// direction slot), valid for any local profile with B > 0 at x.
Mat2 affine_ricci(const Profile& profile, const AffineConnectionSpec& spec, double x);

// Same computation restricted to the class where D can be Ricci-flat:
// m = -1, lambda = 0. With (p, q) = (-1/2, 1) the result vanishes.
Mat2 skew_ricci_residual(const Profile& profile, const AffineConnectionSpec& spec,
                         double x);

} // namespace qes2
