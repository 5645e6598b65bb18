#pragma once

#include <map>
#include <string>
#include <vector>

#include "qes2/geometry.hpp"

namespace qes2 {

struct CheckResult {
    double max_residual = 0.0;
    int grid_size = 0;
    double tolerance = 0.0;
    bool pass = false;
};

// check name -> result; normalised residuals (already divided by each
// check's scale) against fixed tolerances.
using ResidualReport = std::map<std::string, CheckResult>;

// Interior Chebyshev nodes of (x1, x2): clustered toward the poles, where
// regularity is the delicate part.
std::vector<double> chebyshev_grid(double x1, double x2, int n);

// Runs the full residual suite on a solution. tol_scale multiplies every
// tolerance (the QES2_TOL override); 1 means the documented defaults.
ResidualReport run_verification(const SphereSolution& sol, int grid_n,
                                double tol_scale = 1.0);

bool all_pass(const ResidualReport& report);

} // namespace qes2
