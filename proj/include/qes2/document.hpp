#pragma once

#include <string>
#include <vector>

#include "qes2/geometry.hpp"
#include "qes2/verify.hpp"

namespace qes2 {

// On-disk record of a solution: parameters, roots, period, derived scalars
// and an optional evaluation grid. Serialised as JSON with sorted keys.
struct SolutionDocument {
    int schema_version = 1;
    double m = 0.0, lambda = 0.0, c = 0.0;
    double x1 = 0.0, x2 = 0.0, period = 0.0;
    CRange c_range;
    double alpha = 0.0, B0 = 0.0;

    struct GridRow {
        double x, B, B1, B2, R, Omega;
    };
    std::vector<GridRow> grid;
};

// Builds the document from a solution; grid_n == 0 omits the grid
// (Chebyshev-spaced interior nodes otherwise).
SolutionDocument make_document(const SphereSolution& sol, int grid_n);

// Reconstructs a solution taking roots and period from the document as
// claims to be verified (a corrupted period is caught by the checks).
SphereSolution solution_from_document(const SolutionDocument& doc);

std::string serialize_document(const SolutionDocument& doc);
SolutionDocument parse_document(const std::string& text);

void write_document(const std::string& path, const SolutionDocument& doc);
SolutionDocument read_document(const std::string& path);

// Residual report as JSON (same key-sorted, LF conventions).
std::string serialize_report(const ResidualReport& report);
void write_report(const std::string& path, const ResidualReport& report);

std::string verdict_json(const Verdict& v);

} // namespace qes2
