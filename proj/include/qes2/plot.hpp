#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qes2/profile.hpp"

namespace qes2 {

struct PlotSpec {
    double lo = -4.0;
    double hi = 4.0;
    int samples = 800;
};

// Uniform samples of (x, B(x)); endpoints exact, and the midpoint lands on
// zero exactly for a symmetric range with an odd sample count.
std::vector<std::pair<double, double>> sample_profile(const Profile& profile,
                                                      const PlotSpec& spec);

// CSV with header "x,B" and 17-significant-digit rows; byte-deterministic.
void write_csv(const std::string& path,
               const std::vector<std::pair<double, double>>& samples);

// Minimal SVG 1.1 polyline plot with axes and a title.
void write_svg(const std::string& path,
               const std::vector<std::pair<double, double>>& samples,
               const std::string& title);

} // namespace qes2
