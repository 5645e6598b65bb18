#include "qes2/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace qes2 {
namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt2(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

std::vector<std::pair<double, double>> sample_profile(const Profile& profile,
                                                      const PlotSpec& spec) {
    if (spec.samples < 2) throw InvalidParameter("need at least 2 samples");
    if (!(spec.lo < spec.hi)) throw InvalidParameter("inverted plot range");
    std::vector<std::pair<double, double>> out;
    out.reserve(spec.samples);
    const int n = spec.samples;
    for (int i = 0; i < n; ++i) {
        const double x = (spec.lo * (n - 1 - i) + spec.hi * i) / (n - 1);
        out.emplace_back(x, profile.B(x));
    }
    return out;
}

void write_csv(const std::string& path,
               const std::vector<std::pair<double, double>>& samples) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << "x,B\n";
    for (const auto& [x, B] : samples) out << fmt17(x) << ',' << fmt17(B) << '\n';
    if (!out) throw Error("write failed: " + path);
}

void write_svg(const std::string& path,
               const std::vector<std::pair<double, double>>& samples,
               const std::string& title) {
    if (samples.empty()) throw InvalidParameter("nothing to plot");
    const double W = 800.0, H = 500.0, ml = 60.0, mr = 20.0, mt = 40.0, mb = 40.0;

    double xlo = samples.front().first, xhi = samples.back().first;
    double ylo = samples[0].second, yhi = samples[0].second;
    for (const auto& [x, y] : samples) {
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
    }
    if (ylo == yhi) {
        ylo -= 1.0;
        yhi += 1.0;
    }
    const double pad = 0.05 * (yhi - ylo);
    ylo -= pad;
    yhi += pad;

    const auto px = [&](double x) { return ml + (x - xlo) / (xhi - xlo) * (W - ml - mr); };
    const auto py = [&](double y) { return H - mb - (y - ylo) / (yhi - ylo) * (H - mt - mb); };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W
        << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n"
        << "  <rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H
        << "\" fill=\"white\"/>\n"
        << "  <text x=\"" << 0.5 * W << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">"
        << title << "</text>\n";

    // frame and zero axes
    out << "  <rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << W - ml - mr
        << "\" height=\"" << H - mt - mb
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (ylo < 0.0 && 0.0 < yhi)
        out << "  <line x1=\"" << ml << "\" y1=\"" << fmt2(py(0.0)) << "\" x2=\"" << W - mr
            << "\" y2=\"" << fmt2(py(0.0)) << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    if (xlo < 0.0 && 0.0 < xhi)
        out << "  <line x1=\"" << fmt2(px(0.0)) << "\" y1=\"" << mt << "\" x2=\""
            << fmt2(px(0.0)) << "\" y2=\"" << H - mb
            << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";

    // corner labels
    out << "  <text x=\"" << ml << "\" y=\"" << H - mb + 16.0
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << fmt2(xlo) << "</text>\n"
        << "  <text x=\"" << W - mr << "\" y=\"" << H - mb + 16.0
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmt2(xhi) << "</text>\n"
        << "  <text x=\"" << ml - 6.0 << "\" y=\"" << H - mb
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmt2(ylo) << "</text>\n"
        << "  <text x=\"" << ml - 6.0 << "\" y=\"" << mt + 4.0
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmt2(yhi) << "</text>\n";

    out << "  <polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : samples) out << fmt2(px(x)) << ',' << fmt2(py(y)) << ' ';
    out << "\"/>\n</svg>\n";
    if (!out) throw Error("write failed: " + path);
}

} // namespace qes2
