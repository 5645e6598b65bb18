#include "qes2/document.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace qes2 {
namespace {

using nlohmann::json;

json range_json(const CRange& r) {
    json j;
    j["empty"] = r.empty;
    if (!r.empty) {
        j["lower"] = std::isinf(r.lower) ? json(nullptr) : json(r.lower);
        j["upper"] = std::isinf(r.upper) ? json(nullptr) : json(r.upper);
    } else {
        j["lower"] = nullptr;
        j["upper"] = nullptr;
    }
    return j;
}

CRange range_from_json(const json& j) {
    if (j.at("empty").get<bool>()) return CRange::none();
    const double lo = j.at("lower").is_null() ? -std::numeric_limits<double>::infinity()
                                              : j.at("lower").get<double>();
    const double hi = j.at("upper").is_null() ? std::numeric_limits<double>::infinity()
                                              : j.at("upper").get<double>();
    return CRange::open(lo, hi);
}

} // namespace

SolutionDocument make_document(const SphereSolution& sol, int grid_n) {
    SolutionDocument doc;
    doc.m = sol.params.m;
    doc.lambda = sol.params.lambda;
    doc.c = sol.params.c;
    doc.x1 = sol.roots.x1;
    doc.x2 = sol.roots.x2;
    doc.period = sol.period;
    doc.c_range = admissible_c_range(sol.params.m, sol.params.lambda);
    doc.alpha = sol.profile.alpha();
    doc.B0 = sol.profile.B(0.0);
    if (grid_n > 0) {
        for (double x : chebyshev_grid(sol.roots.x1, sol.roots.x2, grid_n)) {
            const ProfileEval e = sol.profile.eval(x);
            const double om = sol.params.m *
                              (e.B1 * (1.0 + x * x) - 2.0 * x * e.B) /
                              ((1.0 + x * x) * (1.0 + x * x));
            doc.grid.push_back({x, e.B, e.B1, e.B2, -e.B2, om});
        }
    }
    return doc;
}

SphereSolution solution_from_document(const SolutionDocument& doc) {
    Profile profile({doc.m, doc.lambda, 0.0, doc.c, BetaBranch::NonClosed});
    RootPair roots{doc.x1, doc.x2, profile.B1(doc.x1), profile.B1(doc.x2), doc.period};
    return SphereSolution(std::move(profile), roots, doc.period);
}

std::string serialize_document(const SolutionDocument& doc) {
    json j;
    j["schema_version"] = doc.schema_version;
    j["params"] = {{"m", doc.m}, {"lambda", doc.lambda}, {"c", doc.c}};
    j["roots"] = {{"x1", doc.x1}, {"x2", doc.x2}};
    j["period"] = doc.period;
    j["derived"] = {{"alpha", doc.alpha}, {"B0", doc.B0}, {"c_range", range_json(doc.c_range)}};
    if (!doc.grid.empty()) {
        json rows = json::array();
        for (const auto& r : doc.grid)
            rows.push_back({r.x, r.B, r.B1, r.B2, r.R, r.Omega});
        j["grid"] = rows;
    }
    return j.dump(2) + "\n";
}

SolutionDocument parse_document(const std::string& text) {
    const json j = json::parse(text);
    SolutionDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    doc.m = j.at("params").at("m").get<double>();
    doc.lambda = j.at("params").at("lambda").get<double>();
    doc.c = j.at("params").at("c").get<double>();
    doc.x1 = j.at("roots").at("x1").get<double>();
    doc.x2 = j.at("roots").at("x2").get<double>();
    doc.period = j.at("period").get<double>();
    doc.alpha = j.at("derived").at("alpha").get<double>();
    doc.B0 = j.at("derived").at("B0").get<double>();
    doc.c_range = range_from_json(j.at("derived").at("c_range"));
    if (j.contains("grid")) {
        for (const auto& row : j.at("grid")) {
            doc.grid.push_back({row.at(0).get<double>(), row.at(1).get<double>(),
                                row.at(2).get<double>(), row.at(3).get<double>(),
                                row.at(4).get<double>(), row.at(5).get<double>()});
        }
    }
    return doc;
}

void write_document(const std::string& path, const SolutionDocument& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << serialize_document(doc);
    if (!out) throw Error("write failed: " + path);
}

SolutionDocument read_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

std::string serialize_report(const ResidualReport& report) {
    json j;
    for (const auto& [name, r] : report) {
        j[name] = {{"max_residual", r.max_residual},
                   {"grid_size", r.grid_size},
                   {"tolerance", r.tolerance},
                   {"pass", r.pass}};
    }
    return j.dump(2) + "\n";
}

void write_report(const std::string& path, const ResidualReport& report) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << serialize_report(report);
}

std::string verdict_json(const Verdict& v) {
    json j;
    j["admissible"] = v.admissible;
    j["reason"] = to_string(v.reason);
    j["c_range"] = range_json(v.c_range);
    return j.dump();
}

} // namespace qes2
