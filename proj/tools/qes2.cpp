// qes2 — construct and verify the axisymmetric quasi-Einstein structures
// on the two-sphere: classify parameters, compute the c0 threshold, export
// solution documents, run the residual verification suite and emit plots.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qes2/document.hpp"
#include "qes2/plot.hpp"
#include "qes2/verify.hpp"

namespace {

// 0 success / all pass, 1 usage or IO, 2 inadmissible or domain,
// 3 verification failure.
enum ExitCode { kOk = 0, kUsage = 1, kRejected = 2, kVerifyFailed = 3 };

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string format_range(const qes2::CRange& r) {
    if (r.empty) return "(empty)";
    std::string lo = std::isinf(r.lower) ? "-inf" : format_number(r.lower);
    std::string hi = std::isinf(r.upper) ? "inf" : format_number(r.upper);
    return "(" + lo + ", " + hi + ")";
}

double tolerance_scale() {
    const char* env = std::getenv("QES2_TOL");
    if (!env || !*env) return 1.0;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || v <= 0.0) {
        std::cerr << "warning: ignoring invalid QES2_TOL\n";
        return 1.0;
    }
    return v;
}

int cmd_classify(double m, double lambda, double c, double b, bool as_json) {
    const qes2::Verdict v = qes2::classify(m, lambda, c, b);
    if (as_json) {
        std::cout << qes2::verdict_json(v) << "\n";
    } else if (v.admissible) {
        std::cout << "admissible; c_range=" << format_range(v.c_range) << "\n";
    } else {
        std::cout << "not admissible; reason=" << qes2::to_string(v.reason)
                  << "; c_range=" << format_range(v.c_range) << "\n";
    }
    if (v.reason == qes2::Reason::MZero) return kUsage;
    return v.admissible ? kOk : kRejected;
}

int cmd_c0(double m) {
    if (m <= 0.0) {
        std::cerr << "c0 is defined for m > 0\n";
        return kRejected;
    }
    const qes2::C0Result r = qes2::compute_c0(m);
    std::printf("x0=%.12f xmin=%.12f c0=%.12f\n", r.x0, r.xmin, r.c0);
    return kOk;
}

int cmd_range(double m, double lambda) {
    if (m == 0.0) {
        std::cerr << "MZero: m must be nonzero\n";
        return kUsage;
    }
    std::cout << "c_range=" << format_range(qes2::admissible_c_range(m, lambda)) << "\n";
    return kOk;
}

int cmd_solve(double m, double lambda, double c, const std::string& out_path,
              int grid_n) {
    const qes2::Verdict v = qes2::classify(m, lambda, c, 0.0);
    if (!v.admissible) {
        std::cout << qes2::verdict_json(v) << "\n";
        return v.reason == qes2::Reason::MZero ? kUsage : kRejected;
    }
    const qes2::SphereSolution sol = qes2::build_solution(m, lambda, c);
    qes2::write_document(out_path, qes2::make_document(sol, grid_n));
    return kOk;
}

int cmd_verify(const std::optional<std::string>& doc_path, std::optional<double> m,
               std::optional<double> lambda, std::optional<double> c, int grid_n,
               const std::string& report_path) {
    std::optional<qes2::SphereSolution> sol;
    if (doc_path) {
        try {
            sol.emplace(qes2::solution_from_document(qes2::read_document(*doc_path)));
        } catch (const std::exception& e) {
            std::cerr << "cannot load document: " << e.what() << "\n";
            return kUsage;
        }
    } else {
        if (!m || !lambda || !c) {
            std::cerr << "verify needs a document path or --m/--lambda/--c\n";
            return kUsage;
        }
        const qes2::Verdict v = qes2::classify(*m, *lambda, *c, 0.0);
        if (!v.admissible) {
            std::cout << qes2::verdict_json(v) << "\n";
            return kRejected;
        }
        sol.emplace(qes2::build_solution(*m, *lambda, *c));
    }

    const qes2::ResidualReport report =
        qes2::run_verification(*sol, grid_n, tolerance_scale());
    for (const auto& [name, r] : report) {
        std::printf("%-26s max_residual=%-12.3e tolerance=%-9.0e %s\n", name.c_str(),
                    r.max_residual, r.tolerance, r.pass ? "PASS" : "FAIL");
    }
    if (!report_path.empty()) qes2::write_report(report_path, report);
    return qes2::all_pass(report) ? kOk : kVerifyFailed;
}

int cmd_plot(double m, double lambda, double c, const std::string& range,
             int samples, const std::string& svg_path, const std::string& csv_path) {
    double lo = 0.0, hi = 0.0;
    if (std::sscanf(range.c_str(), "%lf:%lf", &lo, &hi) != 2 || !(lo < hi)) {
        std::cerr << "bad --range, expected lo:hi with lo < hi\n";
        return kUsage;
    }
    if (samples < 2) {
        std::cerr << "need at least 2 samples\n";
        return kUsage;
    }
    if (svg_path.empty() && csv_path.empty()) {
        std::cerr << "nothing to do: give --svg and/or --csv\n";
        return kUsage;
    }
    const qes2::Profile profile({m, lambda, 0.0, c, qes2::BetaBranch::NonClosed});
    const auto samples_xy = qes2::sample_profile(profile, {lo, hi, samples});
    if (!csv_path.empty()) qes2::write_csv(csv_path, samples_xy);
    if (!svg_path.empty()) {
        const std::string title = "B(x): m=" + format_number(m) +
                                  ", lambda=" + format_number(lambda) +
                                  ", c=" + format_number(c);
        qes2::write_svg(svg_path, samples_xy, title);
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"axisymmetric quasi-Einstein structures on the two-sphere"};
    app.require_subcommand(1);

    double m = 0, lambda = 0, c = 0, b = 0;
    bool as_json = false;

    auto* classify = app.add_subcommand("classify", "decide admissibility of (m, lambda, c, b)");
    classify->add_option("--m", m, "exponent m")->required();
    classify->add_option("--lambda", lambda, "cosmological constant")->required();
    classify->add_option("--c", c, "profile constant c")->required();
    classify->add_option("--b", b, "odd-part coefficient (default 0)");
    classify->add_flag("--json", as_json, "machine-readable verdict");

    auto* c0 = app.add_subcommand("c0", "threshold constant c0 for m > 0");
    double c0_m = 0;
    c0->add_option("--m", c0_m, "exponent m")->required();

    auto* range = app.add_subcommand("range", "admissible c interval for (m, lambda)");
    double r_m = 0, r_lambda = 0;
    range->add_option("--m", r_m, "exponent m")->required();
    range->add_option("--lambda", r_lambda, "cosmological constant")->required();

    auto* solve = app.add_subcommand("solve", "build a solution document");
    double s_m = 0, s_lambda = 0, s_c = 0;
    std::string out_path;
    int s_grid = 513;
    solve->add_option("--m", s_m)->required();
    solve->add_option("--lambda", s_lambda)->required();
    solve->add_option("--c", s_c)->required();
    solve->add_option("--out", out_path, "output JSON path")->required();
    solve->add_option("--grid", s_grid, "grid rows (default 513)");

    auto* verify = app.add_subcommand("verify", "run the residual verification suite");
    std::string v_doc;
    std::optional<double> v_m, v_lambda, v_c;
    int v_grid = 512;
    std::string report_path;
    verify->add_option("document", v_doc, "solution document path");
    verify->add_option("--m", v_m);
    verify->add_option("--lambda", v_lambda);
    verify->add_option("--c", v_c);
    verify->add_option("--grid", v_grid, "grid points (default 512)");
    verify->add_option("--report", report_path, "write JSON report here");

    auto* plot = app.add_subcommand("plot", "emit CSV/SVG samples of B(x)");
    double p_m = 0, p_lambda = 0, p_c = 0;
    std::string p_range = "-4:4", svg_path, csv_path;
    int p_samples = 800;
    plot->add_option("--m", p_m)->required();
    plot->add_option("--lambda", p_lambda)->required();
    plot->add_option("--c", p_c)->required();
    plot->add_option("--range", p_range, "lo:hi (default -4:4)");
    plot->add_option("--samples", p_samples, "sample count (default 800)");
    plot->add_option("--svg", svg_path, "SVG output path");
    plot->add_option("--csv", csv_path, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (classify->parsed()) return cmd_classify(m, lambda, c, b, as_json);
        if (c0->parsed()) return cmd_c0(c0_m);
        if (range->parsed()) return cmd_range(r_m, r_lambda);
        if (solve->parsed()) return cmd_solve(s_m, s_lambda, s_c, out_path, s_grid);
        if (verify->parsed())
            return cmd_verify(v_doc.empty() ? std::nullopt : std::optional(v_doc), v_m,
                              v_lambda, v_c, v_grid, report_path);
        if (plot->parsed())
            return cmd_plot(p_m, p_lambda, p_c, p_range, p_samples, svg_path, csv_path);
    } catch (const qes2::NotAdmissible& e) {
        std::cout << qes2::verdict_json(e.verdict()) << "\n";
        return kRejected;
    } catch (const qes2::InvalidParameter& e) {
        std::cerr << e.what() << "\n";
        return kRejected;
    } catch (const qes2::Error& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
