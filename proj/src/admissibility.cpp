#include "qes2/admissibility.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

#include "qes2/numerics.hpp"
#include "qes2/specfun.hpp"

namespace qes2 {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double c0_objective(double m, double x) {
    return std::pow(x * x + 1.0, 0.5 * m + 1.0) / std::abs(hyp_f(m, x));
}

C0Result compute_c0_uncached(double m) {
    const double x0 = f_positive_root(m);

    // Coarse log-spaced scan to bracket the basin, then golden section.
    double lo = x0 * (1.0 + 1e-6);
    double hi = std::max(1e3, 100.0 * x0);
    const int n = 256;
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<double> xs(n), cs(n);
        const double llo = std::log(lo), lhi = std::log(hi);
        int best = 0;
        for (int i = 0; i < n; ++i) {
            xs[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
            cs[i] = c0_objective(m, xs[i]);
            if (cs[i] < cs[best]) best = i;
        }
        if (best == 0) {
            lo = x0 * (1.0 + 0.1 * (lo / x0 - 1.0));
            continue;
        }
        if (best == n - 1) {
            hi *= 10.0;
            continue;
        }
        auto [xmin, cmin] = num::golden_min(
            [m](double x) { return c0_objective(m, x); }, xs[best - 1], xs[best + 1],
            1e-10 * std::max(1.0, xs[best]));

        // Golden section stalls at the rounding plateau of the objective;
        // polish with the stationarity condition (m+2) x F - (1+x^2) F' = 0,
        // which is well-conditioned at the minimiser.
        const auto stat = [m](double x) {
            const FValue v = hyp_f_eval(m, x);
            return (m + 2.0) * x * v.f - (1.0 + x * x) * v.f_prime;
        };
        double w = 1e-4 * xmin;
        for (int widen = 0; widen < 6; ++widen, w *= 4.0) {
            if (stat(xmin - w) * stat(xmin + w) <= 0.0) {
                xmin = num::brent_root(stat, xmin - w, xmin + w, 1e-13 * xmin);
                cmin = c0_objective(m, xmin);
                break;
            }
        }

        // Local-minimum certificate
        const double dx = 1e-4 * xmin;
        if (!(c0_objective(m, xmin - dx) > cmin && c0_objective(m, xmin + dx) > cmin))
            throw Error("c0 minimiser failed its local-minimum certificate");
        return {x0, xmin, cmin};
    }
    throw Error("c0 scan failed to bracket the minimum");
}

} // namespace

std::string to_string(Reason r) {
    switch (r) {
    case Reason::OK: return "OK";
    case Reason::NonzeroB: return "NonzeroB";
    case Reason::CNotInRange: return "CNotInRange";
    case Reason::LambdaSignForbidden: return "LambdaSignForbidden";
    case Reason::MZero: return "MZero";
    case Reason::NoRoots: return "NoRoots";
    case Reason::DoubleRoot: return "DoubleRoot";
    }
    return "?";
}

C0Result compute_c0(double m) {
    if (m <= 0.0)
        throw InvalidParameter("c0 threshold exists only for m > 0");

    static std::mutex mu;
    static std::map<double, C0Result> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    const C0Result r = compute_c0_uncached(m);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(m, r);
    return r;
}

CRange admissible_c_range(double m, double lambda) {
    if (m == 0.0) throw InvalidParameter("m must be nonzero");
    if (m > 0.0) {
        if (lambda == 0.0) return CRange::open(0.0, kInf);
        if (lambda > 0.0) return CRange::open(lambda / (m + 1.0), kInf);
        return CRange::open(-lambda * compute_c0(m).c0 / (m + 1.0), kInf);
    }
    if (lambda <= 0.0) return CRange::none();
    if (m > -1.0) return CRange::open(lambda / (m + 1.0), kInf);
    if (m == -1.0) return CRange::open(0.0, kInf);
    return CRange::open(lambda / (m + 1.0), 0.0);
}

Verdict classify(double m, double lambda, double c, double b) {
    if (m == 0.0) return {false, Reason::MZero, CRange::none()};
    if (b != 0.0) {
        // Parity: a smooth extension forces B even, hence b = 0. The range
        // that would apply to b = 0 is still reported for context.
        return {false, Reason::NonzeroB, admissible_c_range(m, lambda)};
    }
    const CRange range = admissible_c_range(m, lambda);
    if (range.empty) return {false, Reason::LambdaSignForbidden, range};
    if (!range.contains(c)) return {false, Reason::CNotInRange, range};
    return {true, Reason::OK, range};
}

RootPair find_roots(const Profile& profile) {
    const ModelParams& p = profile.params();
    if (p.beta_branch != BetaBranch::NonClosed)
        throw NotApplicable("root pairs are defined on the NonClosed branch");

    const double B0 = profile.B(0.0);
    if (!(B0 > 0.0))
        throw RootError(Reason::NoRoots, "B(0) <= 0: no positive interval around the axis");

    // For m > 0, lambda < 0 the profile returns to +inf at large |x|, so a
    // doubling search can step over the negative dip. The minimiser of the
    // c0 objective is a certified negative point for admissible c; seed the
    // probe sequence with it.
    double seed = 1.0;
    if (p.lambda < 0.0 && p.m > 0.0) seed = compute_c0(p.m).xmin;

    const auto first_crossing = [&](double sign) -> double {
        double prev = 0.0;
        double probe = seed;
        for (int k = 0; k <= 21; ++k) {
            const double Bp = profile.B(sign * probe);
            if (Bp == 0.0) return sign * probe;
            if (Bp < 0.0) {
                double a = sign * prev, b2 = sign * probe;
                return num::brent_root([&](double x) { return profile.B(x); }, a, b2,
                                       1e-13 * std::max(1.0, probe));
            }
            prev = probe;
            probe *= 2.0;
        }
        throw RootError(Reason::NoRoots, "no sign change of B found before X_max");
    };

    const double x2 = first_crossing(+1.0);
    const double x1 = profile.even() ? -x2 : first_crossing(-1.0);

    // Positivity between the zeros (also guards against a crossing that is
    // not the first one when b != 0).
    const int n = 512;
    for (int k = 0; k < n; ++k) {
        const double x = x1 + (x2 - x1) * (k + 0.5) / n;
        if (!(profile.B(x) > 0.0))
            throw RootError(Reason::NoRoots, "B is not positive between the zeros");
    }

    const double dB1 = profile.B1(x1);
    const double dB2 = profile.B1(x2);
    const auto simple = [&](double x, double d) {
        return std::abs(d) > 1e-8 * std::max(1.0, std::abs(profile.B2(x)) * std::abs(x));
    };
    if (!simple(x2, dB2) || !simple(x1, dB1))
        throw RootError(Reason::DoubleRoot, "zero of B fails the simplicity threshold");

    const double period = 4.0 * std::numbers::pi / std::abs(dB2);
    return {x1, x2, dB1, dB2, period};
}

} // namespace qes2
