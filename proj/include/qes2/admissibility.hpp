#pragma once

#include <string>

#include "qes2/profile.hpp"

namespace qes2 {

enum class Reason {
    OK,
    NonzeroB,
    CNotInRange,
    LambdaSignForbidden,
    MZero,
    NoRoots,
    DoubleRoot,
};

std::string to_string(Reason r);

// Open interval of admissible c; empty when the (m, lambda) sign combination
// admits no sphere solution at all.
struct CRange {
    double lower = 0.0;
    double upper = 0.0;
    bool empty = true;

    bool contains(double c) const { return !empty && c > lower && c < upper; }
    static CRange open(double lo, double hi) { return {lo, hi, false}; }
    static CRange none() { return {}; }
};

struct Verdict {
    bool admissible = false;
    Reason reason = Reason::OK;
    CRange c_range;
};

// Threshold data for the m > 0, lambda < 0 row: the positive zero of F, the
// minimiser of C(x) = (x^2+1)^(m/2+1)/|F(x)| over (x0, inf), and the minimum.
struct C0Result {
    double x0;
    double xmin;
    double c0;
};

// Adjacent simple zeros of B with B > 0 between them, their derivatives and
// the period that removes both conical singularities.
struct RootPair {
    double x1;
    double x2;
    double dB1;
    double dB2;
    double period;
};

// Thrown by find_roots: either no positive interval with simple-zero
// endpoints exists, or an endpoint failed the simplicity threshold.
class RootError : public Error {
public:
    RootError(Reason r, const std::string& what) : Error(what), reason_(r) {}
    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

// The regularity table: decides whether (m, lambda, c, b) extends to a
// smooth sphere solution. All inequalities are strict.
Verdict classify(double m, double lambda, double c, double b);

// Admissible c interval for given (m, lambda); computes the c0 threshold
// when lambda < 0 (m > 0 only).
CRange admissible_c_range(double m, double lambda);

// c0 = min_{x > x0} (x^2+1)^(m/2+1)/|F(x)|; requires m > 0.
C0Result compute_c0(double m);

// Locates the adjacent zeros of B around the axis (x1 = -x2 for the even
// family), validates positivity between them and simplicity at them, and
// fills the period p = 4*pi/|B'(x2)|.
RootPair find_roots(const Profile& profile);

} // namespace qes2
