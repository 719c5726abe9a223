#ifndef LOGCON_THRESHOLDS_HPP
#define LOGCON_THRESHOLDS_HPP

#include <string>
#include <vector>

#include "logcon/series.hpp"

namespace logcon {

/// Enclosure [lo, hi] of an irrational threshold, computed with directed
/// rounding at >= 64 fractional bits. hi is a true upper bound.
struct RealBound {
    double lo = 0.0;
    double hi = 0.0;
    std::string decimal;  // upper bound, printed to 25 digits
    // Smallest integer strictly greater than hi; a provably valid probe degree.
    long first_above = 0;

    double width() const { return hi - lo; }
};

/// Certificate that q_0(n) <= r^{-n} held for all 1 <= n <= verified_up_to.
struct GrowthBound {
    Rat r;
    unsigned long verified_up_to = 0;
};

struct ThresholdReport {
    unsigned long n = 0;
    unsigned long congruence_case = 0;  // n mod 3; n=5 uses its own formula
    RealBound D;
    std::vector<unsigned long> probe_degrees;
    std::vector<int> observed;  // sign of q_d(n)^2 - q_d(n-1) q_d(n+1) per probe
    bool predicted_exception = false;  // n == 1 (mod 3)
    bool verdict = false;
};

/// Exact check of q_0(n) r^n <= 1 for 1 <= n <= N; throws on the first
/// violating n.
GrowthBound verify_growth(const CoefficientTable& q0, const Rat& r, unsigned long N);

/// Threshold D^g(n) for a family with verified growth rate r; q0 supplies
/// q_0(4), q_0(6) for the n = 5 case. n >= 3.
RealBound threshold_general(unsigned long n, const Rat& r, const CoefficientTable& q0);

/// Closed-form thresholds for the psi (r = 1/2) and sigma (r = 1/3) families.
RealBound threshold_psi(unsigned long n);
RealBound threshold_sigma(unsigned long n);

/// Probes degrees d above D(n) and checks that the strict inequality
/// q_d(n)^2 < q_d(n-1) q_d(n+1) holds exactly when n == 1 (mod 3).
/// family must be SigmaD or PsiD; n >= 3; probe_count >= 1.
ThresholdReport verify_theorem(FamilyKind family, unsigned long n, unsigned long probe_count);

std::string report_to_json(const ThresholdReport& report, FamilyKind family);

}  // namespace logcon

#endif
