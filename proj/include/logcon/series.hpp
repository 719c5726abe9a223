#ifndef LOGCON_SERIES_HPP
#define LOGCON_SERIES_HPP

#include <vector>

#include "logcon/arith.hpp"
#include "logcon/rational.hpp"

namespace logcon {

enum class SeriesKind { Exponential, Geometric, Product };

std::string series_kind_name(SeriesKind kind);

/// Truncated coefficient sequence a_0..a_N of one generating function.
struct CoefficientTable {
    FamilySpec family;
    SeriesKind kind = SeriesKind::Exponential;
    unsigned long order = 0;  // N; coeffs has N+1 entries
    std::vector<Rat> coeffs;

    const Rat& at(unsigned long n) const { return coeffs.at(n); }
};

/// Coefficients of exp(sum_{n>=1} w(n) t^n / n) to order N, by the
/// recurrence f_0 = 1, n f_n = sum_{k=1}^n w(k) f_{n-k}.
///
/// weights[n] for 1 <= n <= N; weights[0] is ignored.
///
/// When every weight is an integer the coefficients are computed as
/// factorial-scaled integers u_n = f_n * n! and divided out at the end;
/// force_rational selects the plain rational recurrence instead. Both
/// paths produce identical tables.
CoefficientTable exp_series(const std::vector<Rat>& weights, unsigned long N,
                            bool force_rational = false);

/// Coefficients of 1 / (1 - sum_{n>=1} w(n) t^n) to order N:
/// q_0 = 1, q_n = sum_{k=1}^n w(k) q_{n-k}.
CoefficientTable geo_series(const std::vector<Rat>& weights, unsigned long N);

/// Expansion of prod_{n=1}^N (1 - t^n)^{-e_n} to order N, via the exact
/// logarithm: the exponential weight at j is w(j) = sum_{n|j} n e_n.
/// Independent route from exp_series over family weights.
CoefficientTable product_series(const std::vector<Rat>& exponents, unsigned long N);

/// exp_series over the family weights g_d; tagged Exponential.
CoefficientTable p_table(const FamilySpec& spec, unsigned long N);

/// geo_series over the family weights g_d; tagged Geometric.
CoefficientTable q_table(const FamilySpec& spec, unsigned long N);

/// product_series with exponents alpha_d(n)/n; tagged Product.
CoefficientTable p_table_via_product(const FamilySpec& spec, unsigned long N);

}  // namespace logcon

#endif
