#ifndef LOGCON_ARITH_HPP
#define LOGCON_ARITH_HPP

#include <map>
#include <string>
#include <vector>

#include "logcon/rational.hpp"

namespace logcon {

enum class FamilyKind { SigmaD, PsiD, Custom };

std::string family_name(FamilyKind kind);

/// A weight family g_d: sigma_d(n) = sum of d-th powers of divisors,
/// psi_d(n) = n^d, or a finite custom table.
struct FamilySpec {
    FamilyKind kind = FamilyKind::PsiD;
    unsigned long d = 0;
    // Custom only: n -> g(n). Must contain n=1 with value 1; all values >= 1.
    std::map<unsigned long, Int> custom_values;

    static FamilySpec sigma(unsigned long d) { return {FamilyKind::SigmaD, d, {}}; }
    static FamilySpec psi(unsigned long d) { return {FamilyKind::PsiD, d, {}}; }
    static FamilySpec custom(std::map<unsigned long, Int> values);

    bool operator==(const FamilySpec&) const = default;
};

/// Divisors of n, ascending. Trial division up to sqrt(n).
std::vector<unsigned long> divisors(unsigned long n);

/// Moebius function, n >= 1.
int mobius(unsigned long n);

/// g_d(n) for the family; exact big integer. Memoized for sigma/psi.
Int g_value(const FamilySpec& spec, unsigned long n);

/// Moebius transform alpha_d(n) = sum_{l|n} mu(l) g_d(n/l).
Int alpha(const FamilySpec& spec, unsigned long n);

/// True iff 0 <= g_d(n) - n^d <= (g_0(n) - 1)(n-1)^d, where g_0 is the
/// same family at degree 0. Sigma/Psi only; n >= 2.
bool check_condition(const FamilySpec& spec, unsigned long n);

}  // namespace logcon

#endif
