#ifndef LOGCON_ORACLE_HPP
#define LOGCON_ORACLE_HPP

#include <optional>
#include <string>

#include "logcon/arith.hpp"

namespace logcon {

/// Exhaustive statistics over the 2^{n-1} ordered compositions of n.
struct CompositionStats {
    unsigned long n = 0;
    Int max_product;
    Int max_count;  // S(n): ordered compositions attaining max_product
    std::optional<Int> second_product;  // Z(n): largest value strictly below max
};

struct OracleResult {
    bool pass = true;
    std::string detail;  // first counterexample / violated inequality
};

/// Brute-force enumeration; 2 <= n <= 30 (cost guard).
CompositionStats composition_stats(unsigned long n);

/// Checks max products, second-largest products (n >= 6, n != 2 mod 3,
/// plus the n = 4 value 3) and S(n) against the closed forms, 2 <= n <= n_max.
OracleResult check_lemma1(unsigned long n_max);

/// Direct composition sum for q_d(n); 1 <= n <= 20 (cost guard).
Int composition_q(const FamilySpec& spec, unsigned long n);

/// Sandwich bounds on q_d(n): congruence-class lower bound, plain upper
/// bound, and the refined upper bound where stated.
OracleResult check_lemma2(const FamilySpec& spec, unsigned long n);

}  // namespace logcon

#endif
