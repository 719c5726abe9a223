#ifndef LOGCON_RATIONAL_HPP
#define LOGCON_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace logcon {

// Exact scalars. mpz_class/mpq_class keep canonical reduced form
// (denominator >= 1, lowest terms) after every operation.
using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow_ui(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline bool is_integer(const Rat& q) {
    return q.get_den() == 1;
}

inline std::string to_string(const Int& z) {
    return z.get_str();
}

// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rat& q) {
    return is_integer(q) ? q.get_num().get_str() : q.get_str();
}

}  // namespace logcon

#endif
