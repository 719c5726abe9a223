#include "logcon/oracle.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "logcon/series.hpp"

namespace logcon {

namespace {

struct StatsAccum {
    std::uint64_t max_p = 0;
    std::uint64_t count = 0;
    std::uint64_t second = 0;

    void record(std::uint64_t p) {
        if (p > max_p) {
            second = max_p;
            max_p = p;
            count = 1;
        } else if (p == max_p) {
            ++count;
        } else if (p > second) {
            second = p;
        }
    }
};

// Products stay tiny (<= 3^{n/3}), so plain uint64 is enough here.
void enumerate(unsigned long rem, std::uint64_t acc, StatsAccum& st) {
    if (rem == 0) {
        st.record(acc);
        return;
    }
    for (unsigned long part = 1; part <= rem; ++part)
        enumerate(rem - part, acc * part, st);
}

Int max_product_formula(unsigned long n) {
    switch (n % 3) {
        case 0: return pow_ui(3, n / 3);
        case 1: return 4 * pow_ui(3, (n - 4) / 3);
        default: return 2 * pow_ui(3, (n - 2) / 3);
    }
}

Int s_formula(unsigned long n) {
    switch (n % 3) {
        case 0: return 1;
        case 1: return Int((n - 1) * (n + 8) / 18);
        default: return Int((n + 1) / 3);
    }
}

}  // namespace

CompositionStats composition_stats(unsigned long n) {
    if (n < 2 || n > 30)
        throw std::invalid_argument("composition_stats: supported range is 2 <= n <= 30");
    StatsAccum st;
    enumerate(n, 1, st);
    CompositionStats out;
    out.n = n;
    out.max_product = Int(static_cast<unsigned long>(st.max_p));
    out.max_count = Int(static_cast<unsigned long>(st.count));
    if (st.second > 0) out.second_product = Int(static_cast<unsigned long>(st.second));
    return out;
}

OracleResult check_lemma1(unsigned long n_max) {
    if (n_max < 4) throw std::invalid_argument("check_lemma1: n_max must be >= 4");
    for (unsigned long n = 2; n <= n_max; ++n) {
        CompositionStats st = composition_stats(n);
        std::ostringstream err;
        if (st.max_product != max_product_formula(n)) {
            err << "n=" << n << ": max product " << st.max_product
                << " != closed form " << max_product_formula(n);
            return {false, err.str()};
        }
        if (st.max_count != s_formula(n)) {
            err << "n=" << n << ": S(n) " << st.max_count
                << " != closed form " << s_formula(n);
            return {false, err.str()};
        }
        std::optional<Int> expected_second;
        if (n == 4) expected_second = 3;
        else if (n >= 6 && n % 3 == 0) expected_second = 8 * pow_ui(3, (n - 6) / 3);
        else if (n >= 6 && n % 3 == 1) expected_second = 10 * pow_ui(3, (n - 7) / 3);
        if (expected_second) {
            if (!st.second_product || *st.second_product != *expected_second) {
                err << "n=" << n << ": second product != closed form " << *expected_second;
                return {false, err.str()};
            }
        }
    }
    return {true, ""};
}

namespace {

void sum_compositions(const std::vector<Int>& g, unsigned long rem, const Int& acc, Int& total) {
    if (rem == 0) {
        total += acc;
        return;
    }
    for (unsigned long part = 1; part <= rem; ++part)
        sum_compositions(g, rem - part, acc * g[part], total);
}

}  // namespace

Int composition_q(const FamilySpec& spec, unsigned long n) {
    if (n < 1 || n > 20)
        throw std::invalid_argument("composition_q: supported range is 1 <= n <= 20");
    std::vector<Int> g(n + 1);
    for (unsigned long m = 1; m <= n; ++m) g[m] = g_value(spec, m);
    Int total = 0;
    sum_compositions(g, n, 1, total);
    return total;
}

OracleResult check_lemma2(const FamilySpec& spec, unsigned long n) {
    if (n < 2) throw std::invalid_argument("check_lemma2: n must be >= 2");
    const unsigned long d = spec.d;
    FamilySpec spec0{spec.kind, 0, {}};
    Int qd = q_table(spec, n).at(n).get_num();
    Int q0 = q_table(spec0, n).at(n).get_num();

    Int max_pow = pow_int(max_product_formula(n), d);
    Int lower = max_pow * s_formula(n);
    Int upper = max_pow * q0;

    std::ostringstream err;
    err << family_name(spec.kind) << " d=" << d << " n=" << n << ": ";
    if (qd < lower) {
        err << "lower bound " << lower << " > q_d(n) = " << qd;
        return {false, err.str()};
    }
    if (qd > upper) {
        err << "upper bound " << upper << " < q_d(n) = " << qd;
        return {false, err.str()};
    }

    std::optional<Int> refined;
    if (n == 4) {
        refined = 2 * pow_ui(4, d) + pow_ui(3, d) * q0;
    } else if (n >= 6 && n % 3 == 0) {
        refined = pow_ui(3, n / 3 * d) + pow_int(8 * pow_ui(3, n / 3 - 2), d) * q0;
    } else if (n >= 6 && n % 3 == 1) {
        refined = max_pow * s_formula(n) + pow_int(10 * pow_ui(3, (n - 7) / 3), d) * q0;
    }
    if (refined && qd > *refined) {
        err << "refined upper bound " << *refined << " < q_d(n) = " << qd;
        return {false, err.str()};
    }
    return {true, ""};
}

}  // namespace logcon
