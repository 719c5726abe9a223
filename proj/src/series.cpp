#include "logcon/series.hpp"

#include <stdexcept>

namespace logcon {

std::string series_kind_name(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::Exponential: return "exp";
        case SeriesKind::Geometric: return "geo";
        case SeriesKind::Product: return "product";
    }
    return "?";
}

namespace {

void check_weights(const std::vector<Rat>& weights, unsigned long N, const char* what) {
    if (weights.size() < N + 1)
        throw std::invalid_argument(std::string(what) + ": weights must cover 1..N");
}

bool all_integer(const std::vector<Rat>& weights, unsigned long N) {
    for (unsigned long n = 1; n <= N; ++n)
        if (!is_integer(weights[n])) return false;
    return true;
}

// Plain rational recurrence: n f_n = sum_{k=1..n} w(k) f_{n-k}.
// If stop_on_fraction is set, bails out once a non-integer coefficient
// shows up (signal to switch to the factorial-scaled path).
std::vector<Rat> exp_coeffs_rational(const std::vector<Rat>& w, unsigned long N,
                                     bool stop_on_fraction = false) {
    std::vector<Rat> f(N + 1);
    f[0] = 1;
    for (unsigned long n = 1; n <= N; ++n) {
        Rat sum = 0;
        for (unsigned long k = 1; k <= n; ++k) sum += w[k] * f[n - k];
        f[n] = sum / static_cast<unsigned long>(n);
        if (stop_on_fraction && !is_integer(f[n])) return {};
    }
    return f;
}

// Factorial-scaled integer path, valid for integer weights: with
// u_n = f_n * n!, the recurrence becomes
//   u_n = sum_{k=1..n} w(k) u_{n-k} (n-1)!/(n-k)!,
// all terms integers. Avoids per-term gcd normalization.
std::vector<Rat> exp_coeffs_scaled(const std::vector<Rat>& w, unsigned long N) {
    std::vector<Int> u(N + 1);
    u[0] = 1;
    Int term;
    for (unsigned long n = 1; n <= N; ++n) {
        Int sum = 0;
        Int fall = 1;  // (n-1)!/(n-k)! for the current k
        for (unsigned long k = 1; k <= n; ++k) {
            term = w[k].get_num() * u[n - k];
            sum += term * fall;
            fall *= n - k;  // advance to k+1
        }
        u[n] = std::move(sum);
    }
    std::vector<Rat> f(N + 1);
    Int fact = 1;
    for (unsigned long n = 0; n <= N; ++n) {
        if (n > 0) fact *= n;
        Rat q(u[n], fact);
        q.canonicalize();
        f[n] = std::move(q);
    }
    return f;
}

}  // namespace

CoefficientTable exp_series(const std::vector<Rat>& weights, unsigned long N,
                            bool force_rational) {
    check_weights(weights, N, "exp_series");
    CoefficientTable t;
    t.kind = SeriesKind::Exponential;
    t.order = N;
    if (force_rational || !all_integer(weights, N)) {
        t.coeffs = exp_coeffs_rational(weights, N);
    } else {
        // Integer weights: the rational recurrence is cheapest while the
        // coefficients stay integral (no gcd work); once a fraction shows
        // up the denominators head toward n! and the factorial-scaled
        // integer path wins.
        t.coeffs = exp_coeffs_rational(weights, N, /*stop_on_fraction=*/true);
        if (t.coeffs.empty()) t.coeffs = exp_coeffs_scaled(weights, N);
    }
    return t;
}

CoefficientTable geo_series(const std::vector<Rat>& weights, unsigned long N) {
    check_weights(weights, N, "geo_series");
    CoefficientTable t;
    t.kind = SeriesKind::Geometric;
    t.order = N;
    t.coeffs.resize(N + 1);
    t.coeffs[0] = 1;
    if (all_integer(weights, N)) {
        std::vector<Int> q(N + 1);
        q[0] = 1;
        for (unsigned long n = 1; n <= N; ++n) {
            Int sum = 0;
            for (unsigned long k = 1; k <= n; ++k) sum += weights[k].get_num() * q[n - k];
            q[n] = std::move(sum);
        }
        for (unsigned long n = 1; n <= N; ++n) t.coeffs[n] = Rat(q[n]);
    } else {
        for (unsigned long n = 1; n <= N; ++n) {
            Rat sum = 0;
            for (unsigned long k = 1; k <= n; ++k) sum += weights[k] * t.coeffs[n - k];
            t.coeffs[n] = std::move(sum);
        }
    }
    return t;
}

CoefficientTable product_series(const std::vector<Rat>& exponents, unsigned long N) {
    check_weights(exponents, N, "product_series");
    // log prod (1-t^n)^{-e_n} = sum_n e_n sum_{m: nm<=N} t^{nm}/m
    //                         = sum_j (sum_{n|j} n e_n) t^j / j.
    std::vector<Rat> w(N + 1);
    for (unsigned long j = 1; j <= N; ++j) {
        Rat sum = 0;
        for (unsigned long n : divisors(j)) sum += static_cast<unsigned long>(n) * exponents[n];
        w[j] = std::move(sum);
    }
    CoefficientTable t = exp_series(w, N);
    t.kind = SeriesKind::Product;
    return t;
}

namespace {

std::vector<Rat> family_weights(const FamilySpec& spec, unsigned long N) {
    std::vector<Rat> w(N + 1);
    for (unsigned long n = 1; n <= N; ++n) w[n] = Rat(g_value(spec, n));
    return w;
}

}  // namespace

CoefficientTable p_table(const FamilySpec& spec, unsigned long N) {
    CoefficientTable t = exp_series(family_weights(spec, N), N);
    t.family = spec;
    return t;
}

CoefficientTable q_table(const FamilySpec& spec, unsigned long N) {
    CoefficientTable t = geo_series(family_weights(spec, N), N);
    t.family = spec;
    return t;
}

CoefficientTable p_table_via_product(const FamilySpec& spec, unsigned long N) {
    std::vector<Rat> e(N + 1);
    for (unsigned long n = 1; n <= N; ++n) {
        Rat q(alpha(spec, n), Int(n));
        q.canonicalize();
        e[n] = std::move(q);
    }
    CoefficientTable t = product_series(e, N);
    t.family = spec;
    return t;
}

}  // namespace logcon
