#include "logcon/arith.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace logcon {

std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::SigmaD: return "sigma";
        case FamilyKind::PsiD: return "psi";
        case FamilyKind::Custom: return "custom";
    }
    return "?";
}

FamilySpec FamilySpec::custom(std::map<unsigned long, Int> values) {
    auto it = values.find(1);
    if (it == values.end() || it->second != 1)
        throw std::invalid_argument("custom family requires g(1) = 1");
    for (const auto& [n, v] : values)
        if (v < 1) throw std::invalid_argument("custom family values must be >= 1");
    FamilySpec spec;
    spec.kind = FamilyKind::Custom;
    spec.custom_values = std::move(values);
    return spec;
}

std::vector<unsigned long> divisors(unsigned long n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<unsigned long> small, large;
    for (unsigned long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            small.push_back(i);
            if (i != n / i) large.push_back(n / i);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int mobius(unsigned long n) {
    if (n == 0) throw std::invalid_argument("mobius: n must be >= 1");
    int primes = 0;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++primes;
        }
    }
    if (n > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

namespace {

Int g_value_uncached(const FamilySpec& spec, unsigned long n) {
    switch (spec.kind) {
        case FamilyKind::SigmaD: {
            Int sum = 0;
            for (unsigned long ell : divisors(n)) sum += pow_ui(ell, spec.d);
            return sum;
        }
        case FamilyKind::PsiD:
            return pow_ui(n, spec.d);
        case FamilyKind::Custom: {
            auto it = spec.custom_values.find(n);
            if (it == spec.custom_values.end())
                throw std::out_of_range("custom family has no value at n=" + std::to_string(n));
            return it->second;
        }
    }
    throw std::logic_error("unreachable");
}

// Memo for sigma/psi; series recurrences re-read each weight O(N) times
// and values like 31^560 are worth keeping.
std::mutex g_memo_mutex;
std::map<std::tuple<FamilyKind, unsigned long, unsigned long>, Int> g_memo;

}  // namespace

Int g_value(const FamilySpec& spec, unsigned long n) {
    if (n == 0) throw std::invalid_argument("g_value: n must be >= 1");
    if (spec.kind == FamilyKind::Custom) return g_value_uncached(spec, n);
    const auto key = std::make_tuple(spec.kind, spec.d, n);
    {
        std::lock_guard lock(g_memo_mutex);
        auto it = g_memo.find(key);
        if (it != g_memo.end()) return it->second;
    }
    Int v = g_value_uncached(spec, n);
    std::lock_guard lock(g_memo_mutex);
    return g_memo.emplace(key, std::move(v)).first->second;
}

Int alpha(const FamilySpec& spec, unsigned long n) {
    Int sum = 0;
    for (unsigned long ell : divisors(n)) {
        int mu = mobius(ell);
        if (mu == 0) continue;
        sum += mu * g_value(spec, n / ell);
    }
    return sum;
}

bool check_condition(const FamilySpec& spec, unsigned long n) {
    if (n < 2) throw std::invalid_argument("check_condition: n must be >= 2");
    if (spec.kind == FamilyKind::Custom)
        throw std::invalid_argument("check_condition: degree-0 companion undefined for custom families");
    Int diff = g_value(spec, n) - pow_ui(n, spec.d);
    if (diff < 0) return false;
    FamilySpec zero{spec.kind, 0, {}};
    Int bound = (g_value(zero, n) - 1) * pow_ui(n - 1, spec.d);
    return diff <= bound;
}

}  // namespace logcon
