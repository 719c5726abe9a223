#include "logcon/thresholds.hpp"

#include <mpfr.h>

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace logcon {

namespace {

constexpr mpfr_prec_t kPrec = 192;  // well above the required 64 fractional bits

// Directed-rounding enclosure [lo, hi]; every arithmetic step widens
// outward, so hi is always a true upper bound of the exact value.
class Interval {
public:
    Interval() {
        mpfr_init2(lo_, kPrec);
        mpfr_init2(hi_, kPrec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    Interval(const Interval& o) : Interval() {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval& operator=(const Interval& o) {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
        return *this;
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    // ln(q) for a positive rational, outward-rounded.
    static Interval ln(const Rat& q) {
        if (q <= 0) throw std::domain_error("ln: argument must be positive");
        Interval r;
        mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_log(r.lo_, r.lo_, MPFR_RNDD);
        mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
        mpfr_log(r.hi_, r.hi_, MPFR_RNDU);
        return r;
    }

    Interval operator+(const Interval& o) const {
        Interval r;
        mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }
    Interval operator-(const Interval& o) const {
        Interval r;
        mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
        return r;
    }
    Interval scaled(unsigned long k) const {
        Interval r;
        mpfr_mul_ui(r.lo_, lo_, k, MPFR_RNDD);
        mpfr_mul_ui(r.hi_, hi_, k, MPFR_RNDU);
        return r;
    }
    // Division by a strictly positive interval.
    Interval operator/(const Interval& o) const {
        Interval r;
        mpfr_div(r.lo_, lo_, mpfr_sgn(lo_) >= 0 ? o.hi_ : o.lo_, MPFR_RNDD);
        mpfr_div(r.hi_, hi_, mpfr_sgn(hi_) >= 0 ? o.lo_ : o.hi_, MPFR_RNDU);
        return r;
    }

    RealBound to_bound() const {
        RealBound b;
        b.lo = mpfr_get_d(lo_, MPFR_RNDD);
        b.hi = mpfr_get_d(hi_, MPFR_RNDU);
        char buf[64];
        mpfr_snprintf(buf, sizeof buf, "%.25Rg", hi_);
        b.decimal = buf;
        mpfr_t f;
        mpfr_init2(f, kPrec);
        mpfr_floor(f, hi_);
        b.first_above = mpfr_get_si(f, MPFR_RNDN) + 1;
        mpfr_clear(f);
        return b;
    }

private:
    mpfr_t lo_, hi_;
};

// log_{9/8}(q), outward-rounded.
Interval log98(const Rat& q) {
    return Interval::ln(q) / Interval::ln(Rat(9, 8));
}

Interval log98_ui(unsigned long x) { return log98(Rat(x)); }

Interval threshold_interval(unsigned long n, const Rat& r, const CoefficientTable* q0) {
    if (n < 3) throw std::invalid_argument("threshold: n must be >= 3");
    if (n == 5) {
        if (q0 == nullptr || q0->order < 6)
            throw std::invalid_argument("threshold: n=5 needs q_0 up to order 6");
        Rat m = 2 * q0->at(4) * q0->at(6);
        return log98(m);
    }
    Interval neg_log_r = log98(Rat(1) / r);  // -log_{9/8}(r) >= 0
    switch (n % 3) {
        case 0:
            return neg_log_r.scaled(2 * n);
        case 1:
            return log98_ui(3) + neg_log_r.scaled(2 * n) - log98_ui(n + 2);
        default:
            return log98_ui(2) + neg_log_r.scaled(n + 1);
    }
}

}  // namespace

GrowthBound verify_growth(const CoefficientTable& q0, const Rat& r, unsigned long N) {
    if (r <= 0 || r > 1) throw std::invalid_argument("verify_growth: need 0 < r <= 1");
    if (q0.order < N) throw std::invalid_argument("verify_growth: table order < N");
    const Int& num = r.get_num();
    const Int& den = r.get_den();
    Int num_pow = 1, den_pow = 1;
    for (unsigned long n = 1; n <= N; ++n) {
        num_pow *= num;
        den_pow *= den;
        // q0(n) <= r^{-n}  <=>  q0(n) num^n <= den^n (q0 integral for our families)
        if (q0.at(n) * Rat(num_pow) > Rat(den_pow))
            throw std::runtime_error("growth bound violated at n=" + std::to_string(n));
    }
    return GrowthBound{r, N};
}

RealBound threshold_general(unsigned long n, const Rat& r, const CoefficientTable& q0) {
    if (r <= 0 || r > 1) throw std::invalid_argument("threshold_general: need 0 < r <= 1");
    return threshold_interval(n, r, &q0).to_bound();
}

RealBound threshold_psi(unsigned long n) {
    if (n < 3) throw std::invalid_argument("threshold_psi: n must be >= 3");
    Interval l2 = log98_ui(2);
    Interval D;
    if (n == 5) {
        D = log98_ui(512);
    } else {
        switch (n % 3) {
            case 0: D = l2.scaled(2 * n); break;
            case 1: D = l2.scaled(2 * n) + log98_ui(3) - log98_ui(n + 2); break;
            default: D = l2.scaled(n + 2); break;
        }
    }
    return D.to_bound();
}

RealBound threshold_sigma(unsigned long n) {
    if (n < 3) throw std::invalid_argument("threshold_sigma: n must be >= 3");
    Interval l3 = log98_ui(3);
    Interval D;
    if (n == 5) {
        D = log98_ui(3888);
    } else {
        switch (n % 3) {
            case 0: D = l3.scaled(2 * n); break;
            case 1: D = l3.scaled(2 * n + 1) - log98_ui(n + 2); break;
            default: D = log98_ui(2) + l3.scaled(n + 1); break;
        }
    }
    return D.to_bound();
}

ThresholdReport verify_theorem(FamilyKind family, unsigned long n, unsigned long probe_count) {
    if (family != FamilyKind::SigmaD && family != FamilyKind::PsiD)
        throw std::invalid_argument("verify_theorem: family must be sigma or psi");
    if (n < 3) throw std::invalid_argument("verify_theorem: n must be >= 3");
    if (probe_count < 1) throw std::invalid_argument("verify_theorem: probe_count must be >= 1");

    const Rat r = family == FamilyKind::PsiD ? Rat(1, 2) : Rat(1, 3);
    FamilySpec spec0{family, 0, {}};
    CoefficientTable q0 = q_table(spec0, std::max<unsigned long>(n + 1, 6));
    verify_growth(q0, r, n + 1);  // the theorem hypothesis, checked, not assumed

    ThresholdReport rep;
    rep.n = n;
    rep.congruence_case = n % 3;
    rep.D = threshold_general(n, r, q0);
    rep.predicted_exception = n % 3 == 1;
    rep.verdict = true;
    for (unsigned long j = 0; j < probe_count; ++j) {
        unsigned long d = static_cast<unsigned long>(rep.D.first_above) + j;
        FamilySpec spec{family, d, {}};
        CoefficientTable qd = q_table(spec, n + 1);
        Rat delta = qd.at(n) * qd.at(n) - qd.at(n - 1) * qd.at(n + 1);
        int s = sgn(delta);
        rep.probe_degrees.push_back(d);
        rep.observed.push_back(s);
        if ((s < 0) != rep.predicted_exception) rep.verdict = false;
    }
    return rep;
}

std::string report_to_json(const ThresholdReport& rep, FamilyKind family) {
    nlohmann::ordered_json j;
    j["family"] = family_name(family);
    j["n"] = rep.n;
    j["congruence_case"] = rep.congruence_case;
    j["special_case_n5"] = rep.n == 5;
    j["D"] = {{"upper", rep.D.decimal},
              {"approx", rep.D.hi},
              {"error_bound", rep.D.width()}};
    j["probe_degrees"] = rep.probe_degrees;
    j["observed_signs"] = rep.observed;
    j["predicted_exception"] = rep.predicted_exception;
    j["verdict"] = rep.verdict ? "pass" : "fail";
    return j.dump(2);
}

}  // namespace logcon
