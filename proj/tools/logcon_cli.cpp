#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <set>

#include "logcon/cache.hpp"
#include "logcon/logconcave.hpp"
#include "logcon/oracle.hpp"
#include "logcon/series.hpp"
#include "logcon/thresholds.hpp"

namespace {

using namespace logcon;

constexpr const char* kVersion = "logcon 1.0.0";

FamilyKind parse_family(const std::string& s) {
    if (s == "sigma") return FamilyKind::SigmaD;
    if (s == "psi") return FamilyKind::PsiD;
    throw CLI::ValidationError("--family must be sigma or psi");
}

SeriesKind parse_kind(const std::string& s) {
    if (s == "exp") return SeriesKind::Exponential;
    if (s == "geo") return SeriesKind::Geometric;
    throw CLI::ValidationError("--kind must be exp or geo");
}

CoefficientTable build_table(const FamilySpec& spec, SeriesKind kind, unsigned long N,
                             const std::string& cache_path) {
    if (!cache_path.empty())
        return CoefficientCache(cache_path).get_or_build(spec, kind, N);
    return kind == SeriesKind::Geometric ? q_table(spec, N) : p_table(spec, N);
}

int cmd_coeffs(const std::string& family, const std::string& kind, unsigned long d,
               unsigned long n, const std::string& format, const std::string& cache_path) {
    FamilySpec spec{parse_family(family), d, {}};
    CoefficientTable t = build_table(spec, parse_kind(kind), n, cache_path);
    if (format == "plain") {
        for (unsigned long i = 0; i <= n; ++i)
            std::cout << (i ? "," : "") << to_string(t.at(i));
        std::cout << '\n';
    } else if (format == "csv") {
        std::cout << "index,num,den\n";
        for (unsigned long i = 0; i <= n; ++i)
            std::cout << i << ',' << t.at(i).get_num() << ',' << t.at(i).get_den() << '\n';
    } else if (format == "json") {
        nlohmann::ordered_json j;
        j["family"] = family;
        j["kind"] = kind;
        j["d"] = d;
        j["n"] = n;
        auto arr = nlohmann::json::array();
        for (unsigned long i = 0; i <= n; ++i)
            arr.push_back({{"num", t.at(i).get_num().get_str()},
                           {"den", t.at(i).get_den().get_str()}});
        j["coeffs"] = std::move(arr);
        std::cout << j.dump(2) << '\n';
    } else {
        throw CLI::ValidationError("--format must be plain, json or csv");
    }
    return 0;
}

int cmd_exceptions(const std::string& family, const std::string& kind, unsigned long d,
                   unsigned long max_n, const std::string& format,
                   const std::string& cache_path) {
    FamilySpec spec{parse_family(family), d, {}};
    CoefficientTable t = build_table(spec, parse_kind(kind), max_n + 1, cache_path);
    ExceptionSet set = exceptions(t, max_n);
    if (format == "plain") {
        std::cout << '{';
        for (std::size_t i = 0; i < set.exceptions.size(); ++i)
            std::cout << (i ? "," : "") << set.exceptions[i];
        std::cout << "}\n";
    } else if (format == "csv") {
        std::cout << "n\n";
        for (unsigned long n : set.exceptions) std::cout << n << '\n';
    } else if (format == "json") {
        nlohmann::ordered_json j;
        j["family"] = family;
        j["kind"] = kind;
        j["d"] = d;
        j["n_range"] = {1, max_n};
        j["exceptions"] = set.exceptions;
        std::cout << j.dump(2) << '\n';
    } else {
        throw CLI::ValidationError("--format must be plain, json or csv");
    }
    return 0;
}

int cmd_landscape(const std::string& family, const std::string& kind, unsigned long max_n,
                  unsigned long max_d, const std::string& format) {
    LandscapeGrid grid = landscape(parse_kind(kind), parse_family(family), max_n, max_d);
    GridFormat f;
    if (format == "ascii") f = GridFormat::Ascii;
    else if (format == "json") f = GridFormat::Json;
    else if (format == "csv") f = GridFormat::Csv;
    else throw CLI::ValidationError("--format must be ascii, json or csv");
    std::cout << render_grid(grid, f);
    return 0;
}

int cmd_verify(const std::string& family, unsigned long n_from, unsigned long n_to,
               unsigned long probes) {
    if (n_from < 3) throw CLI::ValidationError("--n-from must be >= 3");
    if (n_to < n_from) throw CLI::ValidationError("--n-to must be >= --n-from");
    FamilyKind fam = parse_family(family);
    bool all_pass = true;
    std::cout << "[\n";
    for (unsigned long n = n_from; n <= n_to; ++n) {
        ThresholdReport rep = verify_theorem(fam, n, probes);
        all_pass = all_pass && rep.verdict;
        std::cout << report_to_json(rep, fam) << (n < n_to ? ",\n" : "\n");
    }
    std::cout << "]\n";
    return all_pass ? 0 : 1;
}

int cmd_oracle(unsigned long n_max, const std::string& family, unsigned long d,
               unsigned long q_max) {
    OracleResult lemma1 = check_lemma1(n_max);
    std::cout << "lemma1 n<=" << n_max << ": " << (lemma1.pass ? "pass" : "FAIL " + lemma1.detail)
              << '\n';
    bool ok = lemma1.pass;
    if (!family.empty()) {
        FamilySpec spec{parse_family(family), d, {}};
        CoefficientTable t = q_table(spec, q_max);
        bool q_ok = true;
        for (unsigned long n = 1; n <= q_max; ++n) {
            if (Rat(composition_q(spec, n)) != t.at(n)) {
                std::cout << "composition sum mismatch at n=" << n << '\n';
                q_ok = false;
                break;
            }
        }
        std::cout << "composition sum " << family << " d=" << d << " n<=" << q_max << ": "
                  << (q_ok ? "pass" : "FAIL") << '\n';
        ok = ok && q_ok;
    }
    return ok ? 0 : 1;
}

int cmd_bounds(const std::string& family, unsigned long max_n, unsigned long max_d) {
    FamilyKind fam = parse_family(family);
    Rat r = fam == FamilyKind::PsiD ? Rat(1, 2) : Rat(1, 3);
    FamilySpec spec0{fam, 0, {}};
    CoefficientTable q0 = q_table(spec0, max_n);
    GrowthBound gb = verify_growth(q0, r, max_n);
    std::cout << "growth q_0(n) <= (" << r.get_den() << '/' << r.get_num() << ")^n verified to n="
              << gb.verified_up_to << '\n';
    for (unsigned long d = 0; d <= max_d; ++d) {
        for (unsigned long n = 2; n <= max_n; ++n) {
            OracleResult res = check_lemma2(FamilySpec{fam, d, {}}, n);
            if (!res.pass) {
                std::cout << "sandwich FAIL: " << res.detail << '\n';
                return 1;
            }
        }
    }
    std::cout << "sandwich bounds pass for " << family << ", 2<=n<=" << max_n << ", 0<=d<="
              << max_d << '\n';
    return 0;
}

std::set<unsigned long> conjectured_sigma0_exceptions(unsigned long max_n) {
    std::set<unsigned long> s;
    for (unsigned long k = 0; k <= 371; ++k) {
        unsigned long n = 2 * k + 1;
        if (n <= max_n) s.insert(n);
    }
    for (unsigned long n : {717ul, 723ul, 729ul, 735ul, 741ul}) s.erase(n);
    return s;
}

int cmd_challenge(unsigned long id, std::optional<unsigned long> max_n_opt,
                  const std::string& cache_path) {
    switch (id) {
        case 1: {
            unsigned long max_n = max_n_opt.value_or(1000);
            FamilySpec spec = FamilySpec::sigma(0);
            CoefficientTable t = build_table(spec, SeriesKind::Exponential, max_n + 1, cache_path);
            ExceptionSet found = exceptions(t, max_n);
            std::set<unsigned long> expected = conjectured_sigma0_exceptions(max_n);
            std::set<unsigned long> got(found.exceptions.begin(), found.exceptions.end());
            std::cout << "exceptions found: " << got.size() << ", conjectured: " << expected.size()
                      << '\n';
            bool same = got == expected;
            if (!same) {
                for (unsigned long n : got)
                    if (!expected.count(n)) std::cout << "unexpected exception: " << n << '\n';
                for (unsigned long n : expected)
                    if (!got.count(n)) std::cout << "missing exception: " << n << '\n';
            }
            std::cout << "diff " << (same ? "empty" : "NOT empty") << '\n';
            return same ? 0 : 1;
        }
        case 2: {
            unsigned long max_n = max_n_opt.value_or(1000);
            bool ok = true;
            for (unsigned long d : {0ul, 1ul}) {
                FamilySpec spec = FamilySpec::psi(d);
                CoefficientTable t = build_table(spec, SeriesKind::Geometric, max_n + 1, cache_path);
                ExceptionSet set = exceptions(t, max_n);
                std::cout << "E(q psi_" << d << ") up to " << max_n << " = {";
                for (std::size_t i = 0; i < set.exceptions.size(); ++i)
                    std::cout << (i ? "," : "") << set.exceptions[i];
                std::cout << "}\n";
                ok = ok && set.exceptions == std::vector<unsigned long>{1};
            }
            {
                // psi_2 reported without judgment
                FamilySpec spec = FamilySpec::psi(2);
                CoefficientTable t = build_table(spec, SeriesKind::Geometric, max_n + 1, cache_path);
                ExceptionSet set = exceptions(t, max_n);
                std::cout << "E(q psi_2) up to " << max_n << ": " << set.exceptions.size()
                          << " exceptions, " << max_n - set.exceptions.size()
                          << " non-exceptions\n";
            }
            return ok ? 0 : 1;
        }
        case 3: {
            unsigned long max_n = max_n_opt.value_or(2000);
            CoefficientTable q5 = build_table(FamilySpec::sigma(5), SeriesKind::Geometric, 11,
                                              cache_path);
            bool witness = delta_at(q5, 10).is_exception;
            std::cout << "sigma_5 n=10 exception: " << (witness ? "confirmed" : "NOT confirmed")
                      << '\n';
            bool all_odd = true;
            for (unsigned long d = 0; d <= 4; ++d) {
                FamilySpec spec = FamilySpec::sigma(d);
                CoefficientTable t = build_table(spec, SeriesKind::Geometric, max_n + 1, cache_path);
                for (unsigned long n = 1; n <= max_n; n += 2) {
                    if (!delta_at(t, n).is_exception) {
                        std::cout << "odd non-exception: d=" << d << " n=" << n << '\n';
                        all_odd = false;
                    }
                }
            }
            std::cout << "all odd n <= " << max_n << " exceptional for d <= 4: "
                      << (all_odd ? "yes" : "NO") << '\n';
            return witness && all_odd ? 0 : 1;
        }
        default:
            throw CLI::ValidationError("--id must be 1, 2 or 3");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact log-concavity explorer for divisor-power and pure-power weight families"};
    app.require_subcommand(1);
    bool no_banner = false;
    app.add_flag("--no-banner", no_banner, "Suppress the version banner");
    std::string cache_path;
    app.add_option("--cache", cache_path, "Coefficient cache file");

    std::string family, kind = "exp", format = "plain", land_format = "ascii";
    unsigned long d = 0, n = 10, max_n = 14, max_d = 17;
    unsigned long bounds_n = 30, bounds_d = 8;
    unsigned long n_from = 3, n_to = 24, probes = 3;
    unsigned long oracle_max = 12, q_max = 10;
    unsigned long challenge_id = 1;
    std::optional<unsigned long> challenge_max;

    auto* coeffs = app.add_subcommand("coeffs", "Print coefficients a_0..a_n");
    coeffs->add_option("--family", family, "sigma|psi")->required();
    coeffs->add_option("--kind", kind, "exp|geo")->required();
    coeffs->add_option("--d", d, "degree");
    coeffs->add_option("--n", n, "truncation order");
    coeffs->add_option("--format", format, "plain|json|csv");

    auto* exc = app.add_subcommand("exceptions", "Scan for log-concavity exceptions");
    exc->add_option("--family", family, "sigma|psi")->required();
    exc->add_option("--kind", kind, "exp|geo")->required();
    exc->add_option("--d", d, "degree");
    exc->add_option("--max-n", max_n, "scan bound")->required();
    exc->add_option("--format", format, "plain|json|csv");

    auto* land = app.add_subcommand("landscape", "Render the (n, d) exception grid");
    land->add_option("--family", family, "sigma|psi")->required();
    land->add_option("--kind", kind, "exp|geo")->required();
    land->add_option("--max-n", max_n, "rows 1..max-n");
    land->add_option("--max-d", max_d, "columns 0..max-d");
    land->add_option("--format", land_format, "ascii|json|csv");

    auto* ver = app.add_subcommand("verify", "Verify the mod-3 sign predictions above D(n)");
    ver->add_option("--family", family, "sigma|psi")->required();
    ver->add_option("--n-from", n_from)->required()->check(CLI::Range(3ul, 1000000ul));
    ver->add_option("--n-to", n_to)->required();
    ver->add_option("--probes", probes);

    auto* orc = app.add_subcommand("oracle", "Brute-force composition oracles");
    orc->add_option("--n-max", oracle_max, "max-product check bound");
    orc->add_option("--family", family, "optionally cross-check the composition sum");
    orc->add_option("--d", d, "degree for the composition sum check");
    orc->add_option("--q-max", q_max, "composition sum bound");

    auto* bnd = app.add_subcommand("bounds", "Growth bound and sandwich-bound checks");
    bnd->add_option("--family", family, "sigma|psi")->required();
    bnd->add_option("--max-n", bounds_n);
    bnd->add_option("--max-d", bounds_d);

    auto* cha = app.add_subcommand("challenge", "Reproduce the conjecture checks");
    cha->add_option("--id", challenge_id, "1|2|3")->required();
    cha->add_option("--max-n", challenge_max, "scan bound (default: 1000/1000/2000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!no_banner) std::cerr << kVersion << '\n';
    try {
        if (*coeffs) return cmd_coeffs(family, kind, d, n, format, cache_path);
        if (*exc) return cmd_exceptions(family, kind, d, max_n, format, cache_path);
        if (*land) return cmd_landscape(family, kind, max_n, max_d, land_format);
        if (*ver) return cmd_verify(family, n_from, n_to, probes);
        if (*orc) return cmd_oracle(oracle_max, family, d, q_max);
        if (*bnd) return cmd_bounds(family, bounds_n, bounds_d);
        if (*cha) return cmd_challenge(challenge_id, challenge_max, cache_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
