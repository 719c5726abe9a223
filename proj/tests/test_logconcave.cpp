#include <doctest.h>

#include "logcon/logconcave.hpp"

using namespace logcon;

namespace {

std::vector<unsigned long> odds_up_to(unsigned long k_max) {
    std::vector<unsigned long> v;
    for (unsigned long k = 0; k <= k_max; ++k) v.push_back(2 * k + 1);
    return v;
}

}  // namespace

TEST_CASE("delta_at basics") {
    CoefficientTable flat = p_table(FamilySpec::psi(0), 10);
    for (unsigned long n = 1; n <= 9; ++n) {
        DeltaRecord rec = delta_at(flat, n);
        CHECK(rec.delta == 0);
        CHECK_FALSE(rec.is_exception);  // delta = 0 is log-concave
    }

    for (unsigned long d = 1; d <= 6; ++d) {
        CoefficientTable t = p_table(FamilySpec::psi(d), 2);
        DeltaRecord rec = delta_at(t, 1);
        CHECK(rec.delta == Rat(1) - Rat(1 + pow_ui(2, d), 2));
        CHECK(rec.is_exception);
    }

    DeltaRecord rec = delta_at(q_table(FamilySpec::sigma(5), 11), 10);
    CHECK(rec.is_exception);

    CHECK_THROWS_AS(delta_at(flat, 0), std::out_of_range);
    CHECK_THROWS_AS(delta_at(flat, 10), std::out_of_range);
}

TEST_CASE("delta recomputes from the three stored coefficients") {
    CoefficientTable t = q_table(FamilySpec::sigma(2), 30);
    for (unsigned long n = 1; n <= 29; ++n) {
        DeltaRecord rec = delta_at(t, n);
        CHECK(rec.delta == rec.a_mid * rec.a_mid - rec.a_prev * rec.a_next);
        CHECK(rec.is_exception == (rec.delta < 0));
    }
}

TEST_CASE("exception sets from the literature") {
    CHECK(exceptions(q_table(FamilySpec::psi(0), 501), 500).exceptions ==
          std::vector<unsigned long>{1});
    CHECK(exceptions(p_table(FamilySpec::sigma(1), 101), 100).exceptions == odds_up_to(12));
    CHECK(exceptions(p_table(FamilySpec::sigma(2), 101), 100).exceptions == odds_up_to(5));
    CHECK_THROWS_AS(exceptions(p_table(FamilySpec::sigma(1), 10), 10), std::invalid_argument);
}

TEST_CASE("n=2 identity: delta(q,2) = g_d(2)^2 - g_d(3), never an exception") {
    for (unsigned long d = 0; d <= 20; ++d) {
        for (FamilySpec spec : {FamilySpec::sigma(d), FamilySpec::psi(d)}) {
            DeltaRecord rec = delta_at(q_table(spec, 3), 2);
            Int g2 = g_value(spec, 2), g3 = g_value(spec, 3);
            CHECK(rec.delta == Rat(g2 * g2 - g3));
            CHECK_FALSE(rec.is_exception);
        }
    }
}

TEST_CASE("geometric sigma_d, d <= 4: every odd n is an exception (small scan)") {
    for (unsigned long d = 0; d <= 4; ++d) {
        CoefficientTable t = q_table(FamilySpec::sigma(d), 201);
        for (unsigned long n = 1; n <= 200; n += 2) CHECK(delta_at(t, n).is_exception);
    }
}

namespace {

// Exception landscapes transcribed from the published tables, n <= 14, d <= 17.
using Row = std::vector<unsigned long>;
const std::vector<Row> kSigmaExp = {
    /* 1*/ {0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17},
    /* 2*/ {},
    /* 3*/ {0,1,2,3},
    /* 4*/ {6,7,8,9,10,11,12,13,14,15,16,17},
    /* 5*/ {0,1,2,3,4,5,6,7,8,9},
    /* 6*/ {},
    /* 7*/ {0,1,2,3,11,12,13,14,15,16,17},
    /* 8*/ {9,10,11,12,13,14,15,16,17},
    /* 9*/ {0,1,2},
    /*10*/ {16,17},
    /*11*/ {0,1,2,12,13,14,15,16,17},
    /*12*/ {},
    /*13*/ {0,1},
    /*14*/ {15,16,17}};
const std::vector<Row> kPsiExp = {
    {1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17},
    {},
    {},
    {5,6,7,8,9,10,11,12,13,14,15,16,17},
    {},
    {},
    {11,12,13,14,15,16,17},
    {9,10,11,12,13,14,15,16,17},
    {},
    {16,17},
    {12,13,14,15,16,17},
    {},
    {},
    {15,16,17}};
const std::vector<Row> kSigmaGeo = {
    {0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17},
    {},
    {0,1,2,3,4},
    {5,6,7,8,9,10,11,12,13,14,15,16,17},
    {0,1,2,3,4,5},
    {},
    {0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17},
    {},
    {0,1,2,3,4},
    {5,6,7,8,9,10,11,12,13,14,15,16,17},
    {0,1,2,3,4,5,6},
    {},
    {0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17},
    {5,6}};
const std::vector<Row> kPsiGeo = {
    {0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17},
    {},
    {},
    {2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17},
    {2,3},
    {2},
    {4,5,6,7,8,9,10,11,12,13,14,15,16,17},
    {3,4,5},
    {3},
    {2,5,6,7,8,9,10,11,12,13,14,15,16,17},
    {2,4,5,6},
    {2,3},
    {3,5,6,7,8,9,10,11,12,13,14,15,16,17},
    {4,5,6}};

void check_grid(const LandscapeGrid& grid, const std::vector<Row>& expected) {
    REQUIRE(grid.n_max == expected.size());
    for (unsigned long n = 1; n <= grid.n_max; ++n) {
        const Row& row = expected[n - 1];
        for (unsigned long d = 0; d <= grid.d_max; ++d) {
            bool want = std::find(row.begin(), row.end(), d) != row.end();
            INFO("n=" << n << " d=" << d);
            CHECK(grid.cell(n, d) == want);
        }
    }
}

}  // namespace

TEST_CASE("landscape grids match the published tables") {
    check_grid(landscape(SeriesKind::Exponential, FamilyKind::SigmaD, 14, 17), kSigmaExp);
    check_grid(landscape(SeriesKind::Exponential, FamilyKind::PsiD, 14, 17), kPsiExp);
    check_grid(landscape(SeriesKind::Geometric, FamilyKind::SigmaD, 14, 17), kSigmaGeo);
    check_grid(landscape(SeriesKind::Geometric, FamilyKind::PsiD, 14, 17), kPsiGeo);
}

TEST_CASE("grid cells agree with per-degree exception scans") {
    LandscapeGrid grid = landscape(SeriesKind::Geometric, FamilyKind::PsiD, 10, 6);
    for (unsigned long d = 0; d <= 6; ++d) {
        ExceptionSet set = exceptions(q_table(FamilySpec::psi(d), 11), 10);
        for (unsigned long n = 1; n <= 10; ++n)
            CHECK(grid.cell(n, d) == set.contains(n));
    }
}

TEST_CASE("render_grid formats") {
    LandscapeGrid tiny = landscape(SeriesKind::Exponential, FamilyKind::PsiD, 1, 0);
    std::string ascii = render_grid(tiny, GridFormat::Ascii);
    CHECK(ascii == "n\\d |  0\n----+---\n  1 |\n");  // single non-exception cell

    LandscapeGrid psi_exp = landscape(SeriesKind::Exponential, FamilyKind::PsiD, 14, 17);
    std::string text = render_grid(psi_exp, GridFormat::Ascii);
    CHECK(text.find("\n  3 |\n") != std::string::npos);  // row 3 entirely blank

    LandscapeGrid sigma_exp = landscape(SeriesKind::Exponential, FamilyKind::SigmaD, 14, 17);
    std::string json = render_grid(sigma_exp, GridFormat::Json);
    CHECK(json.find("{\"n\":5,\"d\":9}") == std::string::npos);  // pretty-printed
    CHECK(json.find("\"n\": 5") != std::string::npos);
    // row 5: d=9 present, d=10 absent
    LandscapeGrid row5 = landscape(SeriesKind::Exponential, FamilyKind::SigmaD, 5, 17);
    CHECK(row5.cell(5, 9));
    CHECK_FALSE(row5.cell(5, 10));

    std::string csv = render_grid(tiny, GridFormat::Csv);
    CHECK(csv == "n,0\n1,0\n");
}
