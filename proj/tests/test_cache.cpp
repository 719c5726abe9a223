#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "logcon/cache.hpp"

using namespace logcon;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const char* name) : path(std::string("/tmp/logcon_test_") + name) {
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cache round trip") {
    TempFile tmp("roundtrip");
    CoefficientCache cache(tmp.path);
    FamilySpec spec = FamilySpec::sigma(0);

    CHECK_FALSE(cache.lookup(spec, SeriesKind::Exponential, 10).has_value());
    CoefficientTable t = cache.get_or_build(spec, SeriesKind::Exponential, 10);
    CHECK(t.at(2) == Rat(3, 2));

    auto hit = cache.lookup(spec, SeriesKind::Exponential, 10);
    REQUIRE(hit.has_value());
    CHECK(hit->coeffs == t.coeffs);  // exact decimal round trip, no floats

    // shorter prefix served from the longer entry
    auto prefix = cache.lookup(spec, SeriesKind::Exponential, 5);
    REQUIRE(prefix.has_value());
    CHECK(prefix->order == 5);
    CHECK(prefix->coeffs == std::vector<Rat>(t.coeffs.begin(), t.coeffs.begin() + 6));

    // different kind/degree miss
    CHECK_FALSE(cache.lookup(spec, SeriesKind::Geometric, 5).has_value());
    CHECK_FALSE(cache.lookup(FamilySpec::sigma(1), SeriesKind::Exponential, 5).has_value());
}

TEST_CASE("corrupted checksum is treated as absent") {
    TempFile tmp("corrupt");
    CoefficientCache cache(tmp.path);
    FamilySpec spec = FamilySpec::psi(1);
    cache.get_or_build(spec, SeriesKind::Geometric, 8);

    // flip one payload byte
    std::fstream f(tmp.path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekg(0, std::ios::end);
    auto size = f.tellg();
    f.seekp(static_cast<std::streamoff>(size) - 3);
    f.put('9');
    f.close();

    CHECK_FALSE(cache.lookup(spec, SeriesKind::Geometric, 8).has_value());

    // get_or_build recovers by recomputing and appending a fresh entry
    CoefficientTable t = cache.get_or_build(spec, SeriesKind::Geometric, 8);
    CHECK(t.at(5) == Rat(55));
    CHECK(cache.lookup(spec, SeriesKind::Geometric, 8).has_value());
}

TEST_CASE("cached and uncached results are identical") {
    TempFile tmp("transparent");
    CoefficientCache cache(tmp.path);
    for (unsigned long d : {0ul, 2ul}) {
        FamilySpec spec = FamilySpec::sigma(d);
        CHECK(cache.get_or_build(spec, SeriesKind::Geometric, 20).coeffs ==
              q_table(spec, 20).coeffs);
        CHECK(cache.get_or_build(spec, SeriesKind::Exponential, 20).coeffs ==
              p_table(spec, 20).coeffs);
    }
}
