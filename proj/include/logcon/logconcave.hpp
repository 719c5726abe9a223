#ifndef LOGCON_LOGCONCAVE_HPP
#define LOGCON_LOGCONCAVE_HPP

#include <string>
#include <vector>

#include "logcon/series.hpp"

namespace logcon {

/// One log-concavity check: delta = a_n^2 - a_{n-1} a_{n+1}.
/// n is an exception iff delta < 0 (strict; delta = 0 is log-concave).
struct DeltaRecord {
    unsigned long n = 0;
    Rat a_prev, a_mid, a_next;
    Rat delta;
    bool is_exception = false;
};

struct ExceptionSet {
    FamilySpec family;
    SeriesKind kind = SeriesKind::Exponential;
    unsigned long scanned_max = 0;
    std::vector<unsigned long> exceptions;  // sorted, duplicate-free

    bool contains(unsigned long n) const;
};

/// Boolean exception matrix over 1 <= n <= n_max, 0 <= d <= d_max.
struct LandscapeGrid {
    SeriesKind kind = SeriesKind::Exponential;
    FamilyKind family_kind = FamilyKind::SigmaD;
    unsigned long n_max = 0;
    unsigned long d_max = 0;
    std::vector<std::vector<bool>> cells;  // cells[n-1][d]

    bool cell(unsigned long n, unsigned long d) const { return cells.at(n - 1).at(d); }
};

enum class GridFormat { Ascii, Json, Csv };

/// Requires 1 <= n <= table.order - 1 (a_0 = 1 is the left neighbor at n = 1).
DeltaRecord delta_at(const CoefficientTable& table, unsigned long n);

/// All exceptions in [1, N]; requires table.order >= N + 1.
ExceptionSet exceptions(const CoefficientTable& table, unsigned long N);

LandscapeGrid landscape(SeriesKind kind, FamilyKind family_kind,
                        unsigned long n_max, unsigned long d_max);

std::string render_grid(const LandscapeGrid& grid, GridFormat format);

}  // namespace logcon

#endif
