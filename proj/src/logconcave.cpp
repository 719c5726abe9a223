#include "logcon/logconcave.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace logcon {

bool ExceptionSet::contains(unsigned long n) const {
    return std::binary_search(exceptions.begin(), exceptions.end(), n);
}

DeltaRecord delta_at(const CoefficientTable& table, unsigned long n) {
    if (n < 1 || n + 1 > table.order)
        throw std::out_of_range("delta_at: need 1 <= n <= order-1");
    DeltaRecord rec;
    rec.n = n;
    rec.a_prev = table.at(n - 1);
    rec.a_mid = table.at(n);
    rec.a_next = table.at(n + 1);
    rec.delta = rec.a_mid * rec.a_mid - rec.a_prev * rec.a_next;
    rec.is_exception = rec.delta < 0;
    return rec;
}

ExceptionSet exceptions(const CoefficientTable& table, unsigned long N) {
    if (table.order < N + 1)
        throw std::invalid_argument("exceptions: table order must be >= N+1");
    ExceptionSet set;
    set.family = table.family;
    set.kind = table.kind;
    set.scanned_max = N;
    for (unsigned long n = 1; n <= N; ++n)
        if (delta_at(table, n).is_exception) set.exceptions.push_back(n);
    return set;
}

LandscapeGrid landscape(SeriesKind kind, FamilyKind family_kind,
                        unsigned long n_max, unsigned long d_max) {
    if (n_max < 1) throw std::invalid_argument("landscape: n_max must be >= 1");
    LandscapeGrid grid;
    grid.kind = kind;
    grid.family_kind = family_kind;
    grid.n_max = n_max;
    grid.d_max = d_max;
    grid.cells.assign(n_max, std::vector<bool>(d_max + 1, false));
    // One table per degree; table construction dominates.
    for (unsigned long d = 0; d <= d_max; ++d) {
        FamilySpec spec{family_kind, d, {}};
        CoefficientTable table = kind == SeriesKind::Geometric
                                     ? q_table(spec, n_max + 1)
                                     : p_table(spec, n_max + 1);
        ExceptionSet col = exceptions(table, n_max);
        for (unsigned long n : col.exceptions) grid.cells[n - 1][d] = true;
    }
    return grid;
}

namespace {

std::string rtrim(const std::string& s) {
    auto end = s.find_last_not_of(' ');
    return end == std::string::npos ? std::string() : s.substr(0, end + 1);
}

std::string render_ascii(const LandscapeGrid& g) {
    std::ostringstream out;
    std::ostringstream head;
    head << "n\\d |";
    for (unsigned long d = 0; d <= g.d_max; ++d) {
        std::string label = std::to_string(d);
        head << std::string(3 - label.size(), ' ') << label;
    }
    out << head.str() << '\n';
    out << "----+" << std::string(3 * (g.d_max + 1), '-') << '\n';
    for (unsigned long n = 1; n <= g.n_max; ++n) {
        std::string label = std::to_string(n);
        std::ostringstream row;
        row << std::string(3 - label.size(), ' ') << label << " |";
        for (unsigned long d = 0; d <= g.d_max; ++d)
            row << (g.cell(n, d) ? "  *" : "   ");
        out << rtrim(row.str()) << '\n';
    }
    return out.str();
}

std::string render_json(const LandscapeGrid& g) {
    nlohmann::ordered_json j;
    j["family"] = family_name(g.family_kind);
    j["kind"] = series_kind_name(g.kind);
    j["n_range"] = {1, g.n_max};
    j["d_range"] = {0, g.d_max};
    auto cells = nlohmann::json::array();
    for (unsigned long n = 1; n <= g.n_max; ++n)
        for (unsigned long d = 0; d <= g.d_max; ++d)
            if (g.cell(n, d)) cells.push_back({{"n", n}, {"d", d}});
    j["cells"] = std::move(cells);
    return j.dump(2) + "\n";
}

std::string render_csv(const LandscapeGrid& g) {
    std::ostringstream out;
    out << "n";
    for (unsigned long d = 0; d <= g.d_max; ++d) out << ',' << d;
    out << '\n';
    for (unsigned long n = 1; n <= g.n_max; ++n) {
        out << n;
        for (unsigned long d = 0; d <= g.d_max; ++d) out << ',' << (g.cell(n, d) ? 1 : 0);
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string render_grid(const LandscapeGrid& grid, GridFormat format) {
    switch (format) {
        case GridFormat::Ascii: return render_ascii(grid);
        case GridFormat::Json: return render_json(grid);
        case GridFormat::Csv: return render_csv(grid);
    }
    throw std::logic_error("unreachable");
}

}  // namespace logcon
