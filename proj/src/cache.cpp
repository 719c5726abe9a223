#include "logcon/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace logcon {

namespace {

constexpr const char* kMagic = "LOGCON1";

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string payload_of(const CoefficientTable& t) {
    std::ostringstream out;
    for (const Rat& c : t.coeffs)
        out << c.get_num().get_str() << '/' << c.get_den().get_str() << '\n';
    return out.str();
}

}  // namespace

std::optional<CoefficientTable> CoefficientCache::lookup(const FamilySpec& spec, SeriesKind kind,
                                                         unsigned long N) const {
    std::ifstream in(path_, std::ios::binary);
    if (!in) return std::nullopt;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream head(line);
        std::string magic, fam, kind_str, checksum;
        unsigned long d = 0, order = 0;
        std::size_t bytes = 0;
        if (!(head >> magic >> fam >> d >> kind_str >> order >> bytes >> checksum) ||
            magic != kMagic)
            break;  // malformed header: rest of the file is unusable
        std::string payload(bytes, '\0');
        in.read(payload.data(), static_cast<std::streamsize>(bytes));
        if (in.gcount() != static_cast<std::streamsize>(bytes)) break;

        bool match = fam == family_name(spec.kind) && d == spec.d &&
                     kind_str == series_kind_name(kind) && order >= N;
        if (!match) continue;
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(fnv1a64(payload)));
        if (checksum != buf) continue;  // corrupt entry: treat as absent

        CoefficientTable t;
        t.family = FamilySpec{spec.kind, spec.d, {}};
        t.kind = kind;
        t.order = N;
        t.coeffs.reserve(N + 1);
        std::istringstream body(payload);
        std::string coeff;
        bool ok = true;
        for (unsigned long i = 0; i <= N; ++i) {
            if (!std::getline(body, coeff)) { ok = false; break; }
            auto slash = coeff.find('/');
            if (slash == std::string::npos) { ok = false; break; }
            Rat q(Int(coeff.substr(0, slash)), Int(coeff.substr(slash + 1)));
            q.canonicalize();
            t.coeffs.push_back(std::move(q));
        }
        if (ok) return t;
    }
    return std::nullopt;
}

void CoefficientCache::store(const CoefficientTable& table) const {
    std::string payload = payload_of(table);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(payload)));
    std::ostringstream entry;
    entry << kMagic << ' ' << family_name(table.family.kind) << ' ' << table.family.d << ' '
          << series_kind_name(table.kind) << ' ' << table.order << ' ' << payload.size() << ' '
          << buf << '\n'
          << payload;
    // Single append keeps concurrent writers from interleaving partial entries.
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (!out) throw std::runtime_error("cache: cannot open " + path_ + " for append");
    std::string data = entry.str();
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("cache: write failed for " + path_);
}

CoefficientTable CoefficientCache::get_or_build(const FamilySpec& spec, SeriesKind kind,
                                                unsigned long N) const {
    if (auto hit = lookup(spec, kind, N)) return *std::move(hit);
    CoefficientTable t =
        kind == SeriesKind::Geometric ? q_table(spec, N) : p_table(spec, N);
    store(t);
    return t;
}

}  // namespace logcon
