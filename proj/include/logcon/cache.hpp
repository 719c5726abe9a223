#ifndef LOGCON_CACHE_HPP
#define LOGCON_CACHE_HPP

#include <optional>
#include <string>

#include "logcon/series.hpp"

namespace logcon {

/// Append-only coefficient cache, one file, length-prefixed entries.
///
/// Entry layout (text header, raw payload):
///   LOGCON1 <family> <d> <kind> <N> <payload_bytes> <fnv1a64_hex>\n
///   <payload: one "num/den\n" decimal line per coefficient>
/// A checksum mismatch makes the entry invisible; it never aborts a scan.
class CoefficientCache {
public:
    explicit CoefficientCache(std::string path) : path_(std::move(path)) {}

    /// Best usable entry: same (family kind, d, series kind), stored order
    /// >= N. Returns the table truncated to order N.
    std::optional<CoefficientTable> lookup(const FamilySpec& spec, SeriesKind kind,
                                           unsigned long N) const;

    /// Appends the table as a new entry (single atomic append).
    void store(const CoefficientTable& table) const;

    /// lookup, else build(), store, return. Sigma/Psi families only.
    CoefficientTable get_or_build(const FamilySpec& spec, SeriesKind kind, unsigned long N) const;

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace logcon

#endif
