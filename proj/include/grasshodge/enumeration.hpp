#ifndef GRASSHODGE_ENUMERATION_HPP
#define GRASSHODGE_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "grasshodge/partition.hpp"

namespace grasshodge {

/// Parameters of a nonvanishing query: does a t-core, (k,n-k)-bounded
/// partition of size j with interior size i exist?
struct KnijtQuery {
    std::int64_t k = 1;
    std::int64_t n = 2;
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::int64_t t = 0;

    [[nodiscard]] std::int64_t bigN() const { return k * (n - k); }

    /// Throws DomainError unless 1 <= k < n, 0 <= i <= j <= k(n-k), t >= 0.
    void validate() const;
};

/// coeffs[m] = number of t-core partitions of m.
struct CoreCountSeries {
    std::int64_t t = 1;
    std::vector<std::int64_t> coeffs;
};

/// Node cap for enumerations.  Exceeding it raises LimitExceeded rather
/// than returning a partial result.
struct EnumLimits {
    std::int64_t nodeCap = 100'000'000;
};

/// Visitor; return false to stop early.
using PartitionVisitor = std::function<bool(const Partition&)>;

/// C(a, b), saturating at INT64_MAX on overflow.
std::int64_t binomial_or_max(std::int64_t a, std::int64_t b);

/// Streams every partition inside `rect` exactly once, in colexicographic
/// order of the zero-padded part vectors: fewer rows first, and among
/// partitions with the same row count, ascending lexicographic order of
/// the parts read bottom row first.  Yields C(width+height, width) values.
/// Throws LimitExceeded up front when that count exceeds the node cap.
void for_each_bounded(const Rectangle& rect, const PartitionVisitor& visit,
                      const EnumLimits& limits = {});

/// Same stream restricted to t-cores.  Generating rows bottom-up makes
/// every placed row's hooks final, so subtrees containing a hook equal to
/// t are pruned as soon as the offending row is proposed.
void for_each_tcore_bounded(const Rectangle& rect, std::int64_t t,
                            const PartitionVisitor& visit,
                            const EnumLimits& limits = {});

std::vector<Partition> list_bounded(const Rectangle& rect,
                                    const EnumLimits& limits = {});
std::vector<Partition> list_tcore_bounded(const Rectangle& rect, std::int64_t t,
                                          const EnumLimits& limits = {});

/// General pruned scan: every partition with parts <= maxWidth, at most
/// maxRows rows and size in [minSize, maxSize], restricted to t-cores when
/// t >= 1.  Visits each partition exactly once in a deterministic order
/// (not the colex order of the bounded streams).
struct ScanSpec {
    std::int64_t maxWidth = 0;
    std::int64_t maxRows = 0;
    std::int64_t t = 0; // 0 disables the hook filter
    std::int64_t minSize = 0;
    std::int64_t maxSize = -1; // -1: no upper bound beyond the rectangle
};
void scan_partitions(const ScanSpec& spec, const PartitionVisitor& visit,
                     const EnumLimits& limits = {});

/// Up to `limit` t-core, (k,n-k)-bounded partitions of size j with interior
/// size i, sorted lexicographically by parts.  Empty iff none exists.
std::vector<Partition> knijt_witnesses(const KnijtQuery& q, std::int64_t limit,
                                       const EnumLimits& limits = {});

/// Number of t-core partitions of size j, by direct enumeration (a j-by-j
/// rectangle is always large enough).
std::int64_t count_tcore_of_size(std::int64_t t, std::int64_t j,
                                 const EnumLimits& limits = {});

/// count_tcore_of_size for every size 0..maxN in a single enumeration pass.
std::vector<std::int64_t> count_tcores_by_size(std::int64_t t, std::int64_t maxN,
                                               const EnumLimits& limits = {});

/// Coefficients 0..maxN of prod_{m>=1} (1-x^{tm})^t / (1-x^m), computed by
/// truncated power-series arithmetic over checked 64-bit integers.
CoreCountSeries core_count_series(std::int64_t t, std::int64_t maxN);

} // namespace grasshodge

#endif
