#include "grasshodge/enumeration.hpp"

#include <algorithm>
#include <limits>

#include "grasshodge/errors.hpp"
#include "grasshodge/tcore.hpp"

namespace grasshodge {

void KnijtQuery::validate() const {
    if (k < 1 || k >= n) {
        throw DomainError("require 1 <= k < n");
    }
    if (i < 0 || i > j || j > bigN()) {
        throw DomainError("require 0 <= i <= j <= k(n-k)");
    }
    if (t < 0) {
        throw DomainError("require t >= 0");
    }
}

std::int64_t binomial_or_max(std::int64_t a, std::int64_t b) {
    constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    std::int64_t result = 1;
    for (std::int64_t d = 1; d <= b; ++d) {
        // result * (a - b + d) / d stays integral at every step
        const std::int64_t num = a - b + d;
        if (result > (kMax / num)) return kMax;
        result = result * num / d;
    }
    return result;
}

namespace {

constexpr std::int64_t kNoCap = std::numeric_limits<std::int64_t>::max();

// Depth-first scan over partitions built one row at a time from the bottom
// of the diagram upward, so the parts vector in hand is weakly increasing.
// Lower rows never change once placed, hence neither do their hook lengths:
// for a box (r, b) every row above row r is at least as long, and
//   h(r, b) = lambda_r - b + #{rows at or below r with length >= b}.
// This makes both the no-hook-equals-t filter and the per-row interior
// contribution exact at the moment a row is proposed, and both the interior
// and the boundary sizes are non-decreasing along any branch.
class SuffixScan {
public:
    std::int64_t maxWidth = 0;
    std::int64_t maxRows = 0;
    std::int64_t t = 0;       // hook filter; never fires for t <= 0
    std::int64_t sizeLo = 0;
    std::int64_t sizeHi = kNoCap;
    std::int64_t interiorCap = kNoCap;
    std::int64_t boundaryCap = kNoCap;
    std::int64_t budget = kNoCap;

    // visit(rows bottom-up, |lambda|, |interior|); return false to stop.
    using Visitor = std::function<bool(const std::vector<std::int64_t>&,
                                       std::int64_t, std::int64_t)>;

    void run(const Visitor& visit) {
        conj_.assign(static_cast<std::size_t>(maxWidth), 0);
        rows_.clear();
        sum_ = 0;
        interior_ = 0;
        descend(visit);
    }

private:
    struct RowInfo {
        bool valid = false;
        std::int64_t interiorLen = 0;
    };

    RowInfo probeRow(std::int64_t x) const {
        RowInfo info;
        for (std::int64_t b = 1; b <= x; ++b) {
            const std::int64_t hook = x - b + 1 + conj_[static_cast<std::size_t>(b - 1)];
            if (hook == t) return info;
            if (hook < t) {
                info.valid = true;
                info.interiorLen = b - 1;
                return info; // hooks decrease along the row
            }
        }
        info.valid = true;
        info.interiorLen = x;
        return info;
    }

    bool descend(const Visitor& visit) {
        if (--budget < 0) {
            throw LimitExceeded("enumeration node cap exceeded");
        }
        if (sum_ >= sizeLo && sum_ <= sizeHi) {
            if (!visit(rows_, sum_, interior_)) return false;
        }
        const auto depth = static_cast<std::int64_t>(rows_.size());
        if (depth == maxRows) return true;
        const std::int64_t remaining = maxRows - depth - 1;
        const std::int64_t floor = rows_.empty() ? 1 : rows_.back();
        for (std::int64_t x = floor; x <= maxWidth; ++x) {
            if (sum_ + x > sizeHi) break;
            if (sum_ + x + remaining * maxWidth < sizeLo) continue;
            const RowInfo info = probeRow(x);
            if (!info.valid) continue;
            if (interior_ + info.interiorLen > interiorCap) break;
            if (sum_ + x - interior_ - info.interiorLen > boundaryCap) continue;
            push(x, info.interiorLen);
            const bool keepGoing = descend(visit);
            pop(x, info.interiorLen);
            if (!keepGoing) return false;
        }
        return true;
    }

    void push(std::int64_t x, std::int64_t interiorLen) {
        rows_.push_back(x);
        sum_ += x;
        interior_ += interiorLen;
        for (std::int64_t b = 0; b < x; ++b) ++conj_[static_cast<std::size_t>(b)];
    }

    void pop(std::int64_t x, std::int64_t interiorLen) {
        rows_.pop_back();
        sum_ -= x;
        interior_ -= interiorLen;
        for (std::int64_t b = 0; b < x; ++b) --conj_[static_cast<std::size_t>(b)];
    }

    std::vector<std::int64_t> rows_;
    std::vector<std::int64_t> conj_;
    std::int64_t sum_ = 0;
    std::int64_t interior_ = 0;
};

Partition partitionFromBottomUpRows(const std::vector<std::int64_t>& rows) {
    std::vector<std::int64_t> parts(rows.rbegin(), rows.rend());
    return Partition::fromSortedUnchecked(std::move(parts));
}

// Colex stream: partitions grouped by row count, ascending; within a group,
// rows are chosen bottom-up in ascending order and emitted at full depth.
void streamColex(const Rectangle& rect, std::int64_t t,
                 const PartitionVisitor& visit, std::int64_t budget) {
    for (std::int64_t rowCount = 0; rowCount <= rect.height(); ++rowCount) {
        SuffixScan scan;
        scan.maxWidth = rect.width();
        scan.maxRows = rowCount;
        scan.t = t;
        scan.budget = budget;
        bool stopped = false;
        scan.run([&](const std::vector<std::int64_t>& rows, std::int64_t,
                     std::int64_t) {
            if (static_cast<std::int64_t>(rows.size()) != rowCount) return true;
            if (!visit(partitionFromBottomUpRows(rows))) {
                stopped = true;
                return false;
            }
            return true;
        });
        budget = scan.budget;
        if (stopped) return;
    }
}

} // namespace

void for_each_bounded(const Rectangle& rect, const PartitionVisitor& visit,
                      const EnumLimits& limits) {
    if (binomial_or_max(rect.width() + rect.height(), rect.width()) >
        limits.nodeCap) {
        throw LimitExceeded("bounded partition count exceeds the node cap");
    }
    streamColex(rect, /*t=*/0, visit, kNoCap);
}

void for_each_tcore_bounded(const Rectangle& rect, std::int64_t t,
                            const PartitionVisitor& visit,
                            const EnumLimits& limits) {
    if (t < 0) {
        throw DomainError("t-core enumeration requires t >= 0");
    }
    streamColex(rect, t, visit, limits.nodeCap);
}

std::vector<Partition> list_bounded(const Rectangle& rect,
                                    const EnumLimits& limits) {
    std::vector<Partition> out;
    for_each_bounded(rect, [&](const Partition& p) {
        out.push_back(p);
        return true;
    }, limits);
    return out;
}

std::vector<Partition> list_tcore_bounded(const Rectangle& rect, std::int64_t t,
                                          const EnumLimits& limits) {
    std::vector<Partition> out;
    for_each_tcore_bounded(rect, t, [&](const Partition& p) {
        out.push_back(p);
        return true;
    }, limits);
    return out;
}

void scan_partitions(const ScanSpec& spec, const PartitionVisitor& visit,
                     const EnumLimits& limits) {
    if (spec.maxWidth < 0 || spec.maxRows < 0 || spec.t < 0) {
        throw DomainError("scan bounds must be nonnegative");
    }
    SuffixScan scan;
    scan.maxWidth = spec.maxWidth;
    scan.maxRows = spec.maxRows;
    scan.t = spec.t;
    scan.sizeLo = spec.minSize;
    scan.sizeHi = spec.maxSize < 0 ? kNoCap : spec.maxSize;
    scan.budget = limits.nodeCap;
    scan.run([&](const std::vector<std::int64_t>& rows, std::int64_t,
                 std::int64_t) {
        return visit(partitionFromBottomUpRows(rows));
    });
}

std::vector<Partition> knijt_witnesses(const KnijtQuery& q, std::int64_t limit,
                                       const EnumLimits& limits) {
    if (q.k < 1 || q.k >= q.n) {
        throw DomainError("require 1 <= k < n");
    }
    if (q.t < 0) {
        throw DomainError("require t >= 0");
    }
    if (limit < 1) {
        throw DomainError("witness limit must be positive");
    }
    std::vector<Partition> out;
    if (q.i < 0 || q.j < q.i || q.j > q.bigN()) return out;

    SuffixScan scan;
    scan.maxWidth = q.k;
    scan.maxRows = q.n - q.k;
    scan.t = q.t;
    scan.sizeLo = q.j;
    scan.sizeHi = q.j;
    scan.interiorCap = q.i;
    scan.boundaryCap = q.j - q.i;
    scan.budget = limits.nodeCap;
    scan.run([&](const std::vector<std::int64_t>& rows, std::int64_t,
                 std::int64_t interior) {
        if (interior == q.i) {
            out.push_back(partitionFromBottomUpRows(rows));
        }
        return static_cast<std::int64_t>(out.size()) < limit;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t count_tcore_of_size(std::int64_t t, std::int64_t j,
                                 const EnumLimits& limits) {
    if (t < 1) {
        throw DomainError("core counting requires t >= 1");
    }
    if (j < 0) return 0;
    if (j == 0) return 1;
    SuffixScan scan;
    scan.maxWidth = j;
    scan.maxRows = j;
    scan.t = t;
    scan.sizeLo = j;
    scan.sizeHi = j;
    scan.budget = limits.nodeCap;
    std::int64_t count = 0;
    scan.run([&](const std::vector<std::int64_t>&, std::int64_t, std::int64_t) {
        ++count;
        return true;
    });
    return count;
}

std::vector<std::int64_t> count_tcores_by_size(std::int64_t t, std::int64_t maxN,
                                               const EnumLimits& limits) {
    if (t < 1) {
        throw DomainError("core counting requires t >= 1");
    }
    if (maxN < 0) {
        throw DomainError("maxN must be nonnegative");
    }
    std::vector<std::int64_t> counts(static_cast<std::size_t>(maxN) + 1, 0);
    if (maxN == 0) {
        counts[0] = 1;
        return counts;
    }
    SuffixScan scan;
    scan.maxWidth = maxN;
    scan.maxRows = maxN;
    scan.t = t;
    scan.sizeHi = maxN;
    scan.budget = limits.nodeCap;
    scan.run([&](const std::vector<std::int64_t>&, std::int64_t sum,
                 std::int64_t) {
        ++counts[static_cast<std::size_t>(sum)];
        return true;
    });
    return counts;
}

namespace {

std::int64_t checkedAdd(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("series coefficient overflow");
    }
    return out;
}

std::int64_t checkedSub(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw std::overflow_error("series coefficient overflow");
    }
    return out;
}

} // namespace

CoreCountSeries core_count_series(std::int64_t t, std::int64_t maxN) {
    if (t < 1) {
        throw DomainError("core counting requires t >= 1");
    }
    if (maxN < 0) {
        throw DomainError("maxN must be nonnegative");
    }
    const auto size = static_cast<std::size_t>(maxN) + 1;
    std::vector<std::int64_t> c(size, 0);
    c[0] = 1;
    // 1/(x;x)_inf: the unrestricted partition numbers.
    for (std::int64_t part = 1; part <= maxN; ++part) {
        for (std::int64_t m = part; m <= maxN; ++m) {
            c[static_cast<std::size_t>(m)] =
                checkedAdd(c[static_cast<std::size_t>(m)],
                           c[static_cast<std::size_t>(m - part)]);
        }
    }
    // Multiply by (x^t;x^t)_inf^t, one factor (1 - x^{t*m}) at a time.
    for (std::int64_t m = 1; t * m <= maxN; ++m) {
        const std::int64_t d = t * m;
        for (std::int64_t rep = 0; rep < t; ++rep) {
            for (std::int64_t idx = maxN; idx >= d; --idx) {
                c[static_cast<std::size_t>(idx)] =
                    checkedSub(c[static_cast<std::size_t>(idx)],
                               c[static_cast<std::size_t>(idx - d)]);
            }
        }
    }
    CoreCountSeries series;
    series.t = t;
    series.coeffs = std::move(c);
    return series;
}

} // namespace grasshodge
