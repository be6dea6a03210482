#include "grasshodge/tcore.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace grasshodge {

namespace {

// Largest column index b in [1, lambda_r] whose hook exceeds t, or 0.
// Hooks strictly decrease along a row, so this is a prefix length.
std::int64_t interiorRowLength(const Partition& lambda, const Partition& conj,
                               std::int64_t r, std::int64_t t) {
    std::int64_t lo = 1;
    std::int64_t hi = lambda.part(r);
    std::int64_t cut = 0;
    while (lo <= hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        const std::int64_t hook = lambda.part(r) + conj.part(mid) - r - mid + 1;
        if (hook > t) {
            cut = mid;
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    return cut;
}

} // namespace

bool is_t_core(const Partition& lambda, std::int64_t t) {
    if (t <= 0 || t >= lambda.semiperimeter()) return true;
    const Partition conj = lambda.conjugate();
    for (std::int64_t r = 1; r <= lambda.rows(); ++r) {
        // Binary search for hook == t within the strictly decreasing row.
        std::int64_t lo = 1;
        std::int64_t hi = lambda.part(r);
        while (lo <= hi) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            const std::int64_t hook = lambda.part(r) + conj.part(mid) - r - mid + 1;
            if (hook == t) return false;
            if (hook > t) {
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
    }
    return true;
}

InteriorSplit t_interior(const Partition& lambda, std::int64_t t) {
    if (!is_t_core(lambda, t)) {
        throw NotTCore(lambda.toString() + " has a hook of length " +
                       std::to_string(t));
    }
    const Partition conj = lambda.conjugate();
    std::vector<std::int64_t> rows;
    for (std::int64_t r = 1; r <= lambda.rows(); ++r) {
        const std::int64_t len = interiorRowLength(lambda, conj, r, t);
        if (len == 0) break; // interior rows form a prefix of the diagram
        rows.push_back(len);
    }
    InteriorSplit split;
    split.interior = Partition(std::move(rows));
    split.boundarySize = lambda.size() - split.interior.size();
    return split;
}

Partition boundary_partition(const Partition& lambda, std::int64_t t) {
    if (t < 1) {
        throw DomainError("boundary_partition requires t >= 1");
    }
    const InteriorSplit split = t_interior(lambda, t);
    std::vector<std::int64_t> rows;
    rows.reserve(static_cast<std::size_t>(lambda.rows()));
    for (std::int64_t r = 1; r <= lambda.rows(); ++r) {
        rows.push_back(lambda.part(r) - split.interior.part(r));
    }
    return Partition(std::move(rows));
}

namespace {

// Builds the t-core bottom-up.  Once every longer row is fixed above it,
// a row's hooks depend only on the rows at or below it:
//   h(b) = x - b + #{rows below or equal with length >= b}.
// So each placed row is final, and a candidate top row of length x is valid
// iff none of its hooks equals t and exactly mu_r of them are <= t.
// Any x >= top + t puts a hook of exactly t at column x - t + 1, which
// bounds the search window and makes the backtracking complete.
class SkewBuilder {
public:
    SkewBuilder(const Partition& mu, std::int64_t t) : mu_(mu), t_(t) {}

    bool build() { return place(0); }

    [[nodiscard]] Partition takeResult() {
        std::vector<std::int64_t> rows(rowsBottomUp_.rbegin(), rowsBottomUp_.rend());
        return Partition(std::move(rows));
    }

private:
    bool place(std::int64_t idx) {
        if (idx == mu_.rows()) return true;
        const std::int64_t target = mu_.part(mu_.rows() - idx);
        const std::int64_t top = rowsBottomUp_.empty() ? 0 : rowsBottomUp_.back();
        const std::int64_t lo = std::max<std::int64_t>({1, top, target});
        const std::int64_t hi = top + t_ - 1;
        for (std::int64_t x = lo; x <= hi; ++x) {
            if (!rowFits(x, target)) continue;
            push(x);
            if (place(idx + 1)) return true;
            pop(x);
        }
        return false;
    }

    bool rowFits(std::int64_t x, std::int64_t target) const {
        std::int64_t boundary = 0;
        for (std::int64_t b = 1; b <= x; ++b) {
            const std::int64_t below =
                b <= static_cast<std::int64_t>(conj_.size()) ? conj_[b - 1] : 0;
            const std::int64_t hook = x - b + 1 + below;
            if (hook == t_) return false;
            if (hook < t_) {
                boundary = x - b + 1; // hooks decrease, the rest are all < t
                break;
            }
        }
        return boundary == target;
    }

    void push(std::int64_t x) {
        rowsBottomUp_.push_back(x);
        if (static_cast<std::int64_t>(conj_.size()) < x) conj_.resize(x, 0);
        for (std::int64_t b = 0; b < x; ++b) ++conj_[b];
    }

    void pop(std::int64_t x) {
        rowsBottomUp_.pop_back();
        for (std::int64_t b = 0; b < x; ++b) --conj_[b];
    }

    const Partition& mu_;
    std::int64_t t_;
    std::vector<std::int64_t> rowsBottomUp_;
    std::vector<std::int64_t> conj_; // conj_[b-1] = rows placed with length >= b
};

} // namespace

Partition skew_inverse(const Partition& mu, std::int64_t t) {
    if (t < 1) {
        throw DomainError("skew_inverse requires t >= 1");
    }
    if (mu.firstPart() >= t) {
        throw NotBoundedByTMinus1("first part " + std::to_string(mu.firstPart()) +
                                  " is not bounded by t-1 = " + std::to_string(t - 1));
    }
    SkewBuilder builder(mu, t);
    if (!builder.build()) {
        throw std::logic_error("no t-core with boundary " + mu.toString());
    }
    return builder.takeResult();
}

Coarsening coarsen(const Partition& lambda) {
    if (lambda.empty()) {
        throw EmptyPartition("coarsen is undefined for the empty partition");
    }
    const auto multiplicities = [](const Partition& p) {
        std::vector<std::int64_t> mults;
        std::int64_t run = 0;
        std::int64_t value = p.part(1);
        for (std::int64_t r = 1; r <= p.rows(); ++r) {
            if (p.part(r) == value) {
                ++run;
            } else {
                mults.push_back(run);
                value = p.part(r);
                run = 1;
            }
        }
        mults.push_back(run);
        return mults;
    };
    Coarsening c;
    c.rowMults = multiplicities(lambda);
    c.colMults = multiplicities(lambda.conjugate());
    return c;
}

} // namespace grasshodge
