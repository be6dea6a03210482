#ifndef GRASSHODGE_TCORE_HPP
#define GRASSHODGE_TCORE_HPP

#include <cstdint>
#include <vector>

#include "grasshodge/partition.hpp"

namespace grasshodge {

/// Block decomposition of a nonempty partition by distinct part values:
/// rowMults[p] and colMults[q] are the height and width of block (p,q).
/// Blocks with p+q <= ell() lie strictly inside the diagram ("internal"),
/// p+q == ell()+1 touch the boundary staircase ("diagonal"), and larger
/// p+q index blocks of the rectangle complement ("external").
struct Coarsening {
    std::vector<std::int64_t> rowMults;
    std::vector<std::int64_t> colMults;

    [[nodiscard]] std::int64_t ell() const {
        return static_cast<std::int64_t>(rowMults.size());
    }
    [[nodiscard]] std::int64_t blockSize(std::int64_t p, std::int64_t q) const {
        return rowMults[static_cast<std::size_t>(p - 1)] *
               colMults[static_cast<std::size_t>(q - 1)];
    }
};

/// Result of splitting a t-core into interior and boundary.
struct InteriorSplit {
    Partition interior;          // cells with hook length > t
    std::int64_t boundarySize = 0; // |lambda| - |interior|
};

/// True iff no box of `lambda` has hook length exactly t.  Always true for
/// t = 0 and for t >= semiperimeter.
bool is_t_core(const Partition& lambda, std::int64_t t);

/// Splits a t-core into the subpartition of boxes with hook length > t and
/// the count of remaining boundary cells.  Throws NotTCore if some hook
/// equals t.
InteriorSplit t_interior(const Partition& lambda, std::int64_t t);

/// Left-aligns the t-boundary: row r of the result has
/// lambda_r - interior_r cells.  The result is (t-1)-bounded.
/// Requires t >= 1 and a t-core input.
Partition boundary_partition(const Partition& lambda, std::int64_t t);

/// Inverse of boundary_partition: the unique t-core whose t-boundary
/// left-aligns to `mu`.  Requires t >= 1 and mu_1 <= t-1
/// (throws NotBoundedByTMinus1 otherwise).
Partition skew_inverse(const Partition& mu, std::int64_t t);

/// Multiplicities of the distinct parts of `lambda` and of its conjugate,
/// in the order they appear.  Throws EmptyPartition for ().
Coarsening coarsen(const Partition& lambda);

} // namespace grasshodge

#endif
