#ifndef GRASSHODGE_BWB_HPP
#define GRASSHODGE_BWB_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "grasshodge/enumeration.hpp"
#include "grasshodge/partition.hpp"

namespace grasshodge {

using BigInt = boost::multiprecision::cpp_int;

/// Integer weight sequence of length n; not necessarily monotone.
using WeightSeq = std::vector<std::int64_t>;

/// Nonvanishing cohomology outcome: a single degree carrying the
/// representation with highest weight `beta` of dimension `dim`.
struct Concentrated {
    std::int64_t degree = 0;
    WeightSeq beta;
    BigInt dim;
};

/// nullopt means the cohomology vanishes in every degree.
using BwbOutcome = std::optional<Concentrated>;

/// Weight sequence of the line bundle attached to a bounded partition:
/// k entries of -rev(conjugate, zero padded), then n-k entries of
/// lambda (zero padded) with t subtracted from each.  Defined for every
/// integer t.  Throws NotBounded when lambda does not fit in (k, n-k).
WeightSeq alpha_sequence(const Partition& lambda, std::int64_t k,
                         std::int64_t n, std::int64_t t);

/// Adds the Weyl vector (n, n-1, ..., 1), vanishes on a repeated entry,
/// and otherwise concentrates in the degree given by the number of
/// non-inversions (pairs p < q with value_p < value_q), with highest
/// weight sort_desc(alpha + weyl) - weyl.
BwbOutcome bwb_outcome(const WeightSeq& alpha, std::int64_t n);

/// Dimension of the Schur functor for a non-increasing integer sequence of
/// length n: shift by the last entry to reach a partition (determinant
/// twists have dimension one) and take the hook content product, exactly.
BigInt schur_dim(const WeightSeq& beta, std::int64_t n);

/// Exact dimension of H^i(Gr(k,n), Omega^j(t)): the sum of outcome
/// dimensions over all (k,n-k)-bounded partitions of size j concentrated
/// in degree i.  Any integer t is allowed.
BigInt hodge_number(std::int64_t k, std::int64_t n, std::int64_t i,
                    std::int64_t j, std::int64_t t,
                    const EnumLimits& limits = {});

/// Sparse table of all nonzero twisted Hodge numbers for fixed (k, n, t);
/// a missing key means dimension zero.
struct HodgeTable {
    std::int64_t k = 1;
    std::int64_t n = 2;
    std::int64_t t = 0;
    std::map<std::pair<std::int64_t, std::int64_t>, BigInt> entries;

    [[nodiscard]] BigInt dim(std::int64_t i, std::int64_t j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? BigInt(0) : it->second;
    }
};

/// Classifies every bounded partition once and accumulates dimensions by
/// (degree, size) cell.
HodgeTable hodge_table(std::int64_t k, std::int64_t n, std::int64_t t,
                       const EnumLimits& limits = {});

} // namespace grasshodge

#endif
