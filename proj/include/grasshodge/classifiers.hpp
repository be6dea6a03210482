#ifndef GRASSHODGE_CLASSIFIERS_HPP
#define GRASSHODGE_CLASSIFIERS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grasshodge/enumeration.hpp"

namespace grasshodge {

/// Floor of the square root, by monotone bisection.
std::int64_t isqrt(std::int64_t value);

/// Outcome of one necessary-condition check.  When `applicable`, the
/// predicate holds iff lhs <= rhs (for the snow-s* entries, iff the quoted
/// vanishing condition fails); a verdict whose hypothesis does not apply
/// reports holds = true with the comparison values still filled in.
struct Verdict {
    std::string name;
    bool applicable = false;
    bool holds = true;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

/// Evaluates every known necessary condition for the existence of a
/// knijt-partition, normalizing k to min(k, n-k) where the condition
/// assumes k <= n/2.  A failing entry proves nonexistence; an all-pass
/// battery claims nothing.  Requires t >= 0.
std::vector<Verdict> necessary_battery(const KnijtQuery& q);

/// Definitive existence answer for t in {0, 1, 2} and for t >= n;
/// nullopt otherwise.
std::optional<bool> classify_small_t(const KnijtQuery& q);

/// Witness data for the closed-form twist-3 test.
struct T3Certificate {
    std::int64_t b = 0;
    std::int64_t delta = 0;
    std::optional<std::int64_t> sqrtDelta;
    std::optional<std::int64_t> x;
    std::optional<std::int64_t> y;
};

/// Closed-form existence test for t = 3 and i, j > 0: checks that
/// 8(j+i) - 3(j-i-b)^2 - 8b(j-i) is a perfect square compatible with the
/// divisibility and sign constraints, then that the derived (x, y) cell
/// counts fit the rectangle.  Both sign assignments of the square root
/// are tried.
std::pair<bool, T3Certificate> t3_nonvanishing(std::int64_t k, std::int64_t n,
                                               std::int64_t i, std::int64_t j);

/// True iff j is not x^2 + xy + y^2 + x + y for any integers x, y.
bool j_form_excluded(std::int64_t j);

/// True iff i is neither x^2 + xy + y^2 nor x^2 + xy + y^2 - x - y for
/// any nonnegative integers x, y.
bool i_form_excluded(std::int64_t i);

/// For t > 0, the unique (i, j) with i + j = k(n-k) admitting a
/// knijt-partition, if any: (0, N) when t >= n, and the block-staircase
/// cell when t | n and n | kt.
std::optional<std::pair<std::int64_t, std::int64_t>>
classify_extremal_N(std::int64_t k, std::int64_t n, std::int64_t t);

/// Existence on the line i + j = k(n-k) - 1 with i > 0: true exactly for
/// odd n >= 5, k in {2, n-2}, i = (n-3)/2, t = (n+1)/2.
/// Throws PreconditionViolated unless i > 0 and i + j = k(n-k) - 1.
bool classify_extremal_N_minus_1(std::int64_t k, std::int64_t n, std::int64_t i,
                                 std::int64_t j, std::int64_t t);

} // namespace grasshodge

#endif
