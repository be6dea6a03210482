#include "grasshodge/bwb.hpp"

#include <algorithm>
#include <cassert>

#include "grasshodge/errors.hpp"

namespace grasshodge {

WeightSeq alpha_sequence(const Partition& lambda, std::int64_t k,
                         std::int64_t n, std::int64_t t) {
    if (k < 1 || k >= n) {
        throw DomainError("require 1 <= k < n");
    }
    if (lambda.firstPart() > k || lambda.rows() > n - k) {
        throw NotBounded("partition " + lambda.toString() +
                         " is not (k, n-k)-bounded");
    }
    const Partition conj = lambda.conjugate();
    WeightSeq alpha;
    alpha.reserve(static_cast<std::size_t>(n));
    for (std::int64_t a = k; a >= 1; --a) {
        alpha.push_back(-conj.part(a));
    }
    for (std::int64_t r = 1; r <= n - k; ++r) {
        alpha.push_back(lambda.part(r) - t);
    }
    return alpha;
}

BwbOutcome bwb_outcome(const WeightSeq& alpha, std::int64_t n) {
    if (static_cast<std::int64_t>(alpha.size()) != n) {
        throw DomainError("weight sequence must have length n");
    }
    WeightSeq shifted(alpha);
    for (std::int64_t idx = 0; idx < n; ++idx) {
        shifted[static_cast<std::size_t>(idx)] += n - idx; // Weyl vector
    }
    std::int64_t degree = 0;
    for (std::size_t p = 0; p < shifted.size(); ++p) {
        for (std::size_t q = p + 1; q < shifted.size(); ++q) {
            if (shifted[p] == shifted[q]) return std::nullopt;
            if (shifted[p] < shifted[q]) ++degree;
        }
    }
    std::sort(shifted.begin(), shifted.end(), std::greater<>());
    for (std::int64_t idx = 0; idx < n; ++idx) {
        shifted[static_cast<std::size_t>(idx)] -= n - idx;
    }
    Concentrated out;
    out.degree = degree;
    out.dim = schur_dim(shifted, n);
    out.beta = std::move(shifted);
    return out;
}

BigInt schur_dim(const WeightSeq& beta, std::int64_t n) {
    if (static_cast<std::int64_t>(beta.size()) != n || n < 1) {
        throw DomainError("weight sequence must have length n >= 1");
    }
    for (std::size_t idx = 0; idx + 1 < beta.size(); ++idx) {
        if (beta[idx] < beta[idx + 1]) {
            throw NotMonotone("weight sequence increases at position " +
                              std::to_string(idx + 1));
        }
    }
    const std::int64_t shift = beta.back() < 0 ? -beta.back() : 0;
    std::vector<std::int64_t> parts;
    parts.reserve(beta.size());
    for (std::int64_t entry : beta) parts.push_back(entry + shift);
    const Partition shape(std::move(parts));

    const Partition conj = shape.conjugate();
    BigInt numerator = 1;
    BigInt denominator = 1;
    for (std::int64_t a = 1; a <= shape.rows(); ++a) {
        for (std::int64_t b = 1; b <= shape.part(a); ++b) {
            numerator *= n + b - a;
            denominator *= shape.part(a) + conj.part(b) - a - b + 1;
        }
    }
    assert(numerator % denominator == 0);
    return numerator / denominator;
}

BigInt hodge_number(std::int64_t k, std::int64_t n, std::int64_t i,
                    std::int64_t j, std::int64_t t, const EnumLimits& limits) {
    if (k < 1 || k >= n) {
        throw DomainError("require 1 <= k < n");
    }
    BigInt total = 0;
    if (j < 0 || j > k * (n - k)) return total;
    Rectangle rect(k, n - k, std::max(Rectangle::kDefaultMaxSide, std::max(k, n)));
    for_each_bounded(rect, [&](const Partition& lambda) {
        if (lambda.size() != j) return true;
        const BwbOutcome outcome = bwb_outcome(alpha_sequence(lambda, k, n, t), n);
        if (outcome && outcome->degree == i) {
            total += outcome->dim;
        }
        return true;
    }, limits);
    return total;
}

HodgeTable hodge_table(std::int64_t k, std::int64_t n, std::int64_t t,
                       const EnumLimits& limits) {
    if (k < 1 || k >= n) {
        throw DomainError("require 1 <= k < n");
    }
    HodgeTable table;
    table.k = k;
    table.n = n;
    table.t = t;
    Rectangle rect(k, n - k, std::max(Rectangle::kDefaultMaxSide, std::max(k, n)));
    for_each_bounded(rect, [&](const Partition& lambda) {
        const BwbOutcome outcome = bwb_outcome(alpha_sequence(lambda, k, n, t), n);
        if (outcome) {
            table.entries[{outcome->degree, lambda.size()}] += outcome->dim;
        }
        return true;
    }, limits);
    return table;
}

} // namespace grasshodge
