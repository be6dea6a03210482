#include "grasshodge/classifiers.hpp"

#include <algorithm>

#include "grasshodge/errors.hpp"

namespace grasshodge {

std::int64_t isqrt(std::int64_t value) {
    if (value < 0) {
        throw DomainError("isqrt of a negative value");
    }
    std::int64_t lo = 0;
    std::int64_t hi = 3037000499LL; // floor(sqrt(2^63 - 1))
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (mid * mid <= value) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

std::vector<Verdict> necessary_battery(const KnijtQuery& q) {
    if (q.t < 0) {
        throw DomainError("necessary_battery requires t >= 0");
    }
    if (q.k < 1 || q.k >= q.n) {
        throw DomainError("require 1 <= k < n");
    }
    const std::int64_t k = std::min(q.k, q.n - q.k);
    const std::int64_t n = q.n;
    const std::int64_t bigN = q.bigN();
    const std::int64_t i = q.i;
    const std::int64_t j = q.j;
    const std::int64_t t = q.t;
    const bool twisted = t > 0;

    std::vector<Verdict> out;
    auto check = [&](std::string name, bool applicable, std::int64_t lhs,
                     std::int64_t rhs) {
        out.push_back({std::move(name), applicable,
                       !applicable || lhs <= rhs, lhs, rhs});
    };

    // Linear bounds.
    check("i+j<=N", twisted, i + j, bigN);
    check("j-i>=t", i > 0, t, j - i);
    check("j-i<=k(t-1)", twisted, j - i, k * (t - 1));
    // Quadratic bounds and their corollaries.
    check("(k+1)i<=(k-1)j", twisted, (k + 1) * i, (k - 1) * j);
    check("i+j<=(j-i)^2", twisted, i + j, (j - i) * (j - i));
    check("2j<=k(n-k+t-1)", twisted, 2 * j, k * (n - k + t - 1));
    check("2ki<=(k-1)N", twisted, 2 * k * i, (k - 1) * bigN);
    {
        // i <= sqrt(N)(sqrt(N)-1)/2, stated over the reals.  When N is a
        // perfect square the bound is the integer s(s-1)/2; otherwise it
        // follows from the pair {i+j<=N, i+j<=(j-i)^2}, which are the
        // checks actually performed.
        const std::int64_t s = isqrt(bigN);
        Verdict v;
        v.name = "i<=sqrtN(sqrtN-1)/2";
        v.applicable = twisted;
        if (s * s == bigN) {
            v.lhs = 2 * i;
            v.rhs = s * (s - 1);
            v.holds = !twisted || v.lhs <= v.rhs;
        } else {
            v.lhs = i + j;
            v.rhs = std::min(bigN, (j - i) * (j - i));
            v.holds = !twisted || v.lhs <= v.rhs;
        }
        out.push_back(std::move(v));
    }
    // Snow's vanishing conditions, negated.  S3 concerns the twisted range
    // 0 < t < n only (for t >= n the full rectangle is a witness), and S5
    // fires only for i > 0 (for k = 1 every bounded t-core has i = 0).
    {
        Verdict v{"snow-s1", twisted, true, k * i, (k - 1) * j};
        if (twisted) v.holds = !(v.lhs >= v.rhs && v.rhs > 0);
        out.push_back(std::move(v));
    }
    check("snow-s2", twisted, i, bigN - j);
    {
        const bool applies = twisted && t < n && !(k == 2 && n == 4);
        check("snow-s3", applies, j, k * (n - k - 1));
    }
    {
        Verdict v{"snow-s4", twisted, true, j, t};
        if (twisted) v.holds = !(j <= t && i > 0);
        out.push_back(std::move(v));
    }
    check("snow-s5", twisted && i > 0, (2 * k - 1) * i, (k - 1) * bigN - 1);
    return out;
}

std::optional<bool> classify_small_t(const KnijtQuery& q) {
    if (q.k < 1 || q.k >= q.n) {
        throw DomainError("require 1 <= k < n");
    }
    const std::int64_t bigN = q.bigN();
    if (q.t == 0) {
        // Every bounded partition is a 0-core and equals its own interior.
        return q.i == q.j && 0 <= q.j && q.j <= bigN;
    }
    if (q.t == 1) {
        return q.i == 0 && q.j == 0;
    }
    if (q.t == 2) {
        const std::int64_t side = std::min(q.k, q.n - q.k);
        for (std::int64_t kappa = 0; kappa <= side; ++kappa) {
            if (q.i == kappa * (kappa - 1) / 2 && q.j == kappa * (kappa + 1) / 2) {
                return true;
            }
        }
        return false;
    }
    if (q.t >= q.n) {
        // Hooks never reach t, so interiors are empty and any size occurs.
        return q.i == 0 && 0 <= q.j && q.j <= bigN;
    }
    return std::nullopt;
}

std::pair<bool, T3Certificate> t3_nonvanishing(std::int64_t k, std::int64_t n,
                                               std::int64_t i, std::int64_t j) {
    if (k < 1 || k >= n) {
        throw DomainError("require 1 <= k < n");
    }
    if (i <= 0 || j <= 0) {
        throw PreconditionViolated("t3_nonvanishing requires i, j > 0");
    }
    T3Certificate cert;
    cert.b = (i + j) % 2;
    const std::int64_t d = j - i - cert.b; // always even
    cert.delta = 8 * (j + i) - 3 * d * d - 8 * cert.b * (j - i);
    if (cert.delta < 0) return {false, cert};
    const std::int64_t root = isqrt(cert.delta);
    if (root * root != cert.delta) return {false, cert};
    cert.sqrtDelta = root;
    if ((root + d) % 4 != 0) return {false, cert};
    if (d < root) return {false, cert};
    const std::int64_t x1 = (d + root) / 4;
    const std::int64_t y1 = (d - root) / 4;
    for (const auto& [x, y] : {std::pair{x1, y1}, std::pair{y1, x1}}) {
        const std::int64_t height = x + cert.b + 2 * y;
        const std::int64_t width = 2 * x + cert.b + y;
        if (height >= 0 && height <= n - k && width >= 0 && width <= k) {
            cert.x = x;
            cert.y = y;
            return {true, cert};
        }
    }
    return {false, cert};
}

bool j_form_excluded(std::int64_t j) {
    if (j < 0) {
        throw DomainError("j must be nonnegative");
    }
    // x^2 + xy + y^2 dominates the linear part, so representations with
    // value j satisfy |x|, |y| <= sqrt(3j) + 3.
    const std::int64_t radius = isqrt(3 * j) + 3;
    for (std::int64_t x = -radius; x <= radius; ++x) {
        for (std::int64_t y = -radius; y <= radius; ++y) {
            if (x * x + x * y + y * y + x + y == j) return false;
        }
    }
    return true;
}

bool i_form_excluded(std::int64_t i) {
    if (i < 0) {
        throw DomainError("i must be nonnegative");
    }
    const std::int64_t radius = isqrt(i) + 3;
    for (std::int64_t x = 0; x <= radius; ++x) {
        for (std::int64_t y = 0; y <= radius; ++y) {
            const std::int64_t form = x * x + x * y + y * y;
            if (form == i || form - x - y == i) return false;
        }
    }
    return true;
}

std::optional<std::pair<std::int64_t, std::int64_t>>
classify_extremal_N(std::int64_t k, std::int64_t n, std::int64_t t) {
    if (k < 1 || k >= n) {
        throw DomainError("require 1 <= k < n");
    }
    if (t <= 0) {
        throw DomainError("classify_extremal_N requires t > 0");
    }
    const std::int64_t bigN = k * (n - k);
    if (t >= n) {
        return std::pair{std::int64_t{0}, bigN};
    }
    if (n % t != 0 || (k * t) % n != 0) {
        return std::nullopt;
    }
    const std::int64_t i = bigN * (n - t) / (2 * n);
    return std::pair{i, bigN - i};
}

bool classify_extremal_N_minus_1(std::int64_t k, std::int64_t n, std::int64_t i,
                                 std::int64_t j, std::int64_t t) {
    if (k < 1 || k >= n) {
        throw DomainError("require 1 <= k < n");
    }
    if (i <= 0 || i + j != k * (n - k) - 1) {
        throw PreconditionViolated("requires i > 0 and i + j = k(n-k) - 1");
    }
    return n >= 5 && n % 2 == 1 && (k == 2 || k == n - 2) &&
           i == (n - 3) / 2 && t == (n + 1) / 2;
}

} // namespace grasshodge
