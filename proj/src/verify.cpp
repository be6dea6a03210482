#include "grasshodge/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "grasshodge/bwb.hpp"
#include "grasshodge/classifiers.hpp"
#include "grasshodge/enumeration.hpp"
#include "grasshodge/errors.hpp"
#include "grasshodge/partition.hpp"
#include "grasshodge/tcore.hpp"

namespace grasshodge::verify {

namespace {

constexpr std::size_t kMaxRecordedFailures = 25;

struct Checker {
    SuiteReport report;

    void check(bool ok, const std::string& message) {
        ++report.checks;
        if (ok) return;
        report.passed = false;
        ++report.failureCount;
        if (report.failures.size() < kMaxRecordedFailures) {
            report.failures.push_back(message);
        }
    }
};

std::string fmtQuery(const KnijtQuery& q) {
    return "(k,n,i,j,t)=(" + std::to_string(q.k) + "," + std::to_string(q.n) +
           "," + std::to_string(q.i) + "," + std::to_string(q.j) + "," +
           std::to_string(q.t) + ")";
}

std::string fmtCell(std::int64_t i, std::int64_t j) {
    return "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Coefficients of the Gaussian binomial [n choose k]_q via the q-Pascal
// recurrence; independent of the enumeration and bwb code paths.
std::vector<std::int64_t> gaussianBinomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return {};
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::int64_t>> memo;
    auto rec = [&](auto&& self, std::int64_t nn,
                   std::int64_t kk) -> std::vector<std::int64_t> {
        if (kk < 0 || kk > nn) return {};
        if (kk == 0 || kk == nn) return {1};
        auto it = memo.find({nn, kk});
        if (it != memo.end()) return it->second;
        const auto a = self(self, nn - 1, kk - 1);
        const auto b = self(self, nn - 1, kk); // shifted by q^kk
        std::vector<std::int64_t> out(
            std::max(a.size(), b.size() + static_cast<std::size_t>(kk)), 0);
        for (std::size_t d = 0; d < a.size(); ++d) out[d] += a[d];
        for (std::size_t d = 0; d < b.size(); ++d) {
            out[d + static_cast<std::size_t>(kk)] += b[d];
        }
        memo[{nn, kk}] = out;
        return out;
    };
    return rec(rec, n, k);
}

// ord_p(3m + 1) is odd for some prime p = 2 (mod 3).
bool hanExcluded(std::int64_t m) {
    std::int64_t v = 3 * m + 1;
    for (std::int64_t p = 2; p * p <= v; ++p) {
        if (v % p != 0) continue;
        int ord = 0;
        while (v % p == 0) {
            v /= p;
            ++ord;
        }
        if (p % 3 == 2 && ord % 2 == 1) return true;
    }
    return v > 1 && v % 3 == 2; // remaining prime factor has exponent 1
}

EnumLimits limitsOf(const VerifyOptions& opt) {
    EnumLimits limits;
    limits.nodeCap = opt.nodeCap;
    return limits;
}

// --- bijection: boundary map, skew inverse, and diagram invariants -------

SuiteReport runBijection(const VerifyOptions& opt) {
    Checker c;
    c.report.suite = "bijection";
    const std::int64_t tmax = opt.tmax > 0 ? opt.tmax : 8;
    const EnumLimits limits = limitsOf(opt);

    for (std::int64_t t = 1; t <= tmax; ++t) {
        ScanSpec cores;
        cores.maxWidth = 40;
        cores.maxRows = 40;
        cores.t = t;
        cores.maxSize = 40;
        scan_partitions(cores, [&](const Partition& lambda) {
            const std::string tag =
                "t=" + std::to_string(t) + " lambda=" + lambda.toString();
            const InteriorSplit split = t_interior(lambda, t);
            const Partition mu = boundary_partition(lambda, t);
            c.check(mu.firstPart() <= t - 1, tag + ": boundary not (t-1)-bounded");
            c.check(mu.size() == split.boundarySize,
                    tag + ": boundary size mismatch");
            c.check(lambda.containsPartition(split.interior),
                    tag + ": interior not a subpartition");
            c.check(skew_inverse(mu, t) == lambda, tag + ": round trip failed");

            // No hook is a multiple of t.
            bool divisorFree = true;
            for (std::int64_t r = 1; r <= lambda.rows() && divisorFree; ++r) {
                for (std::int64_t b = 1; b <= lambda.part(r); ++b) {
                    if (lambda.hookLength({r, b}) % t == 0) {
                        divisorFree = false;
                        break;
                    }
                }
            }
            c.check(divisorFree, tag + ": hook divisible by t");

            // Every partition is a t'-core from its semiperimeter on.
            c.check(is_t_core(lambda, lambda.semiperimeter()) &&
                        is_t_core(lambda, lambda.semiperimeter() + 5),
                    tag + ": semiperimeter guarantee failed");

            // Interiors shrink as the cutoff grows.
            if (is_t_core(lambda, t - 1)) {
                const Partition wider = t_interior(lambda, t - 1).interior;
                c.check(wider.containsPartition(split.interior),
                        tag + ": interior not nested in the (t-1)-interior");
            }

            // Conjugation equivariance of the interior.
            const Partition conj = lambda.conjugate();
            c.check(t_interior(conj, t).interior == split.interior.conjugate(),
                    tag + ": interior does not commute with conjugation");

            // Hook lengths inside each coarsening block form an interval.
            if (!lambda.empty()) {
                const Coarsening coarse = coarsen(lambda);
                std::vector<std::int64_t> rowStart{0};
                for (std::int64_t m : coarse.rowMults) {
                    rowStart.push_back(rowStart.back() + m);
                }
                std::vector<std::int64_t> colStart{0};
                for (std::int64_t m : coarse.colMults) {
                    colStart.push_back(colStart.back() + m);
                }
                const std::int64_t ell = coarse.ell();
                for (std::int64_t p = 1; p <= ell; ++p) {
                    for (std::int64_t q = 1; q + p <= ell + 1; ++q) {
                        std::set<std::int64_t> hooks;
                        for (std::int64_t r = rowStart[p - 1] + 1; r <= rowStart[p]; ++r) {
                            for (std::int64_t b = colStart[q - 1] + 1; b <= colStart[q]; ++b) {
                                hooks.insert(lambda.hookLength({r, b}));
                            }
                        }
                        const bool contiguous =
                            hooks.empty() ||
                            *hooks.rbegin() - *hooks.begin() + 1 ==
                                static_cast<std::int64_t>(hooks.size());
                        c.check(contiguous, tag + ": block (" + std::to_string(p) +
                                                "," + std::to_string(q) +
                                                ") hooks not contiguous");
                    }
                }
            }
            return true;
        }, limits);

        // Inverse direction: every (t-1)-bounded partition is a boundary.
        ScanSpec bounded;
        bounded.maxWidth = t - 1;
        bounded.maxRows = 25;
        bounded.maxSize = 25;
        scan_partitions(bounded, [&](const Partition& mu) {
            const Partition lambda = skew_inverse(mu, t);
            const std::string tag =
                "t=" + std::to_string(t) + " mu=" + mu.toString();
            c.check(is_t_core(lambda, t), tag + ": skew inverse is not a t-core");
            c.check(boundary_partition(lambda, t) == mu,
                    tag + ": boundary of the skew inverse differs");
            return true;
        }, limits);
    }
    return c.report;
}

// --- battery: necessary conditions against enumerated witnesses ----------

SuiteReport runBattery(const VerifyOptions& opt) {
    Checker c;
    c.report.suite = "battery";
    const std::int64_t nmax = opt.nmax > 0 ? opt.nmax : 9;
    const std::int64_t kmax = opt.kmax > 0 ? opt.kmax : 12;
    const EnumLimits limits = limitsOf(opt);

    // Soundness: every enumerated witness passes every verdict.
    for (std::int64_t n = 2; n <= nmax; ++n) {
        for (std::int64_t k = 1; k < n; ++k) {
            const std::int64_t tTop = opt.tmax > 0 ? opt.tmax : n + 1;
            for (std::int64_t t = 0; t <= tTop; ++t) {
                ScanSpec spec;
                spec.maxWidth = k;
                spec.maxRows = n - k;
                spec.t = t;
                scan_partitions(spec, [&](const Partition& lambda) {
                    const InteriorSplit split = t_interior(lambda, t);
                    const KnijtQuery q{k, n, lambda.size() - split.boundarySize,
                                       lambda.size(), t};
                    for (const Verdict& v : necessary_battery(q)) {
                        c.check(v.holds, fmtQuery(q) + " witness " +
                                             lambda.toString() + " fails " +
                                             v.name + " (lhs=" +
                                             std::to_string(v.lhs) + " rhs=" +
                                             std::to_string(v.rhs) + ")");
                    }
                    if (t > 0) {
                        const std::int64_t boundary = split.boundarySize;
                        c.check(boundary >= std::max(lambda.firstPart(),
                                                     lambda.rows()),
                                fmtQuery(q) + " witness " + lambda.toString() +
                                    " fails j-i>=max(width,height)");
                    }
                    return true;
                }, limits);
            }
        }
    }

    // Sharpness: the staircase meets four bounds with equality.
    for (std::int64_t k = 2; k <= kmax; ++k) {
        std::vector<std::int64_t> parts;
        for (std::int64_t v = k; v >= 1; --v) parts.push_back(v);
        const Partition staircase(std::move(parts));
        const KnijtQuery q{k, 2 * k, k * (k - 1) / 2, k * (k + 1) / 2, 2};
        c.check(is_t_core(staircase, 2) &&
                    staircase.isBounded(Rectangle(k, k)) &&
                    t_interior(staircase, 2).interior.size() == q.i &&
                    staircase.size() == q.j,
                fmtQuery(q) + ": staircase is not a witness");
        for (const Verdict& v : necessary_battery(q)) {
            if (v.name == "(k+1)i<=(k-1)j" || v.name == "i+j<=(j-i)^2" ||
                v.name == "2ki<=(k-1)N" || v.name == "i<=sqrtN(sqrtN-1)/2") {
                c.check(v.holds && v.lhs == v.rhs,
                        fmtQuery(q) + ": " + v.name + " not attained (lhs=" +
                            std::to_string(v.lhs) + " rhs=" +
                            std::to_string(v.rhs) + ")");
            }
        }
    }

    // Sharpness: a single hook of size t+1 attains j - i = t.
    for (std::int64_t t = 2; t <= 8; ++t) {
        const Partition hook({t, 1});
        const KnijtQuery q{t, t + 2, 1, t + 1, t};
        c.check(is_t_core(hook, t) &&
                    t_interior(hook, t).interior.size() == 1 &&
                    hook.size() == t + 1,
                fmtQuery(q) + ": hook partition is not a witness");
        for (const Verdict& v : necessary_battery(q)) {
            if (v.name == "j-i>=t") {
                c.check(v.holds && v.lhs == v.rhs,
                        fmtQuery(q) + ": j-i=t not attained");
            }
        }
    }

    // The ratio bound improves on snow-s1: at (2,13,j=16,t=7) it caps i at 5
    // while snow-s1 allows up to 7, and no witness exists at 6 or 7.
    for (std::int64_t i = 5; i <= 7; ++i) {
        const KnijtQuery q{2, 13, i, 16, 7};
        bool ratioHolds = true;
        bool snowHolds = true;
        for (const Verdict& v : necessary_battery(q)) {
            if (v.name == "(k+1)i<=(k-1)j") ratioHolds = v.holds;
            if (v.name == "snow-s1") snowHolds = v.holds;
        }
        c.check(snowHolds, fmtQuery(q) + ": snow-s1 unexpectedly rejects");
        c.check(ratioHolds == (i <= 5),
                fmtQuery(q) + ": ratio bound disagrees with i<=5");
        if (i >= 6) {
            c.check(knijt_witnesses(q, 1, limits).empty(),
                    fmtQuery(q) + ": oracle found an unexpected witness");
        }
    }
    return c.report;
}

// --- bwb-equivalence: cohomology outcomes against the t-core oracle ------

SuiteReport runBwbEquivalence(const VerifyOptions& opt) {
    Checker c;
    c.report.suite = "bwb-equivalence";
    const std::int64_t nmax = opt.nmax > 0 ? opt.nmax : 8;
    const EnumLimits limits = limitsOf(opt);

    for (std::int64_t n = 2; n <= nmax; ++n) {
        for (std::int64_t t = 0; t <= n + 1; ++t) {
            std::map<std::int64_t, std::set<std::pair<std::int64_t, std::int64_t>>>
                witnessSupport;
            for (std::int64_t k = 1; k < n; ++k) {
                std::set<std::pair<std::int64_t, std::int64_t>> bwbSupport;
                auto& oracle = witnessSupport[k];
                Rectangle rect(k, n - k);
                for_each_bounded(rect, [&](const Partition& lambda) {
                    const std::string tag = "k=" + std::to_string(k) +
                                            " n=" + std::to_string(n) +
                                            " t=" + std::to_string(t) +
                                            " lambda=" + lambda.toString();
                    const BwbOutcome outcome =
                        bwb_outcome(alpha_sequence(lambda, k, n, t), n);
                    const bool core = is_t_core(lambda, t);
                    c.check(outcome.has_value() == core,
                            tag + ": vanishing disagrees with the t-core test");
                    if (outcome) {
                        c.check(outcome->dim >= 1, tag + ": dimension not positive");
                        bwbSupport.insert({outcome->degree, lambda.size()});
                    }
                    if (core) {
                        const std::int64_t interior =
                            t_interior(lambda, t).interior.size();
                        oracle.insert({interior, lambda.size()});
                        if (outcome) {
                            c.check(outcome->degree == interior,
                                    tag + ": degree differs from interior size");
                        }
                    }
                    if (t == 0 && outcome) {
                        c.check(outcome->degree == lambda.size() &&
                                    outcome->dim == 1,
                                tag + ": twist-0 outcome not diagonal of dim 1");
                    }
                    return true;
                }, limits);
                c.check(bwbSupport == oracle,
                        "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                            " t=" + std::to_string(t) +
                            ": nonvanishing support differs from the oracle");
            }
            for (std::int64_t k = 1; k < n - k; ++k) {
                c.check(witnessSupport[k] == witnessSupport[n - k],
                        "n=" + std::to_string(n) + " t=" + std::to_string(t) +
                            ": witness support not transpose symmetric at k=" +
                            std::to_string(k));
            }
        }

        // Transpose symmetry of the full tables.
        for (std::int64_t t = 0; t <= n + 1; ++t) {
            for (std::int64_t k = 1; k < n - k; ++k) {
                const HodgeTable a = hodge_table(k, n, t, limits);
                const HodgeTable b = hodge_table(n - k, n, t, limits);
                c.check(a.entries == b.entries,
                        "n=" + std::to_string(n) + " t=" + std::to_string(t) +
                            " k=" + std::to_string(k) +
                            ": table not transpose symmetric");
            }
        }

        // Twist 0: diagonal support, Gaussian binomial columns, Betti sum.
        for (std::int64_t k = 1; k < n; ++k) {
            const HodgeTable table = hodge_table(k, n, 0, limits);
            const auto gauss = gaussianBinomial(n, k);
            BigInt total = 0;
            bool diagonal = true;
            for (const auto& [cell, dim] : table.entries) {
                if (cell.first != cell.second) diagonal = false;
                total += dim;
            }
            c.check(diagonal, "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                  ": twist-0 table not diagonal");
            bool columnsMatch = true;
            for (std::size_t j = 0; j < gauss.size(); ++j) {
                const auto jj = static_cast<std::int64_t>(j);
                if (table.dim(jj, jj) != gauss[j]) columnsMatch = false;
            }
            c.check(columnsMatch,
                    "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                        ": twist-0 diagonal differs from the Gaussian binomial");
            c.check(total == binomial_or_max(n, k),
                    "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                        ": Betti sum differs from C(n,k)");
        }
    }
    return c.report;
}

// --- extremal: the i+j = N and i+j = N-1 classifications ------------------

SuiteReport runExtremal(const VerifyOptions& opt) {
    Checker c;
    c.report.suite = "extremal";
    const std::int64_t nmax = opt.nmax > 0 ? opt.nmax : 12;
    const EnumLimits limits = limitsOf(opt);

    for (std::int64_t n = 2; n <= nmax; ++n) {
        for (std::int64_t k = 1; k < n; ++k) {
            const std::int64_t bigN = k * (n - k);
            const std::int64_t tTop = opt.tmax > 0 ? opt.tmax : n + 2;
            for (std::int64_t t = 1; t <= tTop; ++t) {
                std::set<std::pair<std::int64_t, std::int64_t>> onLine;
                std::set<std::pair<std::int64_t, std::int64_t>> nearLine;
                ScanSpec spec;
                spec.maxWidth = k;
                spec.maxRows = n - k;
                spec.t = t;
                spec.minSize = 0;
                scan_partitions(spec, [&](const Partition& lambda) {
                    const std::int64_t j = lambda.size();
                    const std::int64_t i = t_interior(lambda, t).interior.size();
                    if (i + j == bigN) onLine.insert({i, j});
                    if (i + j == bigN - 1 && i > 0) nearLine.insert({i, j});
                    return true;
                }, limits);

                std::set<std::pair<std::int64_t, std::int64_t>> expected;
                if (const auto cell = classify_extremal_N(k, n, t)) {
                    expected.insert(*cell);
                }
                c.check(onLine == expected,
                        "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                            " t=" + std::to_string(t) +
                            ": i+j=N line disagrees with the classifier");

                std::set<std::pair<std::int64_t, std::int64_t>> expectedNear;
                for (std::int64_t i = 1; i < bigN - 1; ++i) {
                    const std::int64_t j = bigN - 1 - i;
                    if (j < i) break;
                    if (classify_extremal_N_minus_1(k, n, i, j, t)) {
                        expectedNear.insert({i, j});
                    }
                }
                c.check(nearLine == expectedNear,
                        "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                            " t=" + std::to_string(t) +
                            ": i+j=N-1 line disagrees with the classifier");
            }
        }
    }
    return c.report;
}

// --- t3: closed-form twist-3 test, quadratic-form lists, core counts -----

SuiteReport runT3(const VerifyOptions& opt) {
    Checker c;
    c.report.suite = "t3";
    const std::int64_t nmax = opt.nmax > 0 ? opt.nmax : 14;
    const EnumLimits limits = limitsOf(opt);

    for (std::int64_t n = 2; n <= nmax; ++n) {
        for (std::int64_t k = 1; k < n; ++k) {
            std::set<std::pair<std::int64_t, std::int64_t>> oracle;
            ScanSpec spec;
            spec.maxWidth = k;
            spec.maxRows = n - k;
            spec.t = 3;
            scan_partitions(spec, [&](const Partition& lambda) {
                oracle.insert({t_interior(lambda, 3).interior.size(),
                               lambda.size()});
                return true;
            }, limits);
            const std::int64_t bigN = k * (n - k);
            for (std::int64_t i = 1; i <= bigN; ++i) {
                for (std::int64_t j = i; j <= bigN; ++j) {
                    const bool expected = oracle.count({i, j}) > 0;
                    const bool got = t3_nonvanishing(k, n, i, j).first;
                    c.check(got == expected,
                            "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                " " + fmtCell(i, j) +
                                ": twist-3 classifier disagrees with the oracle");
                }
            }
        }
    }

    // First excluded values of the two quadratic-form criteria.
    {
        std::vector<std::int64_t> jList;
        for (std::int64_t j = 0; jList.size() < 5 && j < 100; ++j) {
            if (j_form_excluded(j)) jList.push_back(j);
        }
        c.check(jList == std::vector<std::int64_t>({3, 7, 11, 13, 15}),
                "first excluded j values differ from 3,7,11,13,15");
        std::vector<std::int64_t> iList;
        for (std::int64_t i = 0; iList.size() < 5 && i < 100; ++i) {
            if (i_form_excluded(i)) iList.push_back(i);
        }
        c.check(iList == std::vector<std::int64_t>({5, 10, 11, 15, 17}),
                "first excluded i values differ from 5,10,11,15,17");
    }

    // Core counts: series against enumeration, and the classical zero set.
    for (std::int64_t t = 1; t <= 7; ++t) {
        const CoreCountSeries series = core_count_series(t, 200);
        const auto counted = count_tcores_by_size(t, 60, limits);
        for (std::int64_t m = 0; m <= 60; ++m) {
            c.check(series.coeffs[static_cast<std::size_t>(m)] ==
                        counted[static_cast<std::size_t>(m)],
                    "t=" + std::to_string(t) + " m=" + std::to_string(m) +
                        ": series and enumeration disagree");
        }
        if (t == 3) {
            for (std::int64_t m = 0; m <= 200; ++m) {
                const bool zero = series.coeffs[static_cast<std::size_t>(m)] == 0;
                c.check(zero == hanExcluded(m),
                        "m=" + std::to_string(m) +
                            ": c_3 zero set disagrees with the ord_p criterion");
                c.check(zero == j_form_excluded(m),
                        "m=" + std::to_string(m) +
                            ": c_3 zero set disagrees with the quadratic form");
            }
        }
        if (t >= 4) {
            for (std::int64_t m = 0; m <= 60; ++m) {
                c.check(counted[static_cast<std::size_t>(m)] > 0,
                        "t=" + std::to_string(t) + " m=" + std::to_string(m) +
                            ": expected a positive t-core count");
            }
        }
    }
    return c.report;
}

// --- serre: duality across the sign of the twist --------------------------

SuiteReport runSerre(const VerifyOptions& opt) {
    Checker c;
    c.report.suite = "serre";
    const std::int64_t nmax = opt.nmax > 0 ? opt.nmax : 7;
    const EnumLimits limits = limitsOf(opt);

    for (std::int64_t n = 2; n <= nmax; ++n) {
        for (std::int64_t k = 1; k < n; ++k) {
            const std::int64_t bigN = k * (n - k);
            const std::int64_t tTop = opt.tmax > 0 ? opt.tmax : n;
            for (std::int64_t t = 0; t <= tTop; ++t) {
                const HodgeTable plus = hodge_table(k, n, t, limits);
                const HodgeTable minus = hodge_table(k, n, -t, limits);
                bool match = plus.entries.size() == minus.entries.size();
                for (const auto& [cell, dim] : plus.entries) {
                    if (minus.dim(bigN - cell.first, bigN - cell.second) != dim) {
                        match = false;
                        break;
                    }
                }
                c.check(match, "k=" + std::to_string(k) + " n=" +
                                   std::to_string(n) + " t=" + std::to_string(t) +
                                   ": Serre duality fails");
            }
        }
    }
    return c.report;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "bijection", "battery", "bwb-equivalence", "extremal", "t3", "serre"};
    return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "bijection") return runBijection(opt);
    if (name == "battery") return runBattery(opt);
    if (name == "bwb-equivalence") return runBwbEquivalence(opt);
    if (name == "extremal") return runExtremal(opt);
    if (name == "t3") return runT3(opt);
    if (name == "serre") return runSerre(opt);
    throw DomainError("unknown suite: " + name);
}

std::vector<SuiteReport> run_suites(const std::string& nameOrAll,
                                    const VerifyOptions& opt) {
    std::vector<SuiteReport> reports;
    if (nameOrAll == "all") {
        for (const std::string& name : suite_names()) {
            reports.push_back(run_suite(name, opt));
        }
    } else {
        reports.push_back(run_suite(nameOrAll, opt));
    }
    return reports;
}

} // namespace grasshodge::verify
