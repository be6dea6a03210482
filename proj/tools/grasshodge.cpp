// Command line interface: existence checks, Hodge tables, witness dumps,
// core counts, and the property-suite runner.
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grasshodge/bwb.hpp"
#include "grasshodge/classifiers.hpp"
#include "grasshodge/enumeration.hpp"
#include "grasshodge/errors.hpp"
#include "grasshodge/output.hpp"
#include "grasshodge/tcore.hpp"
#include "grasshodge/verify.hpp"
#include "grasshodge/version.hpp"

namespace {

using namespace grasshodge;

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitDisagreement = 4;
constexpr int kExitPropertyViolation = 5;

constexpr std::int64_t kMaxTwist = 1'000'000;

struct CheckArgs {
    std::int64_t k = 0, n = 0, i = 0, j = 0, t = 0;
    std::int64_t witnesses = 1;
    std::int64_t cap = EnumLimits{}.nodeCap;
    bool noDim = false;
    bool explain = false;
    bool json = false;
};

void validateCell(std::int64_t k, std::int64_t n, std::int64_t i,
                  std::int64_t j, std::int64_t t) {
    if (k < 1 || k >= n) {
        throw DomainError("require 1 <= k < n");
    }
    const std::int64_t bigN = k * (n - k);
    if (i < 0 || i > bigN || j < 0 || j > bigN) {
        throw DomainError("require 0 <= i, j <= k(n-k)");
    }
    if (t < -kMaxTwist || t > kMaxTwist) {
        throw DomainError("twist out of range");
    }
}

std::string verdictLine(const Verdict& v) {
    std::string line = v.holds ? "[pass] " : "[FAIL] ";
    line += v.name;
    if (!v.applicable) {
        line += " (not applicable)";
    } else {
        line += " (lhs=" + std::to_string(v.lhs) +
                " rhs=" + std::to_string(v.rhs) + ")";
    }
    return line;
}

int runCheck(const CheckArgs& a) {
    validateCell(a.k, a.n, a.i, a.j, a.t);
    const EnumLimits limits{a.cap};
    const KnijtQuery q{a.k, a.n, a.i, a.j, a.t};

    bool exists = false;
    std::string reason;
    std::vector<Partition> found;

    if (a.t < 0) {
        exists = hodge_number(a.k, a.n, a.i, a.j, a.t, limits) > 0;
        reason = "bwb, via Serre-dual range";
    } else if (const auto small = classify_small_t(q)) {
        exists = *small;
        reason = a.t >= a.n ? "classifier: t>=n" : "classifier: t=" + std::to_string(a.t);
    } else {
        const auto battery = necessary_battery(q);
        const auto failed = std::find_if(battery.begin(), battery.end(),
                                         [](const Verdict& v) { return !v.holds; });
        if (failed != battery.end()) {
            exists = false;
            reason = "battery: " + failed->name;
        } else if (a.t == 3 && a.i > 0 && a.j > 0) {
            exists = t3_nonvanishing(a.k, a.n, a.i, a.j).first;
            reason = "classifier: t=3";
        } else if (a.i + a.j == q.bigN()) {
            const auto cell = classify_extremal_N(a.k, a.n, a.t);
            exists = cell && *cell == std::pair{a.i, a.j};
            reason = "classifier: i+j=N";
        } else if (a.i > 0 && a.i + a.j == q.bigN() - 1) {
            exists = classify_extremal_N_minus_1(a.k, a.n, a.i, a.j, a.t);
            reason = "classifier: i+j=N-1";
        } else {
            found = knijt_witnesses(q, std::max<std::int64_t>(a.witnesses, 1), limits);
            exists = !found.empty();
            reason = "oracle";
        }
        if (exists && found.empty() && a.witnesses > 0) {
            found = knijt_witnesses(q, a.witnesses, limits);
        }
        if (static_cast<std::int64_t>(found.size()) > a.witnesses) {
            found.resize(static_cast<std::size_t>(std::max<std::int64_t>(a.witnesses, 0)));
        }
    }

    std::optional<BigInt> dim;
    if (!a.noDim) {
        dim = hodge_number(a.k, a.n, a.i, a.j, a.t, limits);
        if ((*dim > 0) != exists) {
            std::cerr << "internal disagreement: " << reason << " says "
                      << (exists ? "NONZERO" : "ZERO") << " but dim = "
                      << dim->str() << "\n";
            return kExitDisagreement;
        }
    }

    if (a.json) {
        OutputDocument doc = make_document(a.k, a.n, a.t, "check");
        if (dim && *dim > 0) {
            doc.entries.push_back({a.i, a.j, dim->str()});
        }
        doc.witnesses = found;
        std::cout << to_json_string(doc);
        return kExitOk;
    }

    if (exists) {
        std::cout << "NONZERO" << (a.t < 0 ? " (" + reason + ")" : "") << "\n";
    } else {
        std::cout << "ZERO (" << reason << ")\n";
    }
    if (dim) {
        std::cout << "dim = " << dim->str() << "\n";
    }
    for (const Partition& w : found) {
        std::cout << "witness: " << w.toString() << "\n";
    }
    if (a.explain && a.t >= 0) {
        for (const Verdict& v : necessary_battery(q)) {
            std::cout << "  " << verdictLine(v) << "\n";
        }
    }
    return kExitOk;
}

int runTable(std::int64_t k, std::int64_t n, std::int64_t t,
             const std::string& format, std::int64_t cap) {
    validateCell(k, n, 0, 0, t);
    const HodgeTable table = hodge_table(k, n, t, EnumLimits{cap});
    if (format == "csv") {
        std::cout << table_csv(table);
    } else if (format == "tex") {
        std::cout << table_tex(table);
    } else {
        OutputDocument doc = make_document(k, n, t, "table");
        doc.entries = table_entries(table);
        std::cout << to_json_string(doc);
    }
    return kExitOk;
}

int runEnumerate(std::int64_t k, std::int64_t n, std::int64_t i, std::int64_t j,
                 std::int64_t t, std::int64_t limit, bool json, std::int64_t cap) {
    validateCell(k, n, i, j, t);
    if (t < 0) {
        throw DomainError("witness enumeration requires t >= 0");
    }
    const KnijtQuery q{k, n, i, j, t};
    const auto found = knijt_witnesses(q, limit, EnumLimits{cap});
    if (json) {
        OutputDocument doc = make_document(k, n, t, "enumerate");
        doc.witnesses = found;
        std::cout << to_json_string(doc);
    } else {
        for (const Partition& w : found) {
            std::cout << w.toString() << "\n";
        }
    }
    return kExitOk;
}

int runCountCores(std::int64_t t, std::int64_t maxN, const std::string& method,
                  std::int64_t cap) {
    if (t < 1) {
        throw DomainError("count-cores requires t >= 1");
    }
    if (maxN < 0 || maxN > 5000) {
        throw DomainError("maxN out of range (0..5000)");
    }
    std::vector<std::int64_t> counts;
    if (method == "enum") {
        counts = count_tcores_by_size(t, maxN, EnumLimits{cap});
    } else if (method == "series") {
        counts = core_count_series(t, maxN).coeffs;
    } else {
        counts = count_tcores_by_size(t, maxN, EnumLimits{cap});
        const auto series = core_count_series(t, maxN).coeffs;
        for (std::int64_t m = 0; m <= maxN; ++m) {
            if (counts[static_cast<std::size_t>(m)] !=
                series[static_cast<std::size_t>(m)]) {
                std::cerr << "method disagreement at m=" << m << ": enum="
                          << counts[static_cast<std::size_t>(m)] << " series="
                          << series[static_cast<std::size_t>(m)] << "\n";
                return kExitDisagreement;
            }
        }
    }
    std::string line;
    for (std::size_t m = 0; m < counts.size(); ++m) {
        if (m > 0) line += ",";
        line += std::to_string(counts[m]);
    }
    std::cout << line << "\n";
    return kExitOk;
}

int runDim(std::int64_t k, std::int64_t n, std::int64_t i, std::int64_t j,
           std::int64_t t, std::int64_t cap) {
    validateCell(k, n, i, j, t);
    if (t < 0) {
        throw DomainError("dim requires t >= 0; use check or table for t < 0");
    }
    std::cout << hodge_number(k, n, i, j, t, EnumLimits{cap}).str() << "\n";
    return kExitOk;
}

int runVerify(const std::string& suite, std::int64_t kmax, std::int64_t nmax,
              std::int64_t tmax, std::int64_t cap) {
    verify::VerifyOptions opt;
    opt.kmax = kmax;
    opt.nmax = nmax;
    opt.tmax = tmax;
    opt.nodeCap = cap;
    const auto reports = verify::run_suites(suite, opt);
    bool allPassed = true;
    for (const auto& report : reports) {
        if (report.passed) {
            std::cout << "[PASS] " << report.suite << " (" << report.checks
                      << " checks)\n";
        } else {
            allPassed = false;
            std::cout << "[FAIL] " << report.suite << ": " << report.failureCount
                      << " of " << report.checks << " checks failed\n";
            for (const std::string& failure : report.failures) {
                std::cout << "  counterexample: " << failure << "\n";
            }
        }
    }
    return allPassed ? kExitOk : kExitPropertyViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact twisted Hodge numbers of Grassmannians via t-core partitions"};
    app.set_version_flag("--version", std::string("grasshodge ") + kVersion);
    app.require_subcommand(1);

    int exitCode = kExitOk;

    CheckArgs check;
    auto* cmdCheck = app.add_subcommand(
        "check", "Decide whether h^i(Gr(k,n), Omega^j(t)) is nonzero");
    cmdCheck->add_option("k", check.k)->required();
    cmdCheck->add_option("n", check.n)->required();
    cmdCheck->add_option("i", check.i)->required();
    cmdCheck->add_option("j", check.j)->required();
    cmdCheck->add_option("t", check.t)->required();
    cmdCheck->add_option("--witnesses", check.witnesses,
                         "Print up to this many witness partitions");
    cmdCheck->add_flag("--no-dim", check.noDim, "Skip the dimension");
    cmdCheck->add_flag("--explain", check.explain, "Print the battery verdicts");
    cmdCheck->add_flag("--json", check.json, "Machine-readable output");
    cmdCheck->add_option("--cap", check.cap, "Enumeration node cap");
    cmdCheck->callback([&] { exitCode = runCheck(check); });

    std::int64_t tk = 0, tn = 0, tt = 0, tcap = EnumLimits{}.nodeCap;
    std::string tformat = "json";
    auto* cmdTable = app.add_subcommand(
        "table", "All nonzero h^i(Gr(k,n), Omega^j(t)) for fixed t");
    cmdTable->add_option("k", tk)->required();
    cmdTable->add_option("n", tn)->required();
    cmdTable->add_option("t", tt)->required();
    cmdTable->add_option("--format", tformat, "json, csv, or tex")
        ->check(CLI::IsMember({"json", "csv", "tex"}));
    cmdTable->add_option("--cap", tcap, "Enumeration node cap");
    cmdTable->callback([&] { exitCode = runTable(tk, tn, tt, tformat, tcap); });

    std::int64_t ek = 0, en = 0, ei = 0, ej = 0, et = 0, elimit = 100,
                 ecap = EnumLimits{}.nodeCap;
    bool ejson = false;
    auto* cmdEnum = app.add_subcommand(
        "enumerate", "Dump witness partitions for a (k,n,i,j,t) query");
    cmdEnum->add_option("k", ek)->required();
    cmdEnum->add_option("n", en)->required();
    cmdEnum->add_option("i", ei)->required();
    cmdEnum->add_option("j", ej)->required();
    cmdEnum->add_option("t", et)->required();
    cmdEnum->add_option("--limit", elimit, "Maximum number of witnesses");
    cmdEnum->add_flag("--json", ejson, "Machine-readable output");
    cmdEnum->add_option("--cap", ecap, "Enumeration node cap");
    cmdEnum->callback(
        [&] { exitCode = runEnumerate(ek, en, ei, ej, et, elimit, ejson, ecap); });

    std::int64_t ct = 0, cmax = 0, ccap = EnumLimits{}.nodeCap;
    std::string cmethod = "both";
    auto* cmdCount = app.add_subcommand("count-cores",
                                        "Count t-core partitions of 0..maxN");
    cmdCount->add_option("t", ct)->required();
    cmdCount->add_option("maxN", cmax)->required();
    cmdCount->add_option("--method", cmethod, "enum, series, or both")
        ->check(CLI::IsMember({"enum", "series", "both"}));
    cmdCount->add_option("--cap", ccap, "Enumeration node cap");
    cmdCount->callback([&] { exitCode = runCountCores(ct, cmax, cmethod, ccap); });

    std::int64_t dk = 0, dn = 0, di = 0, dj = 0, dt = 0,
                 dcap = EnumLimits{}.nodeCap;
    auto* cmdDim = app.add_subcommand("dim",
                                      "Print the exact dimension of one group");
    cmdDim->add_option("k", dk)->required();
    cmdDim->add_option("n", dn)->required();
    cmdDim->add_option("i", di)->required();
    cmdDim->add_option("j", dj)->required();
    cmdDim->add_option("t", dt)->required();
    cmdDim->add_option("--cap", dcap, "Enumeration node cap");
    cmdDim->callback([&] { exitCode = runDim(dk, dn, di, dj, dt, dcap); });

    std::string vsuite = "all";
    std::int64_t vkmax = 0, vnmax = 0, vtmax = 0, vcap = EnumLimits{}.nodeCap;
    auto* cmdVerify = app.add_subcommand("verify", "Run the property suites");
    cmdVerify->add_option("--suite", vsuite, "Suite name or 'all'")
        ->check(CLI::IsMember({"all", "bijection", "battery", "bwb-equivalence",
                               "extremal", "t3", "serre"}));
    cmdVerify->add_option("--kmax", vkmax, "Override the suite's k range");
    cmdVerify->add_option("--nmax", vnmax, "Override the suite's n range");
    cmdVerify->add_option("--tmax", vtmax, "Override the suite's t range");
    cmdVerify->add_option("--cap", vcap, "Enumeration node cap");
    cmdVerify->callback(
        [&] { exitCode = runVerify(vsuite, vkmax, vnmax, vtmax, vcap); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadArgs;
    } catch (const LimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exitCode;
}
