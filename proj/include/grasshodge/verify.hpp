#ifndef GRASSHODGE_VERIFY_HPP
#define GRASSHODGE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace grasshodge::verify {

/// Range overrides for the property suites; 0 keeps a suite's default.
struct VerifyOptions {
    std::int64_t kmax = 0;
    std::int64_t nmax = 0;
    std::int64_t tmax = 0;
    std::int64_t nodeCap = 100'000'000;
};

struct SuiteReport {
    std::string suite;
    bool passed = true;
    std::int64_t checks = 0;
    std::vector<std::string> failures; // first counterexamples, verbatim
    std::int64_t failureCount = 0;     // total, including unrecorded ones
};

/// Suite names accepted by run_suite, excluding "all".
const std::vector<std::string>& suite_names();

/// Runs one named suite ("bijection", "battery", "bwb-equivalence",
/// "extremal", "t3", "serre").  Throws DomainError for unknown names.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {});

/// Runs one suite or, for "all", every suite in order.
std::vector<SuiteReport> run_suites(const std::string& nameOrAll,
                                    const VerifyOptions& opt = {});

} // namespace grasshodge::verify

#endif
