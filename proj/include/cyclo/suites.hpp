#ifndef CYCLO_SUITES_HPP
#define CYCLO_SUITES_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/scalar.hpp"

namespace cyclo {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::size_t cases = 0;
    std::string detail;  // first failure, or a short summary
    double seconds = 0;
};

struct SuiteOptions {
    int m = 2;
    int max_n = 4;
    /// Numeric checks run here when set; otherwise entries are compared as rational functions.
    std::optional<ParamSpec> spec;
};

/// relations, gram, baxter, spectrum, dimensions, idempotents, commutant, traces, appendixA, appendixC.
const std::vector<std::string>& suite_names();

/// Throws LookupError for an unknown name.
CheckResult run_suite(const std::string& name, const SuiteOptions& options);

/// Runs several suites on at most `jobs` threads; results come back in the order of `names`.
std::vector<CheckResult> run_suites(const std::vector<std::string>& names, const SuiteOptions& options, unsigned jobs);

struct Criterion {
    int number = 0;
    std::string title;
    double budget_seconds = 0;
    std::function<CheckResult()> run;
};

/// The fixed conformance checklist; each entry carries its own parameter ranges.
std::vector<Criterion> acceptance_criteria();

/// "PASS" or "FAIL", the number, title, elapsed time and budget, and the detail on failure.
std::string format_criterion(const Criterion& c, const CheckResult& r);

}  // namespace cyclo

#endif
