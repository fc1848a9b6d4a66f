#ifndef SSCHUR_CHECKS_ACCEPTANCE_HPP
#define SSCHUR_CHECKS_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace sschur::checks {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail;
};

/// Runs the verification criteria in order; quick mode skips the
/// long-running convergence sweeps. Each result carries a one-line detail
/// string suitable for printing.
std::vector<CriterionResult> run_acceptance(bool quick);

/// Prints one "criterion N (name): PASS/FAIL detail" line per result and
/// returns true when everything passed.
bool report(const std::vector<CriterionResult>& results);

} // namespace sschur::checks

#endif
