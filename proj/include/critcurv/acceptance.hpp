#ifndef CRITCURV_ACCEPTANCE_HPP
#define CRITCURV_ACCEPTANCE_HPP

// The acceptance suite: nine criteria, each a bundle of numeric checks with
// pinned tolerances and a wall-clock budget. Shared by the acceptance test
// binary and `critcurv verify`.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace critcurv {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0.0;
    double budget_seconds = 0.0;

    bool within_budget() const { return seconds < budget_seconds; }
    bool pass() const;
};

struct AcceptanceOptions {
    std::uint64_t seed = 7;
};

inline constexpr int criterion_count = 9;

/// Throws std::out_of_range for ids outside 1..criterion_count.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

std::vector<CriterionResult> run_acceptance(std::span<const int> ids, const AcceptanceOptions& options = {});

/// One line: "PASS|FAIL <id> <title> [passed/total]" followed by the failing
/// checks. Deterministic: timing is not part of it unless the budget was missed.
void print_result_line(std::ostream& out, const CriterionResult& r);

/// Every check, one per line, indented under the criterion.
void print_result_checks(std::ostream& out, const CriterionResult& r);

/// Zero of the Schwarzschild (beta = 1) and Eguchi-Hanson (k = 1) criticality
/// functions on the default grids. Empty: C has no zero, so there is nothing
/// to pin (the constants would be filled from find_critical_slice).
inline constexpr std::optional<double> schwarzschild_r0_regression = std::nullopt;
inline constexpr std::optional<double> eguchi_hanson_r0_regression = std::nullopt;

}  // namespace critcurv

#endif  // CRITCURV_ACCEPTANCE_HPP
