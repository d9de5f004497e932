#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace berge {

struct AcceptanceOptions {
    std::uint64_t seed = 0;
    int threads = 1;
};

struct CriterionReport {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceReport {
    std::uint64_t seed = 0;
    std::vector<CriterionReport> criteria;

    bool passed() const;
};

inline constexpr int kCriterionCount = 10;

/**
 * Runs the acceptance suites. `only` selects criteria by id (empty: all).
 * Criteria 5 and 9 reuse the search results of criteria 1 and 2, which are
 * recomputed when not selected. `progress` is called after each criterion.
 */
AcceptanceReport run_acceptance(const AcceptanceOptions& options, const std::vector<int>& only = {},
                                const std::function<void(const CriterionReport&)>& progress = {});

/// "[PASS] 3 build_g2 keeps cycle-freeness (...) 0.41s"
std::string format_report_line(const CriterionReport& r);

}  // namespace berge
