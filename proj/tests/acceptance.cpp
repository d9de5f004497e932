// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.
// Usage: acceptance [seed] [threads]

#include <cstdio>
#include <cstdlib>
#include <string>

#include "berge_forge/verify.hpp"

int main(int argc, char** argv) {
    berge::AcceptanceOptions options;
    if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) options.threads = std::atoi(argv[2]);
    std::printf("acceptance seed=%llu threads=%d\n", static_cast<unsigned long long>(options.seed), options.threads);
    const auto report = berge::run_acceptance(options, {}, [](const berge::CriterionReport& r) {
        std::printf("%s\n", berge::format_report_line(r).c_str());
        std::fflush(stdout);
    });
    int failed = 0;
    for (const auto& r : report.criteria) failed += r.passed ? 0 : 1;
    std::printf("%d/%zu criteria passed\n", static_cast<int>(report.criteria.size()) - failed, report.criteria.size());
    return report.passed() ? 0 : 1;
}
