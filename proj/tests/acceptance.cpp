// One line per acceptance criterion; exits nonzero if any criterion fails.

#include "ringrank/catalog.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace ringrank;

namespace {

// Wall-clock budgets in seconds; criteria without an entry are unbounded.
const std::map<int, double> kBudget = {{1, 1.0}, {2, 1.0}, {3, 1.0}, {4, 5.0}, {5, 30.0}, {6, 5.0}, {9, 10.0}};

} // namespace

int main()
{
    std::map<int, std::vector<const Check*>> groups;
    const auto checks = catalog_checks();
    for (const auto& c : checks)
        groups[c.criterion].push_back(&c);

    int failed_criteria = 0;
    for (int k = 1; k <= 9; ++k) {
        const auto& group = groups[k];
        std::size_t passed = 0;
        std::vector<std::string> failures;
        const auto t0 = std::chrono::steady_clock::now();
        for (const Check* c : group) {
            CheckResult r;
            try {
                r = c->run();
            } catch (const std::exception& e) {
                r = CheckResult{false, "no error", e.what()};
            }
            if (r.pass)
                ++passed;
            else
                failures.push_back(c->name + ": expected " + r.expected + ", got " + r.actual);
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const auto budget = kBudget.find(k);
        const bool in_time = budget == kBudget.end() || secs <= budget->second;
        const bool ok = !group.empty() && failures.empty() && in_time;
        failed_criteria += ok ? 0 : 1;

        std::printf("%s criterion %d: %s (%zu/%zu checks, %.3f s", ok ? "PASS" : "FAIL", k,
                    criterion_title(k).c_str(), passed, group.size(), secs);
        if (budget != kBudget.end())
            std::printf(", budget %.0f s", budget->second);
        std::printf(")\n");
        for (const auto& f : failures)
            std::printf("    %s\n", f.c_str());
        if (group.empty())
            std::printf("    no checks registered\n");
        if (!in_time)
            std::printf("    over the time budget\n");
    }
    std::printf("%d of 9 criteria failed\n", failed_criteria);
    return failed_criteria == 0 ? 0 : 1;
}
