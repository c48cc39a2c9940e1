#include <cstdlib>
#include <iostream>

#include "tanaka_lab/suite.hpp"

namespace {

// Always-on requirement: never compiled out in Release.
#define REQUIRE(cond, msg)                                                      \
    do {                                                                        \
        if (!(cond)) {                                                          \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg \
                      << "\n";                                                  \
            std::exit(1);                                                       \
        }                                                                       \
    } while (0)

}  // namespace

int main() {
    const tanaka_lab::SuiteResult result = tanaka_lab::run_suite(0);
    REQUIRE(result.criteria.size() == 13, "expected 13 criteria");

    for (const tanaka_lab::CriterionResult& c : result.criteria) {
        std::cout << "criterion " << c.id << (c.id < 10 ? "  " : " ")
                  << (c.passed ? "pass" : "fail") << "  " << c.title << "\n";
        for (const tanaka_lab::CheckResult& r : c.checks) {
            if (r.passed) continue;
            std::cout << "          failed check: " << r.label;
            if (!r.detail.empty()) std::cout << " [" << r.detail << "]";
            std::cout << "\n";
        }
    }
    std::cout.flush();

    for (const tanaka_lab::CriterionResult& c : result.criteria) {
        REQUIRE(c.passed, "criterion " << c.id << " (" << c.title << ") failed");
    }
    REQUIRE(result.all_passed(), "suite reports failure");
    std::cout << "all 13 criteria passed\n";
    return 0;
}
