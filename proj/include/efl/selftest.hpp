#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace efl::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the full acceptance suite, printing one pass/fail line per criterion.
std::vector<CriterionResult> run_all(std::ostream& out);

// Convenience wrapper: 0 iff every criterion passed.
int run_cli(std::ostream& out);

}  // namespace efl::selftest
