#pragma once

#include <iosfwd>

#include "linroots/linset.hpp"
#include "linroots/roots.hpp"

namespace linroots::selftest {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full acceptance suite; one result per criterion.
std::vector<CriterionResult> run_all();

/// Prints one pass/fail line per criterion; returns the number of failures.
int run_and_print(std::ostream& out);

}  // namespace linroots::selftest
