// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <iostream>

#include "linroots/selftest.hpp"

int main() {
    return linroots::selftest::run_and_print(std::cout) == 0 ? 0 : 1;
}
