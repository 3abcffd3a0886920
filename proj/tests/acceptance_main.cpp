// Acceptance suite: runs every full-scale check and prints one pass/fail line
// per criterion with its runtime. Exits nonzero if anything fails.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "perichar/selftest.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();

    const perichar::selftest::Report report = perichar::selftest::run(perichar::selftest::Scale::full);

    for (const auto& check : report.checks)
        std::printf("[%s] %-36s %7.2fs  %s\n", check.pass ? "PASS" : "FAIL", check.name.c_str(),
                    check.seconds, check.detail.c_str());

    const double total = std::chrono::duration<double>(clock::now() - start).count();
    std::printf("%s: %zu checks in %.2fs\n", report.all_pass() ? "OK" : "FAILED", report.checks.size(), total);
    return report.all_pass() ? 0 : 1;
}
