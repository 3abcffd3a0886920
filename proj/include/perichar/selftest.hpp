#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "perichar/cancel.hpp"

namespace perichar::selftest {

enum class Scale { quick, full };

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;   // counts on success, counterexample on failure
    double seconds = 0.0;
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

/// Run the property suites (quick: small domains, full: the acceptance
/// domains). When log is set, one "[PASS]/[FAIL] name - detail" line is
/// written per check; the lines carry no timings so output stays
/// byte-deterministic. Timings are available in the returned report.
Report run(Scale scale, const CancelToken* cancel = nullptr, std::ostream* log = nullptr);

} // namespace perichar::selftest
