#pragma once

// Registry of named invariant checks grouped into suites
// {golden, quaternion, coxeter, group, projection, quasilattice, all}.
// Each check prints one "name: values PASS|FAIL" line; run_verify returns
// false if anything failed.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace qlat {

struct CheckResult {
    bool pass = false;
    std::string detail;  // the exact values involved
};

struct Check {
    std::string name;
    std::string suite;
    std::function<CheckResult()> run;
};

const std::vector<Check>& verify_registry();

bool valid_suite(const std::string& suite);

/// Run every check of `suite` ("all" runs the whole registry) and stream the
/// report.  Returns true iff every executed check passed.
bool run_verify(const std::string& suite, std::ostream& os);

}  // namespace qlat
