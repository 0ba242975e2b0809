#pragma once

#include <string>
#include <vector>

#include "qcusp/report.hpp"

namespace qcusp::suites {

using report::Bounds;
using report::VerificationReport;

// The verification suites, one per module cluster.
std::vector<std::string> suite_names();

// Runs one suite; throws std::invalid_argument for an unknown name or
// unusable bounds.
VerificationReport run_suite(const std::string& name, const Bounds& b);

// All suites in the order of suite_names(), merged under the id "all".
VerificationReport run_all(const Bounds& b);

}  // namespace qcusp::suites
