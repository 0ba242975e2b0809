#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcusp/hopf.hpp"
#include "qcusp/scalar.hpp"

namespace qcusp::report {

enum class Status { Pass, Fail, Vacuous };

std::string status_str(Status s);

// One verified statement.  The anchor is a stable slug naming the underlying
// mathematical fact, so reports can be diffed across versions; timing covers
// the batch of computation that produced the check.
struct Check {
    std::string name;
    std::string anchor;
    Status status = Status::Fail;
    std::string witness;
    double time_ms = 0.0;
};

// Shared bounds for every suite; flags map onto these one to one.
struct Bounds {
    int max_degree = 24;    // truncation of the cusp ring
    int hopf_degree = 6;    // Y- resp. phi-exponent bound for Hopf axiom sweeps
    int pair_l = 6;         // Y-exponent bound in pairing tables
    int pair_b = 6;         // phi-exponent bound in pairing tables
    std::uint64_t seed = 0;
    exact::Scalar lambda = exact::Scalar(1);
};

// Nonempty description of the problem when some bound is unusable.
std::string validate(const Bounds& b);

struct VerificationReport {
    std::string suite;
    Bounds bounds;
    std::vector<Check> checks;

    // every non-vacuous check passes
    bool all_ok() const;
    int failures() const;

    // Append the checks of a module-level report under one anchor.  Checks
    // whose names appear in `vacuous` are recorded with the vacuous status;
    // the prefix keeps repeated runs of one module distinguishable.
    void absorb(const hopf::AxiomReport& r, const std::string& anchor, double time_ms = 0.0,
                const std::vector<std::string>& vacuous = {}, const std::string& prefix = "");
    void add(const std::string& name, const std::string& anchor, bool ok,
             const std::string& witness = "", double time_ms = 0.0);

    std::string text(bool timings = false) const;
};

// Concatenation preserving order; the suite id of the result is `suite`.
VerificationReport merge(const std::string& suite, const std::vector<VerificationReport>& parts);

}  // namespace qcusp::report
