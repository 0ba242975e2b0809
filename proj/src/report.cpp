#include "qcusp/report.hpp"

#include <algorithm>
#include <sstream>

namespace qcusp::report {

std::string status_str(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Vacuous: return "vacuous";
    }
    return "fail";
}

std::string validate(const Bounds& b) {
    if (b.max_degree < 4 || b.max_degree > 64)
        return "max degree " + std::to_string(b.max_degree) + " outside [4, 64]";
    if (b.hopf_degree < 1 || b.hopf_degree > 12)
        return "hopf degree " + std::to_string(b.hopf_degree) + " outside [1, 12]";
    if (b.pair_l < 0 || b.pair_l > 10 || b.pair_b < 0 || b.pair_b > 10)
        return "pairing bounds (" + std::to_string(b.pair_l) + ", " + std::to_string(b.pair_b) +
               ") outside [0, 10]";
    return "";
}

bool VerificationReport::all_ok() const { return failures() == 0; }

int VerificationReport::failures() const {
    int n = 0;
    for (const auto& c : checks)
        if (c.status == Status::Fail) ++n;
    return n;
}

void VerificationReport::absorb(const hopf::AxiomReport& r, const std::string& anchor,
                                double time_ms, const std::vector<std::string>& vacuous,
                                const std::string& prefix) {
    for (const auto& c : r.checks) {
        Status st = c.ok ? Status::Pass : Status::Fail;
        if (std::find(vacuous.begin(), vacuous.end(), c.name) != vacuous.end())
            st = Status::Vacuous;
        checks.push_back({prefix + c.name, anchor, st, c.witness, time_ms});
    }
}

void VerificationReport::add(const std::string& name, const std::string& anchor, bool ok,
                             const std::string& witness, double time_ms) {
    checks.push_back({name, anchor, ok ? Status::Pass : Status::Fail, witness, time_ms});
}

std::string VerificationReport::text(bool timings) const {
    std::ostringstream os;
    os << "suite " << suite << "\n";
    os << "bounds max-degree=" << bounds.max_degree << " hopf-degree=" << bounds.hopf_degree
       << " pair-bounds=" << bounds.pair_l << "," << bounds.pair_b << " seed=" << bounds.seed
       << " lambda=" << bounds.lambda.str() << "\n";
    for (const auto& c : checks) {
        os << "  [" << status_str(c.status) << "] " << c.anchor << ": " << c.name;
        if (timings) os << " (" << c.time_ms << " ms)";
        os << "\n";
        if (!c.witness.empty() && c.status == Status::Fail) {
            std::istringstream lines(c.witness);
            std::string line;
            while (std::getline(lines, line)) os << "      " << line << "\n";
        }
    }
    os << (all_ok() ? "ok" : "FAILED") << ": " << checks.size() << " checks, " << failures()
       << " failures\n";
    return os.str();
}

VerificationReport merge(const std::string& suite, const std::vector<VerificationReport>& parts) {
    VerificationReport out;
    out.suite = suite;
    if (!parts.empty()) out.bounds = parts.front().bounds;
    for (const auto& p : parts)
        out.checks.insert(out.checks.end(), p.checks.begin(), p.checks.end());
    return out;
}

}  // namespace qcusp::report
