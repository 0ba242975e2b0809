// qcusp: verification suites, triangular-coaction classification, and the
// pairing table for the cusp-curve quantum automorphism, from the command
// line.
//
// Exit codes: 0 success (for verify: every non-vacuous check passed),
// 1 check failures or runtime failure, 2 usage error, 3 unreadable input,
// 4 out-of-range bounds.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcusp/classify.hpp"
#include "qcusp/dual.hpp"
#include "qcusp/json_io.hpp"
#include "qcusp/report.hpp"
#include "qcusp/suites.hpp"

namespace {

using qcusp::exact::LaurentPoly;
using qcusp::exact::RationalFunction;
using qcusp::exact::Scalar;
using qcusp::jsonio::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitBadBounds = 4;

struct CommonFlags {
    std::string format = "text";
    std::string output;
    bool timings = false;
};

void add_common(CLI::App* cmd, CommonFlags* flags, bool with_timings) {
    cmd->add_option("--format", flags->format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", flags->output, "write the result to PATH instead of stdout");
    if (with_timings)
        cmd->add_flag("--timings", flags->timings,
                      "include wall-clock timings (reports stop being reproducible)");
}

int emit(const std::string& body, const CommonFlags& flags) {
    if (flags.output.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(flags.output, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open '" << flags.output << "' for writing\n";
        return kExitFailure;
    }
    out << body;
    return 0;
}

json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    return json::parse(in);
}

// --- verify ---------------------------------------------------------------

int run_verify(const std::string& suite, const qcusp::report::Bounds& bounds,
               const CommonFlags& flags) {
    std::string problem = qcusp::report::validate(bounds);
    if (!problem.empty()) {
        std::cerr << problem << "\n";
        return kExitBadBounds;
    }
    qcusp::report::VerificationReport rep = suite == "all"
                                                ? qcusp::suites::run_all(bounds)
                                                : qcusp::suites::run_suite(suite, bounds);
    std::string body = flags.format == "json"
                           ? qcusp::jsonio::to_json(rep, flags.timings).dump(2) + "\n"
                           : rep.text(flags.timings);
    int io = emit(body, flags);
    if (io != 0) return io;
    return rep.all_ok() ? 0 : kExitFailure;
}

// --- classify -------------------------------------------------------------

// The diagonal entries must be alpha t, alpha beta t, ...; returns the
// successive ratios alpha, beta, gamma.
std::vector<Scalar> diagonal_ratios(const qcusp::classify::TriangularT& t) {
    std::vector<Scalar> coeffs;
    for (int i = 0; i < t.n; ++i) {
        auto lp = t.diagonal[static_cast<size_t>(i)].as_laurent();
        bool monomial_t = lp.has_value() && lp->coeffs().size() == 1 &&
                          lp->coeffs().begin()->first == 1 &&
                          !lp->coeffs().begin()->second.is_zero();
        if (!monomial_t)
            throw std::invalid_argument("diagonal entry (" + std::to_string(i) + ", " +
                                        std::to_string(i) +
                                        ") is not a nonzero scalar multiple of t");
        coeffs.push_back(lp->coeffs().begin()->second);
    }
    std::vector<Scalar> ratios;
    Scalar prev(1);
    for (const auto& c : coeffs) {
        ratios.push_back(c * prev.inverse());
        prev = c;
    }
    return ratios;
}

// nullopt when the entry is a genuine rational function, which can never lie
// in the cusp ring.
std::optional<LaurentPoly> laurent_entry(const qcusp::classify::TriangularT& t, int i, int j) {
    return t.entry(i, j).as_laurent();
}

std::string decision_text(const qcusp::classify::Decision2& d) {
    std::ostringstream os;
    os << "n: 2\n";
    os << "accept: " << (d.accept ? "yes" : "no") << "\n";
    os << "case: " << d.case_tag << "\n";
    os << "reason: " << d.reason << "\n";
    return os.str();
}

std::string decision_text(const qcusp::classify::Decision3& d, bool witnesses) {
    std::ostringstream os;
    os << "n: 3\n";
    os << "accept: " << (d.accept ? "yes" : "no") << "\n";
    os << "entry (1, 2): " << (d.accept_x ? "accept" : "reject") << ", case " << d.case_x << "\n";
    os << "entry (2, 3): " << (d.accept_y ? "accept" : "reject") << ", case " << d.case_y << "\n";
    os << "corner: " << (d.accept_corner ? "accept" : "reject") << ", "
       << (d.regular ? "regular" : "singular") << "\n";
    if (witnesses) {
        if (d.witness_a) os << "witness a: " << d.witness_a->str("t") << "\n";
        if (d.witness_b) os << "witness b: " << d.witness_b->str("t") << "\n";
        if (d.witness_c) os << "witness c: " << d.witness_c->str("t") << "\n";
    }
    os << "reason: " << d.reason << "\n";
    return os.str();
}

int run_classify(int n, const std::string& input, bool witnesses, const CommonFlags& flags) {
    json j = load_json(input);
    qcusp::classify::TriangularT t = qcusp::jsonio::classify_input_from_json(j);
    if (t.n != n)
        throw std::invalid_argument("matrix has n = " + std::to_string(t.n) + " but --n " +
                                    std::to_string(n) + " was requested");
    std::vector<Scalar> ratios = diagonal_ratios(t);
    std::string body;
    if (n == 2) {
        qcusp::classify::Decision2 d;
        auto z = laurent_entry(t, 0, 1);
        if (z) {
            d = qcusp::classify::classify_n2(ratios[0], ratios[1], *z);
        } else {
            d.accept = false;
            d.reason = "entry (1, 2) is not a Laurent polynomial";
        }
        body = flags.format == "json" ? qcusp::jsonio::to_json(d).dump(2) + "\n"
                                      : decision_text(d);
    } else {
        qcusp::classify::Decision3 d;
        auto x = laurent_entry(t, 0, 1);
        auto y = laurent_entry(t, 1, 2);
        auto z = laurent_entry(t, 0, 2);
        if (x && y && z) {
            d = qcusp::classify::classify_n3(ratios[0], ratios[1], ratios[2], *x, *y, *z);
        } else {
            d.accept = false;
            d.reason = "some strict-upper entry is not a Laurent polynomial";
        }
        body = flags.format == "json" ? qcusp::jsonio::to_json(d, witnesses).dump(2) + "\n"
                                      : decision_text(d, witnesses);
    }
    return emit(body, flags);
}

// --- pair -----------------------------------------------------------------

int run_pair(int i, int j, int k, int l, int a, int b, int c, const CommonFlags& flags) {
    auto binary = [](const char* name, int v) {
        if (v < 0 || v > 1)
            throw std::out_of_range(std::string(name) + " must be 0 or 1 (got " +
                                    std::to_string(v) + ")");
    };
    binary("--i", i);
    binary("--j", j);
    binary("--k", k);
    binary("--a", a);
    binary("--c", c);
    if (l < 0 || l > 12 || b < 0 || b > 12)
        throw std::out_of_range("--l and --b must lie in [0, 12]");

    Scalar formula = qcusp::dual::closed_pairing(i, j, k, l, a, b, c);
    qcusp::dual::PairingOracle oracle;
    Scalar observed = oracle.basis_pairing(i, j, k, l, a, b, c);
    bool agree = formula == observed;

    std::string body;
    if (flags.format == "json") {
        json out;
        out["i"] = i;
        out["j"] = j;
        out["k"] = k;
        out["l"] = l;
        out["a"] = a;
        out["b"] = b;
        out["c"] = c;
        out["formula"] = qcusp::jsonio::to_json(formula);
        out["oracle"] = qcusp::jsonio::to_json(observed);
        out["agree"] = agree;
        body = out.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "<C^" << i << " D^" << j << " K^" << k << " Y^" << l << ", g^" << a << " f^" << b
           << " s^" << c << ">\n";
        os << "formula: " << formula.str() << "\n";
        os << "oracle: " << observed.str() << "\n";
        os << "agree: " << (agree ? "yes" : "no") << "\n";
        body = os.str();
    }
    int io = emit(body, flags);
    if (io != 0) return io;
    return agree ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the cusp-curve quantum automorphism"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    qcusp::report::Bounds bounds;
    std::string pair_bounds = "6,6";
    std::string lambda_text = "1";
    CommonFlags verify_flags;
    verify
        ->add_option("suite", suite,
                     "one of: all, ncmatrix, rewrite, hopf, cusp, dual, classify, star")
        ->check(CLI::IsMember({"all", "ncmatrix", "rewrite", "hopf", "cusp", "dual", "classify",
                               "star"}))
        ->capture_default_str();
    verify->add_option("--max-degree", bounds.max_degree, "truncation of the cusp ring")
        ->capture_default_str();
    verify->add_option("--hopf-degree", bounds.hopf_degree, "generator-exponent bound for axioms")
        ->capture_default_str();
    verify->add_option("--pair-bounds", pair_bounds, "pairing table bounds L,B")
        ->capture_default_str();
    verify->add_option("--seed", bounds.seed, "seed for randomized instances")
        ->capture_default_str();
    verify->add_option("--lambda", lambda_text, "evaluation point, 'p/q' or 'p/q,r/s'")
        ->capture_default_str();
    add_common(verify, &verify_flags, true);

    // classify
    auto* classify = app.add_subcommand("classify", "decide a triangular coaction candidate");
    int n = 2;
    std::string input;
    bool witnesses = false;
    CommonFlags classify_flags;
    classify->add_option("--n", n, "matrix size")->check(CLI::IsMember({2, 3}))->required();
    classify->add_option("--input", input, "path to the matrix JSON")->required();
    classify->add_flag("--witnesses", witnesses, "print corner witnesses when available");
    add_common(classify, &classify_flags, false);

    // pair
    auto* pair = app.add_subcommand("pair", "one pairing table entry, formula versus oracle");
    int pi = 0, pj = 0, pk = 0, pl = 0, pa = 0, pb = 0, pc = 0;
    CommonFlags pair_flags;
    pair->add_option("--i", pi, "C exponent")->required();
    pair->add_option("--j", pj, "D exponent")->required();
    pair->add_option("--k", pk, "K exponent")->required();
    pair->add_option("--l", pl, "Y exponent")->required();
    pair->add_option("--a", pa, "g exponent")->required();
    pair->add_option("--b", pb, "f exponent")->required();
    pair->add_option("--c", pc, "s exponent")->required();
    add_common(pair, &pair_flags, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            auto comma = pair_bounds.find(',');
            try {
                if (comma == std::string::npos) throw std::invalid_argument("no comma");
                size_t used_l = 0, used_b = 0;
                std::string left = pair_bounds.substr(0, comma);
                std::string right = pair_bounds.substr(comma + 1);
                bounds.pair_l = std::stoi(left, &used_l);
                bounds.pair_b = std::stoi(right, &used_b);
                if (used_l != left.size() || used_b != right.size())
                    throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                std::cerr << "--pair-bounds wants 'L,B' with two integers, got '" << pair_bounds
                          << "'\n";
                return kExitUsage;
            }
            try {
                bounds.lambda = Scalar::parse(lambda_text);
            } catch (const std::exception& e) {
                std::cerr << "--lambda: " << e.what() << "\n";
                return kExitUsage;
            }
            return run_verify(suite, bounds, verify_flags);
        }
        if (classify->parsed()) return run_classify(n, input, witnesses, classify_flags);
        if (pair->parsed()) return run_pair(pi, pj, pk, pl, pa, pb, pc, pair_flags);
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "input is not valid JSON: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::out_of_range& e) {
        std::cerr << e.what() << "\n";
        return kExitBadBounds;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
