#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "qcusp/classify.hpp"
#include "qcusp/cusp.hpp"
#include "qcusp/dual.hpp"
#include "qcusp/hopf.hpp"
#include "qcusp/json_io.hpp"
#include "qcusp/report.hpp"
#include "qcusp/suites.hpp"

namespace py = pybind11;

namespace {

using qcusp::exact::Scalar;
using qcusp::rewrite::NCPoly;

qcusp::report::Bounds make_bounds(int max_degree, int hopf_degree, int pair_l, int pair_b,
                                  std::uint64_t seed, const std::string& lambda) {
    qcusp::report::Bounds b;
    b.max_degree = max_degree;
    b.hopf_degree = hopf_degree;
    b.pair_l = pair_l;
    b.pair_b = pair_b;
    b.seed = seed;
    b.lambda = Scalar::parse(lambda);
    std::string problem = qcusp::report::validate(b);
    if (!problem.empty()) throw std::invalid_argument(problem);
    return b;
}

std::string normal_form(const qcusp::hopf::HopfPresentation& pres, const std::string& word) {
    const auto& alph = pres.sys.alphabet();
    NCPoly nf = pres.sys.nf_of(word);
    return nf.str(alph);
}

}  // namespace

PYBIND11_MODULE(_qcusp, m) {
    m.doc() = "exact verification of the cusp-curve quantum automorphism";

    m.def(
        "verify",
        [](const std::string& suite, int max_degree, int hopf_degree, int pair_l, int pair_b,
           std::uint64_t seed, const std::string& lambda, bool timings) {
            auto b = make_bounds(max_degree, hopf_degree, pair_l, pair_b, seed, lambda);
            auto rep = suite == "all" ? qcusp::suites::run_all(b)
                                      : qcusp::suites::run_suite(suite, b);
            return qcusp::jsonio::to_json(rep, timings).dump(2);
        },
        py::arg("suite") = "all", py::arg("max_degree") = 24, py::arg("hopf_degree") = 6,
        py::arg("pair_l") = 6, py::arg("pair_b") = 6, py::arg("seed") = 0,
        py::arg("lambda_") = "1", py::arg("timings") = false,
        "Run one verification suite and return its JSON report as a string.");

    m.def("suite_names", [] { return qcusp::suites::suite_names(); },
          "Names of the available verification suites.");

    m.def(
        "pair",
        [](int i, int j, int k, int l, int a, int b, int c) {
            Scalar formula = qcusp::dual::closed_pairing(i, j, k, l, a, b, c);
            qcusp::dual::PairingOracle oracle;
            Scalar observed = oracle.basis_pairing(i, j, k, l, a, b, c);
            return py::make_tuple(formula.str(), observed.str());
        },
        py::arg("i"), py::arg("j"), py::arg("k"), py::arg("l"), py::arg("a"), py::arg("b"),
        py::arg("c"),
        "The pairing <C^i D^j K^k Y^l, g^a f^b s^c>: (closed formula, oracle) as strings.");

    m.def(
        "classify_json",
        [](const std::string& matrix_json, bool witnesses) {
            auto j = qcusp::jsonio::json::parse(matrix_json);
            auto t = qcusp::jsonio::classify_input_from_json(j);
            std::vector<Scalar> coeffs;
            for (int idx = 0; idx < t.n; ++idx) {
                auto lp = t.diagonal[static_cast<size_t>(idx)].as_laurent();
                bool mono = lp.has_value() && lp->coeffs().size() == 1 &&
                            lp->coeffs().begin()->first == 1;
                if (!mono)
                    throw std::invalid_argument(
                        "diagonal entries must be scalar multiples of t");
                coeffs.push_back(lp->coeffs().begin()->second);
            }
            auto laurent_at = [&](int r, int cidx) {
                auto lp = t.entry(r, cidx).as_laurent();
                if (!lp)
                    throw std::invalid_argument("strict-upper entries must be Laurent");
                return *lp;
            };
            if (t.n == 2) {
                auto d = qcusp::classify::classify_n2(coeffs[0],
                                                      coeffs[1] * coeffs[0].inverse(),
                                                      laurent_at(0, 1));
                return qcusp::jsonio::to_json(d).dump(2);
            }
            if (t.n == 3) {
                auto d = qcusp::classify::classify_n3(
                    coeffs[0], coeffs[1] * coeffs[0].inverse(),
                    coeffs[2] * coeffs[1].inverse(), laurent_at(0, 1), laurent_at(1, 2),
                    laurent_at(0, 2));
                return qcusp::jsonio::to_json(d, witnesses).dump(2);
            }
            throw std::invalid_argument("only sizes 2 and 3 are classified");
        },
        py::arg("matrix_json"), py::arg("witnesses") = false,
        "Classify a triangular candidate given as matrix JSON; returns decision JSON.");

    m.def(
        "h_normal_form",
        [](const std::string& word) { return normal_form(qcusp::cusp::h_sigma(), word); },
        py::arg("word"),
        "Normal form of a word in C, D, K, Y modulo the defining relations.");

    m.def(
        "a_normal_form",
        [](const std::string& word) { return normal_form(qcusp::dual::a_sigma(), word); },
        py::arg("word"), "Normal form of a word in g, f, s modulo the defining relations.");

    m.def(
        "quantum_number",
        [](long l, const std::string& beta) {
            return qcusp::classify::quantum_number(l, Scalar::parse(beta)).str();
        },
        py::arg("l"), py::arg("beta"), "[[l]]_beta = 1 + beta + ... + beta^(l-1).");
}
