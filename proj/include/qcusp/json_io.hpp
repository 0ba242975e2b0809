#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "qcusp/classify.hpp"
#include "qcusp/laurent.hpp"
#include "qcusp/matrix.hpp"
#include "qcusp/ncpoly.hpp"
#include "qcusp/ratfunc.hpp"
#include "qcusp/report.hpp"
#include "qcusp/scalar.hpp"
#include "qcusp/words.hpp"

namespace qcusp::jsonio {

using json = nlohmann::ordered_json;

// All *_from_json functions throw std::invalid_argument with a description on
// malformed input.

// {"re": "p/q", "im": "p/q"}; integers and bare strings are accepted on read.
json to_json(const exact::Scalar& s);
exact::Scalar scalar_from_json(const json& j);

// object from exponent string to scalar, e.g. {"-1": {"re": "-1/3", ...}}
json to_json(const exact::LaurentPoly& p);
exact::LaurentPoly laurent_from_json(const json& j);

// {"num": laurent, "den": laurent}
json to_json(const exact::RationalFunction& f);
exact::RationalFunction ratfunc_from_json(const json& j);

// {"n": ..., "carrier": "ratfunc" | "laurent" | "freealg", "entries": [[...]]}
// with row-major entry rows.
json to_json(const mat::RingMatrix<exact::RationalFunction>& m);
json to_json(const mat::RingMatrix<exact::LaurentPoly>& m);
json to_json(const mat::RingMatrix<rewrite::NCPoly>& m, const rewrite::Alphabet& alph);

// Reads either the ratfunc or the laurent carrier.
mat::RingMatrix<exact::RationalFunction> ratfunc_matrix_from_json(const json& j);
mat::RingMatrix<rewrite::NCPoly> freealg_matrix_from_json(const json& j,
                                                          const rewrite::Alphabet& alph);

// Classification input: a triangular matrix in the format above, plus an
// optional "params" block {"alpha": ..., "beta": ..., "gamma": ...} which, when
// present, must match the diagonal.
classify::TriangularT classify_input_from_json(const json& j);

json to_json(const classify::Decision2& d);
json to_json(const classify::Decision3& d, bool witnesses);

// {"suite": ..., "bounds": {...}, "checks": [{"name", "anchor", "status",
// "witness"}]}; timing fields appear only on request so that reports are
// byte-identical across runs.
json to_json(const report::Bounds& b);
json to_json(const report::VerificationReport& r, bool timings = false);

}  // namespace qcusp::jsonio
