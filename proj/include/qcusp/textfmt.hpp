#pragma once

#include <string>

#include "qcusp/hopf.hpp"
#include "qcusp/ncpoly.hpp"
#include "qcusp/rewrite.hpp"
#include "qcusp/scalar.hpp"
#include "qcusp/tensor.hpp"
#include "qcusp/words.hpp"

namespace qcusp::textfmt {

// Line-oriented format for presentations, restricted to alphabets with
// single-character symbol names:
//
//   symbols C D K Y
//   weights 3 1 0 2          (one line per weight row)
//   lex C D K Y              (optional, ascending rank)
//   KK -> 1                  (one rule per line, "LHS -> RHS")
//   Delta K = 1*(K x K)      (optional Hopf data, all generators or none)
//   eps K = 1
//   S K = K
//   star K = K               (optional)
//
// Scalars print as "p/q" (real) or "p/q,r/s" (real,imag); polynomials are
// "+"-joined terms "c*WORD" with the unit coefficient elided and "1" for the
// empty word; tensors use terms "c*(U x V)".  Blank lines and lines starting
// with "#" are ignored.  All parsers throw std::invalid_argument with a
// description of the offending line.

std::string scalar_text(const exact::Scalar& s);
exact::Scalar parse_scalar(const std::string& s);

std::string poly_text(const rewrite::NCPoly& p, const rewrite::Alphabet& alph);
rewrite::NCPoly parse_poly(const std::string& s, const rewrite::Alphabet& alph);

std::string tensor_text(const hopf::TensorP2& t, const rewrite::Alphabet& alph);
hopf::TensorP2 parse_tensor(const std::string& s, const rewrite::Alphabet& alph);

std::string presentation_text(const hopf::HopfPresentation& p);
hopf::HopfPresentation parse_presentation(const std::string& text);

}  // namespace qcusp::textfmt
