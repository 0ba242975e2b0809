#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcusp/cusp.hpp"
#include "qcusp/matrix.hpp"
#include "qcusp/ratfunc.hpp"

namespace qcusp::classify {

using exact::LaurentPoly;
using exact::MoebiusCoeffs;
using exact::RationalFunction;
using exact::Scalar;
using hopf::AxiomReport;

// [[l]]_beta = 1 + beta + ... + beta^{l-1}; the empty sum for l = 0.
Scalar quantum_number(long l, const Scalar& beta);

// Upper-triangular candidate sigma(t).  Entries below the diagonal are zero;
// absent strict-upper entries are zero.
struct TriangularT {
    int n = 0;
    std::vector<RationalFunction> diagonal;
    std::map<std::pair<int, int>, RationalFunction> upper;  // keys (i, j) with j > i

    RationalFunction entry(int i, int j) const;
    mat::RingMatrix<RationalFunction> as_matrix() const;
};

// Throws std::invalid_argument if the matrix has a nonzero lower entry.
TriangularT triangular_from_matrix(const mat::RingMatrix<RationalFunction>& m);

// Accepts iff every diagonal entry is a fractional-linear function with
// nonzero determinant.
AxiomReport moebius_validate(const TriangularT& t);
std::optional<std::vector<MoebiusCoeffs>> moebius_params(const TriangularT& t);

// f(T) = p(T) q(T)^{-1} for f = p/q in canonical form.  The triangular
// inverse of q(T) requires q(T_ii) != 0 for every i, which holds whenever the
// diagonal passes moebius_validate; a zero raises std::logic_error.
mat::RingMatrix<RationalFunction> extend_to_ratfunc(const TriangularT& t,
                                                    const RationalFunction& f);

// true iff every entry of T^2 and T^3 is a Laurent polynomial supported
// inside the cusp ring.
bool restricts_to_cusp(const TriangularT& t);

// Decision for the 2x2 block [[alpha t, z], [0, alpha beta t]]: the entries
// of T^2 and T^3 above the diagonal are [[2]]_beta alpha t z and
// [[3]]_beta alpha^2 t^2 z, so membership constrains the support of z.
// Cases: 1 when [[2]]_beta = 0, 2 when [[3]]_beta = 0, 3 otherwise.
struct Decision2 {
    bool accept = false;
    int case_tag = 0;
    std::string reason;
};
Decision2 classify_n2(const Scalar& alpha, const Scalar& beta, const LaurentPoly& z);

// Decision for [[alpha t, x, z], [0, alpha beta t, y], [0, 0, alpha beta gamma t]].
// Conditions (1) and (2) are the 2x2 decisions for (x, beta) and (y, gamma);
// condition (3) constrains the corner.  In the regular case
// 1 + gamma + beta gamma != 0 the corner witnesses are
//   a = alpha s ((T^2)_13),  b = s ((T^3)_13),
//   s = 1/(alpha^2 beta (1 + gamma + beta gamma)),
// and acceptance demands a, b inside the cusp ring; in the singular case it
// demands c := xy - alpha gamma t z and [[3]]_gamma t c inside the cusp ring.
struct Decision3 {
    bool accept = false;
    bool accept_x = false, accept_y = false, accept_corner = false;
    int case_x = 0, case_y = 0;
    bool regular = false;
    std::optional<LaurentPoly> witness_a, witness_b;  // regular corner
    std::optional<LaurentPoly> witness_c;             // singular corner
    std::string reason;
};
Decision3 classify_n3(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                      const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& z);

// The matrices the decisions speak about.
TriangularT assemble_n2(const Scalar& alpha, const Scalar& beta, const LaurentPoly& z);
TriangularT assemble_n3(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                        const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& z);

// For a matrix that restricts to the cusp: every entry is Laurent with
// minimum exponent >= -3n + 4 and the diagonal entries are alpha_i t.
AxiomReport degree_bound_validate(const TriangularT& t);

// The fixed worked instances: quantum numbers, Moebius validation,
// extension values, restriction, the n = 2 and n = 3 decisions with their
// witnesses, degree bounds, and the operator-level verification of the
// worked 3x3 matrix at the given truncation.
AxiomReport example_checks(int op_trunc = 20);

// Randomized seeded equivalence of the decisions with brute-force restriction
// on >= per_family instances per case family, witness identities, degree
// bounds on accepted instances, multiplicativity of extend_to_ratfunc, and
// operator-level verification of a capped sample of accepted instances.
AxiomReport sweep_checks(int per_family, std::uint64_t seed, int op_trunc = 20, int op_cap = 40);

}  // namespace qcusp::classify
