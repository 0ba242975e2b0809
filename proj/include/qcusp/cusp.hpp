#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcusp/hopf.hpp"
#include "qcusp/matrix.hpp"
#include "qcusp/operators.hpp"

namespace qcusp::cusp {

using hopf::AxiomReport;
using rewrite::NCPoly;
using rewrite::Word;

// The 3x3 Laurent matrix whose n-th power carries the coaction on t^n: the
// entry sigma_ij sends t^n to the (i,j) entry of the n-th power.
mat::RingMatrix<LaurentPoly> defining_matrix();

struct CuspSigma {
    int trunc;
    mat::RingMatrix<TruncatedOperator> sigma;
};

// Builds sigma at the given truncation by expanding powers of the defining
// matrix; throws if any entry were to leave the truncated cusp ring.
CuspSigma build_sigma(int trunc);

// Operator matrix induced by an arbitrary square Laurent matrix T: the (i, j)
// entry maps t^m to the (i, j) entry of T^m.  Returns nullopt (reason in
// `why`) when some image leaves the truncated cusp ring.
std::optional<mat::RingMatrix<TruncatedOperator>> operator_matrix(
    const mat::RingMatrix<LaurentPoly>& t, int trunc, std::string* why = nullptr);

// Unit row, triangularity, multiplicativity on monomial pairs, and the strong
// orbit (existence plus the defining identities) out to the given radius.
AxiomReport quantum_automorphism_checks(const CuspSigma& s, int radius);
AxiomReport quantum_automorphism_checks(const mat::RingMatrix<TruncatedOperator>& sigma,
                                        int trunc, int radius);

mat::StrongOrbit<TruncatedOperator> sigma_orbit(const CuspSigma& s, int radius);

// The Hopf presentation acting on the cusp ring: generators C, D, K, Y.
hopf::HopfPresentation h_sigma();

// Words in the C, D, K, Y alphabet as truncated operators, with caching.
class OperatorRep {
  public:
    explicit OperatorRep(int trunc);

    int trunc() const { return trunc_; }
    const TruncatedOperator& generator(int sym) const { return gens_.at(static_cast<size_t>(sym)); }
    const TruncatedOperator& of_word(const Word& w) const;
    TruncatedOperator of_poly(const NCPoly& p) const;

  private:
    int trunc_;
    std::vector<TruncatedOperator> gens_;
    mutable std::map<Word, TruncatedOperator> cache_;
};

// Closed-form operators match the sigma entries and each other: the named
// decompositions, parity components, and the Laurent-carrier identities.
AxiomReport operator_identity_checks(int trunc);

// The module-algebra property: every generator acts on products through its
// coproduct, h(fg) = sum h_(1)(f) h_(2)(g), checked on monomial pairs.
AxiomReport module_algebra_checks(int trunc);

// Composition relations, degree shifts, the 24-dimensional independent family
// and the representation factoring through the defining rules.
AxiomReport u_sigma_checks(int trunc, int y_power_bound = 5);

// Elements that must act as zero, and the injectivity complement.
AxiomReport kernel_checks(int trunc, int y_power_bound = 5);

// Decomposition identities in the abstract Hopf algebra and as operators:
// E = -(K-1)/2 - iD, F = -KE, Z = Y/6 + (K-1)/4 + (i/2)(D + DK), X = Y + D,
// the parity components, idempotency of E, and the antipode images.
AxiomReport decomposition_checks(int trunc);

// The braiding t^i (x) t^j -> (-1)^{ij} t^j (x) t^i commutes with the action
// of every generator on monomial pairs with i, j <= degree_bound.
AxiomReport braiding_checks(int degree_bound);

// Characters chi_{s,lambda} (zero on C and D, sign s on K, free value on Y)
// and both hit actions: defect-freeness, forced generator values, the closed
// forms s^c C^a D^b K^c (Y+lambda)^d and s^{a+b+c} C^a D^b K^c (Y+lambda)^d
// on basis words, multiplicativity, commuting sides, inverse composition, and
// the Y-degree-reduction property of id - R_{1,1}.
AxiomReport character_checks(int y_bound = 4, std::uint64_t seed = 0);

// The two-parameter candidate R-matrix supported on span{1, K, D, KD}^(x)2:
// (1/2)(1(x)1 + 1(x)K + K(x)1 - K(x)K)
//   + (c/2)(D(x)D - D(x)KD + KD(x)D + KD(x)KD).
hopf::TensorP2 sweedler_r_matrix(const Scalar& c);

// For each c: invertibility, the intertwining law on the small subalgebra,
// both hexagon identities, and the failure of the intertwining law on Y.
AxiomReport quasitriangular_checks(const std::vector<Scalar>& cs);

}  // namespace qcusp::cusp
