#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcusp/cusp.hpp"
#include "qcusp/hopf.hpp"
#include "qcusp/matrix.hpp"
#include "qcusp/operators.hpp"

namespace qcusp::star {

using cusp::TruncatedOperator;
using exact::LaurentPoly;
using exact::Scalar;
using hopf::AxiomReport;

// An involutive relabeling of matrix indices, written i -> bar(i).  The
// reversal bar(i) = n-1-i (0-based) is the one the coaction matrix uses.
class InvolutivePermutation {
  public:
    explicit InvolutivePermutation(std::vector<int> image);  // throws unless involutive
    static InvolutivePermutation reversal(int n);
    static InvolutivePermutation identity(int n);

    int n() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_.at(static_cast<size_t>(i)); }

  private:
    std::vector<int> image_;
};

// Coefficientwise conjugation composed with the index flip:
// dagger(m)_{ij} = conj(m_{bar(j), bar(i)}).  A conjugate-linear
// anti-multiplicative involution of the matrix ring.
mat::RingMatrix<LaurentPoly> dagger(const mat::RingMatrix<LaurentPoly>& m,
                                    const InvolutivePermutation& s);

// theta on a single operator is f -> * . f . * (conjugate all image
// coefficients); on matrices, vartheta(m)_{ij} = theta(m_{bar(i), bar(j)}).
// A conjugate-linear multiplicative involution.
TruncatedOperator theta_op(const TruncatedOperator& f);
mat::RingMatrix<TruncatedOperator> vartheta(const mat::RingMatrix<TruncatedOperator>& m,
                                            const InvolutivePermutation& s);

// The matrix of images [ m_{ij}(t^e) ] of a single basis monomial.
mat::RingMatrix<LaurentPoly> image_matrix(const mat::RingMatrix<TruncatedOperator>& m, long e);

// Involutivity and the anti-/multiplicativity laws for dagger and vartheta on
// random matrices, compatibility of the two through image matrices, and the
// equivalence m(b*) = m(b)^dagger for all b  <=>  vartheta(m) = m^T, exercised
// on matrices built to satisfy it, on perturbations that break it, and on the
// coaction matrix itself.
AxiomReport involution_checks(int trunc, std::uint64_t seed = 0);

// vartheta(sigma_d) = (sigma_{-d})^T across the whole orbit window, with the
// entrywise form theta(sigma_{d, bar(i) bar(j)}) = sigma_{-d, ji} spelled out,
// and commutation of vartheta with the contragredient step.
AxiomReport orbit_involution_check(const mat::StrongOrbit<TruncatedOperator>& orbit,
                                   const InvolutivePermutation& s);

// Pushes the cusp-ring star through the coaction matrix: the star of a matrix
// entry of sigma is the mirrored entry of sigma-hat.  Reassembles K*, D*, Y*
// from the entry positions and compares against the closed forms K, -D,
// -Y + 6iD.  A disagreement reports both evaluation tables.
AxiomReport hopf_star_on_generators(int trunc);

// Star axioms for the presentation's involution (ideal preservation,
// involutivity, coproduct and counit compatibility) plus the Cartan map
// theta = * . S: involutive, a coalgebra anti-morphism, with spot values on
// the generators.
AxiomReport check_hopf_star_axioms(const hopf::HopfPresentation& pres, int degree_bound);

// The representation intertwines the two stars:
// (represent(X)(b))* = represent(theta_H(X))(b*) for generators and low
// Y-degree basis words, as an identity of truncated operators.
AxiomReport module_star_check(int trunc);

// Reality of the evaluation point: conj <theta_H(X), iota(b)> = <X, iota(b)>
// with the pairing realized as evaluation of represent(X)(b) at t = lambda.
// Holds when conj(lambda) = lambda; fails with a witness otherwise.
AxiomReport real_point_check(const Scalar& lambda);

}  // namespace qcusp::star
