#pragma once

#include <vector>

#include "qcusp/laurent.hpp"
#include "qcusp/linalg.hpp"

namespace qcusp::cusp {

using exact::CuspPoly;
using exact::LaurentPoly;
using exact::Scalar;

// Monomial basis of the cusp ring truncated at degree N: exponents 0,2,3,...,N.
int basis_size(int trunc);
int basis_index(int trunc, long exp);   // throws if exp not a basis exponent <= N
long basis_exp(int trunc, int index);

// An exact linear endomorphism of span{1, t^2, ..., t^N} given by its images
// of the basis monomials.  Operators arising here preserve the filtration, so
// composition and truncation commute; images must stay inside the truncated
// cusp ring, which apply() and compose() enforce.
class TruncatedOperator {
public:
    explicit TruncatedOperator(int trunc);  // the zero operator
    static TruncatedOperator identity(int trunc);
    static TruncatedOperator zero(int trunc) { return TruncatedOperator(trunc); }

    int trunc() const { return trunc_; }
    int dim() const { return static_cast<int>(img_.size()); }

    const LaurentPoly& image(int index) const { return img_.at(index); }
    void set_image(int index, const LaurentPoly& p);

    LaurentPoly apply(const LaurentPoly& b) const;  // b must lie in the truncated ring

    TruncatedOperator operator-() const;
    friend TruncatedOperator operator+(const TruncatedOperator& f, const TruncatedOperator& g);
    friend TruncatedOperator operator-(const TruncatedOperator& f, const TruncatedOperator& g);
    // composition: (f*g)(b) = f(g(b))
    friend TruncatedOperator operator*(const TruncatedOperator& f, const TruncatedOperator& g);
    friend bool operator==(const TruncatedOperator& f, const TruncatedOperator& g) {
        return f.trunc_ == g.trunc_ && f.img_ == g.img_;
    }
    friend bool operator!=(const TruncatedOperator& f, const TruncatedOperator& g) {
        return !(f == g);
    }

    TruncatedOperator scaled(const Scalar& c) const;
    TruncatedOperator conj_by_star() const;  // * f *, i.e. conjugate all coefficients

    bool is_zero() const;
    bool is_identity() const;

    linalg::Dense<Scalar> to_dense() const;
    static TruncatedOperator from_dense(int trunc, const linalg::Dense<Scalar>& m);
    std::optional<TruncatedOperator> inverse() const;

    // restriction to a smaller truncation (checks filtration invariance)
    TruncatedOperator restricted(int smaller_trunc) const;

    std::string table_str(int max_rows = 8) const;  // small evaluation table for reports

private:
    int trunc_;
    std::vector<LaurentPoly> img_;
};

// The named closed-form operators on the cusp ring.
enum class OpName { K, E, F, Z, D, Y, C, X, Eplus, Eminus, Zplus, Zminus };
TruncatedOperator closed_form_operator(OpName name, int trunc);

// Helpers on the ambient Laurent carrier (these do not preserve the cusp
// ring individually; their relevant combinations do).
LaurentPoly laurent_K(const LaurentPoly& p);   // t -> -t
LaurentPoly laurent_Y0(const LaurentPoly& p);  // t^{-1} d/dt
LaurentPoly laurent_Y1(const LaurentPoly& p);  // (3/2) t^{-2} (K - 1)

}  // namespace qcusp::cusp
