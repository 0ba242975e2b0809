#pragma once

#include <map>
#include <optional>
#include <string>

#include "qcusp/scalar.hpp"

namespace qcusp::exact {

// Sparse Laurent polynomial sum c_e t^e over Q(i); only nonzero coefficients
// are stored.  The zero polynomial has an empty support.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Scalar& c) { if (!c.is_zero()) coeffs_[0] = c; }
    static LaurentPoly monomial(long e, const Scalar& c = Scalar(1));
    static LaurentPoly t() { return monomial(1); }
    static LaurentPoly one() { return LaurentPoly(Scalar(1)); }

    const std::map<long, Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    Scalar coeff(long e) const;
    // true if the polynomial is c*t^e for a single e (and nonzero c)
    std::optional<std::pair<long, Scalar>> as_monomial() const;

    long degree() const;      // max exponent; throws on zero
    long low_degree() const;  // min exponent; throws on zero

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ < b.coeffs_;
    }

    LaurentPoly scaled(const Scalar& c) const;
    LaurentPoly shifted(long k) const;     // multiply by t^k
    LaurentPoly derivative() const;        // d/dt
    LaurentPoly parity_flipped() const;    // t -> -t
    LaurentPoly conj_coeffs() const;       // coefficientwise conjugation

    void add_term(long e, const Scalar& c);

    std::string str(const std::string& var = "t") const;

private:
    std::map<long, Scalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// Membership in the coordinate ring of the cusp: support inside {0,2,3,4,...}.
bool cusp_membership(const LaurentPoly& p);

// A Laurent polynomial constrained to the cusp ring.  Validates on
// construction and under arithmetic (the ring is multiplicatively closed).
class CuspPoly {
public:
    CuspPoly() = default;
    explicit CuspPoly(LaurentPoly p);
    static CuspPoly monomial(long e, const Scalar& c = Scalar(1));

    const LaurentPoly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }

    friend CuspPoly operator+(const CuspPoly& a, const CuspPoly& b) {
        return CuspPoly(a.p_ + b.p_);
    }
    friend CuspPoly operator*(const CuspPoly& a, const CuspPoly& b) {
        return CuspPoly(a.p_ * b.p_);
    }
    friend bool operator==(const CuspPoly& a, const CuspPoly& b) { return a.p_ == b.p_; }

private:
    LaurentPoly p_;
};

// Least d with b in the span of {1, t^2, ..., t^d}; i.e. the top exponent.
// Throws on the zero element, which lies in every filtration step.
long filtration_degree(const CuspPoly& b);

}  // namespace qcusp::exact
