#pragma once

#include <optional>

#include "qcusp/laurent.hpp"

namespace qcusp::exact {

// Element of Q(i)(t) in canonical form: num/den with polynomial parts
// (no negative exponents), gcd(num, den) = 1 and den monic.  Equality is
// structural, which the canonical form makes equivalent to field equality.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(LaurentPoly::one()) {}
    RationalFunction(const Scalar& c) : RationalFunction(LaurentPoly(c)) {}
    // From a Laurent polynomial: negative exponents move into the denominator.
    RationalFunction(const LaurentPoly& p);
    RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

    static RationalFunction t() { return RationalFunction(LaurentPoly::t()); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction inverse() const;  // throws std::domain_error on zero
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    // Laurent form when the denominator is a power of t; nullopt otherwise.
    std::optional<LaurentPoly> as_laurent() const;

    std::string str() const;

private:
    void reduce();
    LaurentPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

// Polynomial helpers over Q(i)[t]; inputs must have no negative exponents.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);  // monic gcd, or zero if both zero

// Diagonal data of an invertible fractional-linear map (alpha t + beta)/(gamma t + delta).
struct MoebiusCoeffs {
    Scalar alpha, beta, gamma, delta;
};

// Checks that f is a fractional-linear function with nonzero determinant and
// returns its coefficients; nullopt if f is not of that shape.
std::optional<MoebiusCoeffs> moebius_validate(const RationalFunction& f);

}  // namespace qcusp::exact
