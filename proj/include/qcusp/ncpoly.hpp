#pragma once

#include <map>
#include <optional>

#include "qcusp/scalar.hpp"
#include "qcusp/words.hpp"

namespace qcusp::rewrite {

using exact::Scalar;

// Element of a free associative algebra over Q(i): finite sum of words with
// nonzero coefficients.  Storage order of terms is plain byte order on words
// and carries no meaning; monomial orders live in the rewriting layer.
class NCPoly {
public:
    NCPoly() = default;
    explicit NCPoly(const Scalar& c) { add_term(Word(), c); }
    static NCPoly monomial(const Word& w, const Scalar& c = Scalar(1));
    static NCPoly one() { return NCPoly(Scalar(1)); }

    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Word& w) const;
    // If the polynomial is c*1, returns c.
    std::optional<Scalar> as_constant() const;

    void add_term(const Word& w, const Scalar& c);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    NCPoly scaled(const Scalar& c) const;
    NCPoly reversed() const;                     // reverse every word
    NCPoly conj_coeffs() const;

    std::string str(const Alphabet& alph) const;

private:
    std::map<Word, Scalar> terms_;
};

}  // namespace qcusp::rewrite
