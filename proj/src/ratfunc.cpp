#include "qcusp/ratfunc.hpp"

#include <ostream>
#include <stdexcept>

namespace qcusp::exact {

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (!a.is_zero() && a.low_degree() < 0) throw std::invalid_argument("divmod wants polynomials");
    if (b.low_degree() < 0) throw std::invalid_argument("divmod wants polynomials");
    LaurentPoly q, r = a;
    long db = b.degree();
    Scalar lead = b.coeff(db);
    while (!r.is_zero() && r.degree() >= db) {
        long e = r.degree() - db;
        Scalar c = r.coeff(r.degree()) / lead;
        LaurentPoly m = LaurentPoly::monomial(e, c);
        q += m;
        r -= m * b;
    }
    return {q, r};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.scaled(a.coeff(a.degree()).inverse());  // monic
}

RationalFunction::RationalFunction(const LaurentPoly& p) {
    long low = p.is_zero() ? 0 : p.low_degree();
    if (low >= 0) {
        num_ = p;
        den_ = LaurentPoly::one();
    } else {
        num_ = p.shifted(-low);
        den_ = LaurentPoly::monomial(-low);
    }
}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    // Clear any negative exponents before reducing.
    long shift = 0;
    if (!num.is_zero()) shift = std::min(shift, num.low_degree());
    shift = std::min(shift, den.low_degree());
    num_ = num.shifted(-shift);
    den_ = den.shifted(-shift);
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = poly_divmod(num_, g).first;
        den_ = poly_divmod(den_, g).first;
    }
    Scalar lead = den_.coeff(den_.degree());
    if (!lead.is_one()) {
        Scalar inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
}

std::optional<LaurentPoly> RationalFunction::as_laurent() const {
    if (den_.is_one()) return num_;
    auto m = den_.as_monomial();
    if (!m) return std::nullopt;
    // den is monic, so m->second == 1
    return num_.shifted(-m->first);
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

std::optional<MoebiusCoeffs> moebius_validate(const RationalFunction& f) {
    if (f.is_zero()) return std::nullopt;
    if (f.num().degree() > 1 || f.den().degree() > 1) return std::nullopt;
    MoebiusCoeffs m{f.num().coeff(1), f.num().coeff(0), f.den().coeff(1), f.den().coeff(0)};
    if (m.alpha * m.delta - m.beta * m.gamma == Scalar(0)) return std::nullopt;
    return m;
}

}  // namespace qcusp::exact
