#include "qcusp/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qcusp::exact {

namespace {
constexpr long kExpLimit = 1L << 40;
void check_exp(long e) {
    if (e > kExpLimit || e < -kExpLimit) throw std::overflow_error("exponent out of range");
}
}  // namespace

LaurentPoly LaurentPoly::monomial(long e, const Scalar& c) {
    check_exp(e);
    LaurentPoly p;
    if (!c.is_zero()) p.coeffs_[e] = c;
    return p;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second.is_one();
}

Scalar LaurentPoly::coeff(long e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Scalar(0) : it->second;
}

std::optional<std::pair<long, Scalar>> LaurentPoly::as_monomial() const {
    if (coeffs_.size() != 1) return std::nullopt;
    return *coeffs_.begin();
}

long LaurentPoly::degree() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return coeffs_.rbegin()->first;
}

long LaurentPoly::low_degree() const {
    if (is_zero()) throw std::domain_error("low degree of zero polynomial");
    return coeffs_.begin()->first;
}

void LaurentPoly::add_term(long e, const Scalar& c) {
    check_exp(e);
    if (c.is_zero()) return;
    auto [it, fresh] = coeffs_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [ea, ca] : a.coeffs_)
        for (auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (auto& [e, v] : coeffs_) {
        Scalar w = v * c;
        if (!w.is_zero()) r.coeffs_[e] = w;
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (auto& [e, v] : coeffs_) {
        check_exp(e + k);
        r.coeffs_[e + k] = v;
    }
    return r;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r;
    for (auto& [e, v] : coeffs_)
        if (e != 0) r.add_term(e - 1, Scalar(e) * v);
    return r;
}

LaurentPoly LaurentPoly::parity_flipped() const {
    LaurentPoly r;
    for (auto& [e, v] : coeffs_) r.coeffs_[e] = (e % 2 == 0) ? v : -v;
    return r;
}

LaurentPoly LaurentPoly::conj_coeffs() const {
    LaurentPoly r;
    for (auto& [e, v] : coeffs_) r.coeffs_[e] = v.conj();
    return r;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : coeffs_) {
        std::string cs = c.str();
        bool neg = cs[0] == '-' && c.im() == 0;  // simple sign peeling for display
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        std::string mag = neg ? cs.substr(1) : cs;
        bool composite = !c.is_real() && c.re() != 0;
        if (e == 0) {
            os << mag;
        } else {
            if (mag != "1") os << (composite ? "(" + mag + ")" : mag) << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

bool cusp_membership(const LaurentPoly& p) {
    for (auto& [e, c] : p.coeffs()) {
        (void)c;
        if (e < 0 || e == 1) return false;
    }
    return true;
}

CuspPoly::CuspPoly(LaurentPoly p) : p_(std::move(p)) {
    if (!cusp_membership(p_)) throw std::invalid_argument("not in the cusp ring: " + p_.str());
}

CuspPoly CuspPoly::monomial(long e, const Scalar& c) {
    return CuspPoly(LaurentPoly::monomial(e, c));
}

long filtration_degree(const CuspPoly& b) {
    if (b.is_zero()) throw std::domain_error("filtration degree of zero");
    return b.poly().degree();
}

}  // namespace qcusp::exact
