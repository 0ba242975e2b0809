#include "qcusp/ncpoly.hpp"

#include <algorithm>
#include <sstream>

namespace qcusp::rewrite {

NCPoly NCPoly::monomial(const Word& w, const Scalar& c) {
    NCPoly p;
    p.add_term(w, c);
    return p;
}

Scalar NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<Scalar> NCPoly::as_constant() const {
    if (is_zero()) return Scalar(0);
    if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
    return std::nullopt;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (auto& [wa, ca] : a.terms_)
        for (auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
    return r;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (auto& [w, v] : terms_) r.terms_[w] = v * c;
    return r;
}

NCPoly NCPoly::reversed() const {
    NCPoly r;
    for (auto& [w, v] : terms_) {
        Word rw(w.rbegin(), w.rend());
        r.add_term(rw, v);
    }
    return r;
}

NCPoly NCPoly::conj_coeffs() const {
    NCPoly r;
    for (auto& [w, v] : terms_) r.terms_[w] = v.conj();
    return r;
}

std::string NCPoly::str(const Alphabet& alph) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : terms_) {
        std::string cs = c.str();
        bool neg = cs[0] == '-' && c.im() == 0;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        std::string mag = neg ? cs.substr(1) : cs;
        if (w.empty()) {
            os << mag;
        } else {
            if (mag != "1") os << ((!c.is_real() && c.re() != 0) ? "(" + mag + ")" : mag) << "*";
            os << alph.print(w);
        }
    }
    return os.str();
}

}  // namespace qcusp::rewrite
