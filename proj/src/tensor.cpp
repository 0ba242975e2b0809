#include "qcusp/tensor.hpp"

#include <sstream>

namespace qcusp::hopf {

TensorP2 TensorP2::unit() {
    TensorP2 t;
    t.add_term(Word(), Word(), Scalar(1));
    return t;
}

void TensorP2::add_term(const Word& left, const Word& right, const Scalar& c) {
    if (c.is_zero()) return;
    Key k{left, right};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorP2 TensorP2::operator+(const TensorP2& o) const {
    TensorP2 r = *this;
    for (auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

TensorP2 TensorP2::operator-(const TensorP2& o) const {
    TensorP2 r = *this;
    for (auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

TensorP2 TensorP2::operator*(const TensorP2& o) const {
    TensorP2 r;
    for (auto& [ka, ca] : terms_)
        for (auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

TensorP2 TensorP2::scaled(const Scalar& c) const {
    TensorP2 r;
    for (auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
    return r;
}

TensorP2 TensorP2::flipped() const {
    TensorP2 r;
    for (auto& [k, v] : terms_) r.add_term(k.second, k.first, v);
    return r;
}

TensorP2 TensorP2::conj_coeffs() const {
    TensorP2 r;
    for (auto& [k, v] : terms_) r.add_term(k.first, k.second, v.conj());
    return r;
}

std::string TensorP2::str(const rewrite::Alphabet& a) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : terms_) {
        std::string cs = v.str();
        if (!first) {
            if (!cs.empty() && cs[0] == '-') {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        } else if (!cs.empty() && cs[0] == '-') {
            os << "-";
            cs = cs.substr(1);
        }
        first = false;
        if (cs != "1") os << cs << "*";
        os << a.print(k.first) << "(x)" << a.print(k.second);
    }
    return os.str();
}

TensorP3 TensorP3::unit() {
    TensorP3 t;
    t.add_term(Word(), Word(), Word(), Scalar(1));
    return t;
}

void TensorP3::add_term(const Word& a, const Word& b, const Word& c, const Scalar& s) {
    if (s.is_zero()) return;
    Key k{a, b, c};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), s);
        return;
    }
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorP3 TensorP3::operator+(const TensorP3& o) const {
    TensorP3 r = *this;
    for (auto& [k, c] : o.terms_) r.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
    return r;
}

TensorP3 TensorP3::operator-(const TensorP3& o) const {
    TensorP3 r = *this;
    for (auto& [k, c] : o.terms_) r.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), -c);
    return r;
}

TensorP3 TensorP3::operator*(const TensorP3& o) const {
    TensorP3 r;
    for (auto& [ka, ca] : terms_)
        for (auto& [kb, cb] : o.terms_)
            r.add_term(std::get<0>(ka) + std::get<0>(kb), std::get<1>(ka) + std::get<1>(kb),
                       std::get<2>(ka) + std::get<2>(kb), ca * cb);
    return r;
}

TensorP3 TensorP3::scaled(const Scalar& c) const {
    TensorP3 r;
    for (auto& [k, v] : terms_) r.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), v * c);
    return r;
}

std::string TensorP3::str(const rewrite::Alphabet& a) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : terms_) {
        std::string cs = v.str();
        if (!first) {
            if (!cs.empty() && cs[0] == '-') {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        } else if (!cs.empty() && cs[0] == '-') {
            os << "-";
            cs = cs.substr(1);
        }
        first = false;
        if (cs != "1") os << cs << "*";
        os << a.print(std::get<0>(k)) << "(x)" << a.print(std::get<1>(k)) << "(x)"
           << a.print(std::get<2>(k));
    }
    return os.str();
}

TensorP2 tensor2(const NCPoly& left, const NCPoly& right) {
    TensorP2 r;
    for (auto& [wl, cl] : left.terms())
        for (auto& [wr, cr] : right.terms()) r.add_term(wl, wr, cl * cr);
    return r;
}

TensorP3 tensor3(const NCPoly& a, const NCPoly& b, const NCPoly& c) {
    TensorP3 r;
    for (auto& [wa, ca] : a.terms())
        for (auto& [wb, cb] : b.terms())
            for (auto& [wc, cc] : c.terms()) r.add_term(wa, wb, wc, ca * cb * cc);
    return r;
}

TensorP2 map_legs(const TensorP2& t, const std::function<NCPoly(const Word&)>& nf) {
    TensorP2 r;
    for (auto& [k, c] : t.terms()) r = r + tensor2(nf(k.first), nf(k.second)).scaled(c);
    return r;
}

TensorP3 map_legs(const TensorP3& t, const std::function<NCPoly(const Word&)>& nf) {
    TensorP3 r;
    for (auto& [k, c] : t.terms())
        r = r + tensor3(nf(std::get<0>(k)), nf(std::get<1>(k)), nf(std::get<2>(k))).scaled(c);
    return r;
}

TensorP3 widen(const TensorP2& t, int slot) {
    TensorP3 r;
    for (auto& [k, c] : t.terms()) {
        switch (slot) {
            case 0: r.add_term(Word(), k.first, k.second, c); break;
            case 1: r.add_term(k.first, Word(), k.second, c); break;
            default: r.add_term(k.first, k.second, Word(), c); break;
        }
    }
    return r;
}

}  // namespace qcusp::hopf
