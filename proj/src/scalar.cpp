#include "qcusp/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace qcusp::exact {

static mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

Scalar Scalar::rational(const std::string& s) { return Scalar(parse_rational(s)); }

Scalar Scalar::parse(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return rational(s);
    return Scalar(parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1)));
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = re;
    im_ = im;
    return *this;
}

Scalar Scalar::inverse() const {
    // 1/(a+bi) = (a-bi)/(a^2+b^2); over the rationals a^2+b^2 = 0 iff a = b = 0.
    mpq_class n = re_ * re_ + im_ * im_;
    if (n == 0) throw std::domain_error("division by zero in Q(i)");
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) throw std::invalid_argument("Scalar::pow wants e >= 0");
    Scalar acc(1), base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc *= base;
        base *= base;
    }
    return acc;
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out += re_.get_str();
    if (im_ != 0) {
        if (im_ == 1) out += out.empty() ? "i" : "+i";
        else if (im_ == -1) out += "-i";
        else {
            std::string t = im_.get_str();
            if (!out.empty() && t[0] != '-') out += '+';
            out += t + "i";
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace qcusp::exact
