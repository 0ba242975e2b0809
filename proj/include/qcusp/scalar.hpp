#pragma once

#include <gmpxx.h>
#include <iosfwd>
#include <string>

namespace qcusp::exact {

// An element of Q(i): a + b*i with exact rational a, b.  This is the
// coefficient field everywhere; all arithmetic in the library is exact.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(const mpq_class& re) : re_(re), im_(0) {}
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    // re/im as exact rationals, e.g. rational("-2/3").
    static Scalar rational(const std::string& s);
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
    // "p/q" or "p" or "p/q,r/s" (real,imag).
    static Scalar parse(const std::string& s);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar conj() const { return Scalar(re_, -im_); }

    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // arbitrary total order, for use as a map key
    friend bool operator<(const Scalar& a, const Scalar& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    // Multiplicative inverse; throws std::domain_error on zero.
    Scalar inverse() const;
    Scalar pow(long e) const;  // e >= 0

    // Human-readable form: "0", "1", "-1/3", "i", "2-1/2i", ...
    std::string str() const;

private:
    mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

}  // namespace qcusp::exact
