#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "qcusp/ncpoly.hpp"
#include "qcusp/words.hpp"

namespace qcusp::hopf {

using exact::Scalar;
using rewrite::NCPoly;
using rewrite::Word;

// Element of F<X> (x) F<X>, stored as a sparse sum of word pairs.  Legs are
// plain words; callers normalize against a rewriting system when needed.
class TensorP2 {
  public:
    using Key = std::pair<Word, Word>;

    TensorP2() = default;

    static TensorP2 unit();  // 1 (x) 1

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }

    void add_term(const Word& left, const Word& right, const Scalar& c);

    TensorP2 operator+(const TensorP2& o) const;
    TensorP2 operator-(const TensorP2& o) const;
    TensorP2 operator*(const TensorP2& o) const;  // legwise concatenation
    TensorP2 scaled(const Scalar& c) const;
    TensorP2 flipped() const;  // u (x) v  ->  v (x) u
    TensorP2 conj_coeffs() const;

    bool operator==(const TensorP2& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorP2& o) const { return !(*this == o); }

    std::string str(const rewrite::Alphabet& a) const;

  private:
    std::map<Key, Scalar> terms_;
};

class TensorP3 {
  public:
    using Key = std::tuple<Word, Word, Word>;

    TensorP3() = default;

    static TensorP3 unit();

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }

    void add_term(const Word& a, const Word& b, const Word& c, const Scalar& s);

    TensorP3 operator+(const TensorP3& o) const;
    TensorP3 operator-(const TensorP3& o) const;
    TensorP3 operator*(const TensorP3& o) const;
    TensorP3 scaled(const Scalar& c) const;

    bool operator==(const TensorP3& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorP3& o) const { return !(*this == o); }

    std::string str(const rewrite::Alphabet& a) const;

  private:
    std::map<Key, Scalar> terms_;
};

TensorP2 tensor2(const NCPoly& left, const NCPoly& right);
TensorP3 tensor3(const NCPoly& a, const NCPoly& b, const NCPoly& c);

// Rewrite every leg with the supplied normal-form map and recollect terms.
TensorP2 map_legs(const TensorP2& t, const std::function<NCPoly(const Word&)>& nf);
TensorP3 map_legs(const TensorP3& t, const std::function<NCPoly(const Word&)>& nf);

// Embed a two-leg tensor into three legs with leg `slot` (0, 1 or 2) set to 1;
// slot numbers the missing leg, so slot=1 sends u (x) v to u (x) 1 (x) v.
TensorP3 widen(const TensorP2& t, int slot);

}  // namespace qcusp::hopf
