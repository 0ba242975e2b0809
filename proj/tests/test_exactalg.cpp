#include <doctest.h>

#include "qcusp/laurent.hpp"
#include "qcusp/ratfunc.hpp"
#include "qcusp/scalar.hpp"

using namespace qcusp::exact;

TEST_CASE("gaussian rational arithmetic") {
    Scalar a(mpq_class(2), mpq_class(1));  // 2 + i
    Scalar b = a.conj();                   // 2 - i
    CHECK(a * b == Scalar(5));
    CHECK(a + b == Scalar(4));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(a * a.inverse() == Scalar(1));
    CHECK(Scalar::rational("-3/6") == Scalar::rational("-1/2"));
    CHECK(Scalar::parse("1/2,3") == Scalar(mpq_class(1, 2), mpq_class(3)));
    CHECK(Scalar::parse("7") == Scalar(7));
    CHECK(a.pow(3) == a * a * a);
    CHECK(Scalar(0).is_zero());
    CHECK(Scalar(1).is_one());
    CHECK(!Scalar::i().is_real());
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(Scalar::rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::rational("zebra"), std::invalid_argument);
}

TEST_CASE("scalar display strings") {
    // parse() reads the "re" / "re,im" input grammar; str() renders for humans.
    CHECK(Scalar::parse("0").str() == "0");
    CHECK(Scalar::parse("1").str() == "1");
    CHECK(Scalar::parse("-2/3").str() == "-2/3");
    CHECK(Scalar::parse("0,1").str() == "i");
    CHECK(Scalar::parse("1/2,-5/7").str() == "1/2-5/7i");
    // parsing the same text twice is stable
    for (const char* text : {"0", "1", "-2/3", "0,1", "1/2,-5/7"})
        CHECK(Scalar::parse(text) == Scalar::parse(text));
}

TEST_CASE("laurent polynomials") {
    LaurentPoly p = LaurentPoly::monomial(-1) + LaurentPoly::monomial(2, Scalar(3));
    CHECK(p.coeff(-1) == Scalar(1));
    CHECK(p.coeff(0) == Scalar(0));
    CHECK(p.degree() == 2);
    CHECK(p.low_degree() == -1);
    CHECK(p * LaurentPoly::t() == p.shifted(1));
    // (t + 1)(t - 1) = t^2 - 1
    LaurentPoly u = LaurentPoly::t() + LaurentPoly::one();
    LaurentPoly v = LaurentPoly::t() - LaurentPoly::one();
    CHECK(u * v == LaurentPoly::monomial(2) - LaurentPoly::one());
    LaurentPoly w = LaurentPoly::monomial(0, Scalar::i());
    CHECK(w.conj_coeffs() == LaurentPoly::monomial(0, -Scalar::i()));
}

TEST_CASE("cusp ring membership excludes exponent one") {
    CHECK(cusp_membership(LaurentPoly::one()));
    CHECK(cusp_membership(LaurentPoly::monomial(2) + LaurentPoly::monomial(5)));
    CHECK(!cusp_membership(LaurentPoly::t()));
    CHECK(!cusp_membership(LaurentPoly::monomial(-1)));
    CHECK(!cusp_membership(LaurentPoly::monomial(3) + LaurentPoly::monomial(1, Scalar(2))));
    CHECK(filtration_degree(CuspPoly::monomial(5)) == 5);
}

TEST_CASE("rational functions are canonical") {
    // (t^2 - 1) / (t - 1) reduces to t + 1
    LaurentPoly num = LaurentPoly::monomial(2) - LaurentPoly::one();
    LaurentPoly den = LaurentPoly::t() - LaurentPoly::one();
    RationalFunction f(num, den);
    CHECK(f == RationalFunction(LaurentPoly::t() + LaurentPoly::one()));
    CHECK(f.den().is_one());

    RationalFunction g(LaurentPoly::monomial(-2, Scalar(3)));
    CHECK(g.num() == LaurentPoly(Scalar(3)));
    CHECK(g.den() == LaurentPoly::monomial(2));
    CHECK(g.as_laurent().has_value());
    CHECK(*g.as_laurent() == LaurentPoly::monomial(-2, Scalar(3)));

    RationalFunction h(LaurentPoly::one(), LaurentPoly::t() + LaurentPoly::one());
    CHECK(!h.as_laurent().has_value());
    CHECK(h * h.inverse() == RationalFunction(Scalar(1)));
    CHECK(h + (-h) == RationalFunction());
    CHECK_THROWS_AS(RationalFunction().inverse(), std::domain_error);
}

TEST_CASE("polynomial division and gcd") {
    LaurentPoly a = LaurentPoly::monomial(3) - LaurentPoly::one();          // t^3 - 1
    LaurentPoly b = LaurentPoly::t() - LaurentPoly::one();                  // t - 1
    auto [q, r] = poly_divmod(a, b);
    CHECK(r.is_zero());
    CHECK(q * b == a);
    CHECK(poly_gcd(a, b) == b);
    LaurentPoly c = LaurentPoly::monomial(2) + LaurentPoly::one();
    CHECK(poly_gcd(b, c).is_one());
}

TEST_CASE("fractional-linear recognition") {
    // (2t + i) / (t + 3)
    LaurentPoly num = LaurentPoly::monomial(1, Scalar(2)) + LaurentPoly(Scalar::i());
    LaurentPoly den = LaurentPoly::t() + LaurentPoly(Scalar(3));
    auto mc = moebius_validate(RationalFunction(num, den));
    REQUIRE(mc.has_value());
    CHECK(mc->alpha == Scalar(2));
    CHECK(mc->beta == Scalar::i());
    CHECK(mc->gamma == Scalar(1));
    CHECK(mc->delta == Scalar(3));
    // degenerate determinant: (t + 1) / (t + 1) has no valid coefficients
    CHECK(!moebius_validate(RationalFunction(LaurentPoly::monomial(2), LaurentPoly::one()))
               .has_value());
    CHECK(moebius_validate(RationalFunction::t()).has_value());
}
