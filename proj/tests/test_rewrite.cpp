#include <doctest.h>

#include "qcusp/cusp.hpp"
#include "qcusp/dual.hpp"
#include "qcusp/rewrite.hpp"

using namespace qcusp;
using exact::Scalar;
using rewrite::Alphabet;
using rewrite::MonomialOrder;
using rewrite::NCPoly;
using rewrite::ReductionSystem;
using rewrite::Rule;
using rewrite::Word;

TEST_CASE("alphabet printing and parsing") {
    Alphabet alph({"x", "y"});
    CHECK(alph.index("y") == 1);
    CHECK(alph.index("z") == -1);
    CHECK(alph.print(Word()) == "1");
    CHECK(alph.print(alph.parse_word("xyx")) == "xyx");
    Word w = alph.letter(0) + alph.letter(1);
    CHECK(alph.print(w) == "xy");
}

TEST_CASE("free polynomials") {
    Alphabet alph({"x", "y"});
    NCPoly x = NCPoly::monomial(alph.letter(0));
    NCPoly y = NCPoly::monomial(alph.letter(1));
    CHECK(x * y != y * x);
    CHECK((x + y) * (x - y) == x * x - x * y + y * x - y * y);
    NCPoly p = x * y - y * x;
    CHECK(p.reversed() == y * x - x * y);
    CHECK(p.scaled(Scalar(2)) == p + p);
    CHECK((x - x).is_zero());
    NCPoly c = NCPoly(Scalar::i());
    CHECK(c.conj_coeffs() == NCPoly(-Scalar::i()));
}

TEST_CASE("normal forms in a confluent system") {
    // commuting relation with a sign: yx -> -xy
    Alphabet alph({"x", "y"});
    ReductionSystem sys(alph, MonomialOrder::deglex(2),
                        {{alph.parse_word("yx"),
                          NCPoly::monomial(alph.parse_word("xy"), Scalar(-1))}});
    CHECK(sys.check_confluence().confluent);
    CHECK(sys.nf_of("yx") == NCPoly::monomial(alph.parse_word("xy"), Scalar(-1)));
    CHECK(sys.nf_of("yyx") == NCPoly::monomial(alph.parse_word("xyy")));
    CHECK(sys.is_irreducible_word(alph.parse_word("xxy")));
    CHECK(!sys.is_irreducible_word(alph.parse_word("yx")));
    // words with x-count + y-count <= 2: 1, x, y, xx, xy, yy
    CHECK(sys.enumerate_basis(2).size() == 6);
}

TEST_CASE("an unresolved overlap is detected") {
    // xx -> 1 and xy -> 1 superpose on xxy, whose two reducts y and x are
    // distinct normal forms
    Alphabet alph({"x", "y"});
    ReductionSystem sys(alph, MonomialOrder::deglex(2),
                        {{alph.parse_word("xx"), NCPoly::one()},
                         {alph.parse_word("xy"), NCPoly::one()}});
    auto report = sys.check_confluence();
    CHECK(!report.confluent);
    bool found = false;
    for (const auto& amb : report.ambiguities)
        if (!amb.resolved && alph.print(amb.word) == "xxy") found = true;
    CHECK(found);
}

TEST_CASE("the hopf presentation systems are confluent") {
    CHECK(cusp::h_sigma().sys.check_confluence().confluent);
    CHECK(dual::a_sigma().sys.check_confluence().confluent);
}

TEST_CASE("basis counts per top-generator layer") {
    auto hp = cusp::h_sigma();
    std::vector<long> yw = {0, 0, 0, 1};
    CHECK(hp.sys.enumerate_basis(0, &yw).size() == 8);
    CHECK(hp.sys.enumerate_basis(2, &yw).size() == 24);
    auto ap = dual::a_sigma();
    std::vector<long> fw = {0, 1, 0};
    CHECK(ap.sys.enumerate_basis(0, &fw).size() == 4);
    CHECK(ap.sys.enumerate_basis(3, &fw).size() == 16);
}

TEST_CASE("normal forms agree with the defining relations") {
    auto hp = cusp::h_sigma();
    const auto& sys = hp.sys;
    CHECK(sys.nf_of("KK") == NCPoly::one());
    CHECK(sys.nf_of("DD").is_zero());
    CHECK(sys.nf_of("CC").is_zero());
    CHECK(sys.nf_of("DC") == -sys.nf_of("CD"));
    // YD = DY + C after one rewriting step
    CHECK(sys.nf_of("YD") == sys.nf_of("DY") + sys.nf_of("C"));
}

TEST_CASE("bounded inverse search certifies non-invertibility") {
    Alphabet alph({"x"});
    ReductionSystem sys(alph, MonomialOrder::deglex(1), {});
    NCPoly x = NCPoly::monomial(alph.letter(0));
    // 1 - x has the geometric series as formal inverse, never polynomial
    CHECK(!rewrite::bounded_inverse_search(NCPoly::one() - x, 8).has_value());
    // constants invert
    auto inv = rewrite::bounded_inverse_search(NCPoly(Scalar(2)), 0);
    REQUIRE(inv.has_value());
    CHECK(*inv == NCPoly(Scalar::rational("1/2")));
    // modulo x^2 = 0 the geometric series terminates: (1 - x)(1 + x) = 1
    ReductionSystem nil(alph, MonomialOrder::deglex(1),
                        {{alph.parse_word("xx"), NCPoly()}});
    auto minv = rewrite::bounded_inverse_search(NCPoly::one() - x, 2, &nil);
    REQUIRE(minv.has_value());
    CHECK(*minv == NCPoly::one() + x);
}
