#include <doctest.h>

#include "qcusp/matrix.hpp"
#include "qcusp/ncpoly.hpp"
#include "qcusp/operators.hpp"
#include "qcusp/ratfunc.hpp"

using namespace qcusp;
using exact::LaurentPoly;
using exact::RationalFunction;
using exact::Scalar;
using rewrite::NCPoly;
using rewrite::Word;

namespace {
RationalFunction rt(long e, const Scalar& c = Scalar(1)) {
    return RationalFunction(LaurentPoly::monomial(e, c));
}
}  // namespace

TEST_CASE("triangular inverse") {
    auto id = mat::RingMatrix<RationalFunction>::identity_like(3, RationalFunction());
    CHECK(mat::triangular_inverse(id) == id);

    mat::RingMatrix<RationalFunction> m(2, RationalFunction());
    m.at(0, 0) = rt(1);
    m.at(0, 1) = rt(0) + rt(3);
    m.at(1, 1) = rt(2, Scalar(-4));
    auto inv = mat::triangular_inverse(m);
    CHECK(inv.at(0, 0) == rt(-1));
    CHECK(inv.at(1, 1) == rt(-2, Scalar::rational("-1/4")));
    CHECK(inv.at(0, 1) == -(rt(-1) * (rt(0) + rt(3)) * rt(-2, Scalar::rational("-1/4"))));
    auto id2 = mat::RingMatrix<RationalFunction>::identity_like(2, RationalFunction());
    CHECK(mat::mul(m, inv) == id2);
    CHECK(mat::mul(inv, m) == id2);

    // a lower-triangular matrix inverts too
    auto lower = m.transpose();
    auto linv = mat::triangular_inverse(lower);
    CHECK(mat::mul(lower, linv) == id2);

    mat::RingMatrix<RationalFunction> sing(2, RationalFunction());
    sing.at(0, 0) = rt(1);
    CHECK_THROWS_AS(mat::triangular_inverse(sing), mat::TriangularError);
}

TEST_CASE("opposite-ring product transposition") {
    // over a noncommutative carrier, (ab)^T = b^T *_op a^T but generally
    // (ab)^T != a^T b^T
    NCPoly x = NCPoly::monomial(Word(1, char(0)));
    NCPoly y = NCPoly::monomial(Word(1, char(1)));
    mat::RingMatrix<NCPoly> a(2, NCPoly()), b(2, NCPoly());
    a.at(0, 0) = x;
    a.at(0, 1) = NCPoly::one();
    a.at(1, 1) = y;
    b.at(0, 0) = y;
    b.at(1, 0) = x;
    b.at(1, 1) = NCPoly::one();
    auto ab = mat::mul(a, b);
    CHECK(ab.transpose() == mat::mul_op(b.transpose(), a.transpose()));
    CHECK(ab.transpose() != mat::mul(b.transpose(), a.transpose()));
}

TEST_CASE("contragredient of a unipotent matrix") {
    NCPoly x = NCPoly::monomial(Word(1, char(0)));
    mat::RingMatrix<NCPoly> m(2, NCPoly());
    m.at(0, 0) = NCPoly::one();
    m.at(1, 1) = NCPoly::one();
    m.at(0, 1) = x;
    auto hat = mat::contragredient(m);
    CHECK(hat.at(1, 0) == -x);
    CHECK(hat.at(0, 1).is_zero());
    // applying the map twice returns to the start
    CHECK(mat::contragredient(hat) == m);
}

TEST_CASE("strong orbit of the identity is constant") {
    auto id = mat::RingMatrix<RationalFunction>::identity_like(2, RationalFunction());
    auto orbit = mat::strong_orbit(id, 2);
    REQUIRE(orbit.ok);
    for (int d = -2; d <= 2; ++d) CHECK(orbit.at_step(d) == id);
    CHECK(mat::orbit_identities_hold(orbit));
}

TEST_CASE("scalar matrices invert by dense elimination") {
    mat::RingMatrix<Scalar> m(2, Scalar(0));
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = Scalar(2);
    m.at(1, 0) = Scalar(3);
    m.at(1, 1) = Scalar(4);
    auto inv = mat::matrix_inverse(m);
    REQUIRE(inv.has_value());
    auto id = mat::RingMatrix<Scalar>::identity_like(2, Scalar(0));
    CHECK(mat::mul(m, *inv) == id);
    mat::RingMatrix<Scalar> sing(2, Scalar(1));  // all-ones matrix
    CHECK(!mat::matrix_inverse(sing).has_value());
}

TEST_CASE("operator matrices invert through flattening") {
    using cusp::TruncatedOperator;
    mat::RingMatrix<TruncatedOperator> m(2, TruncatedOperator(6));
    m.at(0, 0) = TruncatedOperator::identity(6);
    m.at(1, 1) = cusp::closed_form_operator(cusp::OpName::K, 6);
    m.at(0, 1) = cusp::closed_form_operator(cusp::OpName::D, 6);
    auto inv = mat::matrix_inverse(m);
    REQUIRE(inv.has_value());
    auto prod = mat::mul(m, *inv);
    CHECK(prod.at(0, 0).is_identity());
    CHECK(prod.at(0, 1).is_zero());
    CHECK(prod.at(1, 0).is_zero());
    CHECK(prod.at(1, 1).is_identity());
}
