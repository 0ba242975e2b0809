#include <doctest.h>

#include "qcusp/classify.hpp"

using namespace qcusp;
using classify::TriangularT;
using exact::LaurentPoly;
using exact::RationalFunction;
using exact::Scalar;

namespace {
LaurentPoly tp(long e, const Scalar& c = Scalar(1)) { return LaurentPoly::monomial(e, c); }
}  // namespace

TEST_CASE("quantum numbers") {
    Scalar beta(2);
    CHECK(classify::quantum_number(0, beta) == Scalar(0));
    CHECK(classify::quantum_number(1, beta) == Scalar(1));
    CHECK(classify::quantum_number(2, beta) == Scalar(3));
    CHECK(classify::quantum_number(3, beta) == Scalar(7));
    CHECK(classify::quantum_number(2, Scalar(-1)) == Scalar(0));
    CHECK(classify::quantum_number(3, Scalar(1)) == Scalar(3));
}

TEST_CASE("triangular matrices round-trip") {
    TriangularT t;
    t.n = 2;
    t.diagonal = {RationalFunction(tp(1)), RationalFunction(tp(1, Scalar(2)))};
    t.upper[{0, 1}] = RationalFunction(tp(3));
    auto m = t.as_matrix();
    CHECK(m.at(1, 0).is_zero());
    auto back = classify::triangular_from_matrix(m);
    CHECK(back.entry(0, 1) == t.entry(0, 1));
    m.at(1, 0) = RationalFunction(Scalar(1));
    CHECK_THROWS_AS(classify::triangular_from_matrix(m), std::invalid_argument);
}

TEST_CASE("two by two decisions") {
    Scalar one(1);
    // alpha=1, beta=1: both quantum numbers nonzero (case 3); z = 0 restricts
    auto d = classify::classify_n2(one, one, LaurentPoly());
    CHECK(d.accept);
    CHECK(d.case_tag == 3);
    // z = t^2 still restricts: the products stay supported in the cusp ring
    CHECK(classify::classify_n2(one, one, tp(2)).accept);
    // z = t^{-2} pushes (T^2)_12 = [[2]] alpha t z below every cusp exponent
    CHECK(!classify::classify_n2(one, one, tp(-2)).accept);
    // beta = -1 kills [[2]], weakening the constraint to the T^3 entry
    // (case 1): only alpha^2 t^2 z must restrict, so z = t^{-2} passes
    auto c1 = classify::classify_n2(one, Scalar(-1), tp(-2));
    CHECK(c1.case_tag == 1);
    CHECK(c1.accept);
    // z = t^{-3} sends the T^3 entry to t^{-1}, outside every cusp degree
    CHECK(!classify::classify_n2(one, Scalar(-1), tp(-3)).accept);
}

TEST_CASE("decisions agree with explicit restriction") {
    for (long e = -3; e <= 3; ++e) {
        auto d = classify::classify_n2(Scalar(1), Scalar(2), tp(e));
        auto t = classify::assemble_n2(Scalar(1), Scalar(2), tp(e));
        CHECK(d.accept == classify::restricts_to_cusp(t));
    }
}

TEST_CASE("three by three worked instance") {
    // diagonal t, -t, t with x = y = t^2, z = 0
    Scalar one(1), neg(-1);
    auto d = classify::classify_n3(one, neg, neg, tp(2), tp(2), LaurentPoly());
    CHECK(d.accept_x);
    CHECK(d.accept_y);
    auto t = classify::assemble_n3(one, neg, neg, tp(2), tp(2), LaurentPoly());
    CHECK(d.accept == classify::restricts_to_cusp(t));
    if (d.accept) {
        auto bounds = classify::degree_bound_validate(t);
        CHECK(bounds.all_ok());
    }
}

TEST_CASE("module-level check battery") {
    auto rep = classify::example_checks(12);
    CHECK(rep.all_ok());
    if (!rep.all_ok()) MESSAGE(rep.first_failure());
}
