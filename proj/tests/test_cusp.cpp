#include <doctest.h>

#include "qcusp/cusp.hpp"
#include "qcusp/operators.hpp"

using namespace qcusp;
using cusp::OpName;
using cusp::TruncatedOperator;
using exact::LaurentPoly;
using exact::Scalar;

namespace {
LaurentPoly tp(long e, const Scalar& c = Scalar(1)) { return LaurentPoly::monomial(e, c); }
}  // namespace

TEST_CASE("truncated basis indexing skips exponent one") {
    CHECK_THROWS(cusp::basis_size(1));  // truncation below t^2 is rejected
    CHECK(cusp::basis_size(2) == 2);   // 1, t^2
    CHECK(cusp::basis_size(3) == 3);   // 1, t^2, t^3
    CHECK(cusp::basis_size(6) == 6);   // 1, t^2, ..., t^6
    CHECK(cusp::basis_exp(6, 0) == 0);
    CHECK(cusp::basis_exp(6, 1) == 2);
    CHECK(cusp::basis_index(6, 3) == 2);
    CHECK_THROWS(cusp::basis_index(6, 1));
}

TEST_CASE("closed-form operator values") {
    int N = 9;
    auto K = cusp::closed_form_operator(OpName::K, N);
    auto D = cusp::closed_form_operator(OpName::D, N);
    auto C = cusp::closed_form_operator(OpName::C, N);
    auto Y = cusp::closed_form_operator(OpName::Y, N);

    CHECK(K.apply(tp(3)) == tp(3, Scalar(-1)));
    CHECK(K.apply(tp(4)) == tp(4));
    CHECK((K * K).is_identity());

    CHECK(D.apply(tp(2)).is_zero());
    CHECK(D.apply(tp(3)) == tp(2));
    CHECK(D.apply(tp(5)) == tp(4));
    CHECK((D * D).is_zero());

    CHECK(C.apply(tp(3)) == tp(0, Scalar(2)));
    CHECK(C.apply(tp(5)) == tp(2, Scalar(2)));
    CHECK(C.apply(tp(4)).is_zero());

    CHECK(Y.apply(tp(2)) == tp(0, Scalar(2)));
    CHECK(Y.apply(tp(3)).is_zero());
    CHECK(Y.apply(tp(4)) == tp(2, Scalar(4)));
    CHECK(Y.apply(tp(5)) == tp(3, Scalar(2)));

    CHECK(Y * D - D * Y == C);
}

TEST_CASE("operator arithmetic and dense round trip") {
    int N = 6;
    auto K = cusp::closed_form_operator(OpName::K, N);
    auto E = cusp::closed_form_operator(OpName::E, N);
    CHECK(E * E == E);
    CHECK(K.scaled(Scalar(2)) - K == K);
    CHECK(TruncatedOperator::from_dense(N, K.to_dense()) == K);
    auto inv = K.inverse();
    REQUIRE(inv.has_value());
    CHECK(*inv == K);
    CHECK(!E.inverse().has_value());  // a projector is singular
    CHECK(K.restricted(3).apply(tp(3)) == tp(3, Scalar(-1)));
    CHECK(K.conj_by_star() == K);
    auto iK = K.scaled(Scalar::i());
    CHECK(iK.conj_by_star() == K.scaled(-Scalar::i()));
}

TEST_CASE("images must stay in the truncated ring") {
    TruncatedOperator f(4);
    CHECK_THROWS(f.set_image(0, tp(1)));   // t is not in the cusp ring
    CHECK_THROWS(f.set_image(0, tp(6)));   // beyond the truncation
    f.set_image(0, tp(4, Scalar::i()));
    CHECK(f.apply(tp(0)) == tp(4, Scalar::i()));
    CHECK_THROWS(f.apply(tp(1)));
}

TEST_CASE("the coaction is a quantum automorphism at a small bound") {
    auto sigma = cusp::build_sigma(10);
    auto rep = cusp::quantum_automorphism_checks(sigma, 1);
    CHECK(rep.all_ok());
    if (!rep.all_ok()) MESSAGE(rep.first_failure());
}

TEST_CASE("the representation matches the closed forms") {
    cusp::OperatorRep rep(8);
    CHECK(rep.generator(2) == cusp::closed_form_operator(OpName::K, 8));
    CHECK(rep.generator(1) == cusp::closed_form_operator(OpName::D, 8));
    auto hp = cusp::h_sigma();
    // KD = -DK holds in the representation
    auto K = rep.generator(2), D = rep.generator(1);
    CHECK(K * D == (D * K).scaled(Scalar(-1)));
    CHECK(rep.of_poly(hp.sys.nf_of("KD")) == K * D);
}
