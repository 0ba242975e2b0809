#include <doctest.h>

#include "qcusp/cusp.hpp"
#include "qcusp/star.hpp"

using namespace qcusp;
using cusp::TruncatedOperator;
using exact::LaurentPoly;
using exact::Scalar;
using star::InvolutivePermutation;

TEST_CASE("involutive permutations") {
    auto rev = InvolutivePermutation::reversal(3);
    CHECK(rev(0) == 2);
    CHECK(rev(1) == 1);
    CHECK(rev(2) == 0);
    auto id = InvolutivePermutation::identity(2);
    CHECK(id(0) == 0);
    // a non-involutive assignment is rejected
    CHECK_THROWS_AS(InvolutivePermutation({1, 2, 0}), std::invalid_argument);
}

TEST_CASE("conjugation by the module star") {
    auto K = cusp::closed_form_operator(cusp::OpName::K, 6);
    CHECK(star::theta_op(K) == K);
    CHECK(star::theta_op(K.scaled(Scalar::i())) == K.scaled(-Scalar::i()));
    CHECK(star::theta_op(star::theta_op(K.scaled(Scalar::i()))) == K.scaled(Scalar::i()));
}

TEST_CASE("dagger is an involution on laurent matrices") {
    auto s = InvolutivePermutation::reversal(2);
    mat::RingMatrix<LaurentPoly> m(2, LaurentPoly());
    m.at(0, 0) = LaurentPoly::monomial(2, Scalar::i());
    m.at(0, 1) = LaurentPoly::monomial(3);
    m.at(1, 1) = LaurentPoly::one();
    auto d = star::dagger(m, s);
    // (m^dagger)_{ij} = conj m_{s(j) s(i)} with s the reversal
    CHECK(d.at(0, 0) == LaurentPoly::one());
    CHECK(d.at(1, 1) == LaurentPoly::monomial(2, -Scalar::i()));
    CHECK(d.at(0, 1) == LaurentPoly::monomial(3));
    CHECK(star::dagger(d, s) == m);
}

TEST_CASE("vartheta is multiplicative and involutive") {
    auto s = InvolutivePermutation::reversal(2);
    int N = 6;
    mat::RingMatrix<TruncatedOperator> a(2, TruncatedOperator(N));
    a.at(0, 0) = TruncatedOperator::identity(N);
    a.at(0, 1) = cusp::closed_form_operator(cusp::OpName::D, N).scaled(Scalar::i());
    a.at(1, 1) = cusp::closed_form_operator(cusp::OpName::K, N);
    auto va = star::vartheta(a, s);
    CHECK(star::vartheta(va, s) == a);
    mat::RingMatrix<TruncatedOperator> b = a.transpose();
    CHECK(star::vartheta(mat::mul(a, b), s) == mat::mul(star::vartheta(a, s),
                                                        star::vartheta(b, s)));
}

TEST_CASE("module star check battery") {
    auto rep = star::module_star_check(8);
    CHECK(rep.all_ok());
    if (!rep.all_ok()) MESSAGE(rep.first_failure());
}

TEST_CASE("star axioms hold for the presentation involution") {
    auto rep = star::check_hopf_star_axioms(cusp::h_sigma(), 8);
    CHECK(rep.all_ok());
    if (!rep.all_ok()) MESSAGE(rep.first_failure());
}

TEST_CASE("pushforward fixes K and negates D") {
    auto rep = star::hopf_star_on_generators(10);
    bool k_ok = false, d_ok = false;
    for (const auto& c : rep.checks) {
        if (c.name == "pushforward of K equals K") k_ok = c.ok;
        if (c.name == "pushforward of D equals -D") d_ok = c.ok;
    }
    CHECK(k_ok);
    CHECK(d_ok);
}

TEST_CASE("real points accept real and reject imaginary evaluation") {
    CHECK(star::real_point_check(Scalar(1)).all_ok());
    CHECK(star::real_point_check(Scalar(0)).all_ok());
    auto at_i = star::real_point_check(Scalar::i());
    CHECK(!at_i.all_ok());
    CHECK(!at_i.first_failure().empty());
}
