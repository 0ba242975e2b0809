#include <doctest.h>

#include "qcusp/cusp.hpp"
#include "qcusp/dual.hpp"
#include "qcusp/hopf.hpp"
#include "qcusp/tensor.hpp"

using namespace qcusp;
using exact::Scalar;
using hopf::HopfContext;
using hopf::TensorP2;
using rewrite::NCPoly;
using rewrite::Word;

namespace {
NCPoly gen(const HopfContext& ctx, const std::string& name) {
    return NCPoly::monomial(ctx.alphabet().parse_word(name));
}
}  // namespace

TEST_CASE("tensor arithmetic") {
    NCPoly a = NCPoly::monomial(Word(1, char(0)));
    NCPoly b = NCPoly::monomial(Word(1, char(1)));
    TensorP2 t = hopf::tensor2(a, b);
    CHECK(t.flipped() == hopf::tensor2(b, a));
    CHECK(t + t == t.scaled(Scalar(2)));
    CHECK((t - t).terms().empty());
    TensorP2 prod = t * hopf::tensor2(b, a);
    CHECK(prod == hopf::tensor2(a * b, b * a));
}

TEST_CASE("structure maps on generators") {
    HopfContext ctx{cusp::h_sigma()};
    NCPoly C = gen(ctx, "C"), D = gen(ctx, "D"), K = gen(ctx, "K"), Y = gen(ctx, "Y");

    CHECK(ctx.coproduct(K) == hopf::tensor2(K, K));
    CHECK(ctx.coproduct(C) == hopf::tensor2(NCPoly::one(), C) + hopf::tensor2(C, K));
    CHECK(ctx.counit(K) == Scalar(1));
    CHECK(ctx.counit(C) == Scalar(0));
    CHECK(ctx.counit(Y) == Scalar(0));
    CHECK(ctx.antipode(K) == K);
    CHECK(ctx.antipode(C) == ctx.nf(C.scaled(Scalar(-1)) * K));
    CHECK(ctx.antipode(Y) == -Y);

    // the antipode is an algebra anti-morphism
    NCPoly cd = ctx.nf(C * D);
    CHECK(ctx.antipode(cd) == ctx.nf(ctx.antipode(D) * ctx.antipode(C)));
}

TEST_CASE("counit and antipode laws on a sample word") {
    HopfContext ctx{cusp::h_sigma()};
    NCPoly Y = gen(ctx, "Y");
    NCPoly w = ctx.nf(Y * Y * gen(ctx, "D"));
    TensorP2 dw = ctx.coproduct(w);
    CHECK(ctx.counit_left(dw) == w);
    CHECK(ctx.counit_right(dw) == w);
    CHECK(ctx.mul_antipode_left(dw) == NCPoly(ctx.counit(w)));
    CHECK(ctx.mul_antipode_right(dw) == NCPoly(ctx.counit(w)));
}

TEST_CASE("coassociativity on a sample word") {
    HopfContext ctx{cusp::h_sigma()};
    NCPoly w = ctx.nf(gen(ctx, "Y") * gen(ctx, "C"));
    TensorP2 dw = ctx.coproduct(w);
    CHECK(ctx.normalize3(ctx.delta_left(dw)) == ctx.normalize3(ctx.delta_right(dw)));
}

TEST_CASE("hopf axioms hold at a small bound") {
    HopfContext hctx{cusp::h_sigma()};
    auto hrep = hopf::check_hopf_axioms(hctx, 8);
    CHECK(hrep.all_ok());
    if (!hrep.all_ok()) MESSAGE(hrep.first_failure());

    HopfContext actx{dual::a_sigma()};
    auto arep = hopf::check_hopf_axioms(actx, 5);
    CHECK(arep.all_ok());
    if (!arep.all_ok()) MESSAGE(arep.first_failure());
}

TEST_CASE("characters and hit actions") {
    HopfContext ctx{cusp::h_sigma()};
    // the sign character: C, D -> 0, K -> -1, Y -> 0
    hopf::Character sign{{Scalar(0), Scalar(0), Scalar(-1), Scalar(0)}};
    CHECK(!hopf::character_defect(ctx, sign).has_value());
    NCPoly K = gen(ctx, "K");
    CHECK(hopf::character_apply(ctx, sign, K) == Scalar(-1));
    // a nonzero value on C breaks the relation CC = 0
    hopf::Character bad{{Scalar(1), Scalar(0), Scalar(1), Scalar(0)}};
    CHECK(hopf::character_defect(ctx, bad).has_value());
    // hitting with a character fixes group-likes up to its value
    NCPoly hit = hopf::hit_action(ctx, sign, hopf::HitSide::Right, K);
    CHECK(hit == K.scaled(Scalar(-1)));
}

TEST_CASE("antipode bijectivity and coproduct grading") {
    HopfContext ctx{cusp::h_sigma()};
    std::string wit;
    CHECK(hopf::antipode_graded_bijective(ctx, 8, &wit));
    CHECK(hopf::coproduct_graded(ctx, 8, &wit));
}
