#include <doctest.h>

#include "qcusp/cusp.hpp"
#include "qcusp/dual.hpp"
#include "qcusp/json_io.hpp"
#include "qcusp/report.hpp"
#include "qcusp/textfmt.hpp"

using namespace qcusp;
using exact::LaurentPoly;
using exact::RationalFunction;
using exact::Scalar;
using jsonio::json;

TEST_CASE("scalar json round trip") {
    Scalar s(mpq_class(-1, 3), mpq_class(7, 2));
    json j = jsonio::to_json(s);
    CHECK(j["re"] == "-1/3");
    CHECK(j["im"] == "7/2");
    CHECK(jsonio::scalar_from_json(j) == s);
    // integers and bare strings are accepted on read
    CHECK(jsonio::scalar_from_json(json{{"re", 2}, {"im", "0"}}) == Scalar(2));
    CHECK_THROWS_AS(jsonio::scalar_from_json(json{{"re", "1/0"}, {"im", "0"}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(jsonio::scalar_from_json(json{{"re", "x"}, {"im", "0"}}),
                    std::invalid_argument);
}

TEST_CASE("laurent and rational json round trip") {
    LaurentPoly p = LaurentPoly::monomial(-2, Scalar::i()) + LaurentPoly::monomial(3, Scalar(5));
    CHECK(jsonio::laurent_from_json(jsonio::to_json(p)) == p);
    RationalFunction f(LaurentPoly::one(), LaurentPoly::t() + LaurentPoly::one());
    CHECK(jsonio::ratfunc_from_json(jsonio::to_json(f)) == f);
    CHECK_THROWS_AS(jsonio::laurent_from_json(json{{"zebra", "1"}}), std::invalid_argument);
}

TEST_CASE("matrix json round trip") {
    mat::RingMatrix<RationalFunction> m(2, RationalFunction());
    m.at(0, 0) = RationalFunction::t();
    m.at(0, 1) = RationalFunction(LaurentPoly::monomial(-1, Scalar(2)));
    m.at(1, 1) = RationalFunction(Scalar::i());
    json j = jsonio::to_json(m);
    CHECK(j["carrier"] == "ratfunc");
    CHECK(j["n"] == 2);
    CHECK(jsonio::ratfunc_matrix_from_json(j) == m);
    // the laurent carrier reads into rational functions as well
    mat::RingMatrix<LaurentPoly> lm(1, LaurentPoly::t());
    auto rm = jsonio::ratfunc_matrix_from_json(jsonio::to_json(lm));
    CHECK(rm.at(0, 0) == RationalFunction::t());
    json bad = j;
    bad["entries"] = json::array();
    CHECK_THROWS_AS(jsonio::ratfunc_matrix_from_json(bad), std::invalid_argument);
}

TEST_CASE("classification input with matching params") {
    mat::RingMatrix<RationalFunction> m(2, RationalFunction());
    m.at(0, 0) = RationalFunction(LaurentPoly::monomial(1, Scalar(2)));
    m.at(1, 1) = RationalFunction(LaurentPoly::monomial(1, Scalar(6)));
    json j = jsonio::to_json(m);
    j["params"] = {{"alpha", jsonio::to_json(Scalar(2))},
                   {"beta", jsonio::to_json(Scalar(3))}};
    auto t = jsonio::classify_input_from_json(j);
    CHECK(t.n == 2);
    json wrong = j;
    wrong["params"]["beta"] = jsonio::to_json(Scalar(5));
    CHECK_THROWS_AS(jsonio::classify_input_from_json(wrong), std::invalid_argument);
}

TEST_CASE("report text and json rendering") {
    report::VerificationReport rep;
    rep.suite = "demo";
    rep.add("first statement", "anchor-a", true);
    rep.add("second statement", "anchor-b", false, "a witness line");
    CHECK(!rep.all_ok());
    CHECK(rep.failures() == 1);
    std::string text = rep.text();
    CHECK(text.find("suite demo") != std::string::npos);
    CHECK(text.find("[pass]") != std::string::npos);
    CHECK(text.find("[fail]") != std::string::npos);
    CHECK(text.find("FAILED") != std::string::npos);
    CHECK(text.find("a witness line") != std::string::npos);
    // timings are excluded by default so output is reproducible
    CHECK(text.find("ms") == std::string::npos);
    json j = jsonio::to_json(rep);
    CHECK(j["suite"] == "demo");
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK(j["checks"][1]["status"] == "fail");
    CHECK(!j["checks"][0].contains("time_ms"));
    CHECK(jsonio::to_json(rep, true)["checks"][0].contains("time_ms"));
}

TEST_CASE("bounds validation") {
    report::Bounds b;
    CHECK(report::validate(b).empty());
    b.max_degree = 2;
    CHECK(!report::validate(b).empty());
    b = report::Bounds{};
    b.hopf_degree = 40;
    CHECK(!report::validate(b).empty());
    b = report::Bounds{};
    b.pair_l = -1;
    CHECK(!report::validate(b).empty());
}

TEST_CASE("presentation text round trip") {
    for (auto pres : {cusp::h_sigma(), dual::a_sigma(), dual::a_sigma_abc()}) {
        std::string text = textfmt::presentation_text(pres);
        auto back = textfmt::parse_presentation(text);
        CHECK(textfmt::presentation_text(back) == text);
    }
}

TEST_CASE("polynomial text parsing") {
    auto hp = cusp::h_sigma();
    const auto& alph = hp.sys.alphabet();
    auto p = textfmt::parse_poly("2*CD + -1/2,1*K + 1", alph);
    CHECK(p.coeff(alph.parse_word("CD")) == Scalar(2));
    CHECK(p.coeff(alph.parse_word("K")) == Scalar(mpq_class(-1, 2), mpq_class(1)));
    CHECK(p.coeff(rewrite::Word()) == Scalar(1));
    CHECK(textfmt::parse_poly(textfmt::poly_text(p, alph), alph) == p);
}
