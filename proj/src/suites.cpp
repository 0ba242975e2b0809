#include "qcusp/suites.hpp"

#include <chrono>
#include <stdexcept>

#include "qcusp/classify.hpp"
#include "qcusp/cusp.hpp"
#include "qcusp/dual.hpp"
#include "qcusp/hopf.hpp"
#include "qcusp/matrix.hpp"
#include "qcusp/rewrite.hpp"
#include "qcusp/rng.hpp"
#include "qcusp/star.hpp"
#include "qcusp/textfmt.hpp"

namespace qcusp::suites {

namespace {

using cusp::TruncatedOperator;
using exact::LaurentPoly;
using exact::RationalFunction;
using exact::Scalar;
using hopf::AxiomReport;
using rewrite::NCPoly;
using rewrite::Word;

class Stopwatch {
  public:
    double lap() {
        auto now = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - t0_).count();
        t0_ = now;
        return ms;
    }

  private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

LaurentPoly tp(long e, const Scalar& c = Scalar(1)) { return LaurentPoly::monomial(e, c); }
RationalFunction rf(const LaurentPoly& p) { return RationalFunction(p); }

mat::RingMatrix<RationalFunction> worked_matrix_ratfunc() {
    auto t = cusp::defining_matrix();
    mat::RingMatrix<RationalFunction> m(t.n(), RationalFunction());
    for (int i = 0; i < t.n(); ++i)
        for (int j = 0; j < t.n(); ++j) m.at(i, j) = rf(t.at(i, j));
    return m;
}

LaurentPoly random_laurent(qcusp::Rng& rng, long lo, long hi) {
    LaurentPoly p;
    for (long e = lo; e <= hi; ++e)
        if (rng.coin()) p.add_term(e, rng.gaussian(4, 3));
    return p;
}

NCPoly random_ncpoly(qcusp::Rng& rng, int alphabet_size, int max_len) {
    NCPoly p;
    int terms = static_cast<int>(rng.range(1, 3));
    for (int k = 0; k < terms; ++k) {
        Word w;
        long len = rng.range(0, max_len);
        for (long i = 0; i < len; ++i)
            w.push_back(static_cast<char>(rng.range(0, alphabet_size - 1)));
        p.add_term(w, rng.gaussian(3, 2));
    }
    return p;
}

TruncatedOperator random_op(qcusp::Rng& rng, int trunc) {
    TruncatedOperator f(trunc);
    for (int idx = 0; idx < cusp::basis_size(trunc); ++idx) {
        LaurentPoly img;
        for (int jdx = 0; jdx < cusp::basis_size(trunc); ++jdx)
            if (rng.coin()) img.add_term(cusp::basis_exp(trunc, jdx), rng.gaussian(3, 2));
        f.set_image(idx, img);
    }
    return f;
}

template <class R, class Gen>
mat::RingMatrix<R> random_matrix(int n, const R& fill, Gen gen) {
    mat::RingMatrix<R> m(n, fill);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = gen();
    return m;
}

template <class R>
bool transpose_law_holds(const mat::RingMatrix<R>& a, const mat::RingMatrix<R>& b) {
    return mat::mul(a, b).transpose() == mat::mul_op(b.transpose(), a.transpose());
}

VerificationReport ncmatrix_suite(const Bounds& b) {
    VerificationReport out;
    out.suite = "ncmatrix";
    out.bounds = b;
    Stopwatch sw;
    {
        AxiomReport rep;
        auto id3 = mat::RingMatrix<RationalFunction>::identity_like(3, RationalFunction());
        rep.add("the inverse of the identity is the identity", mat::triangular_inverse(id3) == id3);
        {
            // one recursion step: [[a, b], [0, d]] inverts to
            // [[a^-1, -a^-1 b d^-1], [0, d^-1]]
            RationalFunction a = rf(tp(1)), bb = rf(tp(0) + tp(2)), d = rf(tp(1, Scalar(2)));
            mat::RingMatrix<RationalFunction> m(2, RationalFunction());
            m.at(0, 0) = a;
            m.at(0, 1) = bb;
            m.at(1, 1) = d;
            auto inv = mat::triangular_inverse(m);
            bool ok = inv.at(0, 0) == a.inverse() && inv.at(1, 1) == d.inverse() &&
                      inv.at(1, 0).is_zero() &&
                      inv.at(0, 1) == -(a.inverse() * bb * d.inverse()) &&
                      mat::mul(m, inv) ==
                          mat::RingMatrix<RationalFunction>::identity_like(2, RationalFunction());
            rep.add("a two by two inverse matches the recursion formula", ok);
        }
        {
            auto t = worked_matrix_ratfunc();
            auto inv = mat::triangular_inverse(t);
            auto id = mat::RingMatrix<RationalFunction>::identity_like(3, RationalFunction());
            rep.add("the worked triangular matrix inverts over the function field",
                    inv.is_upper_triangular() && mat::mul(t, inv) == id &&
                        mat::mul(inv, t) == id);
        }
        {
            mat::RingMatrix<RationalFunction> m(2, RationalFunction());
            m.at(0, 0) = rf(tp(1));
            m.at(0, 1) = rf(tp(0));
            bool threw = false;
            std::string wit;
            try {
                mat::triangular_inverse(m);
            } catch (const mat::TriangularError& e) {
                threw = true;
                wit = e.what();
            }
            rep.add("a zero diagonal entry is reported by position", threw, wit);
        }
        out.absorb(rep, "triangular-inverse", sw.lap());
    }
    {
        AxiomReport rep;
        auto id2 = mat::RingMatrix<RationalFunction>::identity_like(2, RationalFunction());
        rep.add("the contragredient of the identity is the identity",
                mat::contragredient(id2) == id2);
        {
            mat::RingMatrix<RationalFunction> m(2, RationalFunction());
            m.at(0, 0) = rf(tp(1, Scalar(2)));
            m.at(1, 1) = rf(tp(1, Scalar(2) * Scalar::i()));
            auto hat = mat::contragredient(m);
            rep.add("a diagonal contragredient inverts entrywise",
                    hat.at(0, 0) == m.at(0, 0).inverse() && hat.at(1, 1) == m.at(1, 1).inverse() &&
                        hat.at(0, 1).is_zero() && hat.at(1, 0).is_zero());
        }
        {
            // [[1, x], [0, 1]] over the free algebra on x, y
            NCPoly x = NCPoly::monomial(Word(1, char(0)));
            mat::RingMatrix<NCPoly> m(2, NCPoly());
            m.at(0, 0) = NCPoly::one();
            m.at(1, 1) = NCPoly::one();
            m.at(0, 1) = x;
            auto hat = mat::contragredient(m);
            rep.add("the unipotent free-algebra example lands on its mirror",
                    hat.at(0, 0) == NCPoly::one() && hat.at(1, 1) == NCPoly::one() &&
                        hat.at(0, 1).is_zero() && hat.at(1, 0) == -x);
        }
        out.absorb(rep, "contragredient", sw.lap());
    }
    {
        AxiomReport rep;
        {
            auto id2 = mat::RingMatrix<RationalFunction>::identity_like(2, RationalFunction());
            auto orbit = mat::strong_orbit(id2, 3);
            bool constant = orbit.ok;
            for (int d = -3; d <= 3 && constant; ++d) constant = orbit.at_step(d) == id2;
            rep.add("the identity orbit is constant", constant && mat::orbit_identities_hold(orbit));
        }
        {
            // sigma tau = [[1 + xy, x], [y, 1]] from the two unipotent factors
            NCPoly x = NCPoly::monomial(Word(1, char(0)));
            NCPoly y = NCPoly::monomial(Word(1, char(1)));
            mat::RingMatrix<NCPoly> st(2, NCPoly());
            st.at(0, 0) = NCPoly::one() + x * y;
            st.at(0, 1) = x;
            st.at(1, 0) = y;
            st.at(1, 1) = NCPoly::one();
            auto inv = rewrite::bounded_inverse_search(st, 6);
            bool ok = inv.has_value();
            if (ok) {
                auto id = mat::RingMatrix<NCPoly>::identity_like(2, NCPoly());
                ok = mat::mul(st, *inv) == id && mat::mul(*inv, st) == id;
            }
            rep.add("the product of the unipotent factors is invertible", ok);
            auto bad = st.transpose();
            rep.add("its transpose admits no inverse of degree at most six",
                    !rewrite::bounded_inverse_search(bad, 6).has_value());
            auto orbit = rewrite::strong_orbit_bounded(bad, 1, 6);
            rep.add("the transposed product breaks the orbit at step zero",
                    !orbit.ok && orbit.failed_step == 0);
        }
        {
            auto sigma = cusp::build_sigma(std::min(b.max_degree, 24));
            auto orbit = cusp::sigma_orbit(sigma, 3);
            rep.add("the coaction orbit exists to radius three",
                    orbit.ok && mat::orbit_identities_hold(orbit));
        }
        out.absorb(rep, "strong-orbit", sw.lap());
    }
    {
        AxiomReport rep;
        qcusp::Rng rng(b.seed);
        bool ok = true;
        std::string wit;
        for (int round = 0; round < 2 && ok; ++round) {
            auto s1 = random_matrix<Scalar>(3, Scalar(0), [&] { return rng.gaussian(5, 4); });
            auto s2 = random_matrix<Scalar>(3, Scalar(0), [&] { return rng.gaussian(5, 4); });
            if (!transpose_law_holds(s1, s2)) { ok = false; wit = "scalar carrier"; }
            auto l1 = random_matrix<LaurentPoly>(2, LaurentPoly(),
                                                [&] { return random_laurent(rng, -2, 3); });
            auto l2 = random_matrix<LaurentPoly>(2, LaurentPoly(),
                                                [&] { return random_laurent(rng, -2, 3); });
            if (ok && !transpose_law_holds(l1, l2)) { ok = false; wit = "laurent carrier"; }
            auto r1 = random_matrix<RationalFunction>(
                2, RationalFunction(), [&] { return rf(random_laurent(rng, -2, 2)); });
            auto r2 = random_matrix<RationalFunction>(
                2, RationalFunction(), [&] { return rf(random_laurent(rng, -2, 2)); });
            if (ok && !transpose_law_holds(r1, r2)) { ok = false; wit = "ratfunc carrier"; }
            auto n1 = random_matrix<NCPoly>(2, NCPoly(), [&] { return random_ncpoly(rng, 2, 3); });
            auto n2 = random_matrix<NCPoly>(2, NCPoly(), [&] { return random_ncpoly(rng, 2, 3); });
            if (ok && !transpose_law_holds(n1, n2)) { ok = false; wit = "free-algebra carrier"; }
            auto o1 = random_matrix<TruncatedOperator>(2, TruncatedOperator(6),
                                                      [&] { return random_op(rng, 6); });
            auto o2 = random_matrix<TruncatedOperator>(2, TruncatedOperator(6),
                                                      [&] { return random_op(rng, 6); });
            if (ok && !transpose_law_holds(o1, o2)) { ok = false; wit = "operator carrier"; }
        }
        rep.add("the transpose of a product is the opposite product of transposes", ok, wit);
        out.absorb(rep, "transpose-law", sw.lap());
    }
    {
        AxiomReport rep;
        {
            mat::RingMatrix<TruncatedOperator> one(1, TruncatedOperator::identity(8));
            rep.add("the identity operator is a quantum automorphism",
                    cusp::quantum_automorphism_checks(one, 8, 2).all_ok());
        }
        {
            mat::RingMatrix<TruncatedOperator> e(1, cusp::closed_form_operator(cusp::OpName::E, 8));
            auto qa = cusp::quantum_automorphism_checks(e, 8, 1);
            bool failed_right = !qa.all_ok();
            std::string wit;
            for (const auto& c : qa.checks)
                if (c.name == "sigma is multiplicative" && !c.ok) wit = c.witness;
            rep.add("the parity projector fails multiplicativity on t^2, t^3",
                    failed_right && wit.find("t^2 * t^3") != std::string::npos, wit);
        }
        out.absorb(rep, "quantum-automorphism", sw.lap());
    }
    {
        AxiomReport rep;
        auto sigma = cusp::build_sigma(std::min(b.max_degree, 20));
        auto orbit = cusp::sigma_orbit(sigma, 1);
        bool ok = orbit.ok;
        std::string wit;
        if (ok) {
            auto hat_checks = cusp::quantum_automorphism_checks(orbit.at_step(1), sigma.trunc, 1);
            ok = hat_checks.all_ok();
            wit = hat_checks.first_failure();
        }
        rep.add("the contragredient of the coaction is again a quantum automorphism", ok, wit);
        out.absorb(rep, "hat-closure", sw.lap());
    }
    return out;
}

VerificationReport rewrite_suite(const Bounds& b) {
    VerificationReport out;
    out.suite = "rewrite";
    out.bounds = b;
    Stopwatch sw;
    auto hp = cusp::h_sigma();
    auto ap = dual::a_sigma();
    auto adp = dual::a_sigma_with_delta();
    auto abcp = dual::a_sigma_abc();
    {
        AxiomReport rep;
        auto conf = [&](const hopf::HopfPresentation& p, const std::string& which) {
            auto r = p.sys.check_confluence();
            std::string wit;
            if (!r.confluent)
                for (const auto& amb : r.ambiguities)
                    if (!amb.resolved) {
                        wit = "unresolved overlap " + p.sys.alphabet().print(amb.word);
                        break;
                    }
            rep.add("all overlaps of the " + which + " system resolve", r.confluent, wit);
        };
        conf(hp, "C, D, K, Y");
        conf(ap, "g, f, s");
        conf(adp, "g, f, s, d");
        conf(abcp, "a, b, c");
        out.absorb(rep, "confluence", sw.lap());
    }
    {
        AxiomReport rep;
        {
            bool ok = true;
            std::string wit;
            std::vector<long> yw = {0, 0, 0, 1};
            for (int d = 0; d <= b.hopf_degree && ok; ++d) {
                size_t got = hp.sys.enumerate_basis(d, &yw).size();
                if (got != static_cast<size_t>(8 * (d + 1))) {
                    ok = false;
                    wit = "Y-bound " + std::to_string(d) + " gives " + std::to_string(got);
                }
            }
            rep.add("the C, D, K, Y basis counts eight per Y-layer", ok, wit);
        }
        {
            bool ok = true;
            std::string wit;
            std::vector<long> fw = {0, 1, 0};
            for (int d = 0; d <= b.pair_b && ok; ++d) {
                size_t got = ap.sys.enumerate_basis(d, &fw).size();
                if (got != static_cast<size_t>(4 * (d + 1))) {
                    ok = false;
                    wit = "f-bound " + std::to_string(d) + " gives " + std::to_string(got);
                }
            }
            rep.add("the g, f, s basis counts four per f-layer", ok, wit);
        }
        {
            bool ok = true;
            std::string wit;
            std::vector<long> aw = {1, 0, 0};
            for (int d = 0; d <= b.pair_b && ok; ++d) {
                size_t got = abcp.sys.enumerate_basis(d, &aw).size();
                if (got != static_cast<size_t>(4 * (d + 1))) {
                    ok = false;
                    wit = "a-bound " + std::to_string(d) + " gives " + std::to_string(got);
                }
            }
            rep.add("the a, b, c basis counts four per a-layer", ok, wit);
        }
        out.absorb(rep, "basis-count", sw.lap());
    }
    {
        AxiomReport rep;
        auto roundtrip = [&](const hopf::HopfPresentation& p, const std::string& which) {
            bool ok = true;
            std::string wit;
            try {
                std::string text = textfmt::presentation_text(p);
                auto back = textfmt::parse_presentation(text);
                ok = textfmt::presentation_text(back) == text;
                if (!ok) wit = "reprint differs";
            } catch (const std::exception& e) {
                ok = false;
                wit = e.what();
            }
            rep.add("the text format round-trips the " + which + " presentation", ok, wit);
        };
        roundtrip(hp, "C, D, K, Y");
        roundtrip(ap, "g, f, s");
        roundtrip(adp, "g, f, s, d");
        roundtrip(abcp, "a, b, c");
        out.absorb(rep, "text-format", sw.lap());
    }
    return out;
}

VerificationReport hopf_suite(const Bounds& b) {
    VerificationReport out;
    out.suite = "hopf";
    out.bounds = b;
    Stopwatch sw;
    hopf::HopfContext hctx{cusp::h_sigma()};
    hopf::HopfContext actx{dual::a_sigma()};
    // basis words with Y-exponent <= d have weighted degree <= 4 + 2d;
    // f-exponent <= d gives 3 + d
    int hbound = 4 + 2 * b.hopf_degree;
    int abound = 3 + b.hopf_degree;
    out.absorb(hopf::check_hopf_axioms(hctx, hbound), "hopf-axioms", sw.lap(), {},
               "C, D, K, Y: ");
    out.absorb(hopf::check_hopf_axioms(actx, abound), "hopf-axioms", sw.lap(), {}, "g, f, s: ");
    {
        AxiomReport rep;
        std::string wit;
        bool ok = hopf::antipode_graded_bijective(hctx, hbound, &wit);
        rep.add("the antipode is bijective on the graded pieces of the C, D, K, Y algebra", ok,
                wit);
        ok = hopf::antipode_graded_bijective(actx, abound, &wit);
        rep.add("the antipode is bijective on the graded pieces of the g, f, s algebra", ok, wit);
        out.absorb(rep, "antipode", sw.lap());
    }
    {
        AxiomReport rep;
        std::string wit;
        bool ok = hopf::coproduct_graded(hctx, hbound, &wit);
        rep.add("coproducts of C, D, K, Y basis words are weight-homogeneous", ok, wit);
        ok = hopf::coproduct_graded(actx, abound, &wit);
        rep.add("coproducts of g, f, s basis words are weight-homogeneous", ok, wit);
        out.absorb(rep, "grading", sw.lap());
    }
    return out;
}

VerificationReport cusp_suite(const Bounds& b) {
    VerificationReport out;
    out.suite = "cusp";
    out.bounds = b;
    Stopwatch sw;
    auto sigma = cusp::build_sigma(b.max_degree);
    out.absorb(cusp::quantum_automorphism_checks(sigma, 3), "cusp-coaction", sw.lap());
    out.absorb(cusp::operator_identity_checks(b.max_degree), "operator-identities", sw.lap());
    out.absorb(cusp::module_algebra_checks(b.max_degree), "module-algebra", sw.lap());
    out.absorb(cusp::u_sigma_checks(b.max_degree), "u-sigma", sw.lap());
    out.absorb(cusp::kernel_checks(b.max_degree), "kernel", sw.lap());
    out.absorb(cusp::decomposition_checks(b.max_degree), "decompositions", sw.lap());
    out.absorb(cusp::braiding_checks(std::min(10, b.max_degree)), "braiding", sw.lap());
    out.absorb(cusp::character_checks(std::min(4, b.hopf_degree), b.seed), "characters",
               sw.lap());
    out.absorb(cusp::quasitriangular_checks(
                   {Scalar(0), Scalar(1), Scalar::i(), Scalar::rational("-2/3")}),
               "r-matrix", sw.lap());
    return out;
}

VerificationReport dual_suite(const Bounds& b) {
    VerificationReport out;
    out.suite = "dual";
    out.bounds = b;
    Stopwatch sw;
    out.absorb(dual::translation_checks(b.hopf_degree), "translation", sw.lap());
    out.absorb(dual::pairing_checks(b.pair_l, b.pair_b, b.seed), "pairing", sw.lap());
    out.absorb(dual::dual_basis_checks(b.pair_l, b.pair_b), "dual-basis", sw.lap());
    out.absorb(dual::structural_checks(b.pair_l, b.pair_b), "grading-gram", sw.lap());
    bool extra = true;
    for (long l = 0; l <= 2; ++l) {
        Scalar lam(l);
        if (lam == b.lambda) extra = false;
        std::string prefix = "lambda = " + lam.str() + ": ";
        out.absorb(dual::coideal_check(lam), "coideal", sw.lap(), {}, prefix);
        out.absorb(dual::embedding_pairing_check(lam, std::min(b.max_degree, 10)),
                   "embedding-pairing", sw.lap(), {}, prefix);
    }
    if (extra) {
        std::string prefix = "lambda = " + b.lambda.str() + ": ";
        out.absorb(dual::coideal_check(b.lambda), "coideal", sw.lap(), {}, prefix);
    }
    out.absorb(dual::injectivity_check(b.lambda, 16), "injectivity", sw.lap(),
               {}, "lambda = " + b.lambda.str() + ": ");
    return out;
}

VerificationReport classify_suite(const Bounds& b) {
    VerificationReport out;
    out.suite = "classify";
    out.bounds = b;
    Stopwatch sw;
    out.absorb(classify::example_checks(std::min(b.max_degree, 20)), "worked-examples", sw.lap());
    out.absorb(classify::sweep_checks(350, b.seed, std::min(b.max_degree, 20)),
               "classification-sweep", sw.lap(),
               {"the cube-root case is vacuous over the coefficient field"});
    return out;
}

VerificationReport star_suite(const Bounds& b) {
    VerificationReport out;
    out.suite = "star";
    out.bounds = b;
    Stopwatch sw;
    out.absorb(star::involution_checks(8, b.seed), "involutions", sw.lap());
    {
        auto sigma = cusp::build_sigma(b.max_degree);
        auto orbit = cusp::sigma_orbit(sigma, 2);
        out.absorb(star::orbit_involution_check(orbit, star::InvolutivePermutation::reversal(3)),
                   "orbit-reflection", sw.lap());
    }
    out.absorb(star::hopf_star_on_generators(b.max_degree), "star-pushforward", sw.lap());
    out.absorb(star::check_hopf_star_axioms(cusp::h_sigma(), 4 + 2 * std::min(b.hopf_degree, 4)),
               "star-axioms", sw.lap());
    out.absorb(star::module_star_check(std::min(b.max_degree, 16)), "module-star", sw.lap());
    bool extra = b.lambda != Scalar(0) && b.lambda != Scalar(1);
    for (long l = 0; l <= 1; ++l) {
        Scalar lam(l);
        out.absorb(star::real_point_check(lam), "real-point", sw.lap(), {},
                   "lambda = " + lam.str() + ": ");
    }
    {
        AxiomReport rep;
        auto at_i = star::real_point_check(Scalar::i());
        std::string wit;
        for (const auto& c : at_i.checks)
            if (!c.ok && !c.witness.empty()) wit = c.witness;
        rep.add("the imaginary point is rejected with a witness", !at_i.all_ok() && !wit.empty(),
                wit);
        out.absorb(rep, "real-point", sw.lap());
    }
    if (extra)
        out.absorb(star::real_point_check(b.lambda), "real-point", sw.lap(), {},
                   "lambda = " + b.lambda.str() + ": ");
    return out;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"ncmatrix", "rewrite", "hopf", "cusp", "dual", "classify", "star"};
}

VerificationReport run_suite(const std::string& name, const Bounds& b) {
    std::string problem = report::validate(b);
    if (!problem.empty()) throw std::invalid_argument(problem);
    if (name == "ncmatrix") return ncmatrix_suite(b);
    if (name == "rewrite") return rewrite_suite(b);
    if (name == "hopf") return hopf_suite(b);
    if (name == "cusp") return cusp_suite(b);
    if (name == "dual") return dual_suite(b);
    if (name == "classify") return classify_suite(b);
    if (name == "star") return star_suite(b);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

VerificationReport run_all(const Bounds& b) {
    std::vector<VerificationReport> parts;
    for (const auto& name : suite_names()) parts.push_back(run_suite(name, b));
    VerificationReport merged = report::merge("all", parts);
    merged.bounds = b;
    return merged;
}

}  // namespace qcusp::suites
