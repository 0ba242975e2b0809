#include "qcusp/hopf.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "qcusp/linalg.hpp"

namespace qcusp::hopf {

namespace {

std::string clip(std::string s, size_t n = 160) {
    if (s.size() > n) s = s.substr(0, n) + "...";
    return s;
}

}  // namespace

HopfContext::HopfContext(HopfPresentation pres) : pres_(std::move(pres)) {
    size_t n = pres_.sys.alphabet().size();
    if (pres_.delta.size() != n || pres_.eps.size() != n || pres_.antipode.size() != n)
        throw std::invalid_argument("hopf: structure maps must cover every generator");
    if (pres_.star && pres_.star->size() != n)
        throw std::invalid_argument("hopf: star must cover every generator");
}

const NCPoly& HopfContext::nf_word(const Word& w) const {
    auto it = nf_cache_.find(w);
    if (it != nf_cache_.end()) return it->second;
    NCPoly r = pres_.sys.normal_form(NCPoly::monomial(w));
    return nf_cache_.emplace(w, std::move(r)).first->second;
}

NCPoly HopfContext::nf(const NCPoly& p) const {
    NCPoly r;
    for (auto& [w, c] : p.terms()) r += nf_word(w).scaled(c);
    return r;
}

TensorP2 HopfContext::normalize2(const TensorP2& t) const {
    return map_legs(t, [this](const Word& w) { return nf_word(w); });
}

TensorP3 HopfContext::normalize3(const TensorP3& t) const {
    return map_legs(t, [this](const Word& w) { return nf_word(w); });
}

const TensorP2& HopfContext::coproduct_word(const Word& w) const {
    auto it = delta_cache_.find(w);
    if (it != delta_cache_.end()) return it->second;
    TensorP2 r;
    if (w.empty()) {
        r = TensorP2::unit();
    } else {
        Word head = w.substr(0, w.size() - 1);
        int last = static_cast<unsigned char>(w.back());
        r = normalize2(coproduct_word(head) * pres_.delta[static_cast<size_t>(last)]);
    }
    return delta_cache_.emplace(w, std::move(r)).first->second;
}

TensorP2 HopfContext::coproduct(const NCPoly& p) const {
    TensorP2 r;
    for (auto& [w, c] : p.terms()) r = r + coproduct_word(w).scaled(c);
    return r;
}

Scalar HopfContext::counit_word(const Word& w) const {
    Scalar r(1);
    for (char ch : w) r *= pres_.eps[static_cast<size_t>(static_cast<unsigned char>(ch))];
    return r;
}

Scalar HopfContext::counit(const NCPoly& p) const {
    Scalar r(0);
    for (auto& [w, c] : p.terms()) r += c * counit_word(w);
    return r;
}

const NCPoly& HopfContext::antipode_word(const Word& w) const {
    auto it = antipode_cache_.find(w);
    if (it != antipode_cache_.end()) return it->second;
    NCPoly r;
    if (w.empty()) {
        r = NCPoly::one();
    } else {
        // S is an antihomomorphism: S(w x) = S(x) S(w)
        Word head = w.substr(0, w.size() - 1);
        int last = static_cast<unsigned char>(w.back());
        r = nf(pres_.antipode[static_cast<size_t>(last)] * antipode_word(head));
    }
    return antipode_cache_.emplace(w, std::move(r)).first->second;
}

NCPoly HopfContext::antipode(const NCPoly& p) const {
    NCPoly r;
    for (auto& [w, c] : p.terms()) r += antipode_word(w).scaled(c);
    return r;
}

const NCPoly& HopfContext::star_word(const Word& w) const {
    if (!pres_.star) throw std::logic_error("hopf: presentation has no star structure");
    auto it = star_cache_.find(w);
    if (it != star_cache_.end()) return it->second;
    NCPoly r;
    if (w.empty()) {
        r = NCPoly::one();
    } else {
        Word head = w.substr(0, w.size() - 1);
        int last = static_cast<unsigned char>(w.back());
        r = nf((*pres_.star)[static_cast<size_t>(last)] * star_word(head));
    }
    return star_cache_.emplace(w, std::move(r)).first->second;
}

NCPoly HopfContext::star(const NCPoly& p) const {
    NCPoly r;
    for (auto& [w, c] : p.terms()) r += star_word(w).scaled(c.conj());
    return r;
}

TensorP3 HopfContext::delta_left(const TensorP2& t) const {
    TensorP3 r;
    for (auto& [k, c] : t.terms()) {
        const TensorP2& d = coproduct_word(k.first);
        for (auto& [dk, dc] : d.terms()) r.add_term(dk.first, dk.second, k.second, c * dc);
    }
    return normalize3(r);
}

TensorP3 HopfContext::delta_right(const TensorP2& t) const {
    TensorP3 r;
    for (auto& [k, c] : t.terms()) {
        const TensorP2& d = coproduct_word(k.second);
        for (auto& [dk, dc] : d.terms()) r.add_term(k.first, dk.first, dk.second, c * dc);
    }
    return normalize3(r);
}

NCPoly HopfContext::counit_left(const TensorP2& t) const {
    NCPoly r;
    for (auto& [k, c] : t.terms()) r += nf_word(k.second).scaled(c * counit_word(k.first));
    return r;
}

NCPoly HopfContext::counit_right(const TensorP2& t) const {
    NCPoly r;
    for (auto& [k, c] : t.terms()) r += nf_word(k.first).scaled(c * counit_word(k.second));
    return r;
}

NCPoly HopfContext::mul_antipode_left(const TensorP2& t) const {
    NCPoly r;
    for (auto& [k, c] : t.terms())
        r += nf(antipode_word(k.first) * NCPoly::monomial(k.second)).scaled(c);
    return r;
}

NCPoly HopfContext::mul_antipode_right(const TensorP2& t) const {
    NCPoly r;
    for (auto& [k, c] : t.terms())
        r += nf(NCPoly::monomial(k.first) * antipode_word(k.second)).scaled(c);
    return r;
}

NCPoly HopfContext::mul(const TensorP2& t) const {
    NCPoly r;
    for (auto& [k, c] : t.terms()) r += nf_word(k.first + k.second).scaled(c);
    return r;
}

TensorP2 HopfContext::star_legs(const TensorP2& t) const {
    TensorP2 r;
    for (auto& [k, c] : t.terms())
        r = r + tensor2(star_word(k.first), star_word(k.second)).scaled(c.conj());
    return r;
}

bool AxiomReport::all_ok() const {
    for (auto& c : checks)
        if (!c.ok) return false;
    return true;
}

std::string AxiomReport::first_failure() const {
    for (auto& c : checks)
        if (!c.ok) return c.name + (c.witness.empty() ? "" : ": " + c.witness);
    return "";
}

void AxiomReport::add(const std::string& name, bool ok, const std::string& witness) {
    checks.push_back({name, ok, ok ? "" : witness});
}

AxiomReport check_hopf_axioms(const HopfContext& ctx, int degree_bound) {
    AxiomReport rep;
    const auto& alph = ctx.alphabet();
    const auto& rules = ctx.sys().rules();

    // The structure maps are defined on generators; they descend to the
    // quotient iff they agree on both sides of every rule.
    {
        bool ok = true;
        std::string wit;
        for (size_t r = 0; r < rules.size() && ok; ++r) {
            TensorP2 dl = ctx.coproduct_word(rules[r].lhs);
            TensorP2 dr = ctx.coproduct(rules[r].rhs);
            if (dl != dr) {
                ok = false;
                wit = "rule " + alph.print(rules[r].lhs) + ": Delta difference " +
                      clip((dl - dr).str(alph));
            }
        }
        rep.add("coproduct well defined on rules", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (size_t r = 0; r < rules.size() && ok; ++r) {
            Scalar el = ctx.counit_word(rules[r].lhs);
            Scalar er = ctx.counit(rules[r].rhs);
            if (!(el == er)) {
                ok = false;
                wit = "rule " + alph.print(rules[r].lhs) + ": " + el.str() + " vs " + er.str();
            }
        }
        rep.add("counit well defined on rules", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (size_t r = 0; r < rules.size() && ok; ++r) {
            NCPoly sl = ctx.antipode_word(rules[r].lhs);
            NCPoly sr = ctx.antipode(rules[r].rhs);
            if (sl != sr) {
                ok = false;
                wit = "rule " + alph.print(rules[r].lhs) + ": S difference " +
                      clip((sl - sr).str(alph));
            }
        }
        rep.add("antipode well defined on rules", ok, wit);
    }

    auto basis = ctx.sys().enumerate_basis(degree_bound);
    {
        bool ok = true;
        std::string wit;
        for (auto& w : basis) {
            TensorP3 a = ctx.delta_left(ctx.coproduct_word(w));
            TensorP3 b = ctx.delta_right(ctx.coproduct_word(w));
            if (a != b) {
                ok = false;
                wit = alph.print(w) + ": " + clip((a - b).str(alph));
                break;
            }
        }
        rep.add("coassociativity", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (auto& w : basis) {
            NCPoly l = ctx.counit_left(ctx.coproduct_word(w));
            NCPoly r = ctx.counit_right(ctx.coproduct_word(w));
            const NCPoly& id = ctx.nf_word(w);
            if (l != id || r != id) {
                ok = false;
                wit = alph.print(w);
                break;
            }
        }
        rep.add("counit axiom", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (auto& w : basis) {
            NCPoly l = ctx.mul_antipode_left(ctx.coproduct_word(w));
            NCPoly r = ctx.mul_antipode_right(ctx.coproduct_word(w));
            NCPoly e(ctx.counit_word(w));
            if (l != e || r != e) {
                ok = false;
                wit = alph.print(w) + ": m(S x id)Delta = " + clip(l.str(alph)) +
                      ", m(id x S)Delta = " + clip(r.str(alph));
                break;
            }
        }
        rep.add("antipode axiom", ok, wit);
    }
    {
        std::string wit;
        bool ok = antipode_graded_bijective(ctx, degree_bound, &wit);
        rep.add("antipode bijective on filtration", ok, wit);
    }
    return rep;
}

AxiomReport check_star_axioms(const HopfContext& ctx, int degree_bound) {
    AxiomReport rep;
    if (!ctx.has_star()) {
        rep.add("star structure present", false, "presentation carries no star");
        return rep;
    }
    const auto& alph = ctx.alphabet();
    const auto& rules = ctx.sys().rules();
    {
        bool ok = true;
        std::string wit;
        for (size_t r = 0; r < rules.size() && ok; ++r) {
            NCPoly sl = ctx.star_word(rules[r].lhs);
            NCPoly sr = ctx.star(rules[r].rhs);
            if (sl != sr) {
                ok = false;
                wit = "rule " + alph.print(rules[r].lhs) + ": star difference " +
                      clip((sl - sr).str(alph));
            }
        }
        rep.add("star preserves the defining ideal", ok, wit);
    }
    auto basis = ctx.sys().enumerate_basis(degree_bound);
    {
        bool ok = true;
        std::string wit;
        for (auto& w : basis) {
            NCPoly twice = ctx.star(ctx.star_word(w));
            if (twice != ctx.nf_word(w)) {
                ok = false;
                wit = alph.print(w) + " -> " + clip(twice.str(alph));
                break;
            }
        }
        rep.add("star is an involution", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (auto& w : basis) {
            TensorP2 a = ctx.coproduct(ctx.star_word(w));
            TensorP2 b = ctx.star_legs(ctx.coproduct_word(w));
            if (a != b) {
                ok = false;
                wit = alph.print(w) + ": Delta(w*) - (*x*)Delta(w) = " + clip((a - b).str(alph));
                break;
            }
        }
        rep.add("coproduct is a *-homomorphism", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (auto& w : basis) {
            Scalar a = ctx.counit(ctx.star_word(w));
            Scalar b = ctx.counit_word(w).conj();
            if (!(a == b)) {
                ok = false;
                wit = alph.print(w);
                break;
            }
        }
        rep.add("counit is a *-map", ok, wit);
    }
    {
        // (S o *) squares to the identity on a Hopf *-algebra.
        bool ok = true;
        std::string wit;
        for (auto& w : basis) {
            NCPoly once = ctx.antipode(ctx.star_word(w));
            NCPoly back = ctx.antipode(ctx.star(once));
            if (back != ctx.nf_word(w)) {
                ok = false;
                wit = alph.print(w) + " -> " + clip(back.str(alph));
                break;
            }
        }
        rep.add("(S o *) is an involution", ok, wit);
    }
    return rep;
}

bool antipode_graded_bijective(const HopfContext& ctx, int degree_bound, std::string* witness) {
    auto basis = ctx.sys().enumerate_basis(degree_bound);
    std::map<Word, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    int n = static_cast<int>(basis.size());
    linalg::Dense<Scalar> m(n, n);
    for (int i = 0; i < n; ++i) {
        const NCPoly& s = ctx.antipode_word(basis[static_cast<size_t>(i)]);
        for (auto& [w, c] : s.terms()) {
            auto it = index.find(w);
            if (it == index.end()) {
                if (witness)
                    *witness = "S(" + ctx.alphabet().print(basis[static_cast<size_t>(i)]) +
                               ") leaves the filtration step at " + ctx.alphabet().print(w);
                return false;
            }
            m.at(it->second, i) = c;
        }
    }
    if (linalg::rank(m) != n) {
        if (witness) *witness = "antipode matrix is singular on the filtration step";
        return false;
    }
    return true;
}

bool coproduct_graded(const HopfContext& ctx, int degree_bound, std::string* witness) {
    auto basis = ctx.sys().enumerate_basis(degree_bound);
    const auto& ord = ctx.sys().order();
    for (auto& w : basis) {
        long d = ord.degree(w);
        for (auto& [k, c] : ctx.coproduct_word(w).terms()) {
            (void)c;
            if (ord.degree(k.first) + ord.degree(k.second) != d) {
                if (witness)
                    *witness = ctx.alphabet().print(w) + " has term " +
                               ctx.alphabet().print(k.first) + "(x)" +
                               ctx.alphabet().print(k.second);
                return false;
            }
        }
    }
    return true;
}

std::optional<std::string> character_defect(const HopfContext& ctx, const Character& chi) {
    if (chi.value.size() != ctx.alphabet().size())
        return "character must assign a value to every generator";
    for (auto& r : ctx.sys().rules()) {
        Scalar l = character_apply(ctx, chi, NCPoly::monomial(r.lhs));
        Scalar rr = character_apply(ctx, chi, r.rhs);
        if (!(l == rr))
            return "rule " + ctx.alphabet().print(r.lhs) + ": " + l.str() + " vs " + rr.str();
    }
    return std::nullopt;
}

Scalar character_apply(const HopfContext& ctx, const Character& chi, const NCPoly& p) {
    (void)ctx;
    Scalar r(0);
    for (auto& [w, c] : p.terms()) {
        Scalar v = c;
        for (char ch : w) v *= chi.value[static_cast<size_t>(static_cast<unsigned char>(ch))];
        r += v;
    }
    return r;
}

NCPoly hit_action(const HopfContext& ctx, const Character& chi, HitSide side, const NCPoly& p) {
    NCPoly r;
    for (auto& [w, c] : p.terms())
        for (auto& [k, v] : ctx.coproduct_word(w).terms()) {
            const Word& keep = side == HitSide::Right ? k.second : k.first;
            const Word& eat = side == HitSide::Right ? k.first : k.second;
            Scalar weight = c * v * character_apply(ctx, chi, NCPoly::monomial(eat));
            r += NCPoly::monomial(keep, weight);
        }
    return ctx.nf(r);
}

std::optional<TensorP2> tensor_inverse(const HopfContext& ctx, const TensorP2& r) {
    TensorP2 rn = ctx.normalize2(r);
    // span of word pairs reachable from the unit by left multiplication by rn
    std::set<TensorP2::Key> span;
    span.insert({Word(), Word()});
    for (auto& [k, c] : rn.terms()) {
        (void)c;
        span.insert(k);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<TensorP2::Key> next = span;
        for (auto& p : span) {
            TensorP2 unit_p;
            unit_p.add_term(p.first, p.second, Scalar(1));
            TensorP2 prod = ctx.normalize2(rn * unit_p);
            for (auto& [k, c] : prod.terms()) {
                (void)c;
                if (next.insert(k).second) grew = true;
            }
        }
        span.swap(next);
        if (span.size() > 4096)
            throw std::runtime_error("tensor_inverse: span closure too large");
    }
    std::vector<TensorP2::Key> cols(span.begin(), span.end());
    std::map<TensorP2::Key, int> col_of;
    for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = static_cast<int>(i);

    // rows: coefficients of rn * x - 1(x)1 over all word pairs that occur
    std::map<TensorP2::Key, std::map<int, Scalar>> rows;
    for (size_t j = 0; j < cols.size(); ++j) {
        TensorP2 unit_p;
        unit_p.add_term(cols[j].first, cols[j].second, Scalar(1));
        TensorP2 prod = ctx.normalize2(rn * unit_p);
        for (auto& [k, c] : prod.terms()) rows[k][static_cast<int>(j)] = c;
    }
    rows[{Word(), Word()}];  // make sure the unit row exists
    linalg::Dense<Scalar> a(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    std::vector<Scalar> b;
    int ri = 0;
    for (auto& [k, row] : rows) {
        for (auto& [j, c] : row) a.at(ri, j) = c;
        b.push_back((k.first.empty() && k.second.empty()) ? Scalar(1) : Scalar(0));
        ++ri;
    }
    auto sol = linalg::solve(a, b);
    if (!sol) return std::nullopt;
    TensorP2 x;
    for (size_t j = 0; j < cols.size(); ++j)
        x.add_term(cols[j].first, cols[j].second, (*sol)[j]);
    if (ctx.normalize2(rn * x) != TensorP2::unit()) return std::nullopt;
    if (ctx.normalize2(x * rn) != TensorP2::unit()) return std::nullopt;
    return x;
}

bool conjugation_flips_coproduct(const HopfContext& ctx, const TensorP2& r, const TensorP2& rinv,
                                 const NCPoly& h) {
    TensorP2 d = ctx.coproduct(h);
    TensorP2 lhs = ctx.normalize2(r * d * rinv);
    return lhs == d.flipped();
}

QuasitriangularReport check_quasitriangular(const HopfContext& ctx, const TensorP2& r,
                                            const std::vector<NCPoly>& sample) {
    QuasitriangularReport rep;
    TensorP2 rn = ctx.normalize2(r);
    auto inv = tensor_inverse(ctx, rn);
    if (!inv) {
        rep.witness = "R is not invertible in the generated span";
        return rep;
    }
    rep.has_inverse = true;
    rep.inverse = *inv;
    rep.intertwines = true;
    for (auto& h : sample)
        if (!conjugation_flips_coproduct(ctx, rn, *inv, h)) {
            rep.intertwines = false;
            rep.witness = "conjugation fails to flip Delta(" + clip(h.str(ctx.alphabet()), 40) + ")";
            break;
        }
    TensorP3 hl = ctx.delta_left(rn);
    TensorP3 hl_rhs = ctx.normalize3(widen(rn, 1) * widen(rn, 0));
    rep.hexagon_left = (hl == hl_rhs);
    TensorP3 hr = ctx.delta_right(rn);
    TensorP3 hr_rhs = ctx.normalize3(widen(rn, 1) * widen(rn, 2));
    rep.hexagon_right = (hr == hr_rhs);
    if (rep.witness.empty() && (!rep.hexagon_left || !rep.hexagon_right))
        rep.witness = "hexagon identity fails";
    return rep;
}

}  // namespace qcusp::hopf
