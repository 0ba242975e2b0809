#include "qcusp/rewrite.hpp"

#include <algorithm>
#include <sstream>

namespace qcusp::rewrite {

MonomialOrder MonomialOrder::deglex(int alphabet_size) {
    MonomialOrder ord;
    ord.weight_rows.push_back(std::vector<long>(alphabet_size, 1));
    for (int i = 0; i < alphabet_size; ++i) ord.lex_rank.push_back(i);
    return ord;
}

long MonomialOrder::row_weight(const Word& w, int row) const {
    long s = 0;
    for (char c : w) s += weight_rows.at(row).at(static_cast<unsigned char>(c));
    return s;
}

bool MonomialOrder::less(const Word& a, const Word& b) const {
    for (size_t r = 0; r < weight_rows.size(); ++r) {
        long wa = row_weight(a, static_cast<int>(r)), wb = row_weight(b, static_cast<int>(r));
        if (wa != wb) return wa < wb;
    }
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t k = 0; k < a.size(); ++k) {
        int ra = lex_rank.at(static_cast<unsigned char>(a[k]));
        int rb = lex_rank.at(static_cast<unsigned char>(b[k]));
        if (ra != rb) return ra < rb;
    }
    return false;
}

ReductionSystem::ReductionSystem(Alphabet alphabet, MonomialOrder order, std::vector<Rule> rules)
    : alph_(std::move(alphabet)), ord_(std::move(order)), rules_(std::move(rules)) {
    if (ord_.weight_rows.empty() || static_cast<int>(ord_.lex_rank.size()) != alph_.size())
        throw std::invalid_argument("order does not match alphabet");
    for (auto& row : ord_.weight_rows) {
        if (static_cast<int>(row.size()) != alph_.size())
            throw std::invalid_argument("weight row does not match alphabet");
        for (long w : row)
            if (w < 0) throw std::invalid_argument("negative weights are not allowed");
    }
    for (auto& r : rules_) {
        if (r.lhs.empty()) throw std::invalid_argument("empty left-hand side");
        for (auto& [w, c] : r.rhs.terms()) {
            (void)c;
            if (!ord_.less(w, r.lhs))
                throw std::invalid_argument("rule is not decreasing: " + alph_.print(r.lhs) +
                                            " -> ... " + alph_.print(w));
        }
    }
}

namespace {
// first match (position, rule) scanning positions left to right, rules in order
struct Match {
    size_t pos;
    int rule;
};

std::optional<Match> find_match(const std::vector<Rule>& rules, const Word& w) {
    for (size_t pos = 0; pos < w.size(); ++pos)
        for (int ri = 0; ri < static_cast<int>(rules.size()); ++ri) {
            const Word& l = rules[ri].lhs;
            if (pos + l.size() <= w.size() && w.compare(pos, l.size(), l) == 0)
                return Match{pos, ri};
        }
    return std::nullopt;
}
}  //  namespace

bool ReductionSystem::is_irreducible_word(const Word& w) const {
    return !find_match(rules_, w).has_value();
}

NCPoly ReductionSystem::normal_form(const NCPoly& p, long step_fuse) const {
    long steps = 0;
    std::map<Word, NCPoly> memo;
    // iterative worklist per word, so deep reduction chains cannot overflow the stack
    std::function<NCPoly(const Word&)> nf_word = [&](const Word& start) -> NCPoly {
        auto hit = memo.find(start);
        if (hit != memo.end()) return hit->second;
        NCPoly result;
        std::map<Word, Scalar> pending{{start, Scalar(1)}};
        while (!pending.empty()) {
            // take a maximal pending word to guarantee progress along the order
            auto it = pending.begin();
            for (auto j = std::next(pending.begin()); j != pending.end(); ++j)
                if (ord_.less(it->first, j->first)) it = j;
            Word w = it->first;
            Scalar c = it->second;
            pending.erase(it);
            if (c.is_zero()) continue;
            auto done = memo.find(w);
            if (done != memo.end()) {
                for (auto& [u, cu] : done->second.terms()) result.add_term(u, cu * c);
                continue;
            }
            auto m = find_match(rules_, w);
            if (!m) {
                result.add_term(w, c);
                continue;
            }
            if (++steps > step_fuse) throw NormalFormError("rewrite step fuse exceeded");
            const Rule& r = rules_[m->rule];
            Word prefix = w.substr(0, m->pos);
            Word suffix = w.substr(m->pos + r.lhs.size());
            for (auto& [u, cu] : r.rhs.terms()) {
                Word nw = prefix + u + suffix;
                auto [jt, fresh] = pending.emplace(nw, cu * c);
                if (!fresh) jt->second += cu * c;
            }
        }
        memo.emplace(start, result);
        return result;
    };
    NCPoly out;
    for (auto& [w, c] : p.terms()) {
        NCPoly n = nf_word(w);
        for (auto& [u, cu] : n.terms()) out.add_term(u, cu * c);
    }
    return out;
}

NCPoly ReductionSystem::nf_of(const std::string& word_text) const {
    std::string compact;
    for (char c : word_text)
        if (c != ' ') compact += c;
    return normal_form(NCPoly::monomial(alph_.parse_word(compact)));
}

ConfluenceReport ReductionSystem::check_confluence(long degree_bound) const {
    ConfluenceReport report;
    auto test = [&](int ra, int rb, const Word& w, size_t pos_a, size_t pos_b) {
        if (degree_bound > 0 && ord_.degree(w) > degree_bound) return;
        ConfluenceAmbiguity amb;
        amb.rule_a = ra;
        amb.rule_b = rb;
        amb.word = w;
        auto reduce_at = [&](int ri, size_t pos) {
            const Rule& r = rules_[ri];
            NCPoly x;
            Word prefix = w.substr(0, pos), suffix = w.substr(pos + r.lhs.size());
            for (auto& [u, cu] : r.rhs.terms()) x.add_term(prefix + u + suffix, cu);
            return normal_form(x);
        };
        amb.nf_a = reduce_at(ra, pos_a);
        amb.nf_b = reduce_at(rb, pos_b);
        amb.resolved = (amb.nf_a == amb.nf_b);
        if (!amb.resolved) report.confluent = false;
        report.ambiguities.push_back(std::move(amb));
    };
    int nr = static_cast<int>(rules_.size());
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) {
            const Word& la = rules_[a].lhs;
            const Word& lb = rules_[b].lhs;
            // overlap: a proper suffix of la equals a proper prefix of lb
            for (size_t k = 1; k < la.size() && k < lb.size(); ++k)
                if (la.compare(la.size() - k, k, lb, 0, k) == 0)
                    test(a, b, la + lb.substr(k), 0, la.size() - k);
            // inclusion: lb a proper subword of la
            if (a != b && lb.size() < la.size())
                for (size_t pos = 0; pos + lb.size() <= la.size(); ++pos)
                    if (la.compare(pos, lb.size(), lb) == 0) test(a, b, la, 0, pos);
        }
    return report;
}

std::vector<Word> ReductionSystem::enumerate_basis(long bound, const std::vector<long>* weights,
                                                   size_t cap) const {
    const std::vector<long>& w =
        weights ? *weights : ord_.weight_rows.front();
    if (static_cast<int>(w.size()) != alph_.size())
        throw std::invalid_argument("weight vector does not match alphabet");
    std::vector<Word> out;
    // depth-first extension; a word is pruned as soon as a left-hand side
    // appears as a suffix, so every reducible branch dies immediately
    std::function<void(Word&, long)> grow = [&](Word& cur, long wt) {
        out.push_back(cur);
        if (out.size() > cap) throw std::runtime_error("basis enumeration cap exceeded");
        for (int s = 0; s < alph_.size(); ++s) {
            long nwt = wt + w[static_cast<size_t>(s)];
            if (nwt > bound) continue;
            cur.push_back(static_cast<char>(s));
            bool ok = true;
            for (auto& r : rules_) {
                if (r.lhs.size() > cur.size()) continue;
                if (cur.compare(cur.size() - r.lhs.size(), r.lhs.size(), r.lhs) == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) grow(cur, nwt);
            cur.pop_back();
        }
    };
    Word start;
    grow(start, 0);
    std::sort(out.begin(), out.end(), [&](const Word& x, const Word& y) { return ord_.less(x, y); });
    return out;
}

namespace {
// Shared machinery for the bounded inverse searches: index candidate words,
// then solve the coefficient-matching linear system for pq = qp = 1 exactly.
struct WordIndex {
    std::map<Word, int> pos;
    std::vector<Word> words;
    int add(const Word& w) {
        auto [it, fresh] = pos.emplace(w, static_cast<int>(words.size()));
        if (fresh) words.push_back(w);
        return it->second;
    }
};

std::vector<Word> candidate_words(const Alphabet& alph, long bound, const ReductionSystem* mod) {
    std::vector<Word> out;
    std::function<void(Word&)> grow = [&](Word& cur) {
        if (mod && !mod->is_irreducible_word(cur)) return;
        out.push_back(cur);
        if (out.size() > 2000000) throw std::runtime_error("inverse search bound too large");
        if (static_cast<long>(cur.size()) >= bound) return;
        for (int s = 0; s < alph.size(); ++s) {
            cur.push_back(static_cast<char>(s));
            grow(cur);
            cur.pop_back();
        }
    };
    Word start;
    grow(start);
    return out;
}
}  // namespace

std::optional<mat::RingMatrix<NCPoly>> bounded_inverse_search(const mat::RingMatrix<NCPoly>& m,
                                                              long degree_bound,
                                                              const ReductionSystem* mod) {
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be >= 0");
    // collect the alphabet from the context or from the matrix itself
    int nsym = 0;
    if (mod) nsym = mod->alphabet().size();
    int n = m.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (auto& [w, c] : m.at(i, j).terms()) {
                (void)c;
                for (char ch : w) nsym = std::max(nsym, static_cast<int>(ch) + 1);
            }
    std::vector<std::string> names;
    for (int s = 0; s < nsym; ++s) names.push_back(mod ? mod->alphabet().name(s) : std::string(1, static_cast<char>('a' + s)));
    Alphabet alph(names);

    std::vector<Word> cand = candidate_words(alph, degree_bound, mod);
    int ncand = static_cast<int>(cand.size());
    int unknowns = n * n * ncand;  // q[i][j] = sum_w x_{i,j,w} w

    auto reduce = [&](NCPoly p) { return mod ? mod->normal_form(p) : p; };

    // rows: for each output entry (i,j) and each word appearing in any product,
    // coefficient of (m q)_{ij} - delta_ij and (q m)_{ij} - delta_ij must vanish.
    WordIndex words_mq, words_qm;
    // row maps: (side, i, j, word index) -> map unknown -> coeff
    std::map<std::tuple<int, int, int, int>, std::map<int, Scalar>> rows;
    auto unknown_id = [&](int i, int j, int wi) { return (i * n + j) * ncand + wi; };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                // (m q)_{ij} += m[i][l] * q[l][j];  (q m)_{ij} += q[i][l] * m[l][j]
                for (int wi = 0; wi < ncand; ++wi) {
                    NCPoly left = reduce(m.at(i, l) * NCPoly::monomial(cand[wi]));
                    for (auto& [w, c] : left.terms())
                        rows[{0, i, j, words_mq.add(w)}][unknown_id(l, j, wi)] += c;
                    NCPoly right = reduce(NCPoly::monomial(cand[wi]) * m.at(l, j));
                    for (auto& [w, c] : right.terms())
                        rows[{1, i, j, words_qm.add(w)}][unknown_id(i, l, wi)] += c;
                }
            }

    // make sure the constant-coefficient rows exist even when no product
    // reaches the empty word (they carry the delta_ij right-hand side)
    int mq_empty = words_mq.add(Word()), qm_empty = words_qm.add(Word());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            rows[{0, i, j, mq_empty}];
            rows[{1, i, j, qm_empty}];
        }

    // Sparse incremental elimination: each incoming row is reduced against the
    // pivots already found; a surviving row becomes the pivot of its least
    // remaining column.  Back substitution runs in reverse insertion order.
    std::map<int, size_t> pivot_of_col;
    std::vector<std::pair<int, std::pair<std::map<int, Scalar>, Scalar>>> pivots;
    for (auto& [key, row0] : rows) {
        auto [side, i, j, wi] = key;
        std::map<int, Scalar> row = row0;
        Scalar rhs = ((i == j) && wi == (side == 0 ? mq_empty : qm_empty)) ? Scalar(1) : Scalar(0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = row.begin(); it != row.end();) {
                auto piv = pivot_of_col.find(it->first);
                if (piv == pivot_of_col.end()) {
                    ++it;
                    continue;
                }
                Scalar f = it->second;
                row.erase(it);
                auto& [prow, prhs] = pivots[piv->second].second;
                for (auto& [c, v] : prow) {
                    auto [jt, fresh] = row.emplace(c, -(f * v));
                    if (!fresh) {
                        jt->second -= f * v;
                        if (jt->second.is_zero()) row.erase(jt);
                    } else if (jt->second.is_zero()) {
                        row.erase(jt);
                    }
                }
                rhs -= f * prhs;
                it = row.begin();  // restart scan; the row changed
                changed = true;
                break;
            }
        }
        if (row.empty()) {
            if (!rhs.is_zero()) return std::nullopt;  // inconsistent: no bounded inverse
            continue;
        }
        int lead = row.begin()->first;
        Scalar inv = row.begin()->second.inverse();
        std::map<int, Scalar> norm;
        for (auto& [c, v] : row)
            if (c != lead) norm[c] = v * inv;
        pivot_of_col[lead] = pivots.size();
        pivots.push_back({lead, {std::move(norm), rhs * inv}});
    }
    std::vector<Scalar> solution(static_cast<size_t>(unknowns), Scalar(0));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        Scalar v = it->second.second;
        for (auto& [c, coef] : it->second.first) v -= coef * solution[static_cast<size_t>(c)];
        solution[static_cast<size_t>(it->first)] = v;
    }
    auto sol = std::optional<std::vector<Scalar>>(std::move(solution));

    mat::RingMatrix<NCPoly> q(n, NCPoly());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            NCPoly e;
            for (int wi = 0; wi < ncand; ++wi)
                e.add_term(cand[static_cast<size_t>(wi)], (*sol)[static_cast<size_t>(unknown_id(i, j, wi))]);
            q.at(i, j) = reduce(e);
        }
    // belt and braces: verify both products
    auto check = [&](const mat::RingMatrix<NCPoly>& prod) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reduce(prod.at(i, j)) != (i == j ? NCPoly::one() : NCPoly()))
                    return false;
        return true;
    };
    if (!check(mat::mul(m, q)) || !check(mat::mul(q, m)))
        throw std::logic_error("inverse search produced a non-inverse");
    return q;
}

std::optional<NCPoly> bounded_inverse_search(const NCPoly& p, long degree_bound,
                                             const ReductionSystem* mod) {
    mat::RingMatrix<NCPoly> m(1, p);
    auto q = bounded_inverse_search(m, degree_bound, mod);
    if (!q) return std::nullopt;
    return q->at(0, 0);
}

BoundedOrbitResult strong_orbit_bounded(const mat::RingMatrix<NCPoly>& center, int radius,
                                        long degree_bound, const ReductionSystem* mod) {
    BoundedOrbitResult res;
    std::vector<mat::RingMatrix<NCPoly>> fwd{center}, bwd;
    for (int d = 0; d < radius; ++d) {
        auto inv = bounded_inverse_search(fwd.back(), degree_bound, mod);
        if (!inv) {
            res.failed_step = d;
            return res;
        }
        fwd.push_back(inv->transpose());
    }
    for (int d = 0; d > -radius; --d) {
        auto inv = bounded_inverse_search((bwd.empty() ? center : bwd.back()).transpose(),
                                          degree_bound, mod);
        if (!inv) {
            res.failed_step = d;
            return res;
        }
        bwd.push_back(*inv);
    }
    for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) res.window.push_back(*it);
    for (auto& m : fwd) res.window.push_back(m);
    res.ok = true;
    return res;
}

}  // namespace qcusp::rewrite
