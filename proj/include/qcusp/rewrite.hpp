#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qcusp/matrix.hpp"
#include "qcusp/ncpoly.hpp"

namespace qcusp::rewrite {

// Term order on words: weight rows compared lexicographically, then word
// length, then left-to-right comparison by symbol rank (higher rank first).
// With nonnegative rows this is a total, multiplication-compatible,
// well-founded order.  A single all-ones row gives plain degree-lex; extra
// rows let inhomogeneous-looking rules (one generator standing for a power
// of another) stay compatible with a grading.
struct MonomialOrder {
    std::vector<std::vector<long>> weight_rows;  // each row: one weight per symbol
    std::vector<int> lex_rank;                   // per symbol; larger = bigger letter

    static MonomialOrder deglex(int alphabet_size);

    long row_weight(const Word& w, int row) const;
    // total weight in the first row; the default degree used for bounds
    long degree(const Word& w) const { return row_weight(w, 0); }
    bool less(const Word& a, const Word& b) const;
};

struct Rule {
    Word lhs;
    NCPoly rhs;
};

struct ConfluenceAmbiguity {
    int rule_a = 0, rule_b = 0;
    Word word;          // the superposition being tested
    bool resolved = false;
    NCPoly nf_a, nf_b;  // the two reducts in normal form (witness when unresolved)
};

struct ConfluenceReport {
    std::vector<ConfluenceAmbiguity> ambiguities;
    bool confluent = true;
};

class NormalFormError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A rewriting presentation: alphabet, term order, reduction rules.  The rule
// set must be compatible with the order (every monomial of a right-hand side
// strictly below the left-hand side), which the constructor checks; this is
// what makes normal_form terminate.
class ReductionSystem {
public:
    ReductionSystem(Alphabet alphabet, MonomialOrder order, std::vector<Rule> rules);

    const Alphabet& alphabet() const { return alph_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Rule>& rules() const { return rules_; }

    // Leftmost-lowest-rule reduction to normal form.  step_fuse bounds the
    // number of single rewrites across the whole computation.
    NCPoly normal_form(const NCPoly& p, long step_fuse = 1000000) const;
    bool is_irreducible_word(const Word& w) const;

    // parses "YD" or "Y D" style strings and reduces
    NCPoly nf_of(const std::string& word_text) const;

    ConfluenceReport check_confluence(long degree_bound = 0) const;

    // All irreducible words w with weight(w) <= bound, ascending in the term
    // order.  weights defaults to the first order row.  Throws if the count
    // exceeds the cap (the set may be infinite for degenerate weights).
    std::vector<Word> enumerate_basis(long bound,
                                      const std::vector<long>* weights = nullptr,
                                      size_t cap = 1000000) const;

private:
    Alphabet alph_;
    MonomialOrder ord_;
    std::vector<Rule> rules_;
};

// Two-sided inverse search by exact linear algebra: looks for q with
// pq = qp = 1 and deg q <= degree_bound (word length, or the system's first
// weight row when a system is supplied; products are then reduced modulo the
// system).  A nullopt is a certificate that no such bounded inverse exists.
std::optional<NCPoly> bounded_inverse_search(const NCPoly& p, long degree_bound,
                                             const ReductionSystem* mod = nullptr);

std::optional<mat::RingMatrix<NCPoly>> bounded_inverse_search(
    const mat::RingMatrix<NCPoly>& m, long degree_bound, const ReductionSystem* mod = nullptr);

// Strong orbit over a free-algebra carrier, using bounded inverse search at
// every step.  Failure reports the first step whose inverse could not be
// found within the bound.
struct BoundedOrbitResult {
    bool ok = false;
    int failed_step = 0;
    std::vector<mat::RingMatrix<NCPoly>> window;
};

BoundedOrbitResult strong_orbit_bounded(const mat::RingMatrix<NCPoly>& center, int radius,
                                        long degree_bound,
                                        const ReductionSystem* mod = nullptr);

}  // namespace qcusp::rewrite
