#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcusp/rewrite.hpp"
#include "qcusp/tensor.hpp"

namespace qcusp::hopf {

// A Hopf algebra presented by a confluent rewriting system together with the
// values of the structure maps on generators.  The coproduct / counit extend
// multiplicatively, the antipode and the optional star extend as (anti)algebra
// maps; everything else is derived from these via normal forms.
struct HopfPresentation {
    rewrite::ReductionSystem sys;
    std::vector<TensorP2> delta;    // one entry per alphabet symbol
    std::vector<Scalar> eps;        // counit on generators
    std::vector<NCPoly> antipode;   // S on generators
    std::optional<std::vector<NCPoly>> star;  // involution on generators, if any
};

class HopfContext {
  public:
    explicit HopfContext(HopfPresentation pres);

    const HopfPresentation& pres() const { return pres_; }
    const rewrite::ReductionSystem& sys() const { return pres_.sys; }
    const rewrite::Alphabet& alphabet() const { return pres_.sys.alphabet(); }

    const NCPoly& nf_word(const Word& w) const;
    NCPoly nf(const NCPoly& p) const;
    TensorP2 normalize2(const TensorP2& t) const;
    TensorP3 normalize3(const TensorP3& t) const;

    const TensorP2& coproduct_word(const Word& w) const;
    TensorP2 coproduct(const NCPoly& p) const;
    Scalar counit_word(const Word& w) const;
    Scalar counit(const NCPoly& p) const;
    const NCPoly& antipode_word(const Word& w) const;
    NCPoly antipode(const NCPoly& p) const;

    bool has_star() const { return pres_.star.has_value(); }
    const NCPoly& star_word(const Word& w) const;
    NCPoly star(const NCPoly& p) const;  // antilinear

    // Structural helpers on normalized tensors.
    TensorP3 delta_left(const TensorP2& t) const;   // (Delta x id)
    TensorP3 delta_right(const TensorP2& t) const;  // (id x Delta)
    NCPoly counit_left(const TensorP2& t) const;    // (eps x id)
    NCPoly counit_right(const TensorP2& t) const;   // (id x eps)
    NCPoly mul_antipode_left(const TensorP2& t) const;   // m(S x id)
    NCPoly mul_antipode_right(const TensorP2& t) const;  // m(id x S)
    NCPoly mul(const TensorP2& t) const;                 // plain multiplication
    TensorP2 star_legs(const TensorP2& t) const;         // (* x *), antilinear

  private:
    HopfPresentation pres_;
    mutable std::map<Word, NCPoly> nf_cache_;
    mutable std::map<Word, TensorP2> delta_cache_;
    mutable std::map<Word, NCPoly> antipode_cache_;
    mutable std::map<Word, NCPoly> star_cache_;
};

struct AxiomCheck {
    std::string name;
    bool ok = false;
    std::string witness;  // empty when ok
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_ok() const;
    std::string first_failure() const;
    void add(const std::string& name, bool ok, const std::string& witness = "");
};

// Verifies the Hopf axioms on all irreducible words of weighted degree (the
// order's top weight row) at most `degree_bound`, plus well-definedness of the
// structure maps on the defining rules.
AxiomReport check_hopf_axioms(const HopfContext& ctx, int degree_bound);

// Star axioms: involutivity, antimultiplicativity on basis pairs of small
// degree, compatibility with the coproduct and counit, and preservation of the
// defining rules.  Requires pres().star.
AxiomReport check_star_axioms(const HopfContext& ctx, int degree_bound);

// The antipode restricted to the span of irreducible words of weighted degree
// <= degree_bound, as a matrix in that basis; full rank certifies bijectivity
// on the filtration step.  Returns false with a witness if S leaves the span.
bool antipode_graded_bijective(const HopfContext& ctx, int degree_bound, std::string* witness);

// True when every coproduct of a basis word is homogeneous: each tensor term
// u (x) v satisfies wdeg(u) + wdeg(v) = wdeg(word).
bool coproduct_graded(const HopfContext& ctx, int degree_bound, std::string* witness);

// An algebra character given by its values on generators.
struct Character {
    std::vector<Scalar> value;
};

// Empty optional when the character respects all rules; otherwise a witness.
std::optional<std::string> character_defect(const HopfContext& ctx, const Character& chi);
Scalar character_apply(const HopfContext& ctx, const Character& chi, const NCPoly& p);

// Hit actions of a character on the algebra.  Right consumes the first
// coproduct leg, chi -> h = sum chi(h_(1)) h_(2); Left consumes the second,
// h <- chi = sum h_(1) chi(h_(2)).  Both are algebra endomorphisms, and
// automorphisms when chi is convolution-invertible.
enum class HitSide { Left, Right };
NCPoly hit_action(const HopfContext& ctx, const Character& chi, HitSide side, const NCPoly& p);

struct QuasitriangularReport {
    bool has_inverse = false;
    bool intertwines = false;  // R Delta(h) R^{-1} = Delta^op(h) on the sample
    bool hexagon_left = false;   // (Delta x id) R = R13 R23
    bool hexagon_right = false;  // (id x Delta) R = R13 R12
    std::string witness;
    TensorP2 inverse;
    bool all_ok() const { return has_inverse && intertwines && hexagon_left && hexagon_right; }
};

// Invert an element of H (x) H by solving a linear system over the span of
// word pairs generated from r and the unit under multiplication; verifies the
// candidate two-sidedly.
std::optional<TensorP2> tensor_inverse(const HopfContext& ctx, const TensorP2& r);

bool conjugation_flips_coproduct(const HopfContext& ctx, const TensorP2& r, const TensorP2& rinv,
                                 const NCPoly& h);

QuasitriangularReport check_quasitriangular(const HopfContext& ctx, const TensorP2& r,
                                            const std::vector<NCPoly>& sample);

}  // namespace qcusp::hopf
