#include "qcusp/operators.hpp"

#include <sstream>
#include <stdexcept>

namespace qcusp::cusp {

int basis_size(int trunc) {
    if (trunc < 2) throw std::invalid_argument("truncation must be >= 2");
    return trunc;  // exponents 0, 2, 3, ..., N
}

int basis_index(int trunc, long exp) {
    if (exp == 0) return 0;
    if (exp < 2 || exp > trunc) throw std::out_of_range("exponent outside truncated basis");
    return static_cast<int>(exp) - 1;
}

long basis_exp(int trunc, int index) {
    if (index < 0 || index >= basis_size(trunc)) throw std::out_of_range("basis index");
    return index == 0 ? 0 : index + 1;
}

TruncatedOperator::TruncatedOperator(int trunc)
    : trunc_(trunc), img_(basis_size(trunc)) {}

TruncatedOperator TruncatedOperator::identity(int trunc) {
    TruncatedOperator f(trunc);
    for (int k = 0; k < f.dim(); ++k) f.img_[k] = LaurentPoly::monomial(basis_exp(trunc, k));
    return f;
}

void TruncatedOperator::set_image(int index, const LaurentPoly& p) {
    if (!cusp_membership(p)) throw std::invalid_argument("image leaves the cusp ring: " + p.str());
    if (!p.is_zero() && p.degree() > trunc_) throw std::invalid_argument("image exceeds truncation");
    img_.at(index) = p;
}

LaurentPoly TruncatedOperator::apply(const LaurentPoly& b) const {
    LaurentPoly out;
    for (auto& [e, c] : b.coeffs()) out += img_.at(basis_index(trunc_, e)).scaled(c);
    return out;
}

TruncatedOperator TruncatedOperator::operator-() const {
    TruncatedOperator r(trunc_);
    for (int k = 0; k < dim(); ++k) r.img_[k] = -img_[k];
    return r;
}

TruncatedOperator operator+(const TruncatedOperator& f, const TruncatedOperator& g) {
    if (f.trunc_ != g.trunc_) throw std::invalid_argument("truncation mismatch");
    TruncatedOperator r(f.trunc_);
    for (int k = 0; k < r.dim(); ++k) r.img_[k] = f.img_[k] + g.img_[k];
    return r;
}

TruncatedOperator operator-(const TruncatedOperator& f, const TruncatedOperator& g) {
    return f + (-g);
}

TruncatedOperator operator*(const TruncatedOperator& f, const TruncatedOperator& g) {
    if (f.trunc_ != g.trunc_) throw std::invalid_argument("truncation mismatch");
    TruncatedOperator r(f.trunc_);
    for (int k = 0; k < r.dim(); ++k) r.img_[k] = f.apply(g.img_[k]);
    return r;
}

TruncatedOperator TruncatedOperator::scaled(const Scalar& c) const {
    TruncatedOperator r(trunc_);
    for (int k = 0; k < dim(); ++k) r.img_[k] = img_[k].scaled(c);
    return r;
}

TruncatedOperator TruncatedOperator::conj_by_star() const {
    TruncatedOperator r(trunc_);
    for (int k = 0; k < dim(); ++k) r.img_[k] = img_[k].conj_coeffs();
    return r;
}

bool TruncatedOperator::is_zero() const {
    for (auto& p : img_)
        if (!p.is_zero()) return false;
    return true;
}

bool TruncatedOperator::is_identity() const { return *this == identity(trunc_); }

linalg::Dense<Scalar> TruncatedOperator::to_dense() const {
    linalg::Dense<Scalar> m(dim(), dim());
    for (int k = 0; k < dim(); ++k)
        for (auto& [e, c] : img_[k].coeffs()) m.at(basis_index(trunc_, e), k) = c;
    return m;
}

TruncatedOperator TruncatedOperator::from_dense(int trunc, const linalg::Dense<Scalar>& m) {
    TruncatedOperator f(trunc);
    if (m.rows != f.dim() || m.cols != f.dim()) throw std::invalid_argument("bad dense shape");
    for (int k = 0; k < f.dim(); ++k) {
        LaurentPoly p;
        for (int r = 0; r < f.dim(); ++r) p.add_term(basis_exp(trunc, r), m.at(r, k));
        f.img_[k] = p;
    }
    return f;
}

std::optional<TruncatedOperator> TruncatedOperator::inverse() const {
    auto inv = linalg::invert(to_dense());
    if (!inv) return std::nullopt;
    return from_dense(trunc_, *inv);
}

TruncatedOperator TruncatedOperator::restricted(int smaller_trunc) const {
    if (smaller_trunc > trunc_) throw std::invalid_argument("restriction must shrink");
    TruncatedOperator r(smaller_trunc);
    for (int k = 0; k < r.dim(); ++k) {
        const LaurentPoly& p = img_[basis_index(trunc_, basis_exp(smaller_trunc, k))];
        if (!p.is_zero() && p.degree() > smaller_trunc)
            throw std::invalid_argument("operator is not filtration-compatible");
        r.img_[k] = p;
    }
    return r;
}

std::string TruncatedOperator::table_str(int max_rows) const {
    std::ostringstream os;
    for (int k = 0; k < dim() && k < max_rows; ++k)
        os << "t^" << basis_exp(trunc_, k) << " |-> " << img_[k].str() << "\n";
    return os.str();
}

namespace {
// Closed forms on a basis monomial t^n (n = 0 handled by the same formulas).
LaurentPoly closed_image(OpName name, long n) {
    bool odd = (n % 2 != 0);
    Scalar half = Scalar::rational("1/2");
    Scalar sixth = Scalar::rational("1/6");
    LaurentPoly r;
    switch (name) {
        case OpName::K:
            r.add_term(n, odd ? Scalar(-1) : Scalar(1));
            break;
        case OpName::E:
            if (odd) {
                r.add_term(n, Scalar(1));
                r.add_term(n - 1, -Scalar::i());
            }
            break;
        case OpName::F:
            if (odd) {
                r.add_term(n, Scalar(1));
                r.add_term(n - 1, Scalar::i());
            }
            break;
        case OpName::Z:
            if (odd) {
                r.add_term(n - 2, Scalar(n - 3) * sixth);
                r.add_term(n, -half);
            } else {
                r.add_term(n - 2, Scalar(n) * sixth);
            }
            break;
        case OpName::D:
            if (odd) r.add_term(n - 1, Scalar(1));
            break;
        case OpName::Y:
            r.add_term(n - 2, odd ? Scalar(n - 3) : Scalar(n));
            break;
        case OpName::C:
            if (odd) r.add_term(n - 3, Scalar(2));
            break;
        case OpName::X:
            return closed_image(OpName::Y, n) + closed_image(OpName::D, n);
        case OpName::Eplus:  // -(K - 1)/2
            if (odd) r.add_term(n, Scalar(1));
            break;
        case OpName::Eminus:  // -i D
            if (odd) r.add_term(n - 1, -Scalar::i());
            break;
        case OpName::Zplus:  // Y/6 + (i/2)(D + DK), the shift-by-two part of Z
            if (odd) r.add_term(n - 2, Scalar(n - 3) * sixth);
            else r.add_term(n - 2, Scalar(n) * sixth);
            break;
        case OpName::Zminus:  // (K - 1)/4, the shift-free part of Z
            if (odd) r.add_term(n, -half);
            break;
    }
    return r;
}
}  // namespace

TruncatedOperator closed_form_operator(OpName name, int trunc) {
    TruncatedOperator f(trunc);
    for (int k = 0; k < f.dim(); ++k) f.set_image(k, closed_image(name, basis_exp(trunc, k)));
    return f;
}

LaurentPoly laurent_K(const LaurentPoly& p) { return p.parity_flipped(); }

LaurentPoly laurent_Y0(const LaurentPoly& p) { return p.derivative().shifted(-1); }

LaurentPoly laurent_Y1(const LaurentPoly& p) {
    LaurentPoly d = laurent_K(p) - p;
    return d.shifted(-2).scaled(Scalar::rational("3/2"));
}

}  // namespace qcusp::cusp
