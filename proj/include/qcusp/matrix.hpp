#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qcusp/linalg.hpp"
#include "qcusp/ncpoly.hpp"
#include "qcusp/operators.hpp"
#include "qcusp/ratfunc.hpp"

namespace qcusp::mat {

using exact::LaurentPoly;
using exact::RationalFunction;
using exact::Scalar;

// Carrier hooks used by the generic matrix code.  A carrier is any unital
// (possibly noncommutative) ring; zero/one take a sample so stateful carriers
// (truncated operators) can propagate their context.
template <class R>
struct ring_ops {
    static R zero_like(const R&) { return R(); }
    static R one_like(const R&);
    static bool is_zero(const R& x) { return x.is_zero(); }
    static std::optional<R> inverse(const R& x);  // element inverse or nullopt
};

template <>
struct ring_ops<Scalar> {
    static Scalar zero_like(const Scalar&) { return Scalar(0); }
    static Scalar one_like(const Scalar&) { return Scalar(1); }
    static bool is_zero(const Scalar& x) { return x.is_zero(); }
    static std::optional<Scalar> inverse(const Scalar& x) {
        if (x.is_zero()) return std::nullopt;
        return x.inverse();
    }
};

template <>
struct ring_ops<LaurentPoly> {
    static LaurentPoly zero_like(const LaurentPoly&) { return {}; }
    static LaurentPoly one_like(const LaurentPoly&) { return LaurentPoly::one(); }
    static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
    static std::optional<LaurentPoly> inverse(const LaurentPoly& x) {
        // units of the Laurent ring are the nonzero monomials
        auto m = x.as_monomial();
        if (!m) return std::nullopt;
        return LaurentPoly::monomial(-m->first, m->second.inverse());
    }
};

template <>
struct ring_ops<RationalFunction> {
    static RationalFunction zero_like(const RationalFunction&) { return {}; }
    static RationalFunction one_like(const RationalFunction&) { return RationalFunction(Scalar(1)); }
    static bool is_zero(const RationalFunction& x) { return x.is_zero(); }
    static std::optional<RationalFunction> inverse(const RationalFunction& x) {
        if (x.is_zero()) return std::nullopt;
        return x.inverse();
    }
};

template <>
struct ring_ops<cusp::TruncatedOperator> {
    static cusp::TruncatedOperator zero_like(const cusp::TruncatedOperator& s) {
        return cusp::TruncatedOperator::zero(s.trunc());
    }
    static cusp::TruncatedOperator one_like(const cusp::TruncatedOperator& s) {
        return cusp::TruncatedOperator::identity(s.trunc());
    }
    static bool is_zero(const cusp::TruncatedOperator& x) { return x.is_zero(); }
    static std::optional<cusp::TruncatedOperator> inverse(const cusp::TruncatedOperator& x) {
        return x.inverse();
    }
};

template <>
struct ring_ops<rewrite::NCPoly> {
    static rewrite::NCPoly zero_like(const rewrite::NCPoly&) { return {}; }
    static rewrite::NCPoly one_like(const rewrite::NCPoly&) { return rewrite::NCPoly::one(); }
    static bool is_zero(const rewrite::NCPoly& x) { return x.is_zero(); }
    static std::optional<rewrite::NCPoly> inverse(const rewrite::NCPoly& x) {
        // only scalars are invertible in a free algebra
        auto c = x.as_constant();
        if (!c || c->is_zero()) return std::nullopt;
        return rewrite::NCPoly(c->inverse());
    }
};

// Square matrix over a carrier ring R, row-major.
template <class R>
class RingMatrix {
public:
    RingMatrix(int n, const R& fill) : n_(n), e_(static_cast<size_t>(n) * n, fill) {
        if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
    }
    static RingMatrix identity_like(int n, const R& sample) {
        RingMatrix m(n, ring_ops<R>::zero_like(sample));
        for (int i = 0; i < n; ++i) m.at(i, i) = ring_ops<R>::one_like(sample);
        return m;
    }

    int n() const { return n_; }
    R& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const R& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    RingMatrix transpose() const {
        RingMatrix r = *this;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
        return r;
    }

    friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const RingMatrix& a, const RingMatrix& b) { return !(a == b); }

    bool is_identity() const { return *this == identity_like(n_, e_[0]); }
    bool is_upper_triangular() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < i; ++j)
                if (!ring_ops<R>::is_zero(at(i, j))) return false;
        return true;
    }
    bool is_lower_triangular() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (!ring_ops<R>::is_zero(at(i, j))) return false;
        return true;
    }

private:
    int n_;
    std::vector<R> e_;
};

template <class R>
RingMatrix<R> mul(const RingMatrix<R>& a, const RingMatrix<R>& b) {
    if (a.n() != b.n()) throw std::invalid_argument("matrix size mismatch");
    RingMatrix<R> r(a.n(), ring_ops<R>::zero_like(a.at(0, 0)));
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) {
            R acc = a.at(i, 0) * b.at(0, j);
            for (int l = 1; l < a.n(); ++l) acc = acc + a.at(i, l) * b.at(l, j);
            r.at(i, j) = acc;
        }
    return r;
}

// Product taken in the opposite ring: entries multiply in reversed order.
// (A B)^T = B^T *op A^T holds over any carrier; the plain transpose-product
// identity fails once the carrier stops being commutative.
template <class R>
RingMatrix<R> mul_op(const RingMatrix<R>& a, const RingMatrix<R>& b) {
    if (a.n() != b.n()) throw std::invalid_argument("matrix size mismatch");
    RingMatrix<R> r(a.n(), ring_ops<R>::zero_like(a.at(0, 0)));
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) {
            R acc = b.at(0, j) * a.at(i, 0);
            for (int l = 1; l < a.n(); ++l) acc = acc + b.at(l, j) * a.at(i, l);
            r.at(i, j) = acc;
        }
    return r;
}

template <class R>
RingMatrix<R> add(const RingMatrix<R>& a, const RingMatrix<R>& b) {
    if (a.n() != b.n()) throw std::invalid_argument("matrix size mismatch");
    RingMatrix<R> r = a;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

struct TriangularError : std::runtime_error {
    int diagonal_index;  // -1 when the shape, not a diagonal entry, is at fault
    TriangularError(const std::string& what, int idx)
        : std::runtime_error(what), diagonal_index(idx) {}
};

// Inverse of a triangular matrix with invertible diagonal, by back
// substitution: tau_ll = s_ll^{-1} and, for an upper-triangular s,
//   tau_{l,m} = -s_ll^{-1} (sum_{r=l+1}^{m} s_{l,r} tau_{r,m}).
// Works verbatim over noncommutative carriers.  Throws TriangularError.
template <class R>
RingMatrix<R> triangular_inverse(const RingMatrix<R>& s) {
    bool upper = s.is_upper_triangular();
    bool lower = s.is_lower_triangular();
    if (!upper && !lower) throw TriangularError("matrix is not triangular", -1);
    int n = s.n();
    RingMatrix<R> tau(n, ring_ops<R>::zero_like(s.at(0, 0)));
    std::vector<R> dinv;
    for (int l = 0; l < n; ++l) {
        auto inv = ring_ops<R>::inverse(s.at(l, l));
        if (!inv) throw TriangularError("diagonal entry is not invertible", l);
        dinv.push_back(*inv);
        tau.at(l, l) = *inv;
    }
    if (upper) {
        for (int m = 0; m < n; ++m)
            for (int l = m - 1; l >= 0; --l) {
                R acc = s.at(l, l + 1) * tau.at(l + 1, m);
                for (int r = l + 2; r <= m; ++r) acc = acc + s.at(l, r) * tau.at(r, m);
                tau.at(l, m) = ring_ops<R>::zero_like(acc) - dinv[l] * acc;
            }
    } else {
        for (int m = 0; m < n; ++m)
            for (int l = m + 1; l < n; ++l) {
                R acc = s.at(l, l - 1) * tau.at(l - 1, m);
                for (int r = m; r <= l - 2; ++r) acc = acc + s.at(l, r) * tau.at(r, m);
                tau.at(l, m) = ring_ops<R>::zero_like(acc) - dinv[l] * acc;
            }
    }
    return tau;
}

// General inverse hook per carrier; the default handles triangular input only.
template <class R>
struct matrix_inverse_traits {
    static std::optional<RingMatrix<R>> invert(const RingMatrix<R>& m) {
        if (!m.is_upper_triangular() && !m.is_lower_triangular())
            throw std::invalid_argument("no general inverse for this carrier");
        try {
            return triangular_inverse(m);
        } catch (const TriangularError&) {
            return std::nullopt;
        }
    }
};

namespace detail {
template <class F>
std::optional<RingMatrix<F>> invert_via_dense(const RingMatrix<F>& m) {
    linalg::Dense<F> d(m.n(), m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) d.at(i, j) = m.at(i, j);
    auto inv = linalg::invert(d);
    if (!inv) return std::nullopt;
    RingMatrix<F> r(m.n(), F(0));
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) r.at(i, j) = inv->at(i, j);
    return r;
}
}  // namespace detail

template <>
struct matrix_inverse_traits<Scalar> {
    static std::optional<RingMatrix<Scalar>> invert(const RingMatrix<Scalar>& m) {
        return detail::invert_via_dense(m);
    }
};

template <>
struct matrix_inverse_traits<RationalFunction> {
    static std::optional<RingMatrix<RationalFunction>> invert(
        const RingMatrix<RationalFunction>& m) {
        return detail::invert_via_dense(m);
    }
};

// A matrix of operators on V is one operator on V^n; invert it exactly there.
template <>
struct matrix_inverse_traits<cusp::TruncatedOperator> {
    static std::optional<RingMatrix<cusp::TruncatedOperator>> invert(
        const RingMatrix<cusp::TruncatedOperator>& m);
};

template <class R>
std::optional<RingMatrix<R>> matrix_inverse(const RingMatrix<R>& m) {
    return matrix_inverse_traits<R>::invert(m);
}

// Contragredient of an invertible matrix: transpose of the inverse.  Throws
// std::domain_error when the matrix is not invertible over its carrier.
template <class R>
RingMatrix<R> contragredient(const RingMatrix<R>& m) {
    auto inv = matrix_inverse(m);
    if (!inv) throw std::domain_error("matrix is not invertible over its carrier");
    return inv->transpose();
}

// The two-sided orbit sigma_d, -D <= d <= D, with sigma_{d+1} the
// contragredient of sigma_d.  ok == false reports the first step d at which
// the required inverse stops existing.
template <class R>
struct StrongOrbit {
    int radius = 0;
    bool ok = false;
    int failed_step = 0;                // meaningful when !ok
    std::vector<RingMatrix<R>> window;  // sigma_{-D} ... sigma_{D} when ok

    const RingMatrix<R>& at_step(int d) const {
        return window.at(static_cast<size_t>(d + radius));
    }
};

template <class R>
StrongOrbit<R> strong_orbit(const RingMatrix<R>& center, int radius) {
    if (radius < 0) throw std::invalid_argument("orbit radius must be >= 0");
    StrongOrbit<R> orbit;
    orbit.radius = radius;
    std::vector<RingMatrix<R>> fwd{center}, bwd;
    for (int d = 0; d < radius; ++d) {  // sigma_{d+1} = (sigma_d^{-1})^T
        auto inv = matrix_inverse(fwd.back());
        if (!inv) {
            orbit.failed_step = d;
            return orbit;
        }
        fwd.push_back(inv->transpose());
    }
    for (int d = 0; d > -radius; --d) {  // sigma_{d-1} = (sigma_d^T)^{-1}
        auto inv = matrix_inverse((bwd.empty() ? center : bwd.back()).transpose());
        if (!inv) {
            orbit.failed_step = d;
            return orbit;
        }
        bwd.push_back(*inv);
    }
    for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) orbit.window.push_back(*it);
    for (auto& m : fwd) orbit.window.push_back(m);
    orbit.ok = true;
    return orbit;
}

// Recomputes the defining identities across the window; a sanity check used
// by the verification suites.
template <class R>
bool orbit_identities_hold(const StrongOrbit<R>& orbit) {
    if (!orbit.ok) return false;
    for (int d = -orbit.radius; d < orbit.radius; ++d) {
        auto inv = matrix_inverse(orbit.at_step(d));
        if (!inv || inv->transpose() != orbit.at_step(d + 1)) return false;
        auto invT = matrix_inverse(orbit.at_step(d + 1).transpose());
        if (!invT || *invT != orbit.at_step(d)) return false;
    }
    return true;
}

}  // namespace qcusp::mat
