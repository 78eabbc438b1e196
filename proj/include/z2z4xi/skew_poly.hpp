#ifndef Z2Z4XI_SKEW_POLY_HPP
#define Z2Z4XI_SKEW_POLY_HPP

// Skew polynomial rings R[x, θ^t] over Z2[xi_bar] and Z4[xi], with the
// multiplication rule x * a = θ^t(a) * x.

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "galois.hpp"

namespace z2z4xi {

/// Degree of the zero polynomial; compares below every real degree.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

template <class E>
class SkewPoly {
   public:
    using element_type = E;

    SkewPoly(ContextPtr ctx, Automorphism autom, std::vector<E> coeffs = {})
        : ctx_(std::move(ctx)), autom_(autom), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_) {
            if (!E::same_context(c.context(), ctx_))
                throw Error(ErrorKind::ContextMismatch, "coefficient from a different ring");
        }
        trim();
    }

    static SkewPoly zero(ContextPtr ctx, Automorphism autom) { return SkewPoly(std::move(ctx), autom); }
    static SkewPoly one(ContextPtr ctx, Automorphism autom) { return monomial(E::one(ctx), 0, autom); }
    static SkewPoly monomial(const E& c, std::size_t k, Automorphism autom) {
        std::vector<E> v(k + 1, E::zero(c.context()));
        v[k] = c;
        return SkewPoly(c.context(), autom, std::move(v));
    }
    static SkewPoly x_power(ContextPtr ctx, std::size_t k, Automorphism autom) {
        return monomial(E::one(ctx), k, autom);
    }
    /// x^n - 1
    static SkewPoly x_n_minus_one(ContextPtr ctx, std::size_t n, Automorphism autom) {
        std::vector<E> v(n + 1, E::zero(ctx));
        v[n] = E::one(ctx);
        v[0] -= E::one(ctx);
        return SkewPoly(std::move(ctx), autom, std::move(v));
    }
    /// Polynomial with constant integer coefficients (reduced mod the characteristic).
    static SkewPoly from_ints(ContextPtr ctx, Automorphism autom, std::initializer_list<int> coeffs) {
        std::vector<E> v;
        v.reserve(coeffs.size());
        for (int c : coeffs) v.push_back(E::constant(ctx, c));
        return SkewPoly(std::move(ctx), autom, std::move(v));
    }

    const ContextPtr& context() const noexcept { return ctx_; }
    const Automorphism& automorphism() const noexcept { return autom_; }
    const std::vector<E>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return coeffs_.empty() ? kDegreeOfZero : static_cast<int>(coeffs_.size()) - 1; }
    E coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : E::zero(ctx_); }
    const E& leading() const {
        if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
        return coeffs_.back();
    }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    SkewPoly operator-() const {
        std::vector<E> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(-c);
        return SkewPoly(ctx_, autom_, std::move(v));
    }
    SkewPoly& operator+=(const SkewPoly& o) {
        check_compatible(o);
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), E::zero(ctx_));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    SkewPoly& operator-=(const SkewPoly& o) { return *this += -o; }
    friend SkewPoly operator+(SkewPoly a, const SkewPoly& b) { return a += b; }
    friend SkewPoly operator-(SkewPoly a, const SkewPoly& b) { return a -= b; }

    /// Left scalar multiple c * f (no twist: c sits to the left of every x^k).
    SkewPoly scaled(const E& c) const {
        std::vector<E> v;
        v.reserve(coeffs_.size());
        for (const auto& a : coeffs_) v.push_back(c * a);
        return SkewPoly(ctx_, autom_, std::move(v));
    }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
        return E::same_context(a.ctx_, b.ctx_) && a.autom_.equivalent(b.autom_, a.ctx_->degree()) &&
               a.coeffs_ == b.coeffs_;
    }

    void check_compatible(const SkewPoly& o) const {
        if (!E::same_context(ctx_, o.ctx_)) throw Error(ErrorKind::ContextMismatch, "polynomials over different rings");
        if (!autom_.equivalent(o.autom_, ctx_->degree()))
            throw Error(ErrorKind::ContextMismatch, "polynomials in skew rings with different automorphisms");
    }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    ContextPtr ctx_;
    Automorphism autom_;
    std::vector<E> coeffs_;
};

using FieldPoly = SkewPoly<FieldElem>;
using RingPoly = SkewPoly<RingElem>;

/// (a x^k) * (b x^j) = a θ^{tk}(b) x^{k+j}
template <class E>
SkewPoly<E> skew_mul(const SkewPoly<E>& f, const SkewPoly<E>& g) {
    f.check_compatible(g);
    if (f.is_zero() || g.is_zero()) return SkewPoly<E>::zero(f.context(), f.automorphism());
    const int m = f.context()->degree();
    const int t = f.automorphism().normalized(m);
    // twisted[p] holds θ^p applied to every coefficient of g
    std::vector<std::vector<E>> twisted(static_cast<std::size_t>(m));
    const auto& fc = f.coeffs();
    const auto& gc = g.coeffs();
    std::vector<E> out(fc.size() + gc.size() - 1, E::zero(f.context()));
    for (std::size_t k = 0; k < fc.size(); ++k) {
        if (fc[k].is_zero()) continue;
        const auto p = static_cast<std::size_t>((static_cast<long long>(t) * static_cast<long long>(k)) % m);
        if (twisted[p].empty()) {
            twisted[p].reserve(gc.size());
            for (const auto& b : gc) twisted[p].push_back(frobenius_power(static_cast<int>(p), b));
        }
        for (std::size_t j = 0; j < gc.size(); ++j) out[k + j] += fc[k] * twisted[p][j];
    }
    return SkewPoly<E>(f.context(), f.automorphism(), std::move(out));
}

template <class E>
SkewPoly<E> operator*(const SkewPoly<E>& f, const SkewPoly<E>& g) {
    return skew_mul(f, g);
}

template <class E>
struct DivisionResult {
    SkewPoly<E> quotient;
    SkewPoly<E> remainder;
};

/// f = quotient * g + remainder with deg remainder < deg g. Requires a unit
/// leading coefficient on g.
template <class E>
DivisionResult<E> right_divide(const SkewPoly<E>& f, const SkewPoly<E>& g) {
    f.check_compatible(g);
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "right division by the zero polynomial");
    if (!g.leading().is_unit()) throw Error(ErrorKind::DivisorNotUnitLeading, "divisor leading coefficient is not a unit");

    const auto& ctx = f.context();
    const int m = ctx->degree();
    const long long t = f.automorphism().normalized(m);
    const auto inv_lead = inverse(g.leading());
    const auto d = static_cast<std::size_t>(g.degree());
    const auto& gc = g.coeffs();

    std::vector<E> rem = f.coeffs();
    std::vector<E> quo;
    if (rem.size() > d) quo.assign(rem.size() - d, E::zero(ctx));
    for (std::size_t n = rem.size(); n-- > d;) {
        if (rem[n].is_zero()) continue;
        const auto k = n - d;
        const int p = static_cast<int>((t * static_cast<long long>(k)) % m);
        const E c = rem[n] * frobenius_power(p, inv_lead);
        quo[k] = c;
        for (std::size_t j = 0; j <= d; ++j) rem[k + j] -= c * frobenius_power(p, gc[j]);
    }
    rem.resize(std::min(rem.size(), d), E::zero(ctx));
    return {SkewPoly<E>(ctx, f.automorphism(), std::move(quo)), SkewPoly<E>(ctx, f.automorphism(), std::move(rem))};
}

/// g |_r f
template <class E>
bool right_divides(const SkewPoly<E>& g, const SkewPoly<E>& f) {
    return right_divide(f, g).remainder.is_zero();
}

/// Remainder of right division by x^n - 1.
template <class E>
SkewPoly<E> reduce_mod_xn(const SkewPoly<E>& f, std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "reduction modulo x^0 - 1");
    // c x^k = c x^{k-n} * (x^n - 1) + c x^{k-n}, so exponents fold mod n without a twist
    std::vector<E> out(std::min(n, f.coeffs().size()), E::zero(f.context()));
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) out[k % n] += f.coeffs()[k];
    return SkewPoly<E>(f.context(), f.automorphism(), std::move(out));
}

inline FieldPoly poly_mod2(const RingPoly& f) {
    std::vector<FieldElem> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.push_back(reduce_mod2(c));
    return FieldPoly(f.context(), f.automorphism(), std::move(v));
}

inline RingPoly lift_poly(const FieldPoly& f) {
    std::vector<RingElem> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.push_back(lift(c));
    return RingPoly(f.context(), f.automorphism(), std::move(v));
}

}  // namespace z2z4xi

#endif
