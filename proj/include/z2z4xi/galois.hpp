#ifndef Z2Z4XI_GALOIS_HPP
#define Z2Z4XI_GALOIS_HPP

// Arithmetic in the Galois ring Z4[xi] = Z4[x]/<h(x)> and in its residue field
// Z2[xi_bar] = F_{2^m}, both in the dense xi-power basis.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace z2z4xi {

inline constexpr int kMaxDegree = 12;

using Coeffs = std::array<std::uint8_t, kMaxDegree>;

class RingContext;
using ContextPtr = std::shared_ptr<const RingContext>;

namespace detail {

// Polynomials over GF(2) packed into the bits of an integer.
inline int gf2_degree(std::uint64_t p) noexcept { return p == 0 ? -1 : 63 - std::countl_zero(p); }

inline std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t m) noexcept {
    const int dm = gf2_degree(m);
    for (int da = gf2_degree(a); da >= dm; da = gf2_degree(a)) a ^= m << (da - dm);
    return a;
}

inline std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    std::uint64_t r = 0;
    a = gf2_mod(a, m);
    while (b != 0) {
        if (b & 1U) r ^= a;
        b >>= 1;
        a = gf2_mod(a << 1, m);
    }
    return r;
}

inline std::uint64_t gf2_powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) noexcept {
    std::uint64_t r = gf2_mod(1, m);
    base = gf2_mod(base, m);
    while (e != 0) {
        if (e & 1U) r = gf2_mulmod(r, base, m);
        base = gf2_mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

inline bool gf2_irreducible(std::uint64_t p) noexcept {
    const int d = gf2_degree(p);
    if (d < 1) return false;
    for (std::uint64_t q = 2; gf2_degree(q) <= d / 2; ++q) {
        if (gf2_mod(p, q) == 0) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

/// The defining polynomial h(x) of degree m together with the derived
/// reduction and Frobenius tables. Immutable once created.
class RingContext {
    struct Passkey {};

   public:
    RingContext(Passkey, int m, std::vector<std::uint8_t> h) : m_(m), h_(std::move(h)) {}

    /// Validates h (ascending coefficients, reduced mod 4) and builds the context.
    static ContextPtr create(int m, const std::vector<int>& h);
    static ContextPtr create(const std::vector<int>& h) { return create(static_cast<int>(h.size()) - 1, h); }

    int degree() const noexcept { return m_; }
    const std::vector<std::uint8_t>& modulus() const noexcept { return h_; }
    std::vector<std::uint8_t> residue_modulus() const {
        std::vector<std::uint8_t> out(h_);
        for (auto& c : out) c &= 1U;
        return out;
    }

    std::uint64_t field_size() const noexcept { return std::uint64_t{1} << m_; }
    std::uint64_t ring_size() const noexcept { return std::uint64_t{1} << (2 * m_); }
    std::uint64_t unit_count() const noexcept { return field_size() * (field_size() - 1); }

    bool operator==(const RingContext& other) const noexcept { return h_ == other.h_; }

    // ξ^m = Σ tail[i] ξ^i over Z4.
    template <unsigned Q>
    Coeffs multiply(const Coeffs& a, const Coeffs& b) const noexcept {
        std::array<unsigned, 2 * kMaxDegree> acc{};
        for (int i = 0; i < m_; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < m_; ++j) acc[i + j] += static_cast<unsigned>(a[i]) * b[j];
        }
        for (int k = 2 * m_ - 2; k >= m_; --k) {
            const unsigned c = acc[k] % Q;
            acc[k] = 0;
            if (c == 0) continue;
            for (int i = 0; i < m_; ++i) acc[k - m_ + i] += c * tail_[i];
        }
        Coeffs out{};
        for (int i = 0; i < m_; ++i) out[i] = static_cast<std::uint8_t>(acc[i] % Q);
        return out;
    }

    // θ^power applied to a, power taken mod m.
    template <unsigned Q>
    Coeffs frobenius(int power, const Coeffs& a) const noexcept {
        const auto& images = frob_[static_cast<std::size_t>(((power % m_) + m_) % m_)];
        std::array<unsigned, kMaxDegree> acc{};
        for (int j = 0; j < m_; ++j) {
            if (a[j] == 0) continue;
            for (int i = 0; i < m_; ++i) acc[i] += static_cast<unsigned>(a[j]) * images[j][i];
        }
        Coeffs out{};
        for (int i = 0; i < m_; ++i) out[i] = static_cast<std::uint8_t>(acc[i] % Q);
        return out;
    }

   private:
    int m_;
    std::vector<std::uint8_t> h_;
    Coeffs tail_{};
    std::vector<std::vector<Coeffs>> frob_;  // frob_[p][j] = θ^p(ξ^j) over Z4
};

/// Element of Z2[xi_bar] (Q = 2) or Z4[xi] (Q = 4).
template <unsigned Q>
class GaloisElem {
    static_assert(Q == 2 || Q == 4);

   public:
    static constexpr unsigned characteristic = Q;

    GaloisElem(ContextPtr ctx, std::span<const int> coeffs) : ctx_(std::move(ctx)) {
        if (!ctx_) throw Error(ErrorKind::InvalidArgument, "null ring context");
        if (coeffs.size() > static_cast<std::size_t>(ctx_->degree()))
            throw Error(ErrorKind::InvalidArgument, "too many coefficients for degree " + std::to_string(ctx_->degree()));
        for (std::size_t i = 0; i < coeffs.size(); ++i) c_[i] = normalize(coeffs[i]);
    }
    GaloisElem(ContextPtr ctx, std::initializer_list<int> coeffs)
        : GaloisElem(std::move(ctx), std::span<const int>(coeffs.begin(), coeffs.size())) {}

    static GaloisElem zero(ContextPtr ctx) { return GaloisElem(std::move(ctx), Coeffs{}); }
    static GaloisElem one(ContextPtr ctx) { return constant(std::move(ctx), 1); }
    static GaloisElem constant(ContextPtr ctx, long long c) {
        Coeffs k{};
        k[0] = normalize(c);
        return GaloisElem(std::move(ctx), k);
    }
    static GaloisElem xi_power(ContextPtr ctx, unsigned long long k) {
        Coeffs basis{};
        // for m = 1, h = x + h0 gives ξ = -h0
        if (ctx->degree() == 1) return pow_of(constant(ctx, -static_cast<long long>(ctx->modulus()[0])), ctx, k);
        basis[1] = 1;
        return pow_of(GaloisElem(ctx, basis), ctx, k);
    }
    /// Inverse of index(): base-Q digits, least significant = constant term.
    static GaloisElem from_index(ContextPtr ctx, std::uint64_t index) {
        Coeffs k{};
        for (int i = 0; i < ctx->degree(); ++i) {
            k[i] = static_cast<std::uint8_t>(index % Q);
            index /= Q;
        }
        return GaloisElem(std::move(ctx), k);
    }
    static GaloisElem from_coeffs(ContextPtr ctx, const Coeffs& k) {
        Coeffs r{};
        for (int i = 0; i < ctx->degree(); ++i) r[i] = static_cast<std::uint8_t>(k[i] % Q);
        return GaloisElem(std::move(ctx), r);
    }

    const ContextPtr& context() const noexcept { return ctx_; }
    int degree() const noexcept { return ctx_->degree(); }
    unsigned coeff(int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
    const Coeffs& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept {
        for (int i = 0; i < degree(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    bool is_one() const noexcept { return *this == one(ctx_); }
    bool is_unit() const noexcept {
        for (int i = 0; i < degree(); ++i)
            if (c_[i] & 1U) return true;
        return false;
    }

    std::uint64_t index() const noexcept {
        std::uint64_t idx = 0;
        for (int i = degree() - 1; i >= 0; --i) idx = idx * Q + c_[i];
        return idx;
    }

    GaloisElem operator-() const {
        Coeffs r{};
        for (int i = 0; i < degree(); ++i) r[i] = static_cast<std::uint8_t>((Q - c_[i]) % Q);
        return GaloisElem(ctx_, r);
    }
    GaloisElem& operator+=(const GaloisElem& o) {
        check_context(o);
        for (int i = 0; i < degree(); ++i) c_[i] = static_cast<std::uint8_t>((c_[i] + o.c_[i]) % Q);
        return *this;
    }
    GaloisElem& operator-=(const GaloisElem& o) {
        check_context(o);
        for (int i = 0; i < degree(); ++i) c_[i] = static_cast<std::uint8_t>((c_[i] + Q - o.c_[i]) % Q);
        return *this;
    }
    GaloisElem& operator*=(const GaloisElem& o) {
        check_context(o);
        c_ = ctx_->template multiply<Q>(c_, o.c_);
        return *this;
    }
    friend GaloisElem operator+(GaloisElem a, const GaloisElem& b) { return a += b; }
    friend GaloisElem operator-(GaloisElem a, const GaloisElem& b) { return a -= b; }
    friend GaloisElem operator*(GaloisElem a, const GaloisElem& b) { return a *= b; }

    friend bool operator==(const GaloisElem& a, const GaloisElem& b) noexcept {
        return same_context(a.ctx_, b.ctx_) && a.c_ == b.c_;
    }

    GaloisElem pow(unsigned long long e) const { return pow_of(*this, ctx_, e); }

    static bool same_context(const ContextPtr& a, const ContextPtr& b) noexcept {
        return a == b || (a && b && *a == *b);
    }

   private:
    GaloisElem(ContextPtr ctx, const Coeffs& k) : ctx_(std::move(ctx)), c_(k) {}

    static std::uint8_t normalize(long long v) noexcept {
        const long long q = static_cast<long long>(Q);
        return static_cast<std::uint8_t>(((v % q) + q) % q);
    }

    static GaloisElem pow_of(GaloisElem base, const ContextPtr& ctx, unsigned long long e) {
        GaloisElem r = one(ctx);
        while (e != 0) {
            if (e & 1ULL) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    void check_context(const GaloisElem& o) const {
        if (!same_context(ctx_, o.ctx_)) throw Error(ErrorKind::ContextMismatch, "elements belong to different rings");
    }

    template <unsigned>
    friend class GaloisElem;

    ContextPtr ctx_;
    Coeffs c_{};
};

using FieldElem = GaloisElem<2>;
using RingElem = GaloisElem<4>;

/// Power t of the Frobenius map xi -> xi^2. Normalized into [1, m] when applied.
class Automorphism {
   public:
    explicit Automorphism(int power = 1) : power_(power) {
        if (power < 1) throw Error(ErrorKind::InvalidArgument, "automorphism power must be positive");
    }

    int power() const noexcept { return power_; }
    int normalized(int m) const noexcept { return (power_ - 1) % m + 1; }
    bool equivalent(const Automorphism& other, int m) const noexcept { return normalized(m) == other.normalized(m); }

   private:
    int power_;
};

inline FieldElem reduce_mod2(const RingElem& a) { return FieldElem::from_coeffs(a.context(), a.coeffs()); }

/// Canonical {0,1}-coefficient preimage under reduce_mod2.
inline RingElem lift(const FieldElem& a) { return RingElem::from_coeffs(a.context(), a.coeffs()); }

/// θ^k for an arbitrary non-negative exponent k (taken mod m).
template <unsigned Q>
GaloisElem<Q> frobenius_power(int k, const GaloisElem<Q>& a) {
    return GaloisElem<Q>::from_coeffs(a.context(), a.context()->template frobenius<Q>(k, a.coeffs()));
}

template <unsigned Q>
GaloisElem<Q> frobenius(const Automorphism& spec, const GaloisElem<Q>& a) {
    return frobenius_power(spec.normalized(a.degree()), a);
}

/// Multiplicative inverse; throws NotUnit when reduce_mod2(a) == 0.
template <unsigned Q>
GaloisElem<Q> inverse(const GaloisElem<Q>& a) {
    if (!a.is_unit()) throw Error(ErrorKind::NotUnit, "element is not invertible");
    const auto& ctx = *a.context();
    const std::uint64_t group_order = Q == 2 ? ctx.field_size() - 1 : ctx.unit_count();
    return a.pow(group_order - 1);
}

/// Order of a unit in the multiplicative group.
template <unsigned Q>
std::uint64_t multiplicative_order(const GaloisElem<Q>& a) {
    if (!a.is_unit()) throw Error(ErrorKind::NotUnit, "order of a non-unit");
    auto p = a;
    std::uint64_t k = 1;
    while (!p.is_one()) {
        p *= a;
        ++k;
    }
    return k;
}

inline ContextPtr RingContext::create(int m, const std::vector<int>& h) {
    if (m < 1 || m > kMaxDegree)
        throw Error(ErrorKind::InvalidArgument, "degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
    if (h.size() != static_cast<std::size_t>(m) + 1)
        throw Error(ErrorKind::InvalidArgument, "h must have exactly m+1 coefficients");

    std::vector<std::uint8_t> coeffs(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) coeffs[i] = static_cast<std::uint8_t>(((h[i] % 4) + 4) % 4);
    if (coeffs.back() != 1) throw Error(ErrorKind::NotMonic, "leading coefficient of h must be 1");

    std::uint64_t hbar = 0;
    for (int i = 0; i <= m; ++i)
        if (coeffs[i] & 1U) hbar |= std::uint64_t{1} << i;
    if (!detail::gf2_irreducible(hbar)) throw Error(ErrorKind::NotBasicIrreducible, "h mod 2 is reducible");
    const std::uint64_t order = (std::uint64_t{1} << m) - 1;
    if (detail::gf2_powmod(2, order, hbar) != 1)
        throw Error(ErrorKind::NotPrimitive, "x is not a unit modulo h mod 2");
    for (const auto p : detail::prime_factors(order)) {
        if (detail::gf2_powmod(2, order / p, hbar) == 1)
            throw Error(ErrorKind::NotPrimitive, "x has order dividing " + std::to_string(order / p) + " modulo h mod 2");
    }

    auto ctx = std::make_shared<RingContext>(Passkey{}, m, coeffs);
    for (int i = 0; i < m; ++i) ctx->tail_[i] = static_cast<std::uint8_t>((4 - coeffs[i]) % 4);

    // Images of the basis under ξ -> ξ^2; the map is a ring automorphism iff h(ξ^2) = 0.
    std::vector<Coeffs> xi_pow(static_cast<std::size_t>(std::max(2 * m, 3)));
    xi_pow[0][0] = 1;
    Coeffs xi{};
    if (m == 1) {
        xi[0] = ctx->tail_[0];
    } else {
        xi[1] = 1;
    }
    for (std::size_t k = 1; k < xi_pow.size(); ++k) xi_pow[k] = ctx->multiply<4>(xi_pow[k - 1], xi);
    {
        std::array<unsigned, kMaxDegree> acc{};
        Coeffs xi_sq_pow{};
        xi_sq_pow[0] = 1;
        for (int i = 0; i <= m; ++i) {
            for (int j = 0; j < m; ++j) acc[j] += static_cast<unsigned>(coeffs[i]) * xi_sq_pow[j];
            xi_sq_pow = ctx->multiply<4>(xi_sq_pow, xi_pow[2]);
        }
        for (int j = 0; j < m; ++j) {
            if (acc[j] % 4 != 0)
                throw Error(ErrorKind::NotHenselLift,
                            "h(xi^2) != 0, so xi -> xi^2 is not a ring automorphism of Z4[x]/<h>");
        }
    }

    ctx->frob_.assign(static_cast<std::size_t>(m), std::vector<Coeffs>(static_cast<std::size_t>(m)));
    for (int j = 0; j < m; ++j) ctx->frob_[0][j][j] = 1;
    for (int p = 1; p < m; ++p) {
        for (int j = 0; j < m; ++j) {
            // θ(θ^{p-1}(ξ^j)) with θ(ξ^i) = ξ^{2i}
            const Coeffs& prev = ctx->frob_[p - 1][j];
            std::array<unsigned, kMaxDegree> acc{};
            for (int i = 0; i < m; ++i) {
                if (prev[i] == 0) continue;
                for (int k = 0; k < m; ++k) acc[k] += static_cast<unsigned>(prev[i]) * xi_pow[2 * i][k];
            }
            for (int k = 0; k < m; ++k) ctx->frob_[p][j][k] = static_cast<std::uint8_t>(acc[k] % 4);
        }
    }
    return ctx;
}

}  // namespace z2z4xi

#endif
