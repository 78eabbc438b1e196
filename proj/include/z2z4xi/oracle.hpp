#ifndef Z2Z4XI_ORACLE_HPP
#define Z2Z4XI_ORACLE_HPP

// Brute-force enumeration of codes at desk scale. Words are packed into one
// 64-bit key: binary coordinate i occupies bits [i m, (i+1) m); quaternary
// coordinate j keeps its low bits (coefficients mod 2) at (r + j) m and its
// high bits at (r + s + j) m.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "skew_cyclic.hpp"

namespace z2z4xi {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

class WordLayout {
   public:
    WordLayout(ContextPtr ctx, std::size_t r, std::size_t s) : ctx_(std::move(ctx)), r_(r), s_(s), m_(ctx_->degree()) {
        const std::size_t bits = static_cast<std::size_t>(m_) * (r + 2 * s);
        if (bits > 63) throw Error(ErrorKind::BudgetExceeded, "ambient space 2^" + std::to_string(bits) + " does not fit a packed word");
        bits_ = static_cast<int>(bits);
        const std::uint64_t cm = (std::uint64_t{1} << m_) - 1;
        for (std::size_t j = 0; j < s; ++j) {
            lo_mask_ |= cm << lo_shift(j);
            hi_mask_ |= cm << hi_shift(j);
        }
    }

    const ContextPtr& context() const noexcept { return ctx_; }
    std::size_t r() const noexcept { return r_; }
    std::size_t s() const noexcept { return s_; }
    int bits() const noexcept { return bits_; }

    std::uint64_t pack(const MixedWord& w) const {
        if (w.r() != r_ || w.s() != s_) throw Error(ErrorKind::ShapeMismatch, "word does not match the layout");
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < r_; ++i) out |= field_bits(w.alpha()[i]) << (i * m_);
        for (std::size_t j = 0; j < s_; ++j) {
            const auto [lo, hi] = ring_bits(w.beta()[j]);
            out |= lo << lo_shift(j);
            out |= hi << hi_shift(j);
        }
        return out;
    }

    MixedWord unpack(std::uint64_t key) const {
        std::vector<FieldElem> alpha;
        std::vector<RingElem> beta;
        const std::uint64_t cm = (std::uint64_t{1} << m_) - 1;
        for (std::size_t i = 0; i < r_; ++i) {
            Coeffs k{};
            const auto v = (key >> (i * m_)) & cm;
            for (int b = 0; b < m_; ++b) k[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>((v >> b) & 1);
            alpha.push_back(FieldElem::from_coeffs(ctx_, k));
        }
        for (std::size_t j = 0; j < s_; ++j) {
            Coeffs k{};
            const auto lo = (key >> lo_shift(j)) & cm;
            const auto hi = (key >> hi_shift(j)) & cm;
            for (int b = 0; b < m_; ++b)
                k[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(((lo >> b) & 1) + 2 * ((hi >> b) & 1));
            beta.push_back(RingElem::from_coeffs(ctx_, k));
        }
        return MixedWord(ctx_, std::move(alpha), std::move(beta));
    }

    /// Addition in F^r x R^s on packed words.
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        const std::uint64_t x = a ^ b;
        const std::uint64_t carry = ((a & b) & lo_mask_) << (s_ * m_);
        return x ^ carry;
    }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a ^ ((a & lo_mask_) << (s_ * m_)); }
    std::uint64_t twice(std::uint64_t a) const noexcept { return (a & lo_mask_) << (s_ * m_); }

    std::size_t lo_shift(std::size_t j) const noexcept { return (r_ + j) * static_cast<std::size_t>(m_); }
    std::size_t hi_shift(std::size_t j) const noexcept { return (r_ + s_ + j) * static_cast<std::size_t>(m_); }
    std::uint64_t low_plane() const noexcept { return lo_mask_; }

    std::uint64_t field_bits(const FieldElem& a) const noexcept {
        std::uint64_t v = 0;
        for (int b = 0; b < m_; ++b) v |= std::uint64_t{a.coeff(b)} << b;
        return v;
    }
    std::pair<std::uint64_t, std::uint64_t> ring_bits(const RingElem& a) const noexcept {
        std::uint64_t lo = 0, hi = 0;
        for (int b = 0; b < m_; ++b) {
            lo |= std::uint64_t{a.coeff(b) & 1u} << b;
            hi |= std::uint64_t{a.coeff(b) >> 1} << b;
        }
        return {lo, hi};
    }

   private:
    ContextPtr ctx_;
    std::size_t r_, s_;
    int m_;
    int bits_ = 0;
    std::uint64_t lo_mask_ = 0;
    std::uint64_t hi_mask_ = 0;
};

/// Coordinate-wise maps on packed words: multiplication by a fixed ring
/// element and the Frobenius power, both tabulated per coordinate value.
class PackedMaps {
   public:
    PackedMaps(const WordLayout& layout, int frob_power) : layout_(layout) {
        const auto& ctx = layout.context();
        const int m = ctx->degree();
        if (m > 10) throw Error(ErrorKind::BudgetExceeded, "packed maps support m <= 10");
        const std::size_t fs = std::size_t{1} << m;
        const RingElem xi = RingElem::xi_power(ctx, 1);
        const FieldElem xib = reduce_mod2(xi);
        field_xi_.resize(fs);
        field_frob_.resize(fs);
        for (std::size_t v = 0; v < fs; ++v) {
            const FieldElem e = field_from_bits(ctx, v);
            field_xi_[v] = static_cast<std::uint32_t>(layout.field_bits(xib * e));
            field_frob_[v] = static_cast<std::uint32_t>(layout.field_bits(frobenius_power(frob_power, e)));
        }
        ring_xi_.resize(fs * fs);
        ring_frob_.resize(fs * fs);
        for (std::size_t lo = 0; lo < fs; ++lo) {
            for (std::size_t hi = 0; hi < fs; ++hi) {
                const RingElem e = ring_from_bits(ctx, lo, hi);
                ring_xi_[lo | (hi << m)] = encode(layout.ring_bits(xi * e), m);
                ring_frob_[lo | (hi << m)] = encode(layout.ring_bits(frobenius_power(frob_power, e)), m);
            }
        }
    }

    std::uint64_t times_xi(std::uint64_t w) const noexcept { return apply(w, field_xi_, ring_xi_, false); }
    std::uint64_t theta_shift(std::uint64_t w) const noexcept { return apply(w, field_frob_, ring_frob_, true); }

   private:
    static std::uint32_t encode(std::pair<std::uint64_t, std::uint64_t> p, int m) {
        return static_cast<std::uint32_t>(p.first | (p.second << m));
    }
    static FieldElem field_from_bits(const ContextPtr& ctx, std::size_t v) {
        Coeffs k{};
        for (int b = 0; b < ctx->degree(); ++b) k[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>((v >> b) & 1);
        return FieldElem::from_coeffs(ctx, k);
    }
    static RingElem ring_from_bits(const ContextPtr& ctx, std::size_t lo, std::size_t hi) {
        Coeffs k{};
        for (int b = 0; b < ctx->degree(); ++b)
            k[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(((lo >> b) & 1) + 2 * ((hi >> b) & 1));
        return RingElem::from_coeffs(ctx, k);
    }

    std::uint64_t apply(std::uint64_t w, const std::vector<std::uint32_t>& ft, const std::vector<std::uint32_t>& rt,
                        bool rotate) const noexcept {
        const int m = layout_.context()->degree();
        const std::uint64_t cm = (std::uint64_t{1} << m) - 1;
        const std::size_t r = layout_.r(), s = layout_.s();
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < r; ++i) {
            const std::size_t dst = rotate ? (i + 1) % r : i;
            out |= std::uint64_t{ft[(w >> (i * m)) & cm]} << (dst * m);
        }
        for (std::size_t j = 0; j < s; ++j) {
            const std::size_t dst = rotate ? (j + 1) % s : j;
            const auto lo = (w >> layout_.lo_shift(j)) & cm;
            const auto hi = (w >> layout_.hi_shift(j)) & cm;
            const std::uint64_t v = rt[lo | (hi << m)];
            out |= (v & cm) << layout_.lo_shift(dst);
            out |= (v >> m) << layout_.hi_shift(dst);
        }
        return out;
    }

    WordLayout layout_;
    std::vector<std::uint32_t> field_xi_, field_frob_, ring_xi_, ring_frob_;
};

/// Open-addressing set of packed words; ~0 is never a valid word because bit 63 is unused.
class FlatSet {
   public:
    explicit FlatSet(std::size_t expected = 16) { rehash(std::bit_ceil(std::max<std::size_t>(expected * 2, 16))); }

    bool insert(std::uint64_t key) {
        if ((keys_.size() + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
        std::size_t i = hash(key) & (slots_.size() - 1);
        while (slots_[i] != kEmpty) {
            if (slots_[i] == key) return false;
            i = (i + 1) & (slots_.size() - 1);
        }
        slots_[i] = key;
        keys_.push_back(key);
        return true;
    }
    bool contains(std::uint64_t key) const noexcept {
        std::size_t i = hash(key) & (slots_.size() - 1);
        while (slots_[i] != kEmpty) {
            if (slots_[i] == key) return true;
            i = (i + 1) & (slots_.size() - 1);
        }
        return false;
    }
    std::size_t size() const noexcept { return keys_.size(); }
    const std::vector<std::uint64_t>& keys() const noexcept { return keys_; }
    void reserve(std::size_t n) {
        if (n * 2 > slots_.size()) rehash(std::bit_ceil(n * 2));
        keys_.reserve(n);
    }

   private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
    static std::uint64_t hash(std::uint64_t x) noexcept {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
    void rehash(std::size_t n) {
        slots_.assign(n, kEmpty);
        for (auto k : keys_) {
            std::size_t i = hash(k) & (n - 1);
            while (slots_[i] != kEmpty) i = (i + 1) & (n - 1);
            slots_[i] = k;
        }
    }

    std::vector<std::uint64_t> slots_;
    std::vector<std::uint64_t> keys_;
};

/// A finite set of words of one layout.
class WordSet {
   public:
    explicit WordSet(WordLayout layout) : layout_(std::move(layout)) {}

    const WordLayout& layout() const noexcept { return layout_; }
    std::size_t size() const noexcept { return set_.size(); }
    bool contains(std::uint64_t key) const noexcept { return set_.contains(key); }
    bool contains(const MixedWord& w) const { return set_.contains(layout_.pack(w)); }
    bool insert(std::uint64_t key) { return set_.insert(key); }
    bool insert(const MixedWord& w) { return set_.insert(layout_.pack(w)); }
    void reserve(std::size_t n) { set_.reserve(n); }
    const std::vector<std::uint64_t>& keys() const noexcept { return set_.keys(); }

    std::vector<std::uint64_t> sorted_keys() const {
        auto k = set_.keys();
        std::sort(k.begin(), k.end());
        return k;
    }
    std::vector<MixedWord> words() const {
        std::vector<MixedWord> out;
        for (auto k : sorted_keys()) out.push_back(layout_.unpack(k));
        return out;
    }

    friend bool operator==(const WordSet& a, const WordSet& b) {
        if (a.size() != b.size()) return false;
        for (auto k : a.keys())
            if (!b.contains(k)) return false;
        return true;
    }

   private:
    WordLayout layout_;
    FlatSet set_;
};

namespace detail {

// Adds generator b to the additive group G (closed under +). Since 4b = 0 the
// new group is G + {0, b, 2b, 3b}, or G + {0, b} when 2b already lies in G.
inline bool extend_group(WordSet& g, std::uint64_t b, std::uint64_t budget) {
    const auto& lay = g.layout();
    if (g.contains(b)) return false;
    const std::uint64_t b2 = lay.twice(b);
    const std::size_t factor = g.contains(b2) ? 2 : 4;
    if (static_cast<std::uint64_t>(g.size()) * factor > budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "span exceeds the budget of " + std::to_string(budget) + " words");
    g.reserve(g.size() * factor);
    const std::size_t n = g.size();
    const std::uint64_t b3 = lay.add(b2, b);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t k = g.keys()[i];
        g.insert(lay.add(k, b));
        if (factor == 4) {
            g.insert(lay.add(k, b2));
            g.insert(lay.add(k, b3));
        }
    }
    return true;
}

}  // namespace detail

/// Smallest set containing the rows that is closed under addition and the
/// scalar action of Z4[xi], and under the theta-shift when `skew` is set.
inline WordSet span_closure(const ContextPtr& ctx, std::size_t r, std::size_t s, const std::vector<MixedWord>& rows,
                            bool skew = false, Automorphism autom = Automorphism(1), std::uint64_t budget = kDefaultBudget) {
    WordLayout layout(ctx, r, s);
    WordSet g(layout);
    g.insert(0);
    const PackedMaps maps(g.layout(), autom.normalized(ctx->degree()));
    const int m = ctx->degree();

    std::vector<std::uint64_t> seeds;
    for (const auto& w : rows) {
        const std::uint64_t k = layout.pack(w);
        if (!skew) {
            seeds.push_back(k);
            continue;
        }
        // the theta-shift is a bijection, so the orbit of k is a cycle
        std::uint64_t cur = k;
        do {
            seeds.push_back(cur);
            cur = maps.theta_shift(cur);
        } while (cur != k);
    }
    for (auto seed : seeds) {
        std::uint64_t b = seed;
        for (int i = 0; i < m; ++i) {
            detail::extend_group(g, b, budget);
            b = maps.times_xi(b);
        }
    }
    return g;
}

inline WordSet span_closure(const MixedMatrix& mat, bool skew = false, Automorphism autom = Automorphism(1),
                            std::uint64_t budget = kDefaultBudget) {
    return span_closure(mat.context(), mat.r(), mat.s(), mat.row_list(), skew, autom, budget);
}

namespace detail {

// Additive generators of a set that is closed under addition.
inline std::vector<std::uint64_t> additive_basis(const WordSet& code) {
    WordSet g(code.layout());
    g.insert(0);
    std::vector<std::uint64_t> gens;
    for (auto k : code.keys()) {
        if (extend_group(g, k, std::numeric_limits<std::uint64_t>::max())) gens.push_back(k);
        if (g.size() > code.size()) throw Error(ErrorKind::NotACode, "word set is not closed under addition");
    }
    if (g.size() != code.size()) throw Error(ErrorKind::NotACode, "word set is not closed under addition");
    return gens;
}

// Inner-product values are ring elements in (lo, hi) plane form, 2m bits.
struct PlaneValue {
    std::uint32_t lo = 0, hi = 0;
    PlaneValue operator+(PlaneValue o) const noexcept { return {lo ^ o.lo, hi ^ o.hi ^ (lo & o.lo)}; }
    PlaneValue operator-() const noexcept { return {lo, hi ^ lo}; }
    bool is_zero() const noexcept { return lo == 0 && hi == 0; }
};

}  // namespace detail

/// All ambient words orthogonal to every word of `code`.
inline WordSet brute_force_dual(const WordSet& code, std::uint64_t budget = kDefaultBudget) {
    const auto& lay = code.layout();
    const int n = lay.bits();
    if (n >= 63 || (std::uint64_t{1} << n) > budget)
        throw Error(ErrorKind::BudgetExceeded, "ambient space of 2^" + std::to_string(n) + " words exceeds the budget");
    const auto gens = detail::additive_basis(code);

    // value[bit][g] = <e_bit, gen_g>; <u, c> is additive in u
    std::vector<std::vector<detail::PlaneValue>> value(static_cast<std::size_t>(n));
    std::vector<MixedWord> gen_words;
    for (auto gk : gens) gen_words.push_back(lay.unpack(gk));
    for (int b = 0; b < n; ++b) {
        const MixedWord e = lay.unpack(std::uint64_t{1} << b);
        for (const auto& gw : gen_words) {
            const auto [lo, hi] = lay.ring_bits(inner_product(e, gw));
            value[static_cast<std::size_t>(b)].push_back({static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)});
        }
    }

    WordSet dual(lay);
    std::vector<detail::PlaneValue> acc(gens.size());
    auto orthogonal = [&] {
        for (const auto& v : acc)
            if (!v.is_zero()) return false;
        return true;
    };
    // Gray-code walk: one bit flips per step
    std::uint64_t word = 0;
    if (orthogonal()) dual.insert(word);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < total; ++step) {
        const int b = std::countr_zero(step);
        const std::uint64_t bit = std::uint64_t{1} << b;
        const bool on = (word & bit) == 0;
        word ^= bit;
        const auto& vb = value[static_cast<std::size_t>(b)];
        for (std::size_t g = 0; g < acc.size(); ++g) acc[g] = on ? acc[g] + vb[g] : acc[g] + (-vb[g]);
        if (orthogonal()) dual.insert(word);
    }
    return dual;
}

/// True iff the set is closed under the theta-shift.
inline bool is_skew_cyclic(const WordSet& code, Automorphism autom = Automorphism(1)) {
    const PackedMaps maps(code.layout(), autom.normalized(code.layout().context()->degree()));
    for (auto k : code.keys())
        if (!code.contains(maps.theta_shift(k))) return false;
    return true;
}

/// Minimum number of nonzero coordinates over nonzero words.
inline std::size_t min_hamming_distance(const WordSet& code) {
    const auto& lay = code.layout();
    const int m = lay.context()->degree();
    const std::uint64_t cm = (std::uint64_t{1} << m) - 1;
    std::optional<std::size_t> best;
    for (auto k : code.keys()) {
        if (k == 0) continue;
        std::size_t wt = 0;
        for (std::size_t i = 0; i < lay.r(); ++i) wt += ((k >> (i * m)) & cm) != 0;
        for (std::size_t j = 0; j < lay.s(); ++j)
            wt += (((k >> lay.lo_shift(j)) | (k >> lay.hi_shift(j))) & cm) != 0;
        if (!best || wt < *best) best = wt;
    }
    if (!best) throw Error(ErrorKind::TrivialCode, "the zero code has no minimum distance");
    return *best;
}

enum class Z4Case { TorsionOnly, MonicMinimal, MonicAbove };

inline std::string_view to_string(Z4Case c) noexcept {
    switch (c) {
        case Z4Case::TorsionOnly: return "i";
        case Z4Case::MonicMinimal: return "ii";
        case Z4Case::MonicAbove: return "iii";
    }
    return "unknown";
}

struct Z4Classification {
    Z4Case kind = Z4Case::TorsionOnly;
    std::optional<RingPoly> g, a;  // generator g + 2a (cases ii and iii)
    std::optional<FieldPoly> q;    // generator 2q (cases i and iii)
    std::vector<MixedWord> witnesses;
};

/// Classifies a skew cyclic code over Z4[xi] (r = 0) by its minimal-degree
/// words and returns generators whose skew span is the code. The zero word is
/// not a candidate for the minimal-degree set.
inline Z4Classification classify_z4_skew_cyclic(const WordSet& code, Automorphism autom = Automorphism(1),
                                                std::uint64_t budget = kDefaultBudget) {
    const auto& lay = code.layout();
    if (lay.r() != 0) throw Error(ErrorKind::InvalidArgument, "classification expects words with r = 0");
    const auto& ctx = lay.context();
    if (code.size() <= 1) throw Error(ErrorKind::TrivialCode, "the zero code has no generators");
    detail::additive_basis(code);
    const PackedMaps maps(lay, autom.normalized(ctx->degree()));
    for (auto k : code.keys())
        if (!code.contains(maps.times_xi(k)) || !code.contains(maps.theta_shift(k)))
            throw Error(ErrorKind::NotACode, "the word set is not a skew cyclic Z4[xi]-code");

    auto poly_of = [&](std::uint64_t k) { return RingPoly(ctx, autom, lay.unpack(k).beta()); };
    const auto keys = code.sorted_keys();
    int min_deg = std::numeric_limits<int>::max();
    for (auto k : keys) {
        const auto d = poly_of(k).degree();
        if (d != kDegreeOfZero) min_deg = std::min(min_deg, d);
    }
    std::optional<std::uint64_t> monic_in_a, monic_any, torsion_in_a;
    int monic_deg = std::numeric_limits<int>::max();
    for (auto k : keys) {
        const auto p = poly_of(k);
        if (p.is_zero()) continue;
        if (p.is_monic()) {
            if (p.degree() == min_deg && !monic_in_a) monic_in_a = k;
            if (p.degree() < monic_deg) {
                monic_deg = p.degree();
                monic_any = k;
            }
        }
        if (p.degree() == min_deg && !p.leading().is_unit() && !torsion_in_a) torsion_in_a = k;
    }

    Z4Classification out;
    auto set_free = [&](std::uint64_t key) {
        const MixedWord w = lay.unpack(key);
        const auto p = poly_of(key);
        const auto g = lift_poly(poly_mod2(p));
        out.g = g;
        std::vector<RingElem> half;
        for (const auto& c : (p - g).coeffs()) {
            Coeffs k = c.coeffs();
            for (auto& x : k) x = static_cast<std::uint8_t>(x / 2);
            half.push_back(RingElem::from_coeffs(ctx, k));
        }
        out.a = RingPoly(ctx, autom, std::move(half));
        out.witnesses.push_back(w);
    };
    auto set_torsion = [&](std::uint64_t key) {
        // scale so the leading coefficient is exactly 2
        const MixedWord w = lay.unpack(key);
        const auto p = poly_of(key);
        const FieldElem lead = detail::half_residue(p.leading());
        const MixedWord n = scalar_mul(lift(inverse(lead)), w);
        std::vector<FieldElem> q;
        for (const auto& c : n.beta()) q.push_back(detail::half_residue(c));
        out.q = FieldPoly(ctx, autom, std::move(q));
        out.witnesses.push_back(n);
    };

    if (!monic_any) {
        out.kind = Z4Case::TorsionOnly;
        set_torsion(*torsion_in_a);
    } else if (monic_in_a) {
        out.kind = Z4Case::MonicMinimal;
        set_free(*monic_in_a);
    } else {
        out.kind = Z4Case::MonicAbove;
        set_free(*monic_any);
        set_torsion(*torsion_in_a);
    }

    const auto regenerated = span_closure(ctx, 0, lay.s(), out.witnesses, true, autom, budget);
    if (!(regenerated == code))
        throw Error(ErrorKind::NotACode, "witness generators do not regenerate the code");
    return out;
}

}  // namespace z2z4xi

#endif
