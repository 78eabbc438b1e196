#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "z2z4xi/z2z4xi.hpp"

namespace z2z4xi::testing {

inline ContextPtr ctx_m1() { return RingContext::create(1, {3, 1}); }
inline ContextPtr ctx_m2() { return RingContext::create(2, {1, 1, 1}); }
inline ContextPtr ctx_m3() { return RingContext::create(3, {3, 1, 2, 1}); }

using Rng = std::mt19937_64;

template <class E>
E random_elem(const ContextPtr& ctx, Rng& rng) {
    const std::uint64_t n = E::characteristic == 2 ? ctx->field_size() : ctx->ring_size();
    return E::from_index(ctx, std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng));
}

template <class E>
E random_unit(const ContextPtr& ctx, Rng& rng) {
    for (;;) {
        auto e = random_elem<E>(ctx, rng);
        if (e.is_unit()) return e;
    }
}

template <class E>
SkewPoly<E> random_poly(const ContextPtr& ctx, Automorphism autom, int max_degree, Rng& rng) {
    const int d = std::uniform_int_distribution<int>(-1, max_degree)(rng);
    std::vector<E> v;
    for (int i = 0; i <= d; ++i) v.push_back(random_elem<E>(ctx, rng));
    return SkewPoly<E>(ctx, autom, std::move(v));
}

// Degree exactly d with a unit leading coefficient.
template <class E>
SkewPoly<E> random_unit_leading(const ContextPtr& ctx, Automorphism autom, int d, Rng& rng) {
    std::vector<E> v;
    for (int i = 0; i < d; ++i) v.push_back(random_elem<E>(ctx, rng));
    v.push_back(random_unit<E>(ctx, rng));
    return SkewPoly<E>(ctx, autom, std::move(v));
}

inline MixedWord random_word(const ContextPtr& ctx, std::size_t r, std::size_t s, Rng& rng) {
    std::vector<FieldElem> a;
    std::vector<RingElem> b;
    for (std::size_t i = 0; i < r; ++i) a.push_back(random_elem<FieldElem>(ctx, rng));
    for (std::size_t j = 0; j < s; ++j) b.push_back(random_elem<RingElem>(ctx, rng));
    return MixedWord(ctx, std::move(a), std::move(b));
}

// Random rows biased towards 2-torsion entries so every block of the standard
// form shows up.
inline MixedMatrix random_matrix(const ContextPtr& ctx, std::size_t r, std::size_t s, std::size_t rows, Rng& rng) {
    MixedMatrix m(ctx, r, s);
    std::bernoulli_distribution torsion(0.4);
    for (std::size_t i = 0; i < rows; ++i) {
        auto w = random_word(ctx, r, s, rng);
        if (torsion(rng)) w = scalar_mul(RingElem::constant(ctx, 2), w) + MixedWord(ctx, w.alpha(), std::vector<RingElem>(s, RingElem::zero(ctx)));
        m.add_row(std::move(w));
    }
    return m;
}

}  // namespace z2z4xi::testing
