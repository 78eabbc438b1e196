#ifndef Z2Z4XI_SKEW_CYCLIC_HPP
#define Z2Z4XI_SKEW_CYCLIC_HPP

// Skew cyclic Z2Z4[xi] codes: theta-shifts, the polynomial-pair view
// R_theta = R2[x]/<x^r - 1> x R4[x]/<x^s - 1>, generator tuples and spanning sets.

#include <optional>
#include <string>
#include <vector>

#include "mixed_code.hpp"
#include "skew_poly.hpp"

namespace z2z4xi {

/// (theta(a_{r-1}), theta(a_0), ..., theta(a_{r-2}) | theta(b_{s-1}), theta(b_0), ..., theta(b_{s-2}))
inline MixedWord theta_shift(const MixedWord& w, const Automorphism& autom) {
    const int p = autom.normalized(w.context()->degree());
    MixedWord out = w;
    const std::size_t r = w.r(), s = w.s();
    for (std::size_t i = 0; i < r; ++i) out.alpha()[(i + 1) % r] = frobenius_power(p, w.alpha()[i]);
    for (std::size_t j = 0; j < s; ++j) out.beta()[(j + 1) % s] = frobenius_power(p, w.beta()[j]);
    return out;
}

struct ModulePair {
    FieldPoly a;
    RingPoly b;
    std::size_t r = 0;
    std::size_t s = 0;
};

inline ModulePair to_pair(const MixedWord& w, const Automorphism& autom) {
    return {FieldPoly(w.context(), autom, w.alpha()), RingPoly(w.context(), autom, w.beta()), w.r(), w.s()};
}

inline MixedWord from_pair(const ModulePair& p) {
    if (p.a.degree() >= static_cast<int>(p.r) || p.b.degree() >= static_cast<int>(p.s))
        throw Error(ErrorKind::ShapeMismatch, "pair component not reduced modulo x^n - 1");
    const auto& ctx = p.b.context();
    std::vector<FieldElem> alpha;
    std::vector<RingElem> beta;
    for (std::size_t i = 0; i < p.r; ++i) alpha.push_back(p.a.coeff(i));
    for (std::size_t j = 0; j < p.s; ++j) beta.push_back(p.b.coeff(j));
    return MixedWord(ctx, std::move(alpha), std::move(beta));
}

namespace detail {

template <class E>
SkewPoly<E> reduce_or_zero(const SkewPoly<E>& f, std::size_t n) {
    return n == 0 ? SkewPoly<E>::zero(f.context(), f.automorphism()) : reduce_mod_xn(f, n);
}

}  // namespace detail

/// f * (a, b) = (f a mod 2 mod x^r - 1, f b mod x^s - 1)
inline ModulePair module_mul(const RingPoly& f, const ModulePair& p) {
    f.check_compatible(p.b);
    return {detail::reduce_or_zero(skew_mul(poly_mod2(f), p.a), p.r), detail::reduce_or_zero(skew_mul(f, p.b), p.s),
            p.r, p.s};
}

/// Projection onto the quaternary component.
inline RingPoly psi_project(const ModulePair& p) { return p.b; }

enum class GeneratorCase {
    Empty,       // no generator rows
    BinaryOnly,  // only (f, 0)
    TorsionOnly, // (f, 0), (l1, 2q)
    Free,        // (f, 0), (l, g + 2a)
    Mixed,       // (f, 0), (l, g + 2a), (l1, 2q)
};

inline std::string_view to_string(GeneratorCase c) noexcept {
    switch (c) {
        case GeneratorCase::Empty: return "empty";
        case GeneratorCase::BinaryOnly: return "binary-only";
        case GeneratorCase::TorsionOnly: return "i";
        case GeneratorCase::Free: return "ii";
        case GeneratorCase::Mixed: return "iii";
    }
    return "unknown";
}

/// Cofactors obtained by right division. Each h satisfies h * divisor = x^n - 1.
struct Cofactors {
    std::optional<FieldPoly> h_f;
    std::optional<RingPoly> h_g;        // quaternary cofactor of g (case ii)
    std::optional<FieldPoly> h_g_bar;   // binary cofactor of g mod 2 (case iii)
    std::optional<FieldPoly> h_q;
    std::optional<FieldPoly> k;         // k * q = h_g * a mod 2 (case iii)
    // In case ii, h_g * (l, g + 2a) = (h_g l, 2 h_g a) may be a nonzero
    // torsion word; it then acts as an extra generator (l1, 2q).
    std::optional<FieldPoly> implied_l1;
    std::optional<FieldPoly> implied_q;
};

/// The tuple (f, l, l1, g, a, q) of a Z2Z4[xi]-skew cyclic code. Absent
/// components mean the corresponding generator row is absent; an absent f
/// stands for x^r - 1, i.e. the zero row.
struct SkewGenerators {
    ContextPtr ctx;
    std::size_t r = 0;
    std::size_t s = 0;
    Automorphism autom{1};
    std::optional<FieldPoly> f, l, l1;
    std::optional<RingPoly> g, a, q;

    GeneratorCase generator_case() const noexcept {
        if (g && q) return GeneratorCase::Mixed;
        if (g) return GeneratorCase::Free;
        if (q) return GeneratorCase::TorsionOnly;
        if (f) return GeneratorCase::BinaryOnly;
        return GeneratorCase::Empty;
    }

    FieldPoly field_zero() const { return FieldPoly::zero(ctx, autom); }
    RingPoly ring_zero() const { return RingPoly::zero(ctx, autom); }
    FieldPoly effective_f() const { return f ? *f : FieldPoly::x_n_minus_one(ctx, r, autom); }
    FieldPoly effective_l() const { return l ? *l : field_zero(); }
    FieldPoly effective_l1() const { return l1 ? *l1 : field_zero(); }
    RingPoly effective_a() const { return a ? *a : ring_zero(); }
};

struct ValidationCheck {
    std::string condition;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    GeneratorCase generator_case = GeneratorCase::Empty;
    std::vector<ValidationCheck> checks;
    Cofactors cofactors;

    bool valid() const noexcept {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const ValidationCheck* first_failure() const noexcept {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
};

namespace detail {

inline void check_shape(const SkewGenerators& gens) {
    if (!gens.ctx) throw Error(ErrorKind::InvalidGenerators, "no ring context");
    auto same = [&](const auto& p, const char* name) {
        if (!p) return;
        if (!FieldElem::same_context(p->context(), gens.ctx))
            throw Error(ErrorKind::ContextMismatch, std::string(name) + " is over a different ring");
        if (!p->automorphism().equivalent(gens.autom, gens.ctx->degree()))
            throw Error(ErrorKind::ContextMismatch, std::string(name) + " uses a different automorphism");
    };
    same(gens.f, "f");
    same(gens.l, "l");
    same(gens.l1, "l1");
    same(gens.g, "g");
    same(gens.a, "a");
    same(gens.q, "q");
    if (gens.a && !gens.g) throw Error(ErrorKind::MissingComponent, "a is given without g");
    if (gens.l && !gens.g) throw Error(ErrorKind::MissingComponent, "l is given without g");
    if (gens.l1 && !gens.q) throw Error(ErrorKind::MissingComponent, "l1 is given without q");
    if (gens.r == 0 && (gens.f || gens.l || gens.l1))
        throw Error(ErrorKind::InvalidGenerators, "binary polynomials given with r = 0");
    if (gens.s == 0 && (gens.g || gens.q)) throw Error(ErrorKind::InvalidGenerators, "quaternary polynomials given with s = 0");
    if (gens.g && (gens.g->is_zero() || !gens.g->leading().is_unit()))
        throw Error(ErrorKind::InvalidGenerators, "g must have a unit leading coefficient");
    if (gens.q && poly_mod2(*gens.q).is_zero()) throw Error(ErrorKind::InvalidGenerators, "q must be nonzero mod 2");
    if (gens.f && gens.f->is_zero()) throw Error(ErrorKind::InvalidGenerators, "f must be nonzero");
}

template <class E>
std::optional<SkewPoly<E>> exact_cofactor(const SkewPoly<E>& target, const SkewPoly<E>& divisor) {
    auto d = right_divide(target, divisor);
    if (!d.remainder.is_zero()) return std::nullopt;
    return d.quotient;
}

// p |_r target, with target = 0 counted as divisible
inline bool divides_mod2(const FieldPoly& p, const FieldPoly& target) {
    return target.is_zero() || right_divide(target, p).remainder.is_zero();
}

inline std::string deg_str(int d) { return d == kDegreeOfZero ? "-inf" : std::to_string(d); }

}  // namespace detail

/// Checks the divisibility and degree conditions that apply to the tuple's case
/// and computes whatever cofactors exist along the way.
inline ValidationReport validate_generators(const SkewGenerators& gens) {
    detail::check_shape(gens);
    ValidationReport rep;
    rep.generator_case = gens.generator_case();
    auto add = [&](std::string cond, bool ok, std::string detail = {}) {
        rep.checks.push_back({std::move(cond), ok, std::move(detail)});
    };
    const auto& ctx = gens.ctx;
    const auto autom = gens.autom;
    auto& cf = rep.cofactors;

    const bool binary = gens.r > 0;
    const FieldPoly f = binary ? gens.effective_f() : FieldPoly::one(ctx, autom);
    if (binary) {
        const auto xr = FieldPoly::x_n_minus_one(ctx, gens.r, autom);
        cf.h_f = detail::exact_cofactor(xr, f);
        add("f |_r x^r-1 (mod 2)", cf.h_f.has_value());
    }
    auto f_divides = [&](const FieldPoly& p) { return !binary || detail::divides_mod2(f, detail::reduce_or_zero(p, gens.r)); };
    auto deg_below_f = [&](const char* name, const FieldPoly& p) {
        add(std::string("deg ") + name + " < deg f", !binary || p.degree() < f.degree(),
            "deg " + std::string(name) + " = " + detail::deg_str(p.degree()) + ", deg f = " + detail::deg_str(f.degree()));
    };

    const auto xs2 = gens.s > 0 ? std::optional(FieldPoly::x_n_minus_one(ctx, gens.s, autom)) : std::nullopt;

    switch (rep.generator_case) {
        case GeneratorCase::Empty:
        case GeneratorCase::BinaryOnly:
            break;

        case GeneratorCase::TorsionOnly: {
            const FieldPoly q = poly_mod2(*gens.q);
            const FieldPoly l1 = gens.effective_l1();
            cf.h_q = detail::exact_cofactor(*xs2, q);
            add("q |_r x^s-1 (mod 2)", cf.h_q.has_value());
            deg_below_f("l1", l1);
            if (cf.h_q) add("f |_r h_q l1 (mod 2)", f_divides(skew_mul(*cf.h_q, l1)));
            break;
        }

        case GeneratorCase::Free: {
            const RingPoly& g = *gens.g;
            const RingPoly a = gens.effective_a();
            const FieldPoly l = gens.effective_l();
            const auto xs = RingPoly::x_n_minus_one(ctx, gens.s, autom);
            cf.h_g = detail::exact_cofactor(xs, g);
            add("g |_r x^s-1", cf.h_g.has_value());
            add("deg a < deg g", a.degree() < g.degree(),
                "deg a = " + detail::deg_str(a.degree()) + ", deg g = " + detail::deg_str(g.degree()));
            deg_below_f("l", l);
            if (!cf.h_g) break;
            const FieldPoly hg_l = poly_mod2(*cf.h_g) * l;
            const RingPoly hg_a = reduce_mod_xn(skew_mul(*cf.h_g, a), gens.s);
            const FieldPoly implied_q = poly_mod2(hg_a);
            if (implied_q.is_zero()) {
                add("f |_r h_g l (mod 2)", f_divides(hg_l));
            } else {
                cf.implied_l1 = binary ? detail::reduce_or_zero(hg_l, gens.r) : gens.field_zero();
                cf.implied_q = implied_q;
                cf.h_q = detail::exact_cofactor(*xs2, implied_q);
                add("q = h_g a (mod 2) |_r x^s-1 (mod 2)", cf.h_q.has_value());
                if (cf.h_q) add("f |_r h_q h_g l (mod 2)", f_divides(skew_mul(*cf.h_q, *cf.implied_l1)));
            }
            break;
        }

        case GeneratorCase::Mixed: {
            const FieldPoly g = poly_mod2(*gens.g);
            const FieldPoly q = poly_mod2(*gens.q);
            const FieldPoly a = poly_mod2(gens.effective_a());
            const FieldPoly l = gens.effective_l();
            const FieldPoly l1 = gens.effective_l1();
            cf.h_g_bar = detail::exact_cofactor(*xs2, g);
            add("g |_r x^s-1 (mod 2)", cf.h_g_bar.has_value());
            add("q |_r g (mod 2)", detail::exact_cofactor(g, q).has_value());
            cf.h_q = detail::exact_cofactor(*xs2, q);
            add("q |_r x^s-1 (mod 2)", cf.h_q.has_value());
            const int da = gens.effective_a().degree();
            const int dq = gens.q->degree();
            const int dg = gens.g->degree();
            add("deg a < deg q <= deg g < s", da < dq && dq <= dg && dg < static_cast<int>(gens.s),
                "deg a = " + detail::deg_str(da) + ", deg q = " + detail::deg_str(dq) + ", deg g = " + detail::deg_str(dg));
            deg_below_f("l", l);
            deg_below_f("l1", l1);
            if (cf.h_g_bar) {
                const FieldPoly hg_a = reduce_mod_xn(skew_mul(*cf.h_g_bar, a), gens.s);
                if (hg_a.is_zero()) {
                    cf.k = gens.field_zero();
                    add("q |_r h_g a (mod 2)", true);
                } else {
                    cf.k = detail::exact_cofactor(hg_a, q);
                    add("q |_r h_g a (mod 2)", cf.k.has_value());
                }
            }
            if (cf.h_q) add("f |_r h_q l1 (mod 2)", f_divides(skew_mul(*cf.h_q, l1)));
            if (cf.k && cf.h_g_bar)
                add("f |_r k l1 + h_g l (mod 2)", f_divides(skew_mul(*cf.k, l1) + skew_mul(*cf.h_g_bar, l)));
            break;
        }
    }
    return rep;
}

/// Returns the cofactors of a tuple, or throws NotRightDivisible naming the
/// first failed division. Degree conditions are not enforced here.
inline Cofactors derive_cofactors(const SkewGenerators& gens) {
    const auto rep = validate_generators(gens);
    for (const auto& c : rep.checks)
        if (!c.passed && c.condition.find("|_r") != std::string::npos) throw Error(ErrorKind::NotRightDivisible, c.condition);
    return rep.cofactors;
}

struct SpanningSet {
    std::vector<MixedWord> s1, s2, s3;

    MixedMatrix matrix(const ContextPtr& ctx, std::size_t r, std::size_t s) const {
        MixedMatrix m(ctx, r, s);
        for (const auto* part : {&s1, &s2, &s3})
            for (const auto& w : *part) m.add_row(w);
        return m;
    }
};

namespace detail {

inline int degree_or_zero(const std::optional<FieldPoly>& p) { return p ? std::max(p->degree(), 0) : 0; }
inline int degree_or_zero(const std::optional<RingPoly>& p) { return p ? std::max(p->degree(), 0) : 0; }

inline std::vector<MixedWord> shifted_rows(const ModulePair& base, int count, const Automorphism& autom) {
    std::vector<MixedWord> rows;
    ModulePair cur = base;
    const auto x = RingPoly::x_power(base.b.context(), 1, autom);
    for (int i = 0; i < count; ++i) {
        rows.push_back(from_pair(cur));
        cur = module_mul(x, cur);
    }
    return rows;
}

inline int generator_half_degree(const Cofactors& cf) {
    if (cf.h_g) return cf.h_g->degree();
    if (cf.h_g_bar) return cf.h_g_bar->degree();
    return 0;
}

}  // namespace detail

/// S1 = {x^i (f, 0)}, S2 = {x^i (l, g + 2a)}, S3 = {x^i (l1, 2q)} for i below
/// deg h_f, deg h_g and deg h_q respectively. Throws InvalidGenerators when the
/// tuple fails validation.
inline SpanningSet spanning_set(const SkewGenerators& gens) {
    const auto rep = validate_generators(gens);
    if (const auto* bad = rep.first_failure())
        throw Error(ErrorKind::InvalidGenerators, "condition failed: " + bad->condition);
    const auto& cf = rep.cofactors;
    const auto& ctx = gens.ctx;
    const auto autom = gens.autom;
    const RingElem two = RingElem::constant(ctx, 2);
    SpanningSet out;

    auto field_part = [&](const FieldPoly& p) { return detail::reduce_or_zero(p, gens.r); };
    auto ring_part = [&](const RingPoly& p) { return detail::reduce_or_zero(p, gens.s); };

    if (gens.f) {
        ModulePair base{field_part(*gens.f), gens.ring_zero(), gens.r, gens.s};
        out.s1 = detail::shifted_rows(base, detail::degree_or_zero(cf.h_f), autom);
    }
    if (gens.g) {
        ModulePair base{field_part(gens.effective_l()), ring_part(*gens.g + gens.effective_a().scaled(two)), gens.r, gens.s};
        out.s2 = detail::shifted_rows(base, detail::generator_half_degree(cf), autom);
    }
    std::optional<ModulePair> torsion;
    if (gens.q)
        torsion = ModulePair{field_part(gens.effective_l1()), ring_part(lift_poly(poly_mod2(*gens.q)).scaled(two)), gens.r, gens.s};
    else if (cf.implied_q)
        torsion = ModulePair{field_part(*cf.implied_l1), ring_part(lift_poly(*cf.implied_q).scaled(two)), gens.r, gens.s};
    if (torsion) out.s3 = detail::shifted_rows(*torsion, detail::degree_or_zero(cf.h_q), autom);
    return out;
}

inline MixedMatrix spanning_matrix(const SkewGenerators& gens) {
    return spanning_set(gens).matrix(gens.ctx, gens.r, gens.s);
}

/// 2^{m deg h_f} 4^{m deg h_g} 2^{m deg h_q}
inline Cardinality skew_code_cardinality(const SkewGenerators& gens) {
    const auto rep = validate_generators(gens);
    if (const auto* bad = rep.first_failure())
        throw Error(ErrorKind::InvalidGenerators, "condition failed: " + bad->condition);
    const auto& cf = rep.cofactors;
    const auto m = static_cast<std::uint64_t>(gens.ctx->degree());
    const std::uint64_t hf = gens.f ? static_cast<std::uint64_t>(detail::degree_or_zero(cf.h_f)) : 0;
    const std::uint64_t hg = gens.g ? static_cast<std::uint64_t>(detail::generator_half_degree(cf)) : 0;
    const std::uint64_t hq = static_cast<std::uint64_t>(detail::degree_or_zero(cf.h_q));
    return {m * (hf + 2 * hg + hq)};
}

}  // namespace z2z4xi

#endif
