// Runs every primary acceptance criterion once and prints one PASS/FAIL line
// per criterion. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "reference_checks.hpp"
#include "test_support.hpp"
#include "violations.hpp"
#include "z4_codes.hpp"

using namespace z2z4xi;
using namespace z2z4xi::testing;

namespace {

const Automorphism t1(1);

// Clauses of one criterion. Failed clauses are listed on the FAIL line;
// notes carry the measured values either way.
class Clauses {
   public:
    void require(bool ok, const std::string& what) {
        if (!ok) failed_.push_back(what);
    }
    void note(const std::string& s) { notes_.push_back(s); }
    bool passed() const { return failed_.empty(); }
    std::string summary() const {
        std::ostringstream os;
        if (!failed_.empty()) {
            os << "failed [";
            for (std::size_t i = 0; i < failed_.size(); ++i) os << (i ? "; " : "") << failed_[i];
            os << "]";
            if (!notes_.empty()) os << " ";
        }
        for (std::size_t i = 0; i < notes_.size(); ++i) os << (i ? ", " : "") << notes_[i];
        return os.str();
    }

   private:
    std::vector<std::string> failed_, notes_;
};

FieldPoly F(std::string_view s) { return text::parse_poly<FieldElem>(reference::example_context(), t1, s); }
RingPoly R(std::string_view s) { return text::parse_poly<RingElem>(reference::example_context(), t1, s); }

bool orthogonal(const MixedMatrix& g, const MixedMatrix& h) {
    for (const auto& u : g.row_list())
        for (const auto& v : h.row_list())
            if (!inner_product(u, v).is_zero()) return false;
    return true;
}

bool shrinks_without_each_row(const MixedMatrix& m, std::uint64_t full) {
    const auto rows = m.row_list();
    for (std::size_t drop = 0; drop < rows.size(); ++drop) {
        MixedMatrix sub(m.context(), m.r(), m.s());
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != drop) sub.add_row(rows[i]);
        if (span_closure(sub).size() >= full) return false;
    }
    return true;
}

std::string pow2(std::uint64_t n) {
    std::uint64_t e = 0;
    while ((std::uint64_t{1} << e) < n) ++e;
    return (std::uint64_t{1} << e) == n ? "2^" + std::to_string(e) : std::to_string(n);
}

void skew_products(Clauses& c) {
    const auto left = R("w*x") * R("(1+w)*x");
    const auto right = R("(1+w)*x") * R("w*x");
    c.require(left == R("(1+w)*x^2"), "(w x)((1+w)x) = (1+w)x^2");
    c.require(right == R("3*w*x^2"), "((1+w)x)(w x) = 3w x^2");
    c.require(left != right, "products differ");
    c.note(text::format_poly(left) + " vs " + text::format_poly(right));
}

void standard_form_4x5(Clauses& c) {
    const auto g = reference::four_by_five_matrix();
    const auto sf = standard_form(g);
    c.require(sf.g_std == reference::four_by_five_standard_form(), "matrix equals the printed standard form");
    c.require(sf.identity_permutation(), "identity column permutation");
    c.require(sf.code_type.to_string() == "(2,3;2;2,0)", "type (2,3;2;2,0)");
    const auto card = cardinality(sf.code_type, 2);
    c.require(card.fits_u64() && card.value() == 4096, "cardinality 4096");
    const auto code = span_closure(g);
    c.require(code.size() == 4096, "enumeration gives 4096 words");
    std::string perm;
    for (auto p : sf.quaternary_perm) perm += std::to_string(p);
    c.note("type " + sf.code_type.to_string() + ", quaternary permutation " + perm + ", " +
           std::to_string(code.size()) + " words");
}

void dual_4x5(Clauses& c) {
    const auto g = reference::four_by_five_matrix();
    const auto sf = standard_form(g);
    const auto h_std = parity_check(sf);
    const auto h = unpermute_columns(h_std, sf.binary_perm, sf.quaternary_perm);
    const auto code = span_closure(g);
    const auto dual = brute_force_dual(code);
    const auto ctx = g.context();
    const auto w = FieldElem::xi_power(ctx, 1);
    c.require(dual.size() == 16, "dual has 16 words");
    c.require(h.rows() == 1 && h.row(0).alpha() == std::vector<FieldElem>{w, FieldElem::one(ctx) + w},
              "single row with binary part (w, 1+w)");
    c.require(h_std.rows() == 1 &&
                  text::format_row(h_std.row(0)).ends_with("| w 0 1"),
              "quaternary part (w, 0, 1) in standard coordinates");
    c.require(span_closure(h) == dual, "span of H equals the enumerated dual");
    c.require(orthogonal(g, h) && orthogonal(sf.g_std, h_std), "G H^T = 0");
    c.require(dual_type(sf.code_type).to_string() == "(2,3;0;1,0)", "dual type (2,3;0;1,0)");
    c.note(std::to_string(dual.size()) + " words, H " + text::format_row(h_std.row(0)) + " (standard), " +
           text::format_row(h.row(0)) + " (input)");
}

void cofactors_length7(Clauses& c) {
    const auto cf = derive_cofactors(reference::length7_generators());
    c.require(cf.h_f && *cf.h_f == F("1+x+x^2+x^4"), "h_f = 1+x+x^2+x^4");
    c.require(cf.h_g && *cf.h_g == R("3+2*x+3*x^2+x^3"), "h_g = 3+2x+3x^2+x^3");
    c.require(F("(1+x)*(1+x+x^3)*(1+x^2+x^3)") == F("x^7-1"), "binary factorization of x^7-1");
    c.require(R("(3+x)*(3+x+2*x^2+x^3)*(3+2*x+3*x^2+x^3)") == R("x^7-1"), "quaternary factorization of x^7-1");
    c.note("h_f " + (cf.h_f ? text::format_poly(*cf.h_f) : "-") + ", h_g " +
           (cf.h_g ? text::format_poly(*cf.h_g) : "-"));
}

void spanning_set_length7(Clauses& c) {
    const auto gens = reference::length7_generators();
    const auto m = spanning_matrix(gens);
    c.require(m == reference::length7_matrix(), "generated matrix equals the printed 10x14 matrix");
    const auto type = standard_form(m).code_type.to_string();
    c.require(type == "(7,7;4;3,3)", "standard form type (7,7;4;3,3)");
    const auto predicted = skew_code_cardinality(gens);
    const auto code = span_closure(m, false, t1, std::uint64_t{1} << 27);
    c.require(code.size() == (std::uint64_t{1} << 20), "enumerated span has 2^20 words");
    c.require(predicted.fits_u64() && code.size() == predicted.value(), "enumeration equals skew_code_cardinality");
    c.require(is_skew_cyclic(code, t1), "span is closed under theta_shift");
    c.note("type " + type + ", enumerated " + pow2(code.size()) + ", formula 2^" + std::to_string(predicted.log2));
}

void spanning_set_length4(Clauses& c) {
    const auto gens = reference::length4_generators();
    const auto cf = derive_cofactors(gens);
    c.require(cf.k && *cf.k == F("w"), "k = w");
    c.require(cf.h_q && *cf.h_q == F("x^2-1"), "h_q = x^2-1");
    const auto m = spanning_matrix(gens);
    c.require(m == reference::length4_matrix(), "generated matrix equals the printed 6x8 matrix");
    const auto code = span_closure(m);
    c.require(code.size() == (std::uint64_t{1} << 16), "enumerated span has 2^16 words");
    c.require(is_skew_cyclic(code, t1), "theta-shift closure");
    c.require(shrinks_without_each_row(m, code.size()), "removing any row shrinks the span");
    c.note("enumerated " + pow2(code.size()) + ", formula 2^" + std::to_string(skew_code_cardinality(gens).log2));
}

template <class E>
std::size_t axiom_failures(const ContextPtr& ctx) {
    const std::uint64_t n = E::characteristic == 2 ? ctx->field_size() : ctx->ring_size();
    std::vector<E> all;
    for (std::uint64_t i = 0; i < n; ++i) all.push_back(E::from_index(ctx, i));
    const auto zero = E::zero(ctx), one = E::one(ctx);
    std::size_t bad = 0;
    for (const auto& a : all) {
        bad += !(a + zero == a) + !(a * one == a) + !(a + (-a)).is_zero();
        auto iterated = a;
        for (int t = 1; t <= static_cast<int>(ctx->degree()); ++t) {
            iterated = frobenius(t1, iterated);
            bad += !(iterated == frobenius(Automorphism(t), a));
        }
        bad += !(frobenius(Automorphism(ctx->degree()), a) == a);
        for (const auto& b : all) {
            bad += !(a * b == b * a) + !(a + b == b + a);
            bad += !(frobenius(t1, a + b) == frobenius(t1, a) + frobenius(t1, b));
            bad += !(frobenius(t1, a * b) == frobenius(t1, a) * frobenius(t1, b));
            for (const auto& d : all) bad += !((a * b) * d == a * (b * d)) + !(a * (b + d) == a * b + a * d);
        }
    }
    return bad;
}

std::size_t mod2_failures(const ContextPtr& ctx) {
    std::size_t bad = 0;
    for (std::uint64_t i = 0; i < ctx->ring_size(); ++i) {
        const auto a = RingElem::from_index(ctx, i);
        bad += !(a.is_unit() == !reduce_mod2(a).is_zero());
        for (std::uint64_t j = 0; j < ctx->ring_size(); ++j) {
            const auto b = RingElem::from_index(ctx, j);
            bad += !(reduce_mod2(a + b) == reduce_mod2(a) + reduce_mod2(b));
            bad += !(reduce_mod2(a * b) == reduce_mod2(a) * reduce_mod2(b));
        }
    }
    return bad;
}

template <class E>
std::size_t division_failures(const ContextPtr& ctx, Automorphism th, Rng& rng, int pairs) {
    std::size_t bad = 0;
    for (int i = 0; i < pairs; ++i) {
        auto f = random_poly<E>(ctx, th, 9, rng);
        auto g = random_unit_leading<E>(ctx, th, std::uniform_int_distribution<int>(0, 5)(rng), rng);
        auto d = right_divide(f, g);
        bad += !(d.quotient * g + d.remainder == f) + !(d.remainder.degree() < g.degree());
    }
    return bad;
}

void property_suite(Clauses& c) {
    std::size_t axioms = 0, mod2 = 0;
    for (const auto& ctx : {ctx_m1(), ctx_m2()}) {
        axioms += axiom_failures<RingElem>(ctx) + axiom_failures<FieldElem>(ctx);
        mod2 += mod2_failures(ctx);
    }
    c.require(axioms == 0, "ring and automorphism axioms at m <= 2");
    c.require(mod2 == 0, "reduce_mod2 is a homomorphism detecting units");

    Rng rng(20240611);
    const int pairs = 1000;
    std::size_t division = division_failures<RingElem>(ctx_m2(), t1, rng, pairs / 2) +
                           division_failures<FieldElem>(ctx_m2(), t1, rng, pairs / 4) +
                           division_failures<RingElem>(ctx_m1(), t1, rng, pairs / 4);
    c.require(division == 0, "f = q g + r with deg r < deg g");

    std::size_t sf_instances = 0, sf_bad = 0, dual_instances = 0, dual_bad = 0;
    for (const auto& ctx : {ctx_m1(), ctx_m2()}) {
        for (int i = 0; i < 60; ++i) {
            const std::size_t r = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
            const std::size_t s = std::uniform_int_distribution<std::size_t>(r == 0 ? 1 : 0, 3)(rng);
            const auto g = random_matrix(ctx, r, s, std::uniform_int_distribution<std::size_t>(1, 5)(rng), rng);
            const auto sf = standard_form(g);
            const auto code = span_closure(sf.g_std);
            sf_bad += !(code == span_closure(permute_columns(g, sf.binary_perm, sf.quaternary_perm)));
            sf_bad += !(standard_form(sf.g_std).g_std == sf.g_std);
            ++sf_instances;
            if (i % 2 == 0) {
                const auto h = parity_check(sf);
                const auto dual = brute_force_dual(code);
                dual_bad += !orthogonal(sf.g_std, h) + !(span_closure(h) == dual);
                dual_bad += !(code.size() * dual.size() == std::uint64_t{1} << (ctx->degree() * (r + 2 * s)));
                ++dual_instances;
            }
        }
    }
    c.require(sf_bad == 0, "standard_form preserves the span and is idempotent");
    c.require(dual_bad == 0, "G H^T = 0 and |C||C^perp| = 2^(m(r+2s))");

    const bool accepts = validate_generators(reference::length7_generators()).valid() &&
                         validate_generators(reference::length4_generators()).valid();
    c.require(accepts, "both reference tuples validate");
    const auto v = constructed_violations();
    std::size_t named = 0;
    for (const auto& [gens, condition] : v.violations) {
        const auto rep = validate_generators(gens);
        named += !rep.valid() && fails_condition(rep, condition);
    }
    c.require(v.violations.size() >= 20 && named == v.violations.size() && v.short_conditions.empty(),
              "at least 20 violations rejected with the condition named");

    c.note(std::to_string(pairs) + " division pairs, " + std::to_string(sf_instances) + " standard forms, " +
           std::to_string(dual_instances) + " duals, " + std::to_string(named) + "/" +
           std::to_string(v.violations.size()) + " violations named");
}

void classify_round_trip(Clauses& c) {
    const auto codes = generated_z4_codes();
    std::size_t matched = 0;
    std::set<Z4Case> cases;
    for (const auto& gen : codes) {
        const auto code = span_closure(gen.rows, true, gen.autom);
        const auto cls = classify_z4_skew_cyclic(code, gen.autom);
        MixedMatrix wit(gen.rows.context(), 0, gen.rows.s());
        for (const auto& w : cls.witnesses) wit.add_row(w);
        if (cls.kind == gen.expected && span_closure(wit, true, gen.autom) == code) {
            ++matched;
            cases.insert(cls.kind);
        } else {
            c.note("mismatch on " + gen.label);
        }
    }
    c.require(codes.size() >= 20, "at least 20 generated codes");
    c.require(matched == codes.size(), "witnesses regenerate the code and the case label matches");
    c.require(cases.size() == 3, "all three cases covered");
    c.note(std::to_string(matched) + "/" + std::to_string(codes.size()) + " codes");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Clauses&)>>> criteria = {
        {"skew product of degree-one monomials", skew_products},
        {"standard form of the 4x5 mixed matrix", standard_form_4x5},
        {"dual of the 4x5 mixed code", dual_4x5},
        {"cofactors of the length-7 generators", cofactors_length7},
        {"spanning set of the length-7 skew code", spanning_set_length7},
        {"spanning set of the length-4 skew code", spanning_set_length4},
        {"property suite", property_suite},
        {"Z4[w] classification round trip", classify_round_trip},
    };
    int failures = 0;
    for (const auto& [name, body] : criteria) {
        Clauses c;
        const auto start = std::chrono::steady_clock::now();
        try {
            body(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !c.passed();
        std::cout << (c.passed() ? "PASS " : "FAIL ") << name << ": " << c.summary() << " (" << std::fixed
                  << std::setprecision(2) << secs << " s)" << std::endl;
    }
    std::cout << criteria.size() - failures << " passed, " << failures << " failed" << std::endl;
    return failures == 0 ? 0 : 1;
}
