#pragma once

// Worked examples with their published values, shared by the CLI's
// verify-paper command and the acceptance runner.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "z2z4xi/z2z4xi.hpp"

namespace z2z4xi::reference {

inline constexpr std::string_view kFourByFiveMatrix = R"(# 4x5 mixed code over Z2[w] x Z4[w], w^2 + w + 1 = 0
m: 2
h: x^2+x+1
r: 2
s: 3
rows:
1 1+w | 2+2*w 2 2
w 0   | 2*w 0 2
w 1   | 2+w 1+3*w 0
0 1+w | 2*w 2 1
)";

inline constexpr std::string_view kFourByFiveStandardForm = R"(m: 2
h: x^2+x+1
r: 2
s: 3
rows:
1 0 | 0 0 2*w
0 1 | 0 0 2+2*w
0 0 | 1 0 3*w
0 0 | 0 1 0
)";

inline constexpr std::string_view kLength7Generators = R"(# length-7 skew cyclic code, free quaternary generator
m: 2
h: x^2+x+1
r: 7
s: 7
t: 1
f: 1+x+x^3
l: 1+x^2
g: 1+2*x+3*x^2+x^3+x^4
a: 3+x
)";

inline constexpr std::string_view kLength7Matrix = R"(m: 2
h: x^2+x+1
r: 7
s: 7
rows:
1 1 0 1 0 0 0 | 0 0 0 0 0 0 0
0 1 1 0 1 0 0 | 0 0 0 0 0 0 0
0 0 1 1 0 1 0 | 0 0 0 0 0 0 0
0 0 0 1 1 0 1 | 0 0 0 0 0 0 0
1 0 1 0 0 0 0 | 3 0 3 1 1 0 0
0 1 0 1 0 0 0 | 0 3 0 3 1 1 0
0 0 1 0 1 0 0 | 0 0 3 0 3 1 1
1 0 0 1 1 1 0 | 2 2 2 0 2 0 0
0 1 0 0 1 1 1 | 0 2 2 2 0 2 0
1 0 1 0 0 1 1 | 0 0 2 2 2 0 2
)";

inline constexpr std::string_view kLength4Generators = R"(# length-4 skew cyclic code with a torsion generator
m: 2
h: x^2+x+1
r: 4
s: 4
t: 1
f: x^2+w^2*x+w
l: 1
l1: w*x+w
g: 1+x^2
a: w
q: 1+x^2
)";

inline constexpr std::string_view kLength4Matrix = R"(m: 2
h: x^2+x+1
r: 4
s: 4
rows:
w w^2 1 0   | 0 0 0 0
0 w^2 w 1   | 0 0 0 0
1 0 0 0     | 1+2*w 0 1 0
0 1 0 0     | 0 1+2*w^2 0 1
w w 0 0     | 2 0 2 0
0 w^2 w^2 0 | 0 2 0 2
)";

inline MixedMatrix four_by_five_matrix() { return text::parse_matrix_document(kFourByFiveMatrix).matrix; }
inline MixedMatrix four_by_five_standard_form() { return text::parse_matrix_document(kFourByFiveStandardForm).matrix; }
inline SkewGenerators length7_generators() { return text::parse_generator_document(kLength7Generators); }
inline MixedMatrix length7_matrix() { return text::parse_matrix_document(kLength7Matrix).matrix; }
inline SkewGenerators length4_generators() { return text::parse_generator_document(kLength4Generators); }
inline MixedMatrix length4_matrix() { return text::parse_matrix_document(kLength4Matrix).matrix; }

inline ContextPtr example_context() { return RingContext::create(2, {1, 1, 1}); }

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

template <class T>
std::string show(const T& v) {
    if constexpr (requires { text::format_poly(v); })
        return text::format_poly(v);
    else
        return text::format_element(v);
}

class Recorder {
   public:
    void check(std::string name, const std::function<std::pair<bool, std::string>()>& body) {
        try {
            auto [ok, detail] = body();
            out_.push_back({std::move(name), ok, std::move(detail)});
        } catch (const std::exception& e) {
            out_.push_back({std::move(name), false, std::string("exception: ") + e.what()});
        }
    }

    template <class T>
    void equal(std::string name, const std::function<T()>& actual, const T& expected) {
        check(std::move(name), [&] {
            const T got = actual();
            return std::pair{got == expected, "got " + show(got) + ", expected " + show(expected)};
        });
    }

    std::vector<CheckResult> take() { return std::move(out_); }

   private:
    std::vector<CheckResult> out_;
};

template <class E>
SkewPoly<E> poly(const ContextPtr& ctx, std::string_view src) {
    return text::parse_poly<E>(ctx, Automorphism(1), src);
}

inline std::string matrix_diff(const MixedMatrix& got, const MixedMatrix& want) {
    if (got.rows() != want.rows())
        return std::to_string(got.rows()) + " rows, expected " + std::to_string(want.rows());
    for (std::size_t i = 0; i < got.rows(); ++i)
        if (!(got.row(i) == want.row(i)))
            return "row " + std::to_string(i + 1) + " is " + text::format_row(got.row(i)) + ", expected " +
                   text::format_row(want.row(i));
    return "equal";
}

}  // namespace detail

/// Published values from the worked examples: ring arithmetic, skew products
/// and divisions, the 4x5 standard form and its dual, and the length-7 and
/// length-4 skew cyclic codes. Enumeration stays within `budget`.
inline std::vector<CheckResult> reference_checks(std::uint64_t budget = kDefaultBudget) {
    using detail::poly;
    detail::Recorder rec;
    const Automorphism t1(1);

    rec.check("context m=2, h=1+x+x^2 is valid", [] {
        auto ctx = RingContext::create(2, {1, 1, 1});
        return std::pair{ctx->degree() == 2 && ctx->unit_count() == 12, std::string("12 units")};
    });

    const auto ctx = example_context();
    const auto xi = RingElem::xi_power(ctx, 1);
    const auto one = RingElem::one(ctx);

    rec.equal<RingElem>("(1+w)*w^2 = 3w", [&] { return (one + xi) * xi * xi; }, text::parse_ring_element(ctx, "3*w"));
    rec.equal<RingElem>("theta(1+w) = 3w", [&] { return frobenius(t1, one + xi); }, text::parse_ring_element(ctx, "3*w"));
    rec.equal<RingPoly>("(w x)*((1+w) x) = (1+w) x^2",
                        [&] { return poly<RingElem>(ctx, "w*x") * poly<RingElem>(ctx, "(1+w)*x"); },
                        poly<RingElem>(ctx, "(1+w)*x^2"));
    rec.equal<RingPoly>("((1+w) x)*(w x) = 3w x^2",
                        [&] { return poly<RingElem>(ctx, "(1+w)*x") * poly<RingElem>(ctx, "w*x"); },
                        poly<RingElem>(ctx, "3*w*x^2"));

    rec.check("x^7-1 = (1+x+x^2+x^4)*(1+x+x^3) over Z2[w]", [&] {
        auto d = right_divide(poly<FieldElem>(ctx, "x^7-1"), poly<FieldElem>(ctx, "1+x+x^3"));
        const bool ok = d.remainder.is_zero() && d.quotient == poly<FieldElem>(ctx, "1+x+x^2+x^4");
        return std::pair{ok, "quotient " + text::format_poly(d.quotient) + ", remainder " + text::format_poly(d.remainder)};
    });
    rec.check("x^4-1 = (x^2-1)*(1+x^2) over Z4[w]", [&] {
        auto d = right_divide(poly<RingElem>(ctx, "x^4-1"), poly<RingElem>(ctx, "1+x^2"));
        const bool ok = d.remainder.is_zero() && d.quotient == poly<RingElem>(ctx, "x^2-1");
        return std::pair{ok, "quotient " + text::format_poly(d.quotient) + ", remainder " + text::format_poly(d.remainder)};
    });
    rec.check("3+x right-divides x^7-1 over Z4[w]", [&] {
        return std::pair{right_divides(poly<RingElem>(ctx, "3+x"), poly<RingElem>(ctx, "x^7-1")), std::string()};
    });
    rec.check("x^2+2w x+1 right-divides x^4-1 over Z4[w]", [&] {
        return std::pair{right_divides(poly<RingElem>(ctx, "x^2+2*w*x+1"), poly<RingElem>(ctx, "x^4-1")), std::string()};
    });

    rec.equal<FieldPoly>("x^7-1 = (1+x)(1+x+x^3)(1+x^2+x^3) over Z2[w]",
                         [&] { return poly<FieldElem>(ctx, "(1+x)*(1+x+x^3)*(1+x^2+x^3)"); },
                         poly<FieldElem>(ctx, "x^7-1"));
    rec.equal<RingPoly>("x^7-1 = (3+x)(3+x+2x^2+x^3)(3+2x+3x^2+x^3) over Z4[w]",
                        [&] { return poly<RingElem>(ctx, "(3+x)*(3+x+2*x^2+x^3)*(3+2*x+3*x^2+x^3)"); },
                        poly<RingElem>(ctx, "x^7-1"));
    rec.equal<FieldPoly>("x^4-1 = (x^2+w^2 x+w^2)(x^2+w^2 x+w) over Z2[w]",
                         [&] { return poly<FieldElem>(ctx, "(x^2+w^2*x+w^2)*(x^2+w^2*x+w)"); },
                         poly<FieldElem>(ctx, "x^4-1"));
    rec.equal<RingPoly>("x^4-1 = (x^2+2w x+3)(x^2+2w x+1) over Z4[w]",
                        [&] { return poly<RingElem>(ctx, "(x^2+2*w*x+3)*(x^2+2*w*x+1)"); },
                        poly<RingElem>(ctx, "x^4-1"));

    // 4x5 mixed code
    const auto input = four_by_five_matrix();
    const auto sf = standard_form(input);
    rec.check("4x5 matrix reduces to the printed standard form", [&] {
        auto diff = detail::matrix_diff(sf.g_std, four_by_five_standard_form());
        return std::pair{diff == "equal", diff};
    });
    rec.check("4x5 standard form has type (2,3;2;2,0)", [&] {
        return std::pair{sf.code_type.to_string() == "(2,3;2;2,0)", sf.code_type.to_string()};
    });
    rec.check("4x5 standard form uses the identity column permutation", [&] {
        std::string perm;
        for (auto p : sf.quaternary_perm) perm += std::to_string(p);
        return std::pair{sf.identity_permutation(), "quaternary permutation " + perm};
    });
    rec.check("type (2,3;2;2,0) at m=2 has 4096 words", [] {
        auto c = cardinality(CodeType{2, 3, 2, 2, 0}, 2);
        return std::pair{c.fits_u64() && c.value() == 4096, c.to_string()};
    });
    rec.check("type (2,3;0;1,0) at m=2 has 16 words", [] {
        auto c = cardinality(CodeType{2, 3, 0, 1, 0}, 2);
        return std::pair{c.fits_u64() && c.value() == 16, c.to_string()};
    });
    rec.check("dual type of (2,3;2;2,0) is (2,3;0;1,0)", [] {
        auto d = dual_type(CodeType{2, 3, 2, 2, 0}).to_string();
        return std::pair{d == "(2,3;0;1,0)", d};
    });
    rec.check("dual of the 4x5 code has 16 words spanned by the parity-check row", [&] {
        auto code = span_closure(input, false, t1, budget);
        auto dual = brute_force_dual(code, budget);
        auto h = unpermute_columns(parity_check(sf), sf.binary_perm, sf.quaternary_perm);
        auto spanned = span_closure(h, false, t1, budget);
        return std::pair{dual.size() == 16 && spanned == dual,
                         std::to_string(dual.size()) + " words, H row " + text::format_row(h.row(0))};
    });

    // length-7 code
    rec.check("length-7 generators are valid (case ii)", [] {
        auto rep = validate_generators(length7_generators());
        auto* bad = rep.first_failure();
        return std::pair{rep.valid() && rep.generator_case == GeneratorCase::Free,
                         bad ? "fails " + bad->condition : "case " + std::string(to_string(rep.generator_case))};
    });
    rec.check("length-7 cofactors h_f = 1+x+x^2+x^4, h_g = 3+2x+3x^2+x^3", [&] {
        auto cf = derive_cofactors(length7_generators());
        const bool ok = cf.h_f && cf.h_g && *cf.h_f == poly<FieldElem>(ctx, "1+x+x^2+x^4") &&
                        *cf.h_g == poly<RingElem>(ctx, "3+2*x+3*x^2+x^3");
        return std::pair{ok, "h_f " + (cf.h_f ? text::format_poly(*cf.h_f) : "-") + ", h_g " +
                                 (cf.h_g ? text::format_poly(*cf.h_g) : "-")};
    });
    rec.check("length-7 spanning set equals the printed 10x14 matrix", [] {
        auto diff = detail::matrix_diff(spanning_matrix(length7_generators()), length7_matrix());
        return std::pair{diff == "equal", diff};
    });

    // length-4 code
    rec.check("length-4 generators are valid (case iii)", [] {
        auto rep = validate_generators(length4_generators());
        auto* bad = rep.first_failure();
        return std::pair{rep.valid() && rep.generator_case == GeneratorCase::Mixed,
                         bad ? "fails " + bad->condition : "case " + std::string(to_string(rep.generator_case))};
    });
    rec.check("length-4 cofactors h_q = x^2-1, k = w", [&] {
        auto cf = derive_cofactors(length4_generators());
        const bool ok = cf.h_q && cf.k && *cf.h_q == poly<FieldElem>(ctx, "x^2-1") && *cf.k == poly<FieldElem>(ctx, "w");
        return std::pair{ok, "h_q " + (cf.h_q ? text::format_poly(*cf.h_q) : "-") + ", k " +
                                 (cf.k ? text::format_poly(*cf.k) : "-")};
    });
    rec.check("length-4 spanning set equals the printed 6x8 matrix", [] {
        auto diff = detail::matrix_diff(spanning_matrix(length4_generators()), length4_matrix());
        return std::pair{diff == "equal", diff};
    });

    return rec.take();
}

}  // namespace z2z4xi::reference
