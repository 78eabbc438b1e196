#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "reference_checks.hpp"
#include "test_support.hpp"

using namespace z2z4xi;
using namespace z2z4xi::testing;

namespace {

const Automorphism t1(1);

ParseError parse_error_of(const std::function<void()>& body) {
    try {
        body();
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "input was accepted";
    return ParseError(0, 0, "");
}

std::string read_file(const std::string& name) {
    std::ifstream in(std::string(Z2Z4XI_DATA_DIR) + "/" + name);
    EXPECT_TRUE(in.good()) << name;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(ParseElement, CanonicalForms) {
    auto ctx = ctx_m2();
    EXPECT_EQ(text::parse_ring_element(ctx, "2+2*w"), RingElem(ctx, {2, 2}));
    EXPECT_EQ(text::format_element(text::parse_ring_element(ctx, "2+2*w")), "2+2*w");
    EXPECT_EQ(text::format_element(text::parse_ring_element(ctx, "w*w")), "3+3*w");
    EXPECT_EQ(text::format_element(text::parse_ring_element(ctx, "w^2")), "3+3*w");
    EXPECT_EQ(text::format_element(text::parse_ring_element(ctx, "-1")), "3");
    EXPECT_EQ(text::format_element(text::parse_ring_element(ctx, "5*w")), "w");
    EXPECT_EQ(text::format_element(text::parse_field_element(ctx, "w^2")), "1+w");
    EXPECT_EQ(text::format_element(text::parse_field_element(ctx, "3")), "1");
    EXPECT_EQ(text::format_element(RingElem::zero(ctx)), "0");
    EXPECT_EQ(text::format_element(text::parse_ring_element(ctx, "(1 + w) * (1 + w)")), "w");
}

TEST(ParseElement, ErrorsCarryPositions) {
    auto ctx = ctx_m2();
    auto e = parse_error_of([&] { text::parse_ring_element(ctx, "w^"); });
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 2u);

    e = parse_error_of([&] { text::parse_ring_element(ctx, "w+)"); });
    EXPECT_EQ(e.column(), 3u);
    e = parse_error_of([&] { text::parse_ring_element(ctx, "x"); });
    EXPECT_EQ(e.column(), 1u);
    e = parse_error_of([&] { text::parse_ring_element(ctx, ""); });
    EXPECT_EQ(e.column(), 1u);
    e = parse_error_of([&] { text::parse_ring_element(ctx, "(1+w"); });
    EXPECT_EQ(e.column(), 5u);
    e = parse_error_of([&] { text::parse_ring_element(ctx, "1 $"); });
    EXPECT_EQ(e.column(), 3u);
}

TEST(ParsePoly, CanonicalForms) {
    auto ctx = ctx_m2();
    auto p = text::parse_poly<RingElem>(ctx, t1, "(1+2*w)*x^3+3");
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(text::format_poly(p), "3+(1+2*w)*x^3");
    EXPECT_EQ(text::format_poly(text::parse_poly<RingElem>(ctx, t1, "x^2-1")), "3+x^2");
    EXPECT_EQ(text::format_poly(text::parse_poly<FieldElem>(ctx, t1, "x^2-1")), "1+x^2");
    EXPECT_EQ(text::format_poly(text::parse_poly<RingElem>(ctx, t1, "3*w*x^2")), "3*w*x^2");
    EXPECT_EQ(text::format_poly(text::parse_poly<RingElem>(ctx, t1, "x - x")), "0");
    // products are skew: x * w = w^2 * x
    EXPECT_EQ(text::format_poly(text::parse_poly<RingElem>(ctx, t1, "x*w")), "(3+3*w)*x");
    EXPECT_EQ(text::format_poly(text::parse_poly<RingElem>(ctx, t1, "w*x")), "w*x");
    EXPECT_EQ(text::parse_int_poly("x^2+x+1"), (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(text::parse_int_poly("x^3+2*x^2+x-1"), (std::vector<int>{3, 1, 2, 1}));
    EXPECT_EQ(text::format_int_poly({3, 1, 2, 1}), "3+x+2*x^2+x^3");
}

TEST(ParsePoly, Errors) {
    auto ctx = ctx_m2();
    auto e = parse_error_of([&] { text::parse_poly<RingElem>(ctx, t1, "x^99999999"); });
    EXPECT_EQ(e.column(), 3u);
    e = parse_error_of([&] { text::parse_poly<RingElem>(ctx, t1, "x + y"); });
    EXPECT_EQ(e.column(), 5u);
    e = parse_error_of([&] { text::parse_poly<RingElem>(ctx, t1, "x w"); });
    EXPECT_EQ(e.column(), 3u);
    e = parse_error_of([&] { text::parse_int_poly("w+1"); });
    EXPECT_EQ(e.column(), 1u);
}

TEST(RoundTrip, ElementsAndPolynomials) {
    Rng rng(41);
    for (const auto& ctx : {ctx_m1(), ctx_m2(), ctx_m3()}) {
        for (std::uint64_t i = 0; i < ctx->ring_size(); ++i) {
            auto e = RingElem::from_index(ctx, i);
            const auto s = text::format_element(e);
            EXPECT_EQ(text::parse_ring_element(ctx, s), e);
            EXPECT_EQ(text::format_element(text::parse_ring_element(ctx, s)), s);
        }
        for (int i = 0; i < 200; ++i) {
            const Automorphism th(1 + i % ctx->degree());
            auto p = random_poly<RingElem>(ctx, th, 6, rng);
            const auto s = text::format_poly(p);
            EXPECT_EQ(text::parse_poly<RingElem>(ctx, th, s), p) << s;
            auto f = random_poly<FieldElem>(ctx, th, 6, rng);
            EXPECT_EQ(text::parse_poly<FieldElem>(ctx, th, text::format_poly(f)), f);
        }
    }
}

TEST(RoundTrip, MatrixDocuments) {
    Rng rng(43);
    for (const auto& ctx : {ctx_m1(), ctx_m2(), ctx_m3()}) {
        for (int i = 0; i < 30; ++i) {
            const auto m = random_matrix(ctx, i % 4, 1 + i % 3, i % 5, rng);
            const auto s = text::format_matrix_document(m);
            const auto doc = text::parse_matrix_document(s);
            EXPECT_EQ(doc.matrix, m);
            EXPECT_EQ(text::format_matrix_document(doc.matrix), s);
        }
    }
    const auto with_t = text::format_matrix_document(reference::length4_matrix(), 2);
    const auto doc = text::parse_matrix_document(with_t);
    EXPECT_EQ(doc.t, 2);
    EXPECT_EQ(doc.matrix, reference::length4_matrix());
}

TEST(RoundTrip, GeneratorDocuments) {
    for (const auto& gens : {reference::length7_generators(), reference::length4_generators()}) {
        const auto s = text::format_generator_document(gens);
        const auto back = text::parse_generator_document(s);
        EXPECT_EQ(text::format_generator_document(back), s);
        EXPECT_EQ(spanning_matrix(back), spanning_matrix(gens));
    }
}

TEST(MatrixDocument, Errors) {
    const std::string head = "m: 2\nh: x^2+x+1\nr: 2\ns: 3\n";
    auto e = parse_error_of([&] { text::parse_matrix_document(head); });
    EXPECT_NE(std::string(e.what()).find("rows"), std::string::npos);

    e = parse_error_of([&] { text::parse_matrix_document(head + "rows:\n1 0 | 0 0\n"); });
    EXPECT_EQ(e.line(), 6u);

    e = parse_error_of([&] { text::parse_matrix_document(head + "rows:\n1 0 0 0 0\n"); });
    EXPECT_EQ(e.line(), 6u);

    e = parse_error_of([&] { text::parse_matrix_document(head + "rows:\n1 0 | 0 0 w^\n"); });
    EXPECT_EQ(e.line(), 6u);
    EXPECT_EQ(e.column(), 12u);  // the caret

    e = parse_error_of([&] { text::parse_matrix_document("m: 2\nh: x^2+x+1\nk: 3\n"); });
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 1u);

    e = parse_error_of([&] { text::parse_matrix_document("m: 2\nm: 2\n"); });
    EXPECT_EQ(e.line(), 2u);

    e = parse_error_of([&] { text::parse_matrix_document("m: 3\nh: x^2+x+1\nr: 1\ns: 1\nrows:\n"); });
    EXPECT_EQ(e.line(), 2u);

    e = parse_error_of([&] { text::parse_matrix_document("m: two\nh: x^2+x+1\nr: 1\ns: 1\nrows:\n"); });
    EXPECT_EQ(e.line(), 1u);

    // a bad modulus is a domain error, not a syntax error
    EXPECT_THROW(text::parse_matrix_document("m: 2\nh: x^2+1\nr: 1\ns: 1\nrows:\n"), Error);
}

TEST(MatrixDocument, CommentsAndBlankLinesAreIgnored) {
    const auto doc = text::parse_matrix_document("# header\n\nm: 2\nh: x^2+x+1\n  # indented\nr: 1\ns: 1\nrows:\n\n# row\n1 | 2*w\n");
    ASSERT_EQ(doc.matrix.rows(), 1u);
    EXPECT_EQ(text::format_row(doc.matrix.row(0)), "1 | 2*w");
    EXPECT_FALSE(doc.t.has_value());
}

TEST(GeneratorDocument, Errors) {
    auto e = parse_error_of([] { text::parse_generator_document("m: 2\nh: x^2+x+1\nr: 3\ns: 3\nf: 1+v\n"); });
    EXPECT_EQ(e.line(), 5u);
    EXPECT_EQ(e.column(), 6u);
    e = parse_error_of([] { text::parse_generator_document("m: 2\nh: x^2+x+1\nr: 3\n"); });
    EXPECT_NE(std::string(e.what()).find("'s:'"), std::string::npos);
    e = parse_error_of([] { text::parse_generator_document("m: 2\nh: x^2+x+1\nr: 3\ns: 3\nt: 0\n"); });
    EXPECT_EQ(e.line(), 5u);
}

TEST(DataFiles, MatchTheEmbeddedExamples) {
    EXPECT_EQ(text::parse_matrix_document(read_file("four_by_five.txt")).matrix, reference::four_by_five_matrix());
    EXPECT_EQ(text::parse_matrix_document(read_file("four_by_five_standard.txt")).matrix,
              reference::four_by_five_standard_form());
    EXPECT_EQ(text::parse_matrix_document(read_file("length7_matrix.txt")).matrix, reference::length7_matrix());
    EXPECT_EQ(text::parse_matrix_document(read_file("length4_matrix.txt")).matrix, reference::length4_matrix());
    EXPECT_EQ(spanning_matrix(text::parse_generator_document(read_file("length7_generators.txt"))),
              reference::length7_matrix());
    EXPECT_EQ(spanning_matrix(text::parse_generator_document(read_file("length4_generators.txt"))),
              reference::length4_matrix());
    EXPECT_EQ(text::parse_generator_document(read_file("empty_generators.txt")).generator_case(), GeneratorCase::Empty);
    EXPECT_EQ(text::parse_matrix_document(read_file("z4_length4.txt")).matrix.r(), 0u);
}
