#ifndef Z2Z4XI_TEXT_HPP
#define Z2Z4XI_TEXT_HPP

// Text grammars. Elements are sums of terms in `w` (xi, or xi_bar on the
// binary side), polynomials add `x`; both accept + - * ^ and parentheses:
//
//   expr   := ['+' | '-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | SYMBOL ['^' INT] | '(' expr ')'
//
// Products are evaluated left to right, so `x*w` is theta(w) x in a skew ring.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "skew_cyclic.hpp"

namespace z2z4xi::text {

/// Largest exponent accepted on `x`; powers of `w` are reduced and may be arbitrary.
inline constexpr unsigned long long kMaxXExponent = 1u << 16;

/// Where a fragment sits in its source, for error positions.
struct Origin {
    std::size_t line = 1;
    std::size_t column = 1;
};

template <class Algebra>
class ExprParser {
   public:
    using Value = typename Algebra::Value;

    ExprParser(const Algebra& alg, std::string_view src, Origin origin) : alg_(alg), src_(src), origin_(origin) {}

    Value parse() {
        skip_ws();
        if (at_end()) fail("expected an expression");
        Value v = expr();
        skip_ws();
        if (!at_end()) fail(std::string("unexpected '") + src_[pos_] + "'");
        return v;
    }

   private:
    Value expr() {
        skip_ws();
        bool negate = false;
        if (peek('+') || peek('-')) {
            negate = src_[pos_] == '-';
            ++pos_;
        }
        Value acc = term();
        if (negate) acc = alg_.neg(acc);
        for (;;) {
            skip_ws();
            if (peek('+')) {
                ++pos_;
                acc = alg_.add(acc, term());
            } else if (peek('-')) {
                ++pos_;
                acc = alg_.sub(acc, term());
            } else {
                return acc;
            }
        }
    }

    Value term() {
        Value acc = factor();
        for (;;) {
            skip_ws();
            if (!peek('*')) return acc;
            ++pos_;
            acc = alg_.mul(acc, factor());
        }
    }

    Value factor() {
        skip_ws();
        if (at_end()) fail("expected a number, symbol or '('");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            skip_ws();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return alg_.from_int(integer());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            ++pos_;
            unsigned long long k = 1;
            skip_ws();
            if (peek('^')) {
                const std::size_t caret = pos_;
                ++pos_;
                skip_ws();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) fail_at(caret, "expected an exponent after '^'");
                k = integer();
                if (c != 'w' && k > kMaxXExponent) fail_at(caret + 1, "exponent too large");
            }
            auto v = alg_.symbol(c, k);
            if (!v) fail_at(start, std::string("unknown symbol '") + c + "'");
            return *v;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    unsigned long long integer() {
        const std::size_t start = pos_;
        unsigned long long v = 0;
        auto [ptr, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), v);
        if (ec != std::errc()) fail_at(start, "integer out of range");
        pos_ = static_cast<std::size_t>(ptr - src_.data());
        return v;
    }

    bool at_end() const noexcept { return pos_ >= src_.size(); }
    bool peek(char c) const noexcept { return !at_end() && src_[pos_] == c; }
    void skip_ws() noexcept {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
        throw ParseError(origin_.line, origin_.column + at, msg);
    }

    const Algebra& alg_;
    std::string_view src_;
    Origin origin_;
    std::size_t pos_ = 0;
};

template <class E>
struct ElementAlgebra {
    using Value = E;
    ContextPtr ctx;

    Value from_int(unsigned long long c) const { return E::constant(ctx, static_cast<long long>(c % 4)); }
    std::optional<Value> symbol(char name, unsigned long long k) const {
        if (name != 'w') return std::nullopt;
        return E::xi_power(ctx, k);
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }
};

template <class E>
struct PolyAlgebra {
    using Value = SkewPoly<E>;
    ContextPtr ctx;
    Automorphism autom{1};

    Value from_int(unsigned long long c) const {
        return Value(ctx, autom, {E::constant(ctx, static_cast<long long>(c % 4))});
    }
    std::optional<Value> symbol(char name, unsigned long long k) const {
        if (name == 'w') return Value(ctx, autom, {E::xi_power(ctx, k)});
        if (name == 'x') return Value::x_power(ctx, static_cast<std::size_t>(k), autom);
        return std::nullopt;
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return skew_mul(a, b); }
    Value neg(const Value& a) const { return -a; }
};

/// Integer polynomials in x, for the defining polynomial h. Coefficients reduced mod 4.
struct IntPolyAlgebra {
    using Value = std::vector<int>;

    static Value trim(Value v) {
        for (auto& c : v) c = ((c % 4) + 4) % 4;
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    }
    Value from_int(unsigned long long c) const { return trim({static_cast<int>(c % 4)}); }
    std::optional<Value> symbol(char name, unsigned long long k) const {
        if (name != 'x') return std::nullopt;
        Value v(static_cast<std::size_t>(k) + 1, 0);
        v.back() = 1;
        return v;
    }
    Value add(const Value& a, const Value& b) const {
        Value v(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) v[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) v[i] += b[i];
        return trim(std::move(v));
    }
    Value neg(const Value& a) const {
        Value v = a;
        for (auto& c : v) c = -c;
        return trim(std::move(v));
    }
    Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }
    Value mul(const Value& a, const Value& b) const {
        if (a.empty() || b.empty()) return {};
        Value v(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
        return trim(std::move(v));
    }
};

template <class E>
E parse_element(const ContextPtr& ctx, std::string_view src, Origin origin = {}) {
    const ElementAlgebra<E> alg{ctx};
    return ExprParser(alg, src, origin).parse();
}

inline RingElem parse_ring_element(const ContextPtr& ctx, std::string_view src, Origin origin = {}) {
    return parse_element<RingElem>(ctx, src, origin);
}
inline FieldElem parse_field_element(const ContextPtr& ctx, std::string_view src, Origin origin = {}) {
    return parse_element<FieldElem>(ctx, src, origin);
}

template <class E>
SkewPoly<E> parse_poly(const ContextPtr& ctx, Automorphism autom, std::string_view src, Origin origin = {}) {
    const PolyAlgebra<E> alg{ctx, autom};
    return ExprParser(alg, src, origin).parse();
}

/// Coefficient vector of h, ascending, reduced mod 4.
inline std::vector<int> parse_int_poly(std::string_view src, Origin origin = {}) {
    const IntPolyAlgebra alg;
    return ExprParser(alg, src, origin).parse();
}

template <unsigned Q>
std::string format_element(const GaloisElem<Q>& e) {
    std::string out;
    for (int i = 0; i < e.degree(); ++i) {
        const unsigned c = e.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += i == 1 ? "w" : "w^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

template <class E>
std::string format_poly(const SkewPoly<E>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const E& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        if (!out.empty()) out += '+';
        if (k == 0) {
            out += format_element(c);
            continue;
        }
        const std::string xs = k == 1 ? "x" : "x^" + std::to_string(k);
        if (c.is_one()) {
            out += xs;
            continue;
        }
        const std::string cs = format_element(c);
        const bool composite = cs.find('+') != std::string::npos;
        out += (composite ? "(" + cs + ")" : cs) + "*" + xs;
    }
    return out;
}

inline std::string format_int_poly(const std::vector<int>& h) {
    std::string out;
    for (std::size_t k = 0; k < h.size(); ++k) {
        const int c = ((h[k] % 4) + 4) % 4;
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        const std::string xs = k == 0 ? "" : k == 1 ? "x" : "x^" + std::to_string(k);
        if (k == 0)
            out += std::to_string(c);
        else if (c == 1)
            out += xs;
        else
            out += std::to_string(c) + "*" + xs;
    }
    return out.empty() ? "0" : out;
}

inline std::vector<int> context_modulus(const RingContext& ctx) {
    return {ctx.modulus().begin(), ctx.modulus().end()};
}

struct MatrixDocument {
    ContextPtr ctx;
    std::optional<int> t;
    MixedMatrix matrix;
};

struct GeneratorDocument {
    SkewGenerators gens;
};

namespace detail {

struct Line {
    std::size_t number;
    std::string_view text;
};

inline std::vector<Line> split_lines(std::string_view src) {
    std::vector<Line> out;
    std::size_t n = 1, start = 0;
    for (std::size_t i = 0; i <= src.size(); ++i) {
        if (i == src.size() || src[i] == '\n') {
            auto line = src.substr(start, i - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            out.push_back({n++, line});
            start = i + 1;
        }
    }
    return out;
}

inline bool blank_or_comment(std::string_view s) {
    for (char c : s) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        const std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) out.push_back({s.substr(start, i - start), start + 1});
    }
    return out;
}

struct HeaderField {
    std::string_view value;
    Origin origin;
};

// Reads `key: value` lines up to an optional terminator key with an empty value.
// Returns the index of the first line after the header.
inline std::size_t read_header(const std::vector<Line>& lines, std::map<std::string, HeaderField>& fields,
                               const std::vector<std::string>& allowed, const std::string& terminator) {
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const auto& [number, text] = lines[li];
        if (blank_or_comment(text)) continue;
        const auto colon = text.find(':');
        if (colon == std::string_view::npos) throw ParseError(number, 1, "expected 'key: value'");
        std::string key(text.substr(0, colon));
        const auto first = key.find_first_not_of(" \t");
        const auto last = key.find_last_not_of(" \t");
        const std::size_t key_col = first == std::string::npos ? 1 : first + 1;
        key = first == std::string::npos ? "" : key.substr(first, last - first + 1);
        if (!terminator.empty() && key == terminator) return li + 1;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ParseError(number, key_col, "unknown key '" + key + "'");
        if (fields.count(key)) throw ParseError(number, key_col, "duplicate key '" + key + "'");
        fields[key] = {text.substr(colon + 1), {number, colon + 2}};
    }
    if (!terminator.empty()) throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "missing '" + terminator + ":' line");
    return lines.size();
}

inline unsigned long long parse_count(const HeaderField& f, const char* key) {
    const auto toks = tokenize(f.value);
    if (toks.size() != 1) throw ParseError(f.origin.line, f.origin.column, std::string("expected one integer for '") + key + "'");
    unsigned long long v = 0;
    const auto& tk = toks[0];
    auto [ptr, ec] = std::from_chars(tk.text.data(), tk.text.data() + tk.text.size(), v);
    if (ec != std::errc() || ptr != tk.text.data() + tk.text.size())
        throw ParseError(f.origin.line, f.origin.column + tk.column - 1, std::string("expected an integer for '") + key + "'");
    return v;
}

inline const HeaderField& require(const std::map<std::string, HeaderField>& fields, const std::string& key,
                                  std::size_t line) {
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError(line, 1, "missing '" + key + ":' line");
    return it->second;
}

inline ContextPtr context_from_header(const std::map<std::string, HeaderField>& fields, std::size_t last_line) {
    const auto& mf = require(fields, "m", last_line);
    const auto& hf = require(fields, "h", last_line);
    const auto m = parse_count(mf, "m");
    const auto h = parse_int_poly(hf.value, hf.origin);
    if (h.empty() || h.size() - 1 != m)
        throw ParseError(hf.origin.line, hf.origin.column, "h must have degree m = " + std::to_string(m));
    return RingContext::create(static_cast<int>(m), h);
}

}  // namespace detail

/// Matrix document: `m:`, `h:`, `r:`, `s:` (and optionally `t:`), then `rows:`
/// followed by one row per line, binary entries, a literal `|`, quaternary entries.
inline MatrixDocument parse_matrix_document(std::string_view src) {
    const auto lines = detail::split_lines(src);
    std::map<std::string, detail::HeaderField> fields;
    const std::size_t body = detail::read_header(lines, fields, {"m", "h", "r", "s", "t"}, "rows");
    const std::size_t last = lines.empty() ? 1 : lines.back().number;
    auto ctx = detail::context_from_header(fields, last);
    const auto r = detail::parse_count(detail::require(fields, "r", last), "r");
    const auto s = detail::parse_count(detail::require(fields, "s", last), "s");
    std::optional<int> t;
    if (auto it = fields.find("t"); it != fields.end()) {
        const auto tv = detail::parse_count(it->second, "t");
        if (tv == 0) throw ParseError(it->second.origin.line, it->second.origin.column, "t must be positive");
        t = static_cast<int>(tv);
    }

    MixedMatrix mat(ctx, r, s);
    for (std::size_t li = body; li < lines.size(); ++li) {
        const auto& [number, txt] = lines[li];
        if (detail::blank_or_comment(txt)) continue;
        const auto toks = detail::tokenize(txt);
        std::size_t bar = toks.size();
        for (std::size_t i = 0; i < toks.size(); ++i) {
            if (toks[i].text == "|") {
                if (bar != toks.size()) throw ParseError(number, toks[i].column, "more than one '|'");
                bar = i;
            }
        }
        if (bar == toks.size()) throw ParseError(number, 1, "row has no '|' separator");
        if (bar != r) throw ParseError(number, 1, "expected " + std::to_string(r) + " binary entries, found " + std::to_string(bar));
        if (toks.size() - bar - 1 != s)
            throw ParseError(number, toks[bar].column,
                             "expected " + std::to_string(s) + " quaternary entries, found " + std::to_string(toks.size() - bar - 1));
        std::vector<FieldElem> alpha;
        std::vector<RingElem> beta;
        for (std::size_t i = 0; i < bar; ++i) alpha.push_back(parse_field_element(ctx, toks[i].text, {number, toks[i].column}));
        for (std::size_t i = bar + 1; i < toks.size(); ++i)
            beta.push_back(parse_ring_element(ctx, toks[i].text, {number, toks[i].column}));
        mat.add_row(MixedWord(ctx, std::move(alpha), std::move(beta)));
    }
    return {ctx, t, std::move(mat)};
}

inline std::string format_row(const MixedWord& w) {
    std::string out;
    for (const auto& a : w.alpha()) out += format_element(a) + " ";
    out += "|";
    for (const auto& b : w.beta()) out += " " + format_element(b);
    return out;
}

inline std::string format_matrix_document(const MixedMatrix& mat, std::optional<int> t = std::nullopt) {
    std::ostringstream os;
    const auto& ctx = *mat.context();
    os << "m: " << ctx.degree() << "\n";
    os << "h: " << format_int_poly(context_modulus(ctx)) << "\n";
    os << "r: " << mat.r() << "\n";
    os << "s: " << mat.s() << "\n";
    if (t) os << "t: " << *t << "\n";
    os << "rows:\n";
    for (const auto& w : mat.row_list()) os << format_row(w) << "\n";
    return os.str();
}

/// Generator document: `m:`, `h:`, `r:`, `s:`, optional `t:` (default 1) and
/// optional `f:`, `l:`, `l1:` (binary) and `g:`, `a:`, `q:` (quaternary) polynomials.
inline SkewGenerators parse_generator_document(std::string_view src) {
    const auto lines = detail::split_lines(src);
    std::map<std::string, detail::HeaderField> fields;
    detail::read_header(lines, fields, {"m", "h", "r", "s", "t", "f", "l", "l1", "g", "a", "q"}, "");
    const std::size_t last = lines.empty() ? 1 : lines.back().number;
    SkewGenerators gens;
    gens.ctx = detail::context_from_header(fields, last);
    gens.r = detail::parse_count(detail::require(fields, "r", last), "r");
    gens.s = detail::parse_count(detail::require(fields, "s", last), "s");
    if (auto it = fields.find("t"); it != fields.end()) {
        const auto tv = detail::parse_count(it->second, "t");
        if (tv == 0) throw ParseError(it->second.origin.line, it->second.origin.column, "t must be positive");
        gens.autom = Automorphism(static_cast<int>(tv));
    }
    auto field_poly = [&](const char* key, std::optional<FieldPoly>& slot) {
        if (auto it = fields.find(key); it != fields.end())
            slot = parse_poly<FieldElem>(gens.ctx, gens.autom, it->second.value, it->second.origin);
    };
    auto ring_poly = [&](const char* key, std::optional<RingPoly>& slot) {
        if (auto it = fields.find(key); it != fields.end())
            slot = parse_poly<RingElem>(gens.ctx, gens.autom, it->second.value, it->second.origin);
    };
    field_poly("f", gens.f);
    field_poly("l", gens.l);
    field_poly("l1", gens.l1);
    ring_poly("g", gens.g);
    ring_poly("a", gens.a);
    ring_poly("q", gens.q);
    return gens;
}

inline std::string format_generator_document(const SkewGenerators& gens) {
    std::ostringstream os;
    const auto& ctx = *gens.ctx;
    os << "m: " << ctx.degree() << "\n";
    os << "h: " << format_int_poly(context_modulus(ctx)) << "\n";
    os << "r: " << gens.r << "\n";
    os << "s: " << gens.s << "\n";
    os << "t: " << gens.autom.power() << "\n";
    if (gens.f) os << "f: " << format_poly(*gens.f) << "\n";
    if (gens.l) os << "l: " << format_poly(*gens.l) << "\n";
    if (gens.l1) os << "l1: " << format_poly(*gens.l1) << "\n";
    if (gens.g) os << "g: " << format_poly(*gens.g) << "\n";
    if (gens.a) os << "a: " << format_poly(*gens.a) << "\n";
    if (gens.q) os << "q: " << format_poly(*gens.q) << "\n";
    return os.str();
}

}  // namespace z2z4xi::text

#endif
