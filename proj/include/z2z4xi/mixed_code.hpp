#ifndef Z2Z4XI_MIXED_CODE_HPP
#define Z2Z4XI_MIXED_CODE_HPP

// Z2Z4[xi]-linear codes: Z4[xi]-submodules of Z2[xi_bar]^r x Z4[xi]^s under
// gamma * (alpha, beta) = (gamma_bar alpha, gamma beta).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galois.hpp"

namespace z2z4xi {

class MixedWord {
   public:
    MixedWord(ContextPtr ctx, std::vector<FieldElem> alpha, std::vector<RingElem> beta)
        : ctx_(std::move(ctx)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
        for (const auto& a : alpha_)
            if (!FieldElem::same_context(a.context(), ctx_)) throw Error(ErrorKind::ContextMismatch, "binary entry");
        for (const auto& b : beta_)
            if (!RingElem::same_context(b.context(), ctx_)) throw Error(ErrorKind::ContextMismatch, "quaternary entry");
    }

    static MixedWord zero(const ContextPtr& ctx, std::size_t r, std::size_t s) {
        return MixedWord(ctx, std::vector<FieldElem>(r, FieldElem::zero(ctx)),
                         std::vector<RingElem>(s, RingElem::zero(ctx)));
    }

    const ContextPtr& context() const noexcept { return ctx_; }
    std::size_t r() const noexcept { return alpha_.size(); }
    std::size_t s() const noexcept { return beta_.size(); }
    const std::vector<FieldElem>& alpha() const noexcept { return alpha_; }
    const std::vector<RingElem>& beta() const noexcept { return beta_; }
    std::vector<FieldElem>& alpha() noexcept { return alpha_; }
    std::vector<RingElem>& beta() noexcept { return beta_; }

    bool is_zero() const noexcept {
        for (const auto& a : alpha_)
            if (!a.is_zero()) return false;
        for (const auto& b : beta_)
            if (!b.is_zero()) return false;
        return true;
    }

    MixedWord& operator+=(const MixedWord& o) {
        check_shape(o);
        for (std::size_t i = 0; i < alpha_.size(); ++i) alpha_[i] += o.alpha_[i];
        for (std::size_t j = 0; j < beta_.size(); ++j) beta_[j] += o.beta_[j];
        return *this;
    }
    MixedWord& operator-=(const MixedWord& o) {
        check_shape(o);
        for (std::size_t i = 0; i < alpha_.size(); ++i) alpha_[i] -= o.alpha_[i];
        for (std::size_t j = 0; j < beta_.size(); ++j) beta_[j] -= o.beta_[j];
        return *this;
    }
    friend MixedWord operator+(MixedWord a, const MixedWord& b) { return a += b; }
    friend MixedWord operator-(MixedWord a, const MixedWord& b) { return a -= b; }
    friend bool operator==(const MixedWord& a, const MixedWord& b) {
        return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
    }

    void check_shape(const MixedWord& o) const {
        if (alpha_.size() != o.alpha_.size() || beta_.size() != o.beta_.size())
            throw Error(ErrorKind::ShapeMismatch, "words of different lengths");
        if (!FieldElem::same_context(ctx_, o.ctx_)) throw Error(ErrorKind::ContextMismatch, "words over different rings");
    }

   private:
    ContextPtr ctx_;
    std::vector<FieldElem> alpha_;
    std::vector<RingElem> beta_;
};

/// gamma * (alpha, beta) = (reduce(gamma) alpha, gamma beta)
inline MixedWord scalar_mul(const RingElem& gamma, const MixedWord& w) {
    if (!RingElem::same_context(gamma.context(), w.context()))
        throw Error(ErrorKind::ContextMismatch, "scalar from a different ring");
    const FieldElem gbar = reduce_mod2(gamma);
    MixedWord out = w;
    for (auto& a : out.alpha()) a = gbar * a;
    for (auto& b : out.beta()) b = gamma * b;
    return out;
}

/// <u, v> = 2 * lift(sum a_i d_i) + sum b_j e_j  in Z4[xi]
inline RingElem inner_product(const MixedWord& u, const MixedWord& v) {
    u.check_shape(v);
    FieldElem binary = FieldElem::zero(u.context());
    for (std::size_t i = 0; i < u.r(); ++i) binary += u.alpha()[i] * v.alpha()[i];
    RingElem acc = RingElem::constant(u.context(), 2) * lift(binary);
    for (std::size_t j = 0; j < u.s(); ++j) acc += u.beta()[j] * v.beta()[j];
    return acc;
}

class MixedMatrix {
   public:
    MixedMatrix(ContextPtr ctx, std::size_t r, std::size_t s) : ctx_(std::move(ctx)), r_(r), s_(s) {}
    MixedMatrix(ContextPtr ctx, std::size_t r, std::size_t s, std::vector<MixedWord> rows)
        : MixedMatrix(std::move(ctx), r, s) {
        for (auto& w : rows) add_row(std::move(w));
    }

    const ContextPtr& context() const noexcept { return ctx_; }
    std::size_t r() const noexcept { return r_; }
    std::size_t s() const noexcept { return s_; }
    std::size_t rows() const noexcept { return rows_.size(); }
    const MixedWord& row(std::size_t i) const { return rows_.at(i); }
    const std::vector<MixedWord>& row_list() const noexcept { return rows_; }

    void add_row(MixedWord w) {
        if (w.r() != r_ || w.s() != s_) throw Error(ErrorKind::ShapeMismatch, "row length does not match (r, s)");
        if (!FieldElem::same_context(w.context(), ctx_)) throw Error(ErrorKind::ContextMismatch, "row over a different ring");
        rows_.push_back(std::move(w));
    }

    friend bool operator==(const MixedMatrix& a, const MixedMatrix& b) {
        return a.r_ == b.r_ && a.s_ == b.s_ && a.rows_ == b.rows_;
    }

   private:
    ContextPtr ctx_;
    std::size_t r_;
    std::size_t s_;
    std::vector<MixedWord> rows_;
};

/// Power-of-two code size held as its exponent.
struct Cardinality {
    std::uint64_t log2 = 0;

    bool fits_u64() const noexcept { return log2 < 64; }
    std::uint64_t value() const {
        if (!fits_u64()) throw Error(ErrorKind::InvalidArgument, "cardinality 2^" + std::to_string(log2) + " exceeds 64 bits");
        return std::uint64_t{1} << log2;
    }
    std::string to_string() const {
        std::string digits = "1";  // little-endian decimal digits
        for (std::uint64_t i = 0; i < log2; ++i) {
            int carry = 0;
            for (auto& ch : digits) {
                const int d = (ch - '0') * 2 + carry;
                ch = static_cast<char>('0' + d % 10);
                carry = d / 10;
            }
            if (carry) digits.push_back(static_cast<char>('0' + carry));
        }
        return {digits.rbegin(), digits.rend()};
    }
    friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

struct CodeType {
    std::size_t r = 0, s = 0, k0 = 0, k1 = 0, k2 = 0;

    bool valid() const noexcept { return k0 <= r && k1 + k2 <= s; }
    std::string to_string() const {
        return "(" + std::to_string(r) + "," + std::to_string(s) + ";" + std::to_string(k0) + ";" + std::to_string(k1) +
               "," + std::to_string(k2) + ")";
    }
    friend bool operator==(const CodeType&, const CodeType&) = default;
};

/// |C| = 2^{m(k0 + 2 k1 + k2)}
inline Cardinality cardinality(const CodeType& ct, int m) {
    if (!ct.valid()) throw Error(ErrorKind::InvalidArgument, "invalid code type " + ct.to_string());
    return {static_cast<std::uint64_t>(m) * (ct.k0 + 2 * ct.k1 + ct.k2)};
}

/// Type of the dual: (r, s; r - k0; s - k1 - k2, k2)
inline CodeType dual_type(const CodeType& ct) {
    if (!ct.valid()) throw Error(ErrorKind::InvalidArgument, "invalid code type " + ct.to_string());
    return {ct.r, ct.s, ct.r - ct.k0, ct.s - ct.k1 - ct.k2, ct.k2};
}

template <class E>
using Block = std::vector<std::vector<E>>;

/// Generator matrix in the block layout
///
///   [ I_k0  A01bar | 0     0      2T    ]
///   [ 0     S      | I_k1  A01    A02   ]
///   [ 0     0      | 0     2I_k2  2A12  ]
///
/// Column j of g_std is column binary_perm[j] (resp. quaternary_perm[j]) of the input.
struct StandardFormResult {
    MixedMatrix g_std;
    std::vector<std::size_t> binary_perm;
    std::vector<std::size_t> quaternary_perm;
    CodeType code_type;

    Block<FieldElem> a01_bar() const { return field_block(0, ct().k0, ct().k0, ct().r); }
    Block<RingElem> t() const { return halved_block(0, ct().k0, ct().k1 + ct().k2, ct().s); }
    Block<FieldElem> s_block() const { return field_block(ct().k0, ct().k0 + ct().k1, ct().k0, ct().r); }
    Block<RingElem> a01() const { return ring_block(ct().k0, ct().k0 + ct().k1, ct().k1, ct().k1 + ct().k2); }
    Block<RingElem> a02() const { return ring_block(ct().k0, ct().k0 + ct().k1, ct().k1 + ct().k2, ct().s); }
    Block<RingElem> a12() const {
        const auto top = ct().k0 + ct().k1;
        return halved_block(top, top + ct().k2, ct().k1 + ct().k2, ct().s);
    }

    bool identity_permutation() const {
        for (std::size_t i = 0; i < binary_perm.size(); ++i)
            if (binary_perm[i] != i) return false;
        for (std::size_t i = 0; i < quaternary_perm.size(); ++i)
            if (quaternary_perm[i] != i) return false;
        return true;
    }

   private:
    const CodeType& ct() const noexcept { return code_type; }
    Block<FieldElem> field_block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
        Block<FieldElem> out;
        for (auto i = r0; i < r1; ++i) out.emplace_back(g_std.row(i).alpha().begin() + c0, g_std.row(i).alpha().begin() + c1);
        return out;
    }
    Block<RingElem> ring_block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
        Block<RingElem> out;
        for (auto i = r0; i < r1; ++i) out.emplace_back(g_std.row(i).beta().begin() + c0, g_std.row(i).beta().begin() + c1);
        return out;
    }
    // Entries 2y are returned as y with {0,1} coefficients.
    Block<RingElem> halved_block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
        auto out = ring_block(r0, r1, c0, c1);
        for (auto& row : out) {
            for (auto& e : row) {
                Coeffs k = e.coeffs();
                for (auto& c : k) c = static_cast<std::uint8_t>(c / 2);
                e = RingElem::from_coeffs(e.context(), k);
            }
        }
        return out;
    }
};

/// Returns the word with column j taken from column perm[j] of w.
inline MixedWord permute_columns(const MixedWord& w, const std::vector<std::size_t>& binary_perm,
                                 const std::vector<std::size_t>& quaternary_perm) {
    if (binary_perm.size() != w.r() || quaternary_perm.size() != w.s())
        throw Error(ErrorKind::ShapeMismatch, "permutation length does not match the word");
    std::vector<FieldElem> alpha;
    std::vector<RingElem> beta;
    for (auto j : binary_perm) alpha.push_back(w.alpha().at(j));
    for (auto j : quaternary_perm) beta.push_back(w.beta().at(j));
    return MixedWord(w.context(), std::move(alpha), std::move(beta));
}

inline MixedMatrix permute_columns(const MixedMatrix& m, const std::vector<std::size_t>& binary_perm,
                                   const std::vector<std::size_t>& quaternary_perm) {
    MixedMatrix out(m.context(), m.r(), m.s());
    for (const auto& w : m.row_list()) out.add_row(permute_columns(w, binary_perm, quaternary_perm));
    return out;
}

/// Inverse of permute_columns: column perm[j] of the result is column j of w.
inline MixedWord unpermute_columns(const MixedWord& w, const std::vector<std::size_t>& binary_perm,
                                   const std::vector<std::size_t>& quaternary_perm) {
    if (binary_perm.size() != w.r() || quaternary_perm.size() != w.s())
        throw Error(ErrorKind::ShapeMismatch, "permutation length does not match the word");
    MixedWord out = w;
    for (std::size_t j = 0; j < binary_perm.size(); ++j) out.alpha().at(binary_perm[j]) = w.alpha()[j];
    for (std::size_t j = 0; j < quaternary_perm.size(); ++j) out.beta().at(quaternary_perm[j]) = w.beta()[j];
    return out;
}

inline MixedMatrix unpermute_columns(const MixedMatrix& m, const std::vector<std::size_t>& binary_perm,
                                     const std::vector<std::size_t>& quaternary_perm) {
    MixedMatrix out(m.context(), m.r(), m.s());
    for (const auto& w : m.row_list()) out.add_row(unpermute_columns(w, binary_perm, quaternary_perm));
    return out;
}

namespace detail {

// Entry 2y of the 2-torsion part, returned as reduce(y).
inline FieldElem half_residue(const RingElem& e) {
    Coeffs k = e.coeffs();
    for (auto& c : k) c = static_cast<std::uint8_t>(c / 2);
    return FieldElem::from_coeffs(e.context(), k);
}

}  // namespace detail

/// Row-reduces M to the block layout above.
///
/// Quaternary unit pivots are taken first (leftmost column holding a unit in
/// any unprocessed row, first such row), normalized to 1 and cleared from
/// every other row. The remaining rows lie in F^r x 2R^s, which is treated as
/// an F-vector space and brought to reduced echelon form with binary columns
/// ahead of quaternary ones: binary pivots give the k0 block, quaternary ones
/// the k2 block. Finally the k0 pivot columns are cleared from the k1 rows.
inline StandardFormResult standard_form(const MixedMatrix& input) {
    const auto& ctx = input.context();
    const std::size_t r = input.r();
    const std::size_t s = input.s();

    std::vector<MixedWord> pending = input.row_list();
    std::vector<MixedWord> k1_rows;
    std::vector<std::size_t> k1_cols;
    std::vector<bool> q_used(s, false);

    for (;;) {
        std::optional<std::pair<std::size_t, std::size_t>> pivot;  // (row, column)
        for (std::size_t c = 0; c < s && !pivot; ++c) {
            if (q_used[c]) continue;
            for (std::size_t i = 0; i < pending.size(); ++i) {
                if (pending[i].beta()[c].is_unit()) {
                    pivot = {i, c};
                    break;
                }
            }
        }
        if (!pivot) break;
        const auto [pi, pc] = *pivot;
        MixedWord prow = scalar_mul(inverse(pending[pi].beta()[pc]), pending[pi]);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pi));
        for (auto& w : pending)
            if (!w.beta()[pc].is_zero()) w -= scalar_mul(w.beta()[pc], prow);
        for (auto& w : k1_rows)
            if (!w.beta()[pc].is_zero()) w -= scalar_mul(w.beta()[pc], prow);
        k1_rows.push_back(std::move(prow));
        k1_cols.push_back(pc);
        q_used[pc] = true;
    }

    // Echelon form of the 2-torsion rows. Column index c < r is binary, c >= r quaternary.
    auto entry = [&](const MixedWord& w, std::size_t c) -> FieldElem {
        return c < r ? w.alpha()[c] : detail::half_residue(w.beta()[c - r]);
    };
    std::vector<std::size_t> pivot_rows;
    std::vector<std::size_t> echelon_cols;
    std::vector<bool> processed(pending.size(), false);
    for (std::size_t c = 0; c < r + s; ++c) {
        std::optional<std::size_t> pi;
        for (std::size_t i = 0; i < pending.size(); ++i) {
            if (!processed[i] && !entry(pending[i], c).is_zero()) {
                pi = i;
                break;
            }
        }
        if (!pi) continue;
        processed[*pi] = true;
        pending[*pi] = scalar_mul(lift(inverse(entry(pending[*pi], c))), pending[*pi]);
        const MixedWord prow = pending[*pi];
        for (std::size_t i = 0; i < pending.size(); ++i) {
            if (i == *pi) continue;
            const auto e = entry(pending[i], c);
            if (!e.is_zero()) pending[i] -= scalar_mul(lift(e), prow);
        }
        pivot_rows.push_back(*pi);
        echelon_cols.push_back(c);
    }
    std::vector<MixedWord> echelon;
    for (auto i : pivot_rows) echelon.push_back(pending[i]);

    std::vector<MixedWord> k0_rows, k2_rows;
    std::vector<std::size_t> k0_cols, k2_cols;
    for (std::size_t i = 0; i < echelon.size(); ++i) {
        if (echelon_cols[i] < r) {
            k0_rows.push_back(echelon[i]);
            k0_cols.push_back(echelon_cols[i]);
        } else {
            k2_rows.push_back(echelon[i]);
            k2_cols.push_back(echelon_cols[i] - r);
        }
    }
    for (std::size_t b = 0; b < k0_rows.size(); ++b) {
        for (auto& w : k1_rows) {
            const auto e = w.alpha()[k0_cols[b]];
            if (!e.is_zero()) w -= scalar_mul(lift(e), k0_rows[b]);
        }
    }

    std::vector<std::size_t> bperm = k0_cols;
    for (std::size_t c = 0; c < r; ++c)
        if (std::find(k0_cols.begin(), k0_cols.end(), c) == k0_cols.end()) bperm.push_back(c);
    std::vector<std::size_t> qperm = k1_cols;
    qperm.insert(qperm.end(), k2_cols.begin(), k2_cols.end());
    for (std::size_t c = 0; c < s; ++c)
        if (std::find(qperm.begin(), qperm.end(), c) == qperm.end()) qperm.push_back(c);

    MixedMatrix g(ctx, r, s);
    for (const auto& w : k0_rows) g.add_row(permute_columns(w, bperm, qperm));
    for (const auto& w : k1_rows) g.add_row(permute_columns(w, bperm, qperm));
    for (const auto& w : k2_rows) g.add_row(permute_columns(w, bperm, qperm));
    return {std::move(g), std::move(bperm), std::move(qperm), CodeType{r, s, k0_rows.size(), k1_rows.size(), k2_rows.size()}};
}

/// Parity-check matrix of a standard-form code, in the same column order as g_std:
///
///   [ -A01bar^T  I_{r-k0} | -2S^T                  0        0          ]
///   [ -T^T       0        | -A02^T + A12^T A01^T   -A12^T   I_{s-k1-k2}]
///   [ 0          0        | -2A01^T                2I_k2    0          ]
///
/// Every row is checked against every row of g_std before returning.
inline MixedMatrix parity_check(const StandardFormResult& sf) {
    const auto& ctx = sf.g_std.context();
    const auto& ct = sf.code_type;
    const std::size_t r = ct.r, s = ct.s, k0 = ct.k0, k1 = ct.k1, k2 = ct.k2;
    const std::size_t free_q = s - k1 - k2;
    const RingElem two = RingElem::constant(ctx, 2);

    const auto a01_bar = sf.a01_bar();
    const auto t = sf.t();
    const auto sb = sf.s_block();
    const auto a01 = sf.a01();
    const auto a02 = sf.a02();
    const auto a12 = sf.a12();

    MixedMatrix h(ctx, r, s);
    for (std::size_t i = 0; i < r - k0; ++i) {
        auto w = MixedWord::zero(ctx, r, s);
        for (std::size_t j = 0; j < k0; ++j) w.alpha()[j] = -a01_bar[j][i];
        w.alpha()[k0 + i] = FieldElem::one(ctx);
        for (std::size_t j = 0; j < k1; ++j) w.beta()[j] = -(two * lift(sb[j][i]));
        h.add_row(std::move(w));
    }
    for (std::size_t i = 0; i < free_q; ++i) {
        auto w = MixedWord::zero(ctx, r, s);
        for (std::size_t j = 0; j < k0; ++j) w.alpha()[j] = -reduce_mod2(t[j][i]);
        for (std::size_t j = 0; j < k1; ++j) {
            RingElem v = -a02[j][i];
            for (std::size_t l = 0; l < k2; ++l) v += a12[l][i] * a01[j][l];
            w.beta()[j] = v;
        }
        for (std::size_t l = 0; l < k2; ++l) w.beta()[k1 + l] = -a12[l][i];
        w.beta()[k1 + k2 + i] = RingElem::one(ctx);
        h.add_row(std::move(w));
    }
    for (std::size_t i = 0; i < k2; ++i) {
        auto w = MixedWord::zero(ctx, r, s);
        for (std::size_t j = 0; j < k1; ++j) w.beta()[j] = -(two * a01[j][i]);
        w.beta()[k1 + i] = two;
        h.add_row(std::move(w));
    }

    for (std::size_t i = 0; i < sf.g_std.rows(); ++i) {
        for (std::size_t j = 0; j < h.rows(); ++j) {
            if (!inner_product(sf.g_std.row(i), h.row(j)).is_zero())
                throw Error(ErrorKind::OrthogonalityCheckFailed,
                            "row " + std::to_string(j) + " of H is not orthogonal to row " + std::to_string(i) + " of G");
        }
    }
    return h;
}

}  // namespace z2z4xi

#endif
