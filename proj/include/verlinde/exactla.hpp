/*
   Copyright 2026 The verlinde authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file exactla.hpp
 * @brief Dense exact linear algebra over a prime field F_p.
 *
 * Everything is row-major and deterministic: Gaussian elimination always
 * picks the first nonzero entry of the current column as pivot, so bases
 * returned by kernel_basis(), column_basis() and friends depend only on the
 * input matrix.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "verlinde/error.hpp"

namespace verlinde {

using Scalar = std::uint32_t;

inline bool is_prime(Scalar p) {
    if (p < 2) return false;
    for (Scalar d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void require_prime(Scalar p) {
    if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
    if (p > 65521) throw ValidationError("p = " + std::to_string(p) + " is too large (limit 65521)");
}

inline Scalar mod_mul(Scalar a, Scalar b, Scalar p) {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p);
}

inline Scalar mod_pow(Scalar a, std::uint64_t e, Scalar p) {
    Scalar r = 1 % p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline Scalar mod_inv(Scalar a, Scalar p) {
    if (a % p == 0) throw Error("inverse of zero in F_" + std::to_string(p));
    return mod_pow(a % p, p - 2, p);
}

inline Scalar reduce(long long v, Scalar p) {
    const long long r = v % static_cast<long long>(p);
    return static_cast<Scalar>(r < 0 ? r + p : r);
}

/// Dense matrix over F_p. The prime travels with the matrix.
class FpMatrix {
  public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, Scalar p) : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}
    FpMatrix(std::size_t rows, std::size_t cols, Scalar p, std::vector<Scalar> entries)
        : rows_(rows), cols_(cols), p_(p), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_) throw ValidationError("matrix entry count does not match rows*cols");
        for (Scalar& v : a_)
            if (v >= p_) throw ValidationError("matrix entry out of range [0,p)");
    }

    static FpMatrix identity(std::size_t n, Scalar p) {
        FpMatrix m(n, n, p);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Integer literal rows, reduced mod p.
    static FpMatrix from_rows(Scalar p, std::initializer_list<std::initializer_list<long long>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows.begin()->size() : 0;
        FpMatrix m(r, c, p);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw ValidationError("ragged matrix literal");
            std::size_t j = 0;
            for (long long v : row) m(i, j++) = reduce(v, p);
            ++i;
        }
        return m;
    }

    static FpMatrix column(Scalar p, std::span<const Scalar> v) {
        FpMatrix m(v.size(), 1, p);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i] % p;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar prime() const { return p_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    Scalar operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    std::span<Scalar> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
    const std::vector<Scalar>& entries() const { return a_; }

    std::vector<Scalar> col(std::size_t c) const {
        std::vector<Scalar> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.a_ == b.a_;
    }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](Scalar v) { return v == 0; });
    }
    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
        return true;
    }

    FpMatrix& operator+=(const FpMatrix& o) {
        check_same_shape(o, "+");
        for (std::size_t i = 0; i < a_.size(); ++i) {
            const Scalar s = a_[i] + o.a_[i];
            a_[i] = s >= p_ ? s - p_ : s;
        }
        return *this;
    }
    FpMatrix& operator-=(const FpMatrix& o) {
        check_same_shape(o, "-");
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = a_[i] >= o.a_[i] ? a_[i] - o.a_[i] : a_[i] + p_ - o.a_[i];
        return *this;
    }
    friend FpMatrix operator+(FpMatrix a, const FpMatrix& b) { return a += b; }
    friend FpMatrix operator-(FpMatrix a, const FpMatrix& b) { return a -= b; }

    FpMatrix scaled(Scalar s) const {
        FpMatrix m = *this;
        s %= p_;
        for (Scalar& v : m.a_) v = mod_mul(v, s, p_);
        return m;
    }
    FpMatrix operator-() const { return scaled(p_ - 1); }

    friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
        if (a.cols_ != b.rows_)
            throw Error("matrix product shape mismatch: " + a.shape() + " * " + b.shape());
        if (a.p_ != b.p_) throw Error("matrix product over different primes");
        FpMatrix m(a.rows_, b.cols_, a.p_);
        std::vector<std::uint64_t> acc(b.cols_);
        const std::uint64_t p = a.p_;
        // Accumulate in 64 bits and reduce lazily; (p-1)^2 * 2^k stays below 2^63 for p < 2^16.
        const std::size_t flush_every = std::max<std::size_t>(1, (std::uint64_t{1} << 62) / ((p - 1) * (p - 1) + 1));
        for (std::size_t i = 0; i < a.rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            std::size_t pending = 0;
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const std::uint64_t aik = a(i, k);
                if (!aik) continue;
                const Scalar* brow = b.a_.data() + k * b.cols_;
                for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += aik * brow[j];
                if (++pending == flush_every) {
                    for (auto& v : acc) v %= p;
                    pending = 0;
                }
            }
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) = static_cast<Scalar>(acc[j] % p);
        }
        return m;
    }

    FpMatrix transpose() const {
        FpMatrix t(cols_, rows_, p_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    FpMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw Error("block out of range");
        FpMatrix m(nr, nc, p_);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }
    FpMatrix cols_range(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }
    FpMatrix rows_range(std::size_t r0, std::size_t nr) const { return block(r0, 0, nr, cols_); }

    FpMatrix select_cols(std::span<const std::size_t> idx) const {
        FpMatrix m(rows_, idx.size(), p_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }
    FpMatrix select_rows(std::span<const std::size_t> idx) const {
        FpMatrix m(idx.size(), cols_, p_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            std::copy_n(a_.data() + idx[i] * cols_, cols_, m.a_.data() + i * cols_);
        return m;
    }

    void set_block(std::size_t r0, std::size_t c0, const FpMatrix& m) {
        if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw Error("set_block out of range");
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
    }
    void add_block(std::size_t r0, std::size_t c0, const FpMatrix& m) {
        if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw Error("add_block out of range");
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) {
                Scalar& v = (*this)(r0 + i, c0 + j);
                const Scalar s = v + m(i, j);
                v = s >= p_ ? s - p_ : s;
            }
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  private:
    void check_same_shape(const FpMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
            throw Error(std::string("matrix ") + op + " shape mismatch: " + shape() + " vs " + o.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Scalar p_ = 2;
    std::vector<Scalar> a_;
};

inline FpMatrix hstack(std::span<const FpMatrix> ms, std::size_t rows, Scalar p) {
    std::size_t cols = 0;
    for (const auto& m : ms) {
        if (m.rows() != rows) throw Error("hstack row mismatch");
        cols += m.cols();
    }
    FpMatrix out(rows, cols, p);
    std::size_t c = 0;
    for (const auto& m : ms) {
        out.set_block(0, c, m);
        c += m.cols();
    }
    return out;
}

inline FpMatrix hstack(const FpMatrix& a, const FpMatrix& b) {
    const FpMatrix ms[] = {a, b};
    return hstack(ms, a.rows(), a.prime());
}

inline FpMatrix vstack(std::span<const FpMatrix> ms, std::size_t cols, Scalar p) {
    std::size_t rows = 0;
    for (const auto& m : ms) {
        if (m.cols() != cols) throw Error("vstack column mismatch");
        rows += m.rows();
    }
    FpMatrix out(rows, cols, p);
    std::size_t r = 0;
    for (const auto& m : ms) {
        out.set_block(r, 0, m);
        r += m.rows();
    }
    return out;
}

inline FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
    const FpMatrix ms[] = {a, b};
    return vstack(ms, a.cols(), a.prime());
}

inline FpMatrix block_diag(std::span<const FpMatrix> ms, Scalar p) {
    std::size_t r = 0, c = 0;
    for (const auto& m : ms) {
        r += m.rows();
        c += m.cols();
    }
    FpMatrix out(r, c, p);
    r = c = 0;
    for (const auto& m : ms) {
        out.set_block(r, c, m);
        r += m.rows();
        c += m.cols();
    }
    return out;
}

/// Kronecker product; row-major index (i,k) -> i*b.rows()+k.
inline FpMatrix kron(const FpMatrix& a, const FpMatrix& b) {
    if (a.prime() != b.prime()) throw Error("kron over different primes");
    const Scalar p = a.prime();
    FpMatrix m(a.rows() * b.rows(), a.cols() * b.cols(), p);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar aij = a(i, j);
            if (!aij) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m(i * b.rows() + k, j * b.cols() + l) = mod_mul(aij, b(k, l), p);
        }
    return m;
}

inline FpMatrix matrix_power(const FpMatrix& m, std::size_t e) {
    FpMatrix r = FpMatrix::identity(m.rows(), m.prime());
    for (std::size_t i = 0; i < e; ++i) r = r * m;
    return r;
}

inline Scalar trace(const FpMatrix& m) {
    Scalar t = 0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t = (t + m(i, i)) % m.prime();
    return t;
}

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    FpMatrix reduced;
    std::vector<std::size_t> pivots;
};

inline Echelon rref(FpMatrix m) {
    const Scalar p = m.prime();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        const Scalar inv = mod_inv(m(r, c), p);
        auto prow = m.row(r);
        for (std::size_t j = c; j < m.cols(); ++j) prow[j] = mod_mul(prow[j], inv, p);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const Scalar f = m(i, c);
            if (!f) continue;
            auto irow = m.row(i);
            const Scalar nf = p - f;
            for (std::size_t j = c; j < m.cols(); ++j)
                if (prow[j]) irow[j] = static_cast<Scalar>((irow[j] + static_cast<std::uint64_t>(nf) * prow[j]) % p);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

/// Rank via forward elimination only.
inline std::size_t rank(FpMatrix m) {
    const Scalar p = m.prime();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        const Scalar inv = mod_inv(m(r, c), p);
        auto prow = m.row(r);
        for (std::size_t j = c; j < m.cols(); ++j) prow[j] = mod_mul(prow[j], inv, p);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const Scalar f = m(i, c);
            if (!f) continue;
            auto irow = m.row(i);
            const Scalar nf = p - f;
            for (std::size_t j = c; j < m.cols(); ++j)
                if (prow[j]) irow[j] = static_cast<Scalar>((irow[j] + static_cast<std::uint64_t>(nf) * prow[j]) % p);
        }
        ++r;
    }
    return r;
}

/// Right null space as the columns of a cols x (cols - rank) matrix. Basis vector
/// k has a 1 in the k-th free column and zeros in the other free columns.
inline FpMatrix kernel_matrix(const FpMatrix& m) {
    const Scalar p = m.prime();
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FpMatrix k(m.cols(), free_cols.size(), p);
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k(free_cols[f], f) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            const Scalar v = e.reduced(r, free_cols[f]);
            if (v) k(e.pivots[r], f) = p - v;
        }
    }
    return k;
}

/// Right null space as a list of column vectors.
inline std::vector<FpMatrix> kernel_basis(const FpMatrix& m) {
    const FpMatrix k = kernel_matrix(m);
    std::vector<FpMatrix> out;
    for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(k.cols_range(j, 1));
    return out;
}

/// Indices of the columns of m that form the greedy (leftmost) column basis.
inline std::vector<std::size_t> pivot_columns(const FpMatrix& m) {
    // Column pivots of m are exactly the pivots of its echelon form.
    return rref(m).pivots;
}

/// The leftmost maximal independent set of columns of m.
inline FpMatrix column_basis(const FpMatrix& m) {
    const auto idx = pivot_columns(m);
    return m.select_cols(idx);
}

/// Standard basis vectors e_i (smallest i first) completing the columns of a
/// full-column-rank matrix b to a basis of F_p^{rows}.
inline FpMatrix complement_columns(const FpMatrix& b) {
    const std::size_t n = b.rows();
    FpMatrix aug = hstack(b, FpMatrix::identity(n, b.prime()));
    const auto piv = pivot_columns(aug);
    std::vector<std::size_t> extra;
    for (auto c : piv)
        if (c >= b.cols()) extra.push_back(c - b.cols());
    FpMatrix out(n, extra.size(), b.prime());
    for (std::size_t j = 0; j < extra.size(); ++j) out(extra[j], j) = 1;
    return out;
}

/// Some X with a*X == b, or nullopt when the system is inconsistent.
inline std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows()) throw Error("solve: row mismatch " + a.shape() + " vs " + b.shape());
    const Scalar p = a.prime();
    const Echelon e = rref(hstack(a, b));
    FpMatrix x(a.cols(), b.cols(), p);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const std::size_t c = e.pivots[r];
        if (c >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = e.reduced(r, a.cols() + j);
    }
    return x;
}

inline FpMatrix inverse(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
    auto x = solve(m, FpMatrix::identity(m.rows(), m.prime()));
    if (!x || !(m * *x).is_identity()) throw Error("matrix is singular");
    return *x;
}

/// L with L*m == I for m of full column rank.
inline FpMatrix left_inverse(const FpMatrix& m) {
    auto x = solve(m.transpose(), FpMatrix::identity(m.cols(), m.prime()));
    if (!x) throw Error("left_inverse: matrix does not have full column rank");
    return x->transpose();
}

/// R with m*R == I for m of full row rank.
inline FpMatrix right_inverse(const FpMatrix& m) {
    auto x = solve(m, FpMatrix::identity(m.rows(), m.prime()));
    if (!x) throw Error("right_inverse: matrix does not have full row rank");
    return *x;
}

/// m == c*f with c of full column rank r and f of full row rank r.
struct RankFactorization {
    FpMatrix c;
    FpMatrix f;
};

inline RankFactorization rank_factorization(const FpMatrix& m) {
    const Echelon e = rref(m);
    const std::size_t r = e.pivots.size();
    return {m.select_cols(e.pivots), e.reduced.rows_range(0, r)};
}

/// Incremental independence test. Each stored vector is reduced against the
/// earlier ones, so a new vector is tested with one pass over the store.
class SpanBuilder {
  public:
    SpanBuilder(std::size_t n, Scalar p) : n_(n), p_(p) {}

    /// Adds v if it is independent of the current span; returns whether it was added.
    bool add(std::vector<Scalar> v) {
        reduce_in_place(v);
        std::size_t piv = 0;
        while (piv < n_ && v[piv] == 0) ++piv;
        if (piv == n_) return false;
        const Scalar inv = mod_inv(v[piv], p_);
        for (auto& x : v) x = mod_mul(x, inv, p_);
        basis_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

    bool contains(std::vector<Scalar> v) const {
        reduce_in_place(v);
        return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
    }

    std::size_t size() const { return basis_.size(); }

  private:
    void reduce_in_place(std::vector<Scalar>& v) const {
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            const Scalar f = v[pivots_[b]];
            if (!f) continue;
            const Scalar nf = p_ - f;
            const auto& bv = basis_[b];
            for (std::size_t j = 0; j < n_; ++j)
                if (bv[j]) v[j] = static_cast<Scalar>((v[j] + static_cast<std::uint64_t>(nf) * bv[j]) % p_);
        }
    }

    std::size_t n_;
    Scalar p_;
    std::vector<std::vector<Scalar>> basis_;
    std::vector<std::size_t> pivots_;
};

/// True iff every column of `small` lies in the column span of `big`.
inline bool span_contains(const FpMatrix& big, const FpMatrix& small) {
    return rank(hstack(big, small)) == rank(big);
}

}  // namespace verlinde
