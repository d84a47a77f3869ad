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

// Independent reference routines for the tests. Nothing here calls the
// library's elimination code; matrices are plain nested vectors.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "verlinde/exactla.hpp"

namespace oracle {

using Mat = std::vector<std::vector<long long>>;

inline long long md(long long a, long long p) { return ((a % p) + p) % p; }

inline Mat to_mat(const verlinde::FpMatrix& m) {
    Mat out(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<long long>(c, 0)); }

inline Mat eye(std::size_t n) {
    Mat m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline std::size_t cols_of(const Mat& m, std::size_t fallback = 0) { return m.empty() ? fallback : m[0].size(); }

inline Mat mul(const Mat& a, const Mat& b, long long p, std::size_t inner_cols = 0) {
    const std::size_t n = a.size(), k = b.size(), m = cols_of(b, inner_cols);
    Mat c = zeros(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (a[i][t])
                for (std::size_t j = 0; j < m; ++j) c[i][j] = (c[i][j] + a[i][t] * b[t][j]) % p;
    return c;
}

inline Mat add(const Mat& a, const Mat& b, long long p) {
    Mat c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] = md(a[i][j] + b[i][j], p);
    return c;
}

inline Mat sub(const Mat& a, const Mat& b, long long p) {
    Mat c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] = md(a[i][j] - b[i][j], p);
    return c;
}

inline Mat kron(const Mat& a, const Mat& b) {
    const std::size_t ar = a.size(), ac = cols_of(a), br = b.size(), bc = cols_of(b);
    Mat c = zeros(ar * br, ac * bc);
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j)
            for (std::size_t k = 0; k < br; ++k)
                for (std::size_t l = 0; l < bc; ++l) c[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    return c;
}

inline long long inv(long long a, long long p) {
    long long r = 1, e = p - 2;
    a = md(a, p);
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

/// Column-oriented elimination (the library eliminates rows).
inline std::size_t rank(Mat m, long long p) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    std::vector<bool> used(cols, false);
    for (std::size_t i = 0; i < rows; ++i) {
        std::size_t piv = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (!used[j] && md(m[i][j], p)) {
                piv = j;
                break;
            }
        if (piv == cols) continue;
        used[piv] = true;
        ++r;
        const long long iv = inv(m[i][piv], p);
        for (std::size_t j = 0; j < cols; ++j) {
            if (j == piv || !md(m[i][j], p)) continue;
            const long long f = md(m[i][j], p) * iv % p;
            for (std::size_t k = i; k < rows; ++k) m[k][j] = md(m[k][j] - f * m[k][piv], p);
        }
    }
    return r;
}

/// Number of solutions of m v = 0 by enumerating F_p^n; log_p of it.
inline std::size_t brute_kernel_dim(const Mat& m, std::size_t n, long long p) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(p);
    std::size_t count = 0;
    std::vector<long long> v(n, 0);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = static_cast<long long>(c % p);
            c /= p;
        }
        bool zero = true;
        for (const auto& row : m) {
            long long acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += row[j] * v[j];
            if (acc % p) {
                zero = false;
                break;
            }
        }
        count += zero;
    }
    std::size_t d = 0;
    while (count > 1) {
        count /= p;
        ++d;
    }
    return d;
}

/// Null space basis (as columns) by column reduction of [m; I].
inline std::vector<std::vector<long long>> null_space(const Mat& m, std::size_t n, long long p) {
    const std::size_t rows = m.size();
    Mat aug = zeros(rows + n, n);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = md(m[i][j], p);
    for (std::size_t j = 0; j < n; ++j) aug[rows + j][j] = 1;
    std::size_t lead = 0;
    for (std::size_t i = 0; i < rows && lead < n; ++i) {
        std::size_t piv = n;
        for (std::size_t j = lead; j < n; ++j)
            if (aug[i][j]) {
                piv = j;
                break;
            }
        if (piv == n) continue;
        for (auto& row : aug) std::swap(row[piv], row[lead]);
        const long long iv = inv(aug[i][lead], p);
        for (auto& row : aug) row[lead] = row[lead] * iv % p;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == lead || !aug[i][j]) continue;
            const long long f = aug[i][j];
            for (auto& row : aug) row[j] = md(row[j] - f * row[lead], p);
        }
        ++lead;
    }
    std::vector<std::vector<long long>> out;
    for (std::size_t j = lead; j < n; ++j) {
        std::vector<long long> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = aug[rows + k][j];
        out.push_back(v);
    }
    return out;
}

inline Mat jordan_block(std::size_t s) {
    Mat x = zeros(s, s);
    for (std::size_t k = 0; k + 1 < s; ++k) x[k][k + 1] = 1;
    return x;
}

/// Block counts counts[s-1] from ranks of powers of x.
inline std::vector<std::size_t> jordan_counts(const Mat& x, long long p, std::size_t max_size) {
    const std::size_t n = x.size();
    std::vector<std::size_t> r(max_size + 2);
    Mat pw = eye(n);
    for (std::size_t k = 0; k < r.size(); ++k) {
        r[k] = rank(pw, p);
        pw = mul(pw, x, p, n);
    }
    std::vector<std::size_t> c(max_size, 0);
    for (std::size_t s = 1; s <= max_size; ++s) c[s - 1] = (r[s - 1] - r[s]) - (r[s] - r[s + 1]);
    return c;
}

/// g - 1 for g = (1 + x_a) ⊗ (1 + x_b), the diagonal action of the generator.
inline Mat group_tensor(const Mat& xa, const Mat& xb, long long p) {
    const Mat ga = add(eye(xa.size()), xa, p), gb = add(eye(xb.size()), xb, p);
    return sub(kron(ga, gb), eye(xa.size() * xb.size()), p);
}

/// Closed-form fusion of simples L_i ⊗ L_j as multiplicities of L_1..L_{p-1}.
inline std::vector<std::size_t> fusion_closed_form(long long i, long long j, long long p) {
    std::vector<std::size_t> out(p - 1, 0);
    const long long terms = std::min(std::min(i, j), std::min(p - i, p - j));
    for (long long k = 1; k <= terms; ++k) ++out[std::llabs(i - j) + 2 * k - 2];
    return out;
}

/// Module maps a -> b (f x_a = x_b f) as flat row-major coefficient vectors.
inline std::vector<Mat> module_homs(const Mat& xa, const Mat& xb, long long p) {
    const std::size_t m = xa.size(), n = xb.size();
    // Unknown f(r, s) at index r*m + s.
    Mat sys;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < m; ++s) {
            std::vector<long long> row(n * m, 0);
            for (std::size_t t = 0; t < m; ++t) row[r * m + t] = md(row[r * m + t] + xa[t][s], p);
            for (std::size_t t = 0; t < n; ++t) row[t * m + s] = md(row[t * m + s] - xb[r][t], p);
            sys.push_back(row);
        }
    std::vector<Mat> out;
    for (const auto& v : null_space(sys, n * m, p)) {
        Mat f = zeros(n, m);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < m; ++s) f[r][s] = v[r * m + s];
        out.push_back(f);
    }
    return out;
}

inline long long trace(const Mat& m, long long p) {
    long long t = 0;
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return md(t, p);
}

/// Permutation of factors i, i+1 on the n-fold tensor power of a d-dim space.
inline Mat adjacent_swap(std::size_t d, std::size_t n, std::size_t i) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= d;
    Mat s = zeros(total, total);
    std::vector<std::size_t> digits(n);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t k = n; k-- > 0;) {
            digits[k] = c % d;
            c /= d;
        }
        std::swap(digits[i], digits[i + 1]);
        std::size_t out = 0;
        for (std::size_t k = 0; k < n; ++k) out = out * d + digits[k];
        s[out][code] = 1;
    }
    return s;
}

/// Multiplicities of L_m in S^n(M) (coinvariants) and Γ^n(M) (invariants) for
/// a C_p-module M, computed on Hom(J_m, M^{⊗n}) modulo the trace-pairing
/// radical. Returns {sym, divided}, each of length p-1.
struct PowerMults {
    std::vector<std::size_t> sym;
    std::vector<std::size_t> divided;
};

inline PowerMults naive_powers(const Mat& x, std::size_t n, long long p) {
    const std::size_t d = x.size();
    Mat t = zeros(1, 1);
    t[0][0] = 0;
    for (std::size_t k = 0; k < n; ++k) t = group_tensor(t, x, p);
    std::vector<Mat> swaps;
    for (std::size_t i = 0; i + 1 < n; ++i) swaps.push_back(adjacent_swap(d, n, i));
    const std::size_t tdim = t.size();
    PowerMults out{std::vector<std::size_t>(p - 1, 0), std::vector<std::size_t>(p - 1, 0)};
    for (std::size_t m = 1; m < static_cast<std::size_t>(p); ++m) {
        const Mat jm = jordan_block(m);
        const auto homs = module_homs(jm, t, p);   // J_m -> T
        const auto backs = module_homs(t, jm, p);  // T -> J_m
        auto pairing_row = [&](const Mat& h) {
            std::vector<long long> row;
            for (const auto& g : backs) row.push_back(trace(mul(g, h, p, m), p));
            return row;
        };
        Mat pairing;
        for (const auto& h : homs) pairing.push_back(pairing_row(h));
        const std::size_t hom_dim = rank(pairing, p);
        Mat moved;
        for (const auto& s : swaps)
            for (const auto& h : homs) moved.push_back(pairing_row(sub(mul(s, h, p, m), h, p)));
        out.sym[m - 1] = hom_dim - rank(moved, p);
        // Invariants: coefficient vectors c with pairing_row((σ-1) Σ c_a h_a) = 0.
        const std::size_t nb = backs.size();
        Mat constraints;
        for (const auto& s : swaps)
            for (std::size_t b = 0; b < nb; ++b) {
                std::vector<long long> row;
                for (const auto& h : homs) row.push_back(trace(mul(backs[b], sub(mul(s, h, p, m), h, p), p, m), p));
                constraints.push_back(row);
            }
        const std::size_t sols = homs.size() - (constraints.empty() ? 0 : rank(constraints, p));
        const std::size_t radical = homs.size() - hom_dim;
        out.divided[m - 1] = sols - radical;
    }
    (void)tdim;
    return out;
}

inline verlinde::FpMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, verlinde::Scalar p) {
    verlinde::FpMatrix m(r, c, p);
    std::uniform_int_distribution<verlinde::Scalar> dist(0, p - 1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

}  // namespace oracle
