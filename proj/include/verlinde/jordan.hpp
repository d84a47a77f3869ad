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

#pragma once

#include <vector>

#include "verlinde/exactla.hpp"

namespace verlinde {

/// One Jordan chain inside a JordanDecomposition: basis columns
/// [offset, offset+size), ordered from the socle (x b_1 = 0) up to the
/// generator b_size, with x b_k = b_{k-1}.
struct JordanBlock {
    std::size_t size = 0;
    std::size_t offset = 0;
    std::size_t top() const { return offset + size - 1; }
};

/// Jordan basis of a nilpotent matrix: basis^{-1} * x * basis is a direct sum
/// of nilpotent Jordan blocks. jordan_decomposition() lists blocks by
/// decreasing size; hand-built normal forms may use any order.
struct JordanDecomposition {
    FpMatrix basis;
    FpMatrix basis_inv;
    std::vector<JordanBlock> blocks;

    /// Number of blocks of each size; index s holds the count of size-s blocks.
    std::vector<std::size_t> counts_by_size(std::size_t max_size) const {
        std::vector<std::size_t> c(max_size + 1, 0);
        for (const auto& b : blocks)
            if (b.size <= max_size) ++c[b.size];
        return c;
    }

    std::vector<std::size_t> blocks_of_size(std::size_t s) const {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (blocks[i].size == s) idx.push_back(i);
        return idx;
    }
};

inline JordanDecomposition jordan_decomposition(const FpMatrix& x) {
    const std::size_t n = x.rows();
    const Scalar p = x.prime();
    if (x.cols() != n) throw ValidationError("jordan_decomposition: action matrix is not square");

    // kers[k] spans ker x^k
    std::vector<FpMatrix> kers{FpMatrix(n, 0, p)};
    FpMatrix power = FpMatrix::identity(n, p);
    while (kers.back().cols() < n) {
        if (kers.size() > n) throw ValidationError("action matrix is not nilpotent");
        power = power * x;
        kers.push_back(kernel_matrix(power));
        if (kers.back().cols() == kers[kers.size() - 2].cols() && kers.back().cols() < n)
            throw ValidationError("action matrix is not nilpotent");
    }
    const std::size_t height = kers.size() - 1;

    struct Chain {
        std::size_t size;
        std::vector<Scalar> top;
        std::vector<Scalar> current;  // x^{size-k} top at level k
    };
    std::vector<Chain> chains;
    auto apply = [&](const std::vector<Scalar>& v) {
        std::vector<Scalar> out(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += static_cast<std::uint64_t>(x(i, j)) * v[j];
            out[i] = static_cast<Scalar>(acc % p);
        }
        return out;
    };

    for (std::size_t k = height; k >= 1; --k) {
        SpanBuilder span(n, p);
        const FpMatrix& lower = kers[k - 1];
        for (std::size_t j = 0; j < lower.cols(); ++j) span.add(lower.col(j));
        for (auto& c : chains) {
            c.current = apply(c.current);
            span.add(c.current);
        }
        const FpMatrix& level = kers[k];
        for (std::size_t j = 0; j < level.cols(); ++j) {
            auto v = level.col(j);
            if (span.add(v)) chains.push_back({k, v, v});
        }
    }

    JordanDecomposition d;
    d.basis = FpMatrix(n, n, p);
    std::size_t offset = 0;
    for (const auto& c : chains) {
        std::vector<Scalar> v = c.top;
        for (std::size_t k = c.size; k >= 1; --k) {
            for (std::size_t i = 0; i < n; ++i) d.basis(i, offset + k - 1) = v[i];
            if (k > 1) v = apply(v);
        }
        d.blocks.push_back({c.size, offset});
        offset += c.size;
    }
    if (offset != n) throw Error("jordan_decomposition: chain bookkeeping failed");
    d.basis_inv = inverse(d.basis);
    return d;
}

/// Nilpotent action of a direct sum of Jordan blocks with the given sizes,
/// in the order given. Basis inside each block runs socle first.
inline FpMatrix jordan_block_action(const std::vector<std::size_t>& sizes, Scalar p) {
    std::size_t n = 0;
    for (auto s : sizes) n += s;
    FpMatrix x(n, n, p);
    std::size_t off = 0;
    for (auto s : sizes) {
        for (std::size_t k = 1; k < s; ++k) x(off + k - 1, off + k) = 1;
        off += s;
    }
    return x;
}

}  // namespace verlinde
