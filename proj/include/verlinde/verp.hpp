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
 * @file verp.hpp
 * @brief Rep C_p over F_p and its semisimplification Ver_p.
 *
 * A C_p-module is a space with a nilpotent x = g - 1, x^p = 0. The group-like
 * coproduct of g gives x⊗1 + 1⊗x + x⊗x on tensor products and the braiding is
 * the flip.
 *
 * Ver_p is modelled without leaving Rep C_p: objects are C_p-modules (which
 * may carry negligible size-p blocks) and morphisms are module maps compared
 * modulo negligible maps. For m < p the multiplicity space of L_m in a module
 * M is ker x^m / (ker x^{m-1} + x ker x^{m+1}); in a Jordan basis it is
 * spanned by the generators of the size-m blocks. A morphism f induces one
 * matrix per m on these spaces ("multiplicity maps"), and f is negligible iff
 * all of them vanish. Kernels, images and cokernels are computed on the
 * multiplicity maps and realized by direct sums of Jordan blocks of size < p.
 */

#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "verlinde/tensorcat.hpp"

namespace verlinde {

/// Isomorphism class of a C_p-module: counts[s] is the number of Jordan
/// blocks of size s+1, for s = 0..p-1.
struct JordanType {
    std::vector<std::size_t> counts;

    std::size_t dim() const {
        std::size_t d = 0;
        for (std::size_t s = 0; s < counts.size(); ++s) d += (s + 1) * counts[s];
        return d;
    }
    friend bool operator==(const JordanType&, const JordanType&) = default;
};

/// An object of Ver_p as multiplicities of the simples L_1..L_{p-1}.
struct VerObject {
    Scalar p = 2;
    std::vector<std::size_t> mults;

    static VerObject zero(Scalar p) { return {p, std::vector<std::size_t>(p - 1, 0)}; }
    static VerObject simple(Scalar p, std::size_t i) {
        if (i < 1 || i >= p) throw ValidationError("simple L_" + std::to_string(i) + " does not exist for p = " + std::to_string(p));
        VerObject v = zero(p);
        v.mults[i - 1] = 1;
        return v;
    }
    bool is_zero() const {
        return std::all_of(mults.begin(), mults.end(), [](std::size_t m) { return m == 0; });
    }
    /// Dimension of the canonical presentation by Jordan blocks.
    std::size_t dim() const {
        std::size_t d = 0;
        for (std::size_t i = 0; i < mults.size(); ++i) d += (i + 1) * mults[i];
        return d;
    }
    friend bool operator==(const VerObject&, const VerObject&) = default;
};

inline VerObject operator+(VerObject a, const VerObject& b) {
    if (a.p != b.p) throw ValidationError("p mismatch in Ver_p direct sum");
    for (std::size_t i = 0; i < a.mults.size(); ++i) a.mults[i] += b.mults[i];
    return a;
}

/// Nilpotent action of a single Jordan block J_s.
inline Module jordan_block(std::size_t s, Scalar p) {
    return Module(jordan_block_action({s}, p));
}

/// Canonical presentation: blocks L_1 first, then L_2, ..., socle-first basis.
inline Module presenting_module(const VerObject& v) {
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < v.mults.size(); ++i) sizes.insert(sizes.end(), v.mults[i], i + 1);
    const FpMatrix x = jordan_block_action(sizes, v.p);
    JordanDecomposition jd;
    jd.basis = FpMatrix::identity(x.rows(), v.p);
    jd.basis_inv = jd.basis;
    std::size_t off = 0;
    for (auto s : sizes) {
        jd.blocks.push_back({s, off});
        off += s;
    }
    return Module(x, std::move(jd));
}

/// x⊗1 + 1⊗x + x⊗x: the action of g - 1 with g acting diagonally.
inline FpMatrix cp_tensor_action(const FpMatrix& a, const FpMatrix& b) {
    const Scalar p = a.prime();
    const FpMatrix ia = FpMatrix::identity(a.rows(), p), ib = FpMatrix::identity(b.rows(), p);
    return kron(a, ib) + kron(ia, b) + kron(a, b);
}

inline JordanType jordan_type(const Module& m) {
    const Scalar p = m.prime();
    const FpMatrix& x = m.action();
    std::vector<std::size_t> r(p + 2, 0);
    FpMatrix power = FpMatrix::identity(m.dim(), p);
    for (std::size_t k = 0; k <= p + 1; ++k) {
        r[k] = rank(power);
        power = power * x;
    }
    if (r[p] != 0) throw ValidationError("module action is not nilpotent of order p (x^p != 0)");
    JordanType t{std::vector<std::size_t>(p, 0)};
    for (std::size_t s = 1; s <= p; ++s) t.counts[s - 1] = (r[s - 1] - r[s]) - (r[s] - r[s + 1]);
    return t;
}

inline JordanType green_tensor(const Module& a, const Module& b) {
    if (a.prime() != b.prime()) throw ValidationError("p mismatch in green_tensor");
    return jordan_type(Module(cp_tensor_action(a.action(), b.action())));
}

/// Drops the negligible size-p blocks.
inline VerObject semisimplify(const JordanType& t) {
    const Scalar p = static_cast<Scalar>(t.counts.size());
    VerObject v = VerObject::zero(p);
    for (std::size_t i = 0; i + 1 < t.counts.size(); ++i) v.mults[i] = t.counts[i];
    return v;
}

/// L_i ⊗ L_j = ⊕_{k=1}^{min(i,j,p-i,p-j)} L_{|i-j|+2k-1}, extended bilinearly.
inline VerObject fuse(const VerObject& a, const VerObject& b) {
    if (a.p != b.p) throw ValidationError("p mismatch in fuse");
    const long p = a.p;
    VerObject out = VerObject::zero(a.p);
    for (long i = 1; i < p; ++i) {
        const std::size_t ma = a.mults[i - 1];
        if (!ma) continue;
        for (long j = 1; j < p; ++j) {
            const std::size_t mb = b.mults[j - 1];
            if (!mb) continue;
            const long terms = std::min({i, j, p - i, p - j});
            for (long k = 1; k <= terms; ++k) out.mults[std::labs(i - j) + 2 * k - 2] += ma * mb;
        }
    }
    return out;
}

/// Rep C_p viewed through its semisimplification.
class VerpCategory {
  public:
    static constexpr const char* kName = "verp";

    explicit VerpCategory(Scalar p) : p_(p) { require_prime(p); }

    Scalar prime() const { return p_; }
    std::string name() const { return kName; }

    Module unit() const { return presenting_module(VerObject::simple(p_, 1)); }
    Module zero() const { return presenting_module(VerObject::zero(p_)); }
    Module object(const VerObject& v) const {
        if (v.p != p_) throw ValidationError("p mismatch");
        return presenting_module(v);
    }

    Module tensor(const Module& a, const Module& b) const {
        check_size(a.dim() * b.dim(), "verp tensor");
        return Module(cp_tensor_action(a.action(), b.action()));
    }
    FpMatrix braiding(const Module& a, const Module& b) const { return swap_matrix(a.dim(), b.dim(), p_); }

    /// Contragredient module: g acts by (g^{-1})^T.
    Module dual(const Module& a) const {
        const std::size_t n = a.dim();
        const FpMatrix& x = a.action();
        FpMatrix ginv = FpMatrix::identity(n, p_), term = FpMatrix::identity(n, p_);
        const FpMatrix minus_x = -x;
        for (Scalar k = 1; k < p_; ++k) {
            term = term * minus_x;
            ginv += term;
        }
        return Module(ginv.transpose() - FpMatrix::identity(n, p_));
    }

    /// Multiplicity of each simple L_1..L_{p-1}.
    IsoClass iso_class(const Module& m) const {
        const auto c = m.jordan().counts_by_size(p_);
        return IsoClass(c.begin() + 1, c.begin() + p_);
    }
    VerObject ver_object(const Module& m) const { return {p_, iso_class(m)}; }

    /// Rows of the inverse Jordan basis reading off the coefficients of the
    /// size-s block generators: the projection onto the L_s multiplicity space.
    FpMatrix coords(const Module& m, std::size_t s) const {
        const auto& jd = m.jordan();
        std::vector<std::size_t> rows;
        for (auto b : jd.blocks_of_size(s)) rows.push_back(jd.blocks[b].top());
        return jd.basis_inv.select_rows(rows);
    }

    /// Generators of the size-s blocks, as columns.
    FpMatrix lifts(const Module& m, std::size_t s) const {
        const auto& jd = m.jordan();
        std::vector<std::size_t> cols;
        for (auto b : jd.blocks_of_size(s)) cols.push_back(jd.blocks[b].top());
        return jd.basis.select_cols(cols);
    }

    /// The map induced by f on the L_s multiplicity spaces.
    FpMatrix multiplicity_map(const Module& dom, const Module& cod, const FpMatrix& f, std::size_t s) const {
        return coords(cod, s) * f * lifts(dom, s);
    }

    /// The module map src -> dst whose multiplicity maps are data[s] (indexed
    /// s = 1..p-1; data[0] ignored). Each size-s block of src is sent onto
    /// size-s blocks of dst; size-p blocks of src go to zero.
    FpMatrix map_from_multiplicities(const Module& src, const Module& dst, const std::vector<FpMatrix>& data) const {
        const auto& js = src.jordan();
        const auto& jt = dst.jordan();
        FpMatrix g(dst.dim(), src.dim(), p_);
        for (std::size_t s = 1; s < p_; ++s) {
            const auto sb = js.blocks_of_size(s);
            const auto tb = jt.blocks_of_size(s);
            if (sb.empty() || tb.empty()) continue;
            const FpMatrix& q = data.at(s);
            if (q.rows() != tb.size() || q.cols() != sb.size())
                throw Error("map_from_multiplicities: data shape mismatch for L_" + std::to_string(s));
            for (std::size_t i = 0; i < sb.size(); ++i) {
                const std::size_t so = js.blocks[sb[i]].offset;
                for (std::size_t j = 0; j < tb.size(); ++j) {
                    const Scalar c = q(j, i);
                    if (!c) continue;
                    const std::size_t to = jt.blocks[tb[j]].offset;
                    for (std::size_t k = 0; k < s; ++k)
                        for (std::size_t r = 0; r < dst.dim(); ++r) {
                            const Scalar v = jt.basis(r, to + k);
                            if (v) g(r, so + k) = (g(r, so + k) + mod_mul(c, v, p_)) % p_;
                        }
                }
            }
        }
        return g * js.basis_inv;
    }

    /// Coset representatives of Hom_{Ver_p}(a, b): one block-to-block map per
    /// pair of equal-size non-negligible blocks.
    std::vector<FpMatrix> hom_basis(const Module& a, const Module& b) const {
        std::vector<FpMatrix> out;
        const auto ca = iso_class(a), cb = iso_class(b);
        for (std::size_t s = 1; s < p_; ++s)
            for (std::size_t j = 0; j < cb[s - 1]; ++j)
                for (std::size_t i = 0; i < ca[s - 1]; ++i) {
                    auto data = empty_data(a, b);
                    data[s](j, i) = 1;
                    out.push_back(map_from_multiplicities(a, b, data));
                }
        return out;
    }

    bool is_morphism(const Module& a, const Module& b, const FpMatrix& f) const { return a.is_map_to(b, f); }

    bool equal(const Module& a, const Module& b, const FpMatrix& f, const FpMatrix& g) const {
        const FpMatrix d = f - g;
        for (std::size_t s = 1; s < p_; ++s)
            if (!multiplicity_map(a, b, d, s).is_zero()) return false;
        return true;
    }

    Subobject image(const Module& a, const Module& b, const FpMatrix& f) const {
        VerObject v = VerObject::zero(p_);
        std::vector<FpMatrix> data(p_, FpMatrix(0, 0, p_));
        for (std::size_t s = 1; s < p_; ++s) {
            data[s] = column_basis(multiplicity_map(a, b, f, s));
            v.mults[s - 1] = data[s].cols();
        }
        Module obj = presenting_module(v);
        return {obj, map_from_multiplicities(obj, b, data)};
    }

    Subobject kernel(const Module& a, const Module& b, const FpMatrix& f) const {
        VerObject v = VerObject::zero(p_);
        std::vector<FpMatrix> data(p_, FpMatrix(0, 0, p_));
        for (std::size_t s = 1; s < p_; ++s) {
            data[s] = kernel_matrix(multiplicity_map(a, b, f, s));
            v.mults[s - 1] = data[s].cols();
        }
        Module obj = presenting_module(v);
        return {obj, map_from_multiplicities(obj, a, data)};
    }

    Quotient cokernel(const Module& a, const Module& b, const FpMatrix& f) const {
        VerObject v = VerObject::zero(p_);
        std::vector<FpMatrix> proj(p_, FpMatrix(0, 0, p_)), sec(p_, FpMatrix(0, 0, p_));
        for (std::size_t s = 1; s < p_; ++s) {
            const FpMatrix basis = column_basis(multiplicity_map(a, b, f, s));
            FpMatrix comp = complement_columns(basis);
            proj[s] = inverse(hstack(basis, comp)).rows_range(basis.cols(), comp.cols());
            v.mults[s - 1] = comp.cols();
            sec[s] = std::move(comp);
        }
        Module obj = presenting_module(v);
        return {obj, map_from_multiplicities(b, obj, proj), map_from_multiplicities(obj, b, sec)};
    }

    FpMatrix lift_through_mono(const Subobject& sub, const Module& ambient, const Module& src, const FpMatrix& g) const {
        std::vector<FpMatrix> data(p_, FpMatrix(0, 0, p_));
        for (std::size_t s = 1; s < p_; ++s) {
            const FpMatrix a = multiplicity_map(sub.object, ambient, sub.inclusion, s);
            const FpMatrix rhs = multiplicity_map(src, ambient, g, s);
            auto h = solve(a, rhs);
            if (!h) throw ValidationError("morphism does not factor through the given subobject (L_" + std::to_string(s) + ")");
            data[s] = std::move(*h);
        }
        return map_from_multiplicities(src, sub.object, data);
    }

    FpMatrix right_inverse_of(const Module& a, const Module& b, const FpMatrix& e) const {
        std::vector<FpMatrix> data(p_, FpMatrix(0, 0, p_));
        for (std::size_t s = 1; s < p_; ++s) {
            const FpMatrix m = multiplicity_map(a, b, e, s);
            if (rank(m) != m.rows()) throw ValidationError("right_inverse_of: morphism is not an epimorphism in Ver_p");
            data[s] = m.rows() ? right_inverse(m) : FpMatrix(m.cols(), 0, p_);
        }
        return map_from_multiplicities(b, a, data);
    }

    /// Joint fixed points of endomorphisms of x, computed on multiplicity spaces.
    Subobject joint_fixed_points(const Module& x, const std::vector<FpMatrix>& endos) const {
        VerObject v = VerObject::zero(p_);
        std::vector<FpMatrix> data(p_, FpMatrix(0, 0, p_));
        for (std::size_t s = 1; s < p_; ++s) {
            const FpMatrix c = coords(x, s), l = lifts(x, s);
            std::vector<FpMatrix> diffs;
            for (const auto& e : endos) diffs.push_back(c * e * l - FpMatrix::identity(c.rows(), p_));
            data[s] = kernel_matrix(vstack(diffs, c.rows(), p_));
            v.mults[s - 1] = data[s].cols();
        }
        Module obj = presenting_module(v);
        return {obj, map_from_multiplicities(obj, x, data)};
    }

  private:
    std::vector<FpMatrix> empty_data(const Module& src, const Module& dst) const {
        const auto cs = iso_class(src), cd = iso_class(dst);
        std::vector<FpMatrix> d(p_, FpMatrix(0, 0, p_));
        for (std::size_t s = 1; s < p_; ++s) d[s] = FpMatrix(cd[s - 1], cs[s - 1], p_);
        return d;
    }

    Scalar p_;
};

/// Hom in Ver_p through the trace pairing: module maps m -> n modulo the
/// radical of (f, g) |-> trace(g∘f) against module maps n -> m. Returns
/// coset representatives.
inline std::vector<FpMatrix> hom_basis_ver(const Module& m, const Module& n) {
    if (m.prime() != n.prime()) throw ValidationError("p mismatch in hom_basis_ver");
    const Scalar p = m.prime();
    const auto fwd = module_hom_basis(m, n);
    const auto back = module_hom_basis(n, m);
    if (fwd.empty()) return {};
    FpMatrix pairing(fwd.size(), back.size(), p);
    for (std::size_t a = 0; a < fwd.size(); ++a)
        for (std::size_t b = 0; b < back.size(); ++b) pairing(a, b) = trace(back[b] * fwd[a]);
    const FpMatrix radical = kernel_matrix(pairing.transpose());
    const FpMatrix reps = complement_columns(radical);
    std::vector<FpMatrix> out;
    for (std::size_t j = 0; j < reps.cols(); ++j) {
        FpMatrix f(n.dim(), m.dim(), p);
        for (std::size_t a = 0; a < fwd.size(); ++a)
            if (reps(a, j)) f += fwd[a].scaled(reps(a, j));
        out.push_back(std::move(f));
    }
    return out;
}

/// x^{⊗n} in Rep C_p with its presenting module; n = 0 gives the unit.
inline Module tensor_power(const VerpCategory& cat, const Module& m, std::size_t n) {
    Module t = cat.unit();
    for (std::size_t k = 0; k < n; ++k) t = cat.tensor(t, m);
    return t;
}

/// Adjacent transposition of factors i, i+1 on an n-fold tensor power of a d-dimensional space.
inline FpMatrix adjacent_swap(std::size_t d, std::size_t n, std::size_t i, Scalar p) {
    std::size_t left = 1, right = 1;
    for (std::size_t k = 0; k < i; ++k) left *= d;
    for (std::size_t k = i + 2; k < n; ++k) right *= d;
    return kron(kron(FpMatrix::identity(left, p), swap_matrix(d, d, p)), FpMatrix::identity(right, p));
}

namespace detail {

/// Multiplicity maps of σ_i - id on T = M^{⊗n}, for one simple L_s.
inline std::vector<FpMatrix> swap_differences(const VerpCategory& cat, const Module& m, const Module& t, std::size_t n, std::size_t s) {
    const Scalar p = cat.prime();
    const FpMatrix c = cat.coords(t, s), l = cat.lifts(t, s);
    std::vector<FpMatrix> out;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        FpMatrix d = c * adjacent_swap(m.dim(), n, i, p) * l;
        d -= FpMatrix::identity(d.rows(), p);
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace detail

/// S^n(x): S_n-coinvariants of the multiplicity spaces of x^{⊗n}.
inline VerObject sym_power_ver(const VerObject& x, std::size_t n) {
    const VerpCategory cat(x.p);
    if (n == 0) return VerObject::simple(x.p, 1);
    if (n == 1) return x;
    const Module m = cat.object(x);
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) {
        total *= std::max<std::size_t>(m.dim(), 1);
        check_size(total, "sym_power_ver tensor power");
    }
    const Module t = tensor_power(cat, m, n);
    VerObject out = VerObject::zero(x.p);
    for (std::size_t s = 1; s < x.p; ++s) {
        const auto diffs = detail::swap_differences(cat, m, t, n, s);
        const std::size_t dim = cat.coords(t, s).rows();
        out.mults[s - 1] = dim - (dim ? rank(hstack(diffs, dim, x.p)) : 0);
    }
    return out;
}

struct DividedPower {
    VerObject object;
    Module presentation;  ///< canonical presentation of object
    Module tensor_power;  ///< x^{⊗n}
    FpMatrix inclusion;   ///< presentation -> tensor_power
};

/// Γ^n(x): S_n-invariants of the multiplicity spaces of x^{⊗n}, with their mono.
inline DividedPower divided_power_ver(const VerObject& x, std::size_t n) {
    const VerpCategory cat(x.p);
    const Module m = cat.object(x);
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) {
        total *= std::max<std::size_t>(m.dim(), 1);
        check_size(total, "divided_power_ver tensor power");
    }
    const Module t = tensor_power(cat, m, n);
    VerObject out = VerObject::zero(x.p);
    std::vector<FpMatrix> data(x.p, FpMatrix(0, 0, x.p));
    for (std::size_t s = 1; s < x.p; ++s) {
        const std::size_t dim = cat.coords(t, s).rows();
        const auto diffs = detail::swap_differences(cat, m, t, n, s);
        data[s] = diffs.empty() ? FpMatrix::identity(dim, x.p) : kernel_matrix(vstack(diffs, dim, x.p));
        out.mults[s - 1] = data[s].cols();
    }
    Module pres = cat.object(out);
    FpMatrix inc = cat.map_from_multiplicities(pres, t, data);
    return {out, pres, t, std::move(inc)};
}

/// Coequalizer of parallel morphisms fs: dom -> cod, i.e. the cokernel of the
/// differences f_k - f_0.
inline Quotient coequalizer_ver(const VerpCategory& cat, const Module& dom, const Module& cod, const std::vector<FpMatrix>& fs) {
    const Scalar p = cat.prime();
    for (const auto& f : fs)
        if (f.rows() != cod.dim() || f.cols() != dom.dim()) throw ValidationError("coequalizer_ver: morphisms are not parallel");
    if (fs.size() < 2) return cat.cokernel(cat.zero(), cod, FpMatrix(cod.dim(), 0, p));
    std::vector<Module> copies(fs.size() - 1, dom);
    std::vector<FpMatrix> diffs;
    for (std::size_t k = 1; k < fs.size(); ++k) diffs.push_back(fs[k] - fs[0]);
    const auto ds = direct_sum(copies, p);
    return cat.cokernel(ds.object, cod, hstack(diffs, cod.dim(), p));
}

}  // namespace verlinde
