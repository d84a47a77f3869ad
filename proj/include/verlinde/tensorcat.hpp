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
 * @file tensorcat.hpp
 * @brief The symmetric tensor category interface and the Vec backend.
 *
 * Every backend presents objects as finite-dimensional F_p-vector spaces with
 * one nilpotent operator x (the module structure). Tensor products are
 * Kronecker products, so the monoidal structure is strict: (X⊗Y)⊗Z and
 * X⊗(Y⊗Z) are literally the same presentation and all associators and
 * unitors are identity matrices. Backends differ in how x acts on a tensor
 * product, in the braiding, and in what "equal morphisms" and "kernel" mean
 * (strict for Vec and Ver_4^+, modulo negligible morphisms for Ver_p).
 */

#pragma once

#include <concepts>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "verlinde/exactla.hpp"
#include "verlinde/jordan.hpp"

namespace verlinde {

namespace detail {
struct ModuleCache {
    std::once_flag once;
    std::optional<JordanDecomposition> jordan;
    std::function<JordanDecomposition()> make;
};
}  // namespace detail

/// A finite-dimensional F_p-space with a nilpotent operator. The Jordan
/// decomposition is computed on first use and shared between copies.
class Module {
  public:
    Module() : Module(FpMatrix(0, 0, 2)) {}
    explicit Module(FpMatrix action) : x_(std::move(action)), cache_(std::make_shared<detail::ModuleCache>()) {
        if (x_.rows() != x_.cols()) throw ValidationError("module action must be square, got " + x_.shape());
    }
    Module(FpMatrix action, JordanDecomposition known) : Module(std::move(action)) {
        std::call_once(cache_->once, [&] { cache_->jordan = std::move(known); });
    }

    /// Jordan data supplied on demand by `make` instead of being recomputed from the action.
    Module(FpMatrix action, std::function<JordanDecomposition()> make) : Module(std::move(action)) {
        cache_->make = std::move(make);
    }

    static Module trivial(std::size_t dim, Scalar p) { return Module(FpMatrix(dim, dim, p)); }

    std::size_t dim() const { return x_.rows(); }
    Scalar prime() const { return x_.prime(); }
    const FpMatrix& action() const { return x_; }

    const JordanDecomposition& jordan() const {
        std::call_once(cache_->once, [&] {
            cache_->jordan = cache_->make ? cache_->make() : jordan_decomposition(x_);
            cache_->make = nullptr;
        });
        return *cache_->jordan;
    }

    bool is_map_to(const Module& cod, const FpMatrix& f) const {
        return f.rows() == cod.dim() && f.cols() == dim() && f * x_ == cod.x_ * f;
    }

  private:
    FpMatrix x_;
    std::shared_ptr<detail::ModuleCache> cache_;
};

/// A subobject given by a monomorphism into a fixed ambient object.
struct Subobject {
    Module object;
    FpMatrix inclusion;
};

/// A quotient object with its epimorphism and a chosen splitting of the
/// underlying spaces (a module map in semisimple backends).
struct Quotient {
    Module object;
    FpMatrix projection;
    FpMatrix section;
};

/// Backend-specific isomorphism-class descriptor.
using IsoClass = std::vector<std::size_t>;

/// Biproduct of a list of objects with its injections and projections.
struct DirectSum {
    Module object;
    std::vector<FpMatrix> injections;
    std::vector<FpMatrix> projections;
};

inline DirectSum direct_sum(const std::vector<Module>& xs, Scalar p) {
    std::vector<FpMatrix> acts;
    std::size_t n = 0;
    for (const auto& x : xs) {
        acts.push_back(x.action());
        n += x.dim();
    }
    auto assemble = [xs, p] {
        std::vector<FpMatrix> bases, invs;
        JordanDecomposition d;
        std::size_t off = 0;
        for (const auto& x : xs) {
            const auto& jx = x.jordan();
            bases.push_back(jx.basis);
            invs.push_back(jx.basis_inv);
            for (const auto& b : jx.blocks) d.blocks.push_back({b.size, b.offset + off});
            off += x.dim();
        }
        d.basis = block_diag(bases, p);
        d.basis_inv = block_diag(invs, p);
        return d;
    };
    DirectSum s{Module(block_diag(acts, p), std::function<JordanDecomposition()>(assemble)), {}, {}};
    std::size_t off = 0;
    for (const auto& x : xs) {
        FpMatrix inj(n, x.dim(), p), proj(x.dim(), n, p);
        for (std::size_t i = 0; i < x.dim(); ++i) {
            inj(off + i, i) = 1;
            proj(i, off + i) = 1;
        }
        s.injections.push_back(std::move(inj));
        s.projections.push_back(std::move(proj));
        off += x.dim();
    }
    return s;
}

/// Permutation matrix of the flip a⊗b -> b⊗a for spaces of dimension m, n.
inline FpMatrix swap_matrix(std::size_t m, std::size_t n, Scalar p) {
    FpMatrix s(m * n, m * n, p);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < n; ++k) s(k * m + i, i * n + k) = 1;
    return s;
}

/// Linear constraints whose null space is Hom(a, b) written row-major.
inline std::vector<FpMatrix> module_hom_basis(const Module& a, const Module& b) {
    const Scalar p = a.prime();
    const std::size_t m = a.dim(), n = b.dim();
    // vec(f x_a - x_b f) = (I_n ⊗ x_a^T - x_b ⊗ I_m) vec(f) with row-major vec.
    const FpMatrix c = kron(FpMatrix::identity(n, p), a.action().transpose()) - kron(b.action(), FpMatrix::identity(m, p));
    const FpMatrix k = kernel_matrix(c);
    std::vector<FpMatrix> out;
    for (std::size_t j = 0; j < k.cols(); ++j) {
        FpMatrix f(n, m, p);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < m; ++s) f(r, s) = k(r * m + s, j);
        out.push_back(std::move(f));
    }
    return out;
}

namespace detail {

/// Abelian-category operations for categories of modules with strict
/// morphism equality (Vec and Ver_4^+): kernels, images and cokernels are the
/// underlying linear-algebra ones, which are automatically x-stable.
struct StrictModuleOps {
    static FpMatrix restrict_action(const FpMatrix& x, const FpMatrix& cols) {
        if (cols.cols() == 0) return FpMatrix(0, 0, x.prime());
        const FpMatrix l = left_inverse(cols);
        FpMatrix r = l * x * cols;
        if (!(cols * r == x * cols)) throw Error("subspace is not stable under the module action");
        return r;
    }

    static Subobject image(const Module&, const Module& cod, const FpMatrix& f) {
        FpMatrix b = column_basis(f);
        return {Module(restrict_action(cod.action(), b)), std::move(b)};
    }

    static Subobject kernel(const Module& dom, const Module&, const FpMatrix& f) {
        FpMatrix k = kernel_matrix(f);
        return {Module(restrict_action(dom.action(), k)), std::move(k)};
    }

    static Quotient cokernel(const Module&, const Module& cod, const FpMatrix& f) {
        const FpMatrix b = column_basis(f);
        FpMatrix c = complement_columns(b);
        const FpMatrix full_inv = inverse(hstack(b, c));
        FpMatrix q = full_inv.rows_range(b.cols(), c.cols());
        FpMatrix xq = q * cod.action() * c;
        if (!(xq * q == q * cod.action())) throw Error("cokernel: induced action is inconsistent");
        return {Module(std::move(xq)), std::move(q), std::move(c)};
    }

    static FpMatrix lift_through_mono(const Subobject& s, const Module&, const Module&, const FpMatrix& g) {
        auto h = solve(s.inclusion, g);
        if (!h) throw ValidationError("morphism does not factor through the given subobject");
        return *h;
    }

    static FpMatrix right_inverse_of(const Module&, const Module&, const FpMatrix& e) {
        return right_inverse(e);
    }

    static bool equal(const Module&, const Module&, const FpMatrix& f, const FpMatrix& g) { return f == g; }
};

}  // namespace detail

/// Finite-dimensional vector spaces over F_p with the flip as braiding.
class VecCategory {
  public:
    static constexpr const char* kName = "vec";

    explicit VecCategory(Scalar p) : p_(p) { require_prime(p); }

    Scalar prime() const { return p_; }
    std::string name() const { return kName; }

    Module unit() const { return Module::trivial(1, p_); }
    Module zero() const { return Module::trivial(0, p_); }
    Module object(std::size_t dim) const { return Module::trivial(dim, p_); }

    Module tensor(const Module& a, const Module& b) const { return Module::trivial(a.dim() * b.dim(), p_); }
    FpMatrix braiding(const Module& a, const Module& b) const { return swap_matrix(a.dim(), b.dim(), p_); }
    Module dual(const Module& a) const { return Module::trivial(a.dim(), p_); }

    std::vector<FpMatrix> hom_basis(const Module& a, const Module& b) const {
        std::vector<FpMatrix> out;
        for (std::size_t r = 0; r < b.dim(); ++r)
            for (std::size_t c = 0; c < a.dim(); ++c) {
                FpMatrix f(b.dim(), a.dim(), p_);
                f(r, c) = 1;
                out.push_back(std::move(f));
            }
        return out;
    }

    bool is_morphism(const Module& a, const Module& b, const FpMatrix& f) const {
        return f.rows() == b.dim() && f.cols() == a.dim();
    }
    bool equal(const Module& a, const Module& b, const FpMatrix& f, const FpMatrix& g) const {
        return detail::StrictModuleOps::equal(a, b, f, g);
    }
    Subobject image(const Module& a, const Module& b, const FpMatrix& f) const {
        return detail::StrictModuleOps::image(a, b, f);
    }
    Subobject kernel(const Module& a, const Module& b, const FpMatrix& f) const {
        return detail::StrictModuleOps::kernel(a, b, f);
    }
    Quotient cokernel(const Module& a, const Module& b, const FpMatrix& f) const {
        return detail::StrictModuleOps::cokernel(a, b, f);
    }
    /// h with inclusion∘h == g, for g: src -> ambient.
    FpMatrix lift_through_mono(const Subobject& s, const Module& ambient, const Module& src, const FpMatrix& g) const {
        return detail::StrictModuleOps::lift_through_mono(s, ambient, src, g);
    }
    FpMatrix right_inverse_of(const Module& a, const Module& b, const FpMatrix& e) const {
        return detail::StrictModuleOps::right_inverse_of(a, b, e);
    }
    IsoClass iso_class(const Module& a) const { return {a.dim()}; }

  private:
    Scalar p_;
};

/// The capability contract shared by the vec, verp and ver4plus backends.
template <class C>
concept TensorCategory = requires(const C& c, const Module& m, const FpMatrix& f, const Subobject& s) {
    { c.prime() } -> std::convertible_to<Scalar>;
    { c.name() } -> std::convertible_to<std::string>;
    { c.unit() } -> std::same_as<Module>;
    { c.zero() } -> std::same_as<Module>;
    { c.tensor(m, m) } -> std::same_as<Module>;
    { c.braiding(m, m) } -> std::same_as<FpMatrix>;
    { c.dual(m) } -> std::same_as<Module>;
    { c.hom_basis(m, m) } -> std::same_as<std::vector<FpMatrix>>;
    { c.is_morphism(m, m, f) } -> std::same_as<bool>;
    { c.equal(m, m, f, f) } -> std::same_as<bool>;
    { c.image(m, m, f) } -> std::same_as<Subobject>;
    { c.kernel(m, m, f) } -> std::same_as<Subobject>;
    { c.cokernel(m, m, f) } -> std::same_as<Quotient>;
    { c.lift_through_mono(s, m, m, f) } -> std::same_as<FpMatrix>;
    { c.right_inverse_of(m, m, f) } -> std::same_as<FpMatrix>;
    { c.iso_class(m) } -> std::same_as<IsoClass>;
};

// ---------------------------------------------------------------------------
// Generic operations written against the contract.

template <TensorCategory C>
FpMatrix tensor_maps(const C&, const FpMatrix& f, const FpMatrix& g) {
    return kron(f, g);
}

template <TensorCategory C>
bool is_zero_object(const C& cat, const Module& x) {
    for (auto v : cat.iso_class(x))
        if (v) return false;
    return true;
}

template <TensorCategory C>
bool is_zero_morphism(const C& cat, const Module& a, const Module& b, const FpMatrix& f) {
    return cat.equal(a, b, f, FpMatrix(b.dim(), a.dim(), cat.prime()));
}

template <TensorCategory C>
bool is_mono(const C& cat, const Module& a, const Module& b, const FpMatrix& f) {
    return is_zero_object(cat, cat.kernel(a, b, f).object);
}

template <TensorCategory C>
bool is_epi(const C& cat, const Module& a, const Module& b, const FpMatrix& f) {
    return is_zero_object(cat, cat.cokernel(a, b, f).object);
}

template <TensorCategory C>
bool is_iso(const C& cat, const Module& a, const Module& b, const FpMatrix& f) {
    return is_mono(cat, a, b, f) && is_epi(cat, a, b, f);
}

/// Sum of two subobjects of `ambient` (image of the induced map from the biproduct).
template <TensorCategory C>
Subobject subobject_sum(const C& cat, const Module& ambient, const Subobject& a, const Subobject& b) {
    const auto ds = direct_sum({a.object, b.object}, cat.prime());
    return cat.image(ds.object, ambient, hstack(a.inclusion, b.inclusion));
}

template <TensorCategory C>
bool subobject_contains(const C& cat, const Module& ambient, const Subobject& big, const Subobject& small) {
    return cat.iso_class(subobject_sum(cat, ambient, big, small).object) == cat.iso_class(big.object);
}

template <TensorCategory C>
bool same_subobject(const C& cat, const Module& ambient, const Subobject& a, const Subobject& b) {
    return subobject_contains(cat, ambient, a, b) && subobject_contains(cat, ambient, b, a);
}

template <TensorCategory C>
Subobject whole_subobject(const C& cat, const Module& x) {
    return {x, FpMatrix::identity(x.dim(), cat.prime())};
}

template <TensorCategory C>
Subobject zero_subobject(const C& cat, const Module& x) {
    return {cat.zero(), FpMatrix(x.dim(), 0, cat.prime())};
}

/// X_nil: the joint kernel of all morphisms X -> 1.
template <TensorCategory C>
Subobject nil_part(const C& cat, const Module& x) {
    const auto homs = cat.hom_basis(x, cat.unit());
    FpMatrix stacked = vstack(homs, x.dim(), cat.prime());
    const Module target = Module::trivial(homs.size(), cat.prime());
    if (!cat.is_morphism(x, target, stacked)) {
        // Ver_4^+ and Ver_p units are trivial modules, so a direct sum of units is too.
        throw Error("nil_part: stacked map is not a morphism");
    }
    return cat.kernel(x, target, stacked);
}

/// A morphism s: b -> a with f∘s == id_b, if one exists.
template <TensorCategory C>
std::optional<FpMatrix> split_section(const C& cat, const Module& a, const Module& b, const FpMatrix& f) {
    const auto homs = cat.hom_basis(b, a);
    const Scalar p = cat.prime();
    if (homs.empty()) {
        if (is_zero_object(cat, b)) return FpMatrix(a.dim(), b.dim(), p);
        return std::nullopt;
    }
    // Solve Σ c_k (f∘h_k) == id as a linear system in the coefficients c_k.
    const std::size_t n = b.dim() * b.dim();
    FpMatrix sys(n, homs.size(), p);
    for (std::size_t k = 0; k < homs.size(); ++k) {
        const FpMatrix fh = f * homs[k];
        for (std::size_t i = 0; i < n; ++i) sys(i, k) = fh.entries()[i];
    }
    FpMatrix rhs(n, 1, p);
    const FpMatrix id = FpMatrix::identity(b.dim(), p);
    for (std::size_t i = 0; i < n; ++i) rhs(i, 0) = id.entries()[i];
    auto c = solve(sys, rhs);
    if (c) {
        FpMatrix s(a.dim(), b.dim(), p);
        for (std::size_t k = 0; k < homs.size(); ++k) s += homs[k].scaled((*c)(k, 0));
        if (cat.equal(b, b, f * s, id)) return s;
    }
    // Equality up to negligibles (Ver_p) can succeed where the strict solve fails.
    try {
        FpMatrix s = cat.right_inverse_of(a, b, f);
        if (cat.is_morphism(b, a, s) && cat.equal(b, b, f * s, id)) return s;
    } catch (const Error&) {
    }
    return std::nullopt;
}

}  // namespace verlinde
