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
 * @file ver4plus.hpp
 * @brief Ver_4^+: modules over F_2[x]/x^2 with x primitive and the braiding
 * v⊗w -> w⊗v + xw⊗xv.
 */

#pragma once

#include <string>
#include <vector>

#include "verlinde/tensorcat.hpp"

namespace verlinde {

/// The projective cover P = k<u, v>, x v = u.
inline FpMatrix ver4_p_action() { return FpMatrix::from_rows(2, {{0, 1}, {0, 0}}); }

/// a copies of 1 followed by b copies of P.
inline Module ver4_object(std::size_t a, std::size_t b) {
    std::vector<std::size_t> sizes(a, 1);
    sizes.insert(sizes.end(), b, 2);
    return Module(jordan_block_action(sizes, 2));
}

inline FpMatrix braiding_v4(const Module& m, const Module& n) {
    const FpMatrix s = swap_matrix(m.dim(), n.dim(), 2);
    return s + kron(n.action(), m.action()) * s;
}

/// (a, b): a copies of 1 and b copies of P.
inline IsoClass iso_class_v4(const Module& m) {
    if (m.prime() != 2) throw ValidationError("ver4plus objects live over F_2");
    if (!(m.action() * m.action()).is_zero()) throw ValidationError("ver4plus object needs x^2 = 0");
    const std::size_t r = rank(m.action());
    return {m.dim() - 2 * r, r};
}

class Ver4PlusCategory {
  public:
    static constexpr const char* kName = "ver4plus";

    Scalar prime() const { return 2; }
    std::string name() const { return kName; }

    Module unit() const { return ver4_object(1, 0); }
    Module zero() const { return ver4_object(0, 0); }
    Module object(std::size_t a, std::size_t b) const { return ver4_object(a, b); }
    Module projective() const { return ver4_object(0, 1); }

    Module tensor(const Module& a, const Module& b) const {
        check_size(a.dim() * b.dim(), "ver4plus tensor");
        return Module(kron(a.action(), FpMatrix::identity(b.dim(), 2)) + kron(FpMatrix::identity(a.dim(), 2), b.action()));
    }
    FpMatrix braiding(const Module& a, const Module& b) const { return braiding_v4(a, b); }
    Module dual(const Module& a) const { return Module(a.action().transpose()); }

    std::vector<FpMatrix> hom_basis(const Module& a, const Module& b) const { return module_hom_basis(a, b); }
    bool is_morphism(const Module& a, const Module& b, const FpMatrix& f) const { return a.is_map_to(b, f); }
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
    FpMatrix lift_through_mono(const Subobject& s, const Module& ambient, const Module& src, const FpMatrix& g) const {
        return detail::StrictModuleOps::lift_through_mono(s, ambient, src, g);
    }
    /// A module-map section when one exists, otherwise a linear one.
    FpMatrix right_inverse_of(const Module& a, const Module& b, const FpMatrix& e) const {
        const auto homs = module_hom_basis(b, a);
        const std::size_t n = b.dim() * b.dim();
        if (!homs.empty() && n) {
            FpMatrix sys(n, homs.size(), 2), rhs(n, 1, 2);
            for (std::size_t k = 0; k < homs.size(); ++k) {
                const FpMatrix eh = e * homs[k];
                for (std::size_t i = 0; i < n; ++i) sys(i, k) = eh.entries()[i];
            }
            const FpMatrix id = FpMatrix::identity(b.dim(), 2);
            for (std::size_t i = 0; i < n; ++i) rhs(i, 0) = id.entries()[i];
            if (auto c = solve(sys, rhs)) {
                FpMatrix s(a.dim(), b.dim(), 2);
                for (std::size_t k = 0; k < homs.size(); ++k) s += homs[k].scaled((*c)(k, 0));
                return s;
            }
        }
        return right_inverse(e);
    }
    IsoClass iso_class(const Module& a) const { return iso_class_v4(a); }
};

/// A symmetric power presented as a quotient of the tensor power.
struct SymPowerV4 {
    Module object;
    Module tensor_power;
    FpMatrix projection;  ///< tensor_power -> object
    FpMatrix section;     ///< linear splitting of projection
};

/// Braided adjacent transposition of factors i, i+1 on m^{⊗n}.
inline FpMatrix braided_adjacent_v4(const Module& m, std::size_t n, std::size_t i) {
    std::size_t left = 1, right = 1;
    for (std::size_t k = 0; k < i; ++k) left *= m.dim();
    for (std::size_t k = i + 2; k < n; ++k) right *= m.dim();
    return kron(kron(FpMatrix::identity(left, 2), braiding_v4(m, m)), FpMatrix::identity(right, 2));
}

inline SymPowerV4 sym_power_v4(const Module& m, std::size_t n) {
    const Ver4PlusCategory cat;
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) {
        total *= std::max<std::size_t>(m.dim(), 1);
        check_size(total, "sym_power_v4 tensor power");
    }
    Module t = cat.unit();
    for (std::size_t k = 0; k < n; ++k) t = cat.tensor(t, m);
    std::vector<FpMatrix> rel;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        FpMatrix d = braided_adjacent_v4(m, n, i);
        d -= FpMatrix::identity(t.dim(), 2);
        rel.push_back(std::move(d));
    }
    const FpMatrix stacked = hstack(rel, t.dim(), 2);
    const Module src = Module::trivial(stacked.cols(), 2);
    Quotient q = detail::StrictModuleOps::cokernel(src, t, stacked);
    return {std::move(q.object), std::move(t), std::move(q.projection), std::move(q.section)};
}

/// S^k(f): S^k(m) -> S^k(n) for a module map f: m -> n.
inline FpMatrix sym_power_of_morphism_v4(const Module& m, const Module& n, const FpMatrix& f, std::size_t k) {
    if (!m.is_map_to(n, f)) throw ValidationError("sym_power_of_morphism_v4: not a module map");
    const SymPowerV4 sm = sym_power_v4(m, k), sn = sym_power_v4(n, k);
    FpMatrix fk = FpMatrix::identity(1, 2);
    for (std::size_t i = 0; i < k; ++i) fk = kron(fk, f);
    return sn.projection * fk * sm.section;
}

}  // namespace verlinde
