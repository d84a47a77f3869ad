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
 * @file homogquot.hpp
 * @brief Quotients of additive group schemes Y/X for a mono X -> Y.
 *
 * With Z = Y/X, A = S(Y*), H = S(X*) (primitively generated) and R the image
 * of S(Z*) -> A, the checks are degreewise:
 *   gr:   the filtration F_k = R_{d-k}·A_k has layers R_{d-k}⊗H_k,
 *   can:  A⊗_R A -> A⊗H, a⊗b |-> (a⊗1)ρ(b), is an isomorphism,
 *   B:    the coinvariants ker(ρ - id⊗1) equal R.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "verlinde/gradedalg.hpp"

namespace verlinde {

struct QuotientReport {
    std::size_t truncation = 0;
    std::vector<IsoClass> hilbert_a, hilbert_h, hilbert_r, hilbert_b;
    std::vector<bool> r_purely_even;  ///< R_d carries the trivial action
    std::vector<bool> gr_ok, can_iso, can_surj, b_eq_r;
    bool coassociative = false;
    bool counital = false;
    bool r_subset_b = false;
    FpMatrix complement;  ///< greedy complement of Z* in Y*, as columns

    static bool all(const std::vector<bool>& v) {
        return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
    }
    bool all_ok() const { return all(gr_ok) && all(can_iso) && all(can_surj) && all(b_eq_r) && coassociative && counital; }
};

template <TensorCategory C>
class AdditiveQuotient {
  public:
    AdditiveQuotient(C cat, Module x, Module y, FpMatrix iota, std::size_t n)
        : cat_(std::move(cat)),
          x_(std::move(x)),
          y_(std::move(y)),
          iota_(checked(cat_, x_, y_, std::move(iota))),
          n_(n),
          z_(cat_.cokernel(x_, y_, iota_)),
          xd_(cat_.dual(x_)),
          yd_(cat_.dual(y_)),
          zd_(cat_.dual(z_.object)),
          res_(iota_.transpose()),
          zinc_(z_.projection.transpose()),
          a_(free_symmetric(cat_, yd_, n_)),
          h_(free_symmetric(cat_, xd_, n_)),
          sz_(free_symmetric(cat_, zd_, n_)),
          r_(algebra_map_image(sz_, a_, extend_from_generators(sz_, a_, zinc_))) {}

    const C& category() const { return cat_; }
    std::size_t truncation() const { return n_; }
    const Quotient& z() const { return z_; }
    const Module& x_dual() const { return xd_; }
    const Module& y_dual() const { return yd_; }
    const Module& z_dual() const { return zd_; }
    const FpMatrix& restriction() const { return res_; }  ///< Y* -> X*
    const FpMatrix& z_dual_inclusion() const { return zinc_; }  ///< Z* -> Y*
    const GradedAlgebra<C>& a() const { return a_; }
    const GradedAlgebra<C>& h() const { return h_; }
    const Subalgebra<C>& r() const { return r_; }

    /// A⊗H and the coaction ρ_d: A_d -> (A⊗H)_d, the algebra map extended from
    /// y |-> 1⊗res(y) + y⊗1.
    void build_coaction() {
        if (!rho_.empty()) return;
        ah_.emplace(tensor_algebras(a_, h_));
        if (n_ >= 1) {
            const FpMatrix rho1 = vstack(res_, FpMatrix::identity(yd_.dim(), cat_.prime()));
            rho_ = extend_from_generators(a_, *ah_, rho1);
        } else {
            rho_ = {FpMatrix::identity(1, cat_.prime())};
        }
        if (auto v = algebra_map_violation(a_, *ah_, rho_)) throw Error("coaction is not an algebra map: " + *v);
        hh_.emplace(tensor_algebras(h_, h_));
        if (n_ >= 1) {
            const FpMatrix id = FpMatrix::identity(xd_.dim(), cat_.prime());
            delta_ = extend_from_generators(h_, *hh_, vstack(id, id));
        } else {
            delta_ = {FpMatrix::identity(1, cat_.prime())};
        }
    }
    const GradedAlgebra<C>& a_tensor_h() {
        build_coaction();
        return *ah_;
    }
    const std::vector<FpMatrix>& coaction() {
        build_coaction();
        return rho_;
    }

    /// Row block of ρ_d landing in A_i⊗H_{d-i}.
    FpMatrix rho_block(std::size_t d, std::size_t i) {
        build_coaction();
        return rho_[d].rows_range(offset(a_, h_, d, i), a_[i].dim() * h_[d - i].dim());
    }
    FpMatrix delta_block(std::size_t d, std::size_t i) {
        build_coaction();
        return delta_[d].rows_range(offset(h_, h_, d, i), h_[i].dim() * h_[d - i].dim());
    }

    bool check_coassociativity() {
        const Scalar p = cat_.prime();
        for (std::size_t d = 0; d <= n_; ++d)
            for (std::size_t i = 0; i <= d; ++i)
                for (std::size_t j = 0; i + j <= d; ++j) {
                    const std::size_t k = d - i - j;
                    const FpMatrix lhs = kron(rho_block(i + j, i), FpMatrix::identity(h_[k].dim(), p)) * rho_block(d, i + j);
                    const FpMatrix rhs = kron(FpMatrix::identity(a_[i].dim(), p), delta_block(j + k, j)) * rho_block(d, i);
                    const Module cod = cat_.tensor(cat_.tensor(a_[i], h_[j]), h_[k]);
                    if (!cat_.equal(a_[d], cod, lhs, rhs)) return false;
                }
        return true;
    }

    bool check_counit() {
        for (std::size_t d = 0; d <= n_; ++d)
            if (!cat_.equal(a_[d], a_[d], rho_block(d, d), FpMatrix::identity(a_[d].dim(), cat_.prime()))) return false;
        return true;
    }

    /// B_d = ker(ρ_d - η_d) with η_d the inclusion A_d = A_d⊗H_0 -> (A⊗H)_d.
    Subalgebra<C> invariants() {
        build_coaction();
        std::vector<Subobject> subs;
        for (std::size_t d = 0; d <= n_; ++d) {
            FpMatrix eta((*ah_)[d].dim(), a_[d].dim(), cat_.prime());
            eta.set_block(offset(a_, h_, d, d), 0, FpMatrix::identity(a_[d].dim(), cat_.prime()));
            subs.push_back(cat_.kernel(a_[d], (*ah_)[d], rho_[d] - eta));
        }
        return subalgebra_from(a_, std::move(subs));
    }

    /// Per degree: every layer map R_{d-k}⊗H_k -> F_k/F_{k-1} is an isomorphism.
    std::vector<bool> check_gr() {
        const Scalar p = cat_.prime();
        const auto res_maps = extend_from_generators(a_, h_, res_);
        std::vector<bool> ok;
        for (std::size_t d = 0; d <= n_; ++d) {
            bool good = true;
            Subobject prev = zero_subobject(cat_, a_[d]);
            for (std::size_t k = 0; k <= d && good; ++k) {
                const Module& rk = r_.alg[d - k];
                const Module dom = cat_.tensor(rk, a_[k]);
                const FpMatrix gen = a_.m(d - k, k) * kron(r_.inclusion[d - k], FpMatrix::identity(a_[k].dim(), p));
                const Subobject fk = subobject_sum(cat_, a_[d], prev, cat_.image(dom, a_[d], gen));
                const FpMatrix into = cat_.lift_through_mono(fk, a_[d], prev.object, prev.inclusion);
                const Quotient layer = cat_.cokernel(prev.object, fk.object, into);
                const FpMatrix layer_map = layer.projection * cat_.lift_through_mono(fk, a_[d], dom, gen);
                const FpMatrix sec = cat_.right_inverse_of(a_[k], h_[k], res_maps[k]);
                const FpMatrix psi = layer_map * kron(FpMatrix::identity(rk.dim(), p), sec);
                const Module rh = cat_.tensor(rk, h_[k]);
                good = cat_.is_morphism(rh, layer.object, psi) &&
                       cat_.equal(dom, layer.object, psi * kron(FpMatrix::identity(rk.dim(), p), res_maps[k]), layer_map) &&
                       is_iso(cat_, rh, layer.object, psi);
                prev = fk;
            }
            good = good && same_subobject(cat_, a_[d], prev, whole_subobject(cat_, a_[d]));
            ok.push_back(good);
        }
        return ok;
    }

    /// Canonical filtration F_k of A_d as column spans (strict backends).
    std::vector<FpMatrix> canonical_filtration(std::size_t d) {
        const Scalar p = cat_.prime();
        std::vector<FpMatrix> out;
        for (std::size_t k = 0; k <= d; ++k) {
            const FpMatrix gen = a_.m(d - k, k) * kron(r_.inclusion[d - k], FpMatrix::identity(a_[k].dim(), p));
            out.push_back(out.empty() ? column_basis(gen) : column_basis(hstack(out.back(), gen)));
        }
        return out;
    }

    /// The same filtration rebuilt from a linear complement w of Z* in Y*:
    /// level k is spanned by degree-d monomials with at most k factors from w.
    std::vector<FpMatrix> filtration_from_complement(std::size_t d, const FpMatrix& w) {
        const Scalar p = cat_.prime();
        const FpMatrix rz = zinc_;
        // monomial spans by number of w-factors: mono[j][e] spans products of e
        // degree-1 factors with exactly j from w
        std::vector<std::vector<FpMatrix>> mono(d + 1, std::vector<FpMatrix>(d + 1));
        mono[0][0] = FpMatrix::identity(1, p);
        for (std::size_t e = 1; e <= d; ++e)
            for (std::size_t j = 0; j <= e; ++j) {
                FpMatrix acc(a_[e].dim(), 0, p);
                if (j < e && mono[j][e - 1].cols()) acc = hstack(acc, a_.m(e - 1, 1) * kron(mono[j][e - 1], rz));
                if (j > 0 && mono[j - 1][e - 1].cols()) acc = hstack(acc, a_.m(e - 1, 1) * kron(mono[j - 1][e - 1], w));
                mono[j][e] = column_basis(acc);
            }
        std::vector<FpMatrix> out;
        FpMatrix acc(a_[d].dim(), 0, p);
        for (std::size_t k = 0; k <= d; ++k) {
            acc = column_basis(hstack(acc, mono[k][d]));
            out.push_back(acc);
        }
        return out;
    }

    /// Per degree: (can iso, can surjective).
    std::pair<std::vector<bool>, std::vector<bool>> check_can() {
        build_coaction();
        const Scalar p = cat_.prime();
        std::vector<bool> iso, surj;
        for (std::size_t d = 0; d <= n_; ++d) {
            // (A⊗A)_d = ⊕_i A_i⊗A_{d-i}
            std::vector<std::size_t> off;
            std::vector<Module> parts;
            std::size_t total = 0;
            for (std::size_t i = 0; i <= d; ++i) {
                parts.push_back(cat_.tensor(a_[i], a_[d - i]));
                off.push_back(total);
                total += parts.back().dim();
            }
            check_size(total, "canonical map source");
            const Module aa = direct_sum(parts, p).object;
            // relations (a·r)⊗b - a⊗(r·b), r in R_k, k >= 1
            std::vector<Module> rel_parts;
            std::vector<FpMatrix> rel_cols;
            for (std::size_t i = 0; i <= d; ++i)
                for (std::size_t k = 1; i + k <= d; ++k) {
                    const std::size_t j = d - i - k;
                    const Module& rk = r_.alg[k];
                    if (rk.dim() == 0 || a_[i].dim() == 0 || a_[j].dim() == 0) continue;
                    const FpMatrix ar = a_.m(i, k) * kron(FpMatrix::identity(a_[i].dim(), p), r_.inclusion[k]);
                    const FpMatrix rb = a_.m(k, j) * kron(r_.inclusion[k], FpMatrix::identity(a_[j].dim(), p));
                    FpMatrix col(total, a_[i].dim() * rk.dim() * a_[j].dim(), p);
                    col.set_block(off[i + k], 0, kron(ar, FpMatrix::identity(a_[j].dim(), p)));
                    col.add_block(off[i], 0, -kron(FpMatrix::identity(a_[i].dim(), p), rb));
                    rel_parts.push_back(cat_.tensor(cat_.tensor(a_[i], rk), a_[j]));
                    rel_cols.push_back(std::move(col));
                }
            const Module rel_dom = direct_sum(rel_parts, p).object;
            const Quotient q = cat_.cokernel(rel_dom, aa, hstack(rel_cols, total, p));
            // can on A_i⊗A_j: Σ_k (m(i,k)⊗id)∘(id⊗ρ_j^{(k)})
            const Module& target = (*ah_)[d];
            FpMatrix can(target.dim(), total, p);
            for (std::size_t i = 0; i <= d; ++i) {
                const std::size_t j = d - i;
                for (std::size_t k = 0; k <= j; ++k) {
                    const FpMatrix blk = kron(a_.m(i, k), FpMatrix::identity(h_[j - k].dim(), p)) *
                                         kron(FpMatrix::identity(a_[i].dim(), p), rho_block(j, k));
                    can.add_block(offset(a_, h_, d, i + k), off[i], blk);
                }
            }
            bool well_defined = cat_.equal(rel_dom, target, can * hstack(rel_cols, total, p), FpMatrix(target.dim(), rel_dom.dim(), p));
            const FpMatrix induced = can * q.section;
            const bool s = well_defined && is_epi(cat_, q.object, target, induced);
            surj.push_back(s);
            iso.push_back(s && is_mono(cat_, q.object, target, induced));
        }
        return {iso, surj};
    }

    QuotientReport report() {
        QuotientReport rep;
        rep.truncation = n_;
        rep.hilbert_a = a_.hilbert();
        rep.hilbert_h = h_.hilbert();
        rep.hilbert_r = r_.alg.hilbert();
        for (const auto& c : r_.alg.comps) rep.r_purely_even.push_back(c.action().is_zero());
        build_coaction();
        rep.coassociative = check_coassociativity();
        rep.counital = check_counit();
        const Subalgebra<C> b = invariants();
        rep.hilbert_b = b.alg.hilbert();
        rep.r_subset_b = true;
        for (std::size_t d = 0; d <= n_; ++d) {
            const Subobject rd{r_.alg[d], r_.inclusion[d]}, bd{b.alg[d], b.inclusion[d]};
            rep.r_subset_b = rep.r_subset_b && subobject_contains(cat_, a_[d], bd, rd);
            rep.b_eq_r.push_back(same_subobject(cat_, a_[d], bd, rd));
        }
        rep.gr_ok = check_gr();
        auto [iso, surj] = check_can();
        rep.can_iso = std::move(iso);
        rep.can_surj = std::move(surj);
        rep.complement = complement_columns(column_basis(zinc_));
        return rep;
    }

  private:
    static FpMatrix checked(const C& cat, const Module& x, const Module& y, FpMatrix iota) {
        if (!cat.is_morphism(x, y, iota)) throw ValidationError("iota is not a morphism X -> Y");
        if (!is_mono(cat, x, y, iota)) throw ValidationError("iota is not a monomorphism");
        return iota;
    }

    /// Offset of the A_i⊗B_{d-i} summand inside (A⊗B)_d.
    static std::size_t offset(const GradedAlgebra<C>& a, const GradedAlgebra<C>& b, std::size_t d, std::size_t i) {
        std::size_t o = 0;
        for (std::size_t k = 0; k < i; ++k) o += a[k].dim() * b[d - k].dim();
        return o;
    }

    C cat_;
    Module x_, y_;
    FpMatrix iota_;
    std::size_t n_;
    Quotient z_;
    Module xd_, yd_, zd_;
    FpMatrix res_, zinc_;
    GradedAlgebra<C> a_, h_, sz_;
    Subalgebra<C> r_;
    std::optional<GradedAlgebra<C>> ah_, hh_;
    std::vector<FpMatrix> rho_, delta_;
};

}  // namespace verlinde
