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
 * @file gradedalg.hpp
 * @brief Degree-truncated graded commutative algebras in a tensor category.
 *
 * An algebra is a list of components A_0..A_N (A_0 the unit object) and
 * multiplication morphisms m(i,j): A_i⊗A_j -> A_{i+j} for i+j <= N.
 * Subalgebras carry their inclusions, quotients their projections.
 */

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "verlinde/tensorcat.hpp"

namespace verlinde {

template <TensorCategory C>
struct GradedAlgebra {
    C cat;
    std::vector<Module> comps;
    std::vector<std::vector<FpMatrix>> mult;  ///< mult[i][j] for i + j <= N

    std::size_t truncation() const { return comps.size() - 1; }
    const Module& operator[](std::size_t d) const { return comps.at(d); }
    const FpMatrix& m(std::size_t i, std::size_t j) const { return mult.at(i).at(j); }

    std::vector<IsoClass> hilbert() const {
        std::vector<IsoClass> h;
        for (const auto& c : comps) h.push_back(cat.iso_class(c));
        return h;
    }
    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> h;
        for (const auto& c : comps) h.push_back(c.dim());
        return h;
    }
};

template <TensorCategory C>
struct Subalgebra {
    GradedAlgebra<C> alg;
    std::vector<FpMatrix> inclusion;  ///< alg[d] -> ambient[d]
};

template <TensorCategory C>
struct QuotientAlgebra {
    GradedAlgebra<C> alg;
    std::vector<FpMatrix> projection;  ///< ambient[d] -> alg[d]
    std::vector<FpMatrix> section;
};

/// Per-degree subobjects I_d of A_d closed under multiplication by A.
using GradedIdeal = std::vector<Subobject>;

template <TensorCategory C>
std::vector<std::vector<FpMatrix>> empty_mult_table(std::size_t n) {
    std::vector<std::vector<FpMatrix>> t(n + 1);
    for (std::size_t i = 0; i <= n; ++i) t[i].resize(n + 1 - i);
    return t;
}

// ---------------------------------------------------------------------------
// Validation

/// First violated algebra axiom, or nullopt.
template <TensorCategory C>
std::optional<std::string> algebra_violation(const GradedAlgebra<C>& a) {
    const C& cat = a.cat;
    const std::size_t n = a.truncation();
    const Scalar p = cat.prime();
    auto where = [](const char* what, std::size_t i, std::size_t j, std::size_t k = 0) {
        return std::string(what) + " fails at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
    };
    if (a.comps.empty() || a[0].dim() != 1 || !a[0].action().is_zero())
        return std::string("degree 0 component is not the unit object");
    std::vector<std::vector<Module>> t2(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) t2[i].push_back(cat.tensor(a[i], a[j]));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) {
            const FpMatrix& mij = a.m(i, j);
            if (mij.rows() != a[i + j].dim() || mij.cols() != a[i].dim() * a[j].dim()) return where("multiplication shape", i, j);
            if (!cat.is_morphism(t2[i][j], a[i + j], mij)) return where("multiplication is a morphism", i, j);
            const FpMatrix c = cat.braiding(a[i], a[j]);
            if (!cat.equal(t2[i][j], a[i + j], a.m(j, i) * c, mij)) return where("braided commutativity", i, j);
        }
    for (std::size_t j = 0; j <= n; ++j) {
        const FpMatrix id = FpMatrix::identity(a[j].dim(), p);
        if (!cat.equal(a[j], a[j], a.m(0, j), id) || !cat.equal(a[j], a[j], a.m(j, 0), id)) return where("unit law", 0, j);
    }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; i + j <= n; ++j)
            for (std::size_t k = 1; i + j + k <= n; ++k) {
                const FpMatrix lhs = a.m(i + j, k) * kron(a.m(i, j), FpMatrix::identity(a[k].dim(), p));
                const FpMatrix rhs = a.m(i, j + k) * kron(FpMatrix::identity(a[i].dim(), p), a.m(j, k));
                const Module dom = cat.tensor(t2[i][j], a[k]);
                if (!cat.equal(dom, a[i + j + k], lhs, rhs)) return where("associativity", i, j, k);
            }
    return std::nullopt;
}

template <TensorCategory C>
void validate_algebra(const GradedAlgebra<C>& a, const std::string& what) {
    if (auto v = algebra_violation(a)) throw ValidationError(what + ": " + *v);
}

/// Every degree-d morphism f_d commutes with multiplication.
template <TensorCategory C>
std::optional<std::string> algebra_map_violation(const GradedAlgebra<C>& a, const GradedAlgebra<C>& b, const std::vector<FpMatrix>& f) {
    const C& cat = a.cat;
    const std::size_t n = std::min(a.truncation(), b.truncation());
    if (f.size() < n + 1) return std::string("missing components");
    for (std::size_t d = 0; d <= n; ++d)
        if (!cat.is_morphism(a[d], b[d], f[d])) return "component " + std::to_string(d) + " is not a morphism";
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) {
            const Module dom = cat.tensor(a[i], a[j]);
            if (!cat.equal(dom, b[i + j], f[i + j] * a.m(i, j), b.m(i, j) * kron(f[i], f[j])))
                return "multiplicativity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constructions

template <TensorCategory C>
GradedAlgebra<C> unit_algebra(const C& cat, std::size_t n) {
    GradedAlgebra<C> a{cat, {}, empty_mult_table<C>(n)};
    for (std::size_t d = 0; d <= n; ++d) a.comps.push_back(d == 0 ? cat.unit() : cat.zero());
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) a.mult[i][j] = FpMatrix(a[i + j].dim(), a[i].dim() * a[j].dim(), cat.prime());
    a.mult[0][0] = FpMatrix::identity(1, cat.prime());
    return a;
}

/// S(X) truncated at degree n. S^d is the quotient of S^{d-1}⊗X by the image
/// of (m(d-2,1)⊗id)∘(id⊗(c - id)) on S^{d-2}⊗X⊗X.
template <TensorCategory C>
GradedAlgebra<C> free_symmetric(const C& cat, const Module& x, std::size_t n) {
    const Scalar p = cat.prime();
    GradedAlgebra<C> a{cat, {cat.unit()}, empty_mult_table<C>(n)};
    std::vector<FpMatrix> down(n + 1);  // down[d]: A_d -> A_{d-1}⊗X, section of m(d-1,1)
    if (n >= 1) {
        a.comps.push_back(x);
        down[1] = FpMatrix::identity(x.dim(), p);
    }
    std::vector<FpMatrix> q(n + 1);  // q[d] = m(d-1,1)
    if (n >= 1) q[1] = FpMatrix::identity(x.dim(), p);
    const FpMatrix cxx = cat.braiding(x, x) - FpMatrix::identity(x.dim() * x.dim(), p);
    for (std::size_t d = 2; d <= n; ++d) {
        check_size(a[d - 1].dim() * x.dim(), "free_symmetric component");
        const Module prev = cat.tensor(a[d - 1], x);
        const FpMatrix rel = kron(q[d - 1], FpMatrix::identity(x.dim(), p)) * kron(FpMatrix::identity(a[d - 2].dim(), p), cxx);
        const Module rel_dom = cat.tensor(cat.tensor(a[d - 2], x), x);
        Quotient quo = cat.cokernel(rel_dom, prev, rel);
        a.comps.push_back(quo.object);
        q[d] = std::move(quo.projection);
        down[d] = cat.right_inverse_of(prev, a[d], q[d]);
    }
    // m(i,j) = q_{i+j} ∘ (m(i,j-1)⊗id) ∘ (id⊗down_j)
    for (std::size_t i = 0; i <= n; ++i) {
        a.mult[i][0] = FpMatrix::identity(a[i].dim(), p);
        for (std::size_t j = 1; i + j <= n; ++j) {
            if (i == 0) {
                a.mult[0][j] = FpMatrix::identity(a[j].dim(), p);
                continue;
            }
            a.mult[i][j] = q[i + j] * kron(a.mult[i][j - 1], FpMatrix::identity(x.dim(), p)) *
                           kron(FpMatrix::identity(a[i].dim(), p), down[j]);
        }
    }
    return a;
}

/// The subalgebra with the given per-degree subobjects of a; multiplication
/// is lifted through the inclusions. Degree 0 must be the whole unit.
template <TensorCategory C>
Subalgebra<C> subalgebra_from(const GradedAlgebra<C>& a, std::vector<Subobject> subs) {
    const C& cat = a.cat;
    const Scalar p = cat.prime();
    const std::size_t n = a.truncation();
    if (subs.size() != n + 1) throw Error("subalgebra_from: wrong number of components");
    if (cat.iso_class(subs[0].object) != cat.iso_class(a[0])) throw ValidationError("subalgebra does not contain the unit");
    subs[0] = {a[0], FpMatrix::identity(1, p)};
    Subalgebra<C> s{{cat, {}, empty_mult_table<C>(n)}, {}};
    for (auto& sub : subs) {
        s.alg.comps.push_back(sub.object);
        s.inclusion.push_back(sub.inclusion);
    }
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (i == 0 || j == 0) {
                s.alg.mult[i][j] = FpMatrix::identity(s.alg[i + j].dim(), p);
                continue;
            }
            const FpMatrix g = a.m(i, j) * kron(subs[i].inclusion, subs[j].inclusion);
            s.alg.mult[i][j] = cat.lift_through_mono(subs[i + j], a[i + j], cat.tensor(subs[i].object, subs[j].object), g);
        }
    return s;
}

/// A/I for a graded ideal with I_0 = 0.
template <TensorCategory C>
QuotientAlgebra<C> quotient_algebra_by(const GradedAlgebra<C>& a, const GradedIdeal& ideal) {
    const C& cat = a.cat;
    const Scalar p = cat.prime();
    const std::size_t n = a.truncation();
    if (!is_zero_object(cat, ideal.at(0).object)) throw ValidationError("ideal contains the unit");
    QuotientAlgebra<C> q{{cat, {a[0]}, empty_mult_table<C>(n)}, {FpMatrix::identity(1, p)}, {FpMatrix::identity(1, p)}};
    for (std::size_t d = 1; d <= n; ++d) {
        Quotient c = cat.cokernel(ideal[d].object, a[d], ideal[d].inclusion);
        q.alg.comps.push_back(c.object);
        q.projection.push_back(std::move(c.projection));
        q.section.push_back(std::move(c.section));
    }
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (i == 0 || j == 0) {
                q.alg.mult[i][j] = FpMatrix::identity(q.alg[i + j].dim(), p);
                continue;
            }
            q.alg.mult[i][j] = q.projection[i + j] * a.m(i, j) * kron(q.section[i], q.section[j]);
        }
    return q;
}

/// The ideal generated by per-degree subobjects gens[d] of a[d].
template <TensorCategory C>
GradedIdeal ideal_closure(const GradedAlgebra<C>& a, const GradedIdeal& gens) {
    const C& cat = a.cat;
    const Scalar p = cat.prime();
    const std::size_t n = a.truncation();
    GradedIdeal out;
    for (std::size_t d = 0; d <= n; ++d) {
        Subobject cur = gens.at(d);
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t i = d - j;
            if (is_zero_object(cat, out[j].object)) continue;
            const FpMatrix g = a.m(i, j) * kron(FpMatrix::identity(a[i].dim(), p), out[j].inclusion);
            const Subobject piece = cat.image(cat.tensor(a[i], out[j].object), a[d], g);
            cur = subobject_sum(cat, a[d], cur, piece);
        }
        // normalise to an image presentation
        cur = cat.image(cur.object, a[d], cur.inclusion);
        out.push_back(std::move(cur));
    }
    return out;
}

/// True when m(A_i⊗I_j) ⊆ I_{i+j} for all i, j.
template <TensorCategory C>
bool is_ideal(const GradedAlgebra<C>& a, const GradedIdeal& ideal) {
    const C& cat = a.cat;
    const Scalar p = cat.prime();
    const std::size_t n = a.truncation();
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) {
            const FpMatrix g = a.m(i, j) * kron(FpMatrix::identity(a[i].dim(), p), ideal[j].inclusion);
            const Subobject piece = cat.image(cat.tensor(a[i], ideal[j].object), a[i + j], g);
            if (!subobject_contains(cat, a[i + j], ideal[i + j], piece)) return false;
        }
    return true;
}

/// J_A: the ideal generated by the nil parts of all components.
template <TensorCategory C>
GradedIdeal nil_ideal(const GradedAlgebra<C>& a) {
    GradedIdeal gens;
    for (std::size_t d = 0; d <= a.truncation(); ++d) gens.push_back(nil_part(a.cat, a[d]));
    return ideal_closure(a, gens);
}

template <TensorCategory C>
QuotientAlgebra<C> body(const GradedAlgebra<C>& a) {
    return quotient_algebra_by(a, nil_ideal(a));
}

/// A_(0): the images of all maps 1 -> A_d.
template <TensorCategory C>
Subalgebra<C> invariant_subalgebra(const GradedAlgebra<C>& a) {
    const C& cat = a.cat;
    const Scalar p = cat.prime();
    std::vector<Subobject> subs;
    for (std::size_t d = 0; d <= a.truncation(); ++d) {
        const auto homs = cat.hom_basis(cat.unit(), a[d]);
        const FpMatrix ev = hstack(homs, a[d].dim(), p);
        subs.push_back(cat.image(Module::trivial(homs.size(), p), a[d], ev));
    }
    return subalgebra_from(a, std::move(subs));
}

template <TensorCategory C>
Subalgebra<C> algebra_map_image(const GradedAlgebra<C>& a, const GradedAlgebra<C>& b, const std::vector<FpMatrix>& f) {
    if (auto v = algebra_map_violation(a, b, f)) throw ValidationError("algebra_map_image: " + *v);
    std::vector<Subobject> subs;
    for (std::size_t d = 0; d <= b.truncation(); ++d) subs.push_back(b.cat.image(a[d], b[d], f[d]));
    return subalgebra_from(b, std::move(subs));
}

/// The algebra map out of an algebra generated in degree 1 (every m(d-1,1) an
/// epimorphism) determined by f1: A_1 -> B_1. Not validated.
template <TensorCategory C>
std::vector<FpMatrix> extend_from_generators(const GradedAlgebra<C>& a, const GradedAlgebra<C>& b, const FpMatrix& f1) {
    const C& cat = a.cat;
    const Scalar p = cat.prime();
    const std::size_t n = std::min(a.truncation(), b.truncation());
    std::vector<FpMatrix> f{FpMatrix::identity(1, p)};
    if (n >= 1) f.push_back(f1);
    for (std::size_t d = 2; d <= n; ++d) {
        const Module dom = cat.tensor(a[d - 1], a[1]);
        const FpMatrix down = cat.right_inverse_of(dom, a[d], a.m(d - 1, 1));
        f.push_back(b.m(d - 1, 1) * kron(f[d - 1], f1) * down);
    }
    return f;
}

/// A⊗B with components ⊕_{i+j=d} A_i⊗B_j (i ascending) and the braided product
/// (m_A⊗m_B)∘(id⊗c(B_j, A_k)⊗id).
template <TensorCategory C>
GradedAlgebra<C> tensor_algebras(const GradedAlgebra<C>& a, const GradedAlgebra<C>& b) {
    const C& cat = a.cat;
    const Scalar p = cat.prime();
    const std::size_t n = std::min(a.truncation(), b.truncation());
    GradedAlgebra<C> t{cat, {}, empty_mult_table<C>(n)};
    std::vector<std::vector<std::size_t>> off(n + 1);  // off[d][i]: offset of A_i⊗B_{d-i}
    for (std::size_t d = 0; d <= n; ++d) {
        std::vector<Module> parts;
        std::size_t o = 0;
        for (std::size_t i = 0; i <= d; ++i) {
            parts.push_back(cat.tensor(a[i], b[d - i]));
            off[d].push_back(o);
            o += parts.back().dim();
        }
        check_size(o, "tensor_algebras component");
        t.comps.push_back(direct_sum(parts, p).object);
    }
    for (std::size_t d = 0; d <= n; ++d)
        for (std::size_t e = 0; d + e <= n; ++e) {
            const std::size_t dd = t[d].dim(), de = t[e].dim();
            FpMatrix mm(t[d + e].dim(), dd * de, p);
            for (std::size_t i = 0; i <= d; ++i)
                for (std::size_t k = 0; k <= e; ++k) {
                    const std::size_t j = d - i, l = e - k;
                    const std::size_t ai = a[i].dim(), bj = b[j].dim(), ak = a[k].dim(), bl = b[l].dim();
                    if (!ai || !bj || !ak || !bl) continue;
                    const FpMatrix inner = kron(kron(FpMatrix::identity(ai, p), cat.braiding(b[j], a[k])), FpMatrix::identity(bl, p));
                    const FpMatrix blk = kron(a.m(i, k), b.m(j, l)) * inner;
                    const std::size_t left = ai * bj, right = ak * bl;
                    const std::size_t row0 = off[d + e][i + k];
                    for (std::size_t r = 0; r < blk.rows(); ++r)
                        for (std::size_t alpha = 0; alpha < left; ++alpha)
                            for (std::size_t beta = 0; beta < right; ++beta) {
                                const Scalar v = blk(r, alpha * right + beta);
                                if (v) mm(row0 + r, (off[d][i] + alpha) * de + off[e][k] + beta) = v;
                            }
                }
            t.mult[d][e] = std::move(mm);
        }
    return t;
}

// ---------------------------------------------------------------------------
// Associated graded

struct GrLayer {
    std::size_t level;   ///< k in J^k / J^{k+1}
    std::size_t degree;  ///< ambient degree d
    std::size_t offset;  ///< position inside the flattened component
};

template <TensorCategory C>
struct AssociatedGraded {
    GradedAlgebra<C> alg;                   ///< components ⊕_k J^k_d / J^{k+1}_d
    std::vector<std::vector<Module>> layers;  ///< layers[k][d]
    std::vector<GradedIdeal> powers;        ///< powers[k] = J^k (powers[0] = A)
};

/// J·K: per degree the sum of the images of m(J_i⊗K_j).
template <TensorCategory C>
GradedIdeal ideal_product(const GradedAlgebra<C>& a, const GradedIdeal& j, const GradedIdeal& k) {
    const C& cat = a.cat;
    const Scalar p = cat.prime();
    GradedIdeal out;
    for (std::size_t d = 0; d <= a.truncation(); ++d) {
        Subobject cur = zero_subobject(cat, a[d]);
        for (std::size_t i = 0; i <= d; ++i) {
            if (is_zero_object(cat, j[i].object) || is_zero_object(cat, k[d - i].object)) continue;
            const FpMatrix g = a.m(i, d - i) * kron(j[i].inclusion, k[d - i].inclusion);
            cur = subobject_sum(cat, a[d], cur, cat.image(cat.tensor(j[i].object, k[d - i].object), a[d], g));
        }
        (void)p;
        out.push_back(cat.image(cur.object, a[d], cur.inclusion));
    }
    return out;
}

template <TensorCategory C>
bool same_ideal(const GradedAlgebra<C>& a, const GradedIdeal& x, const GradedIdeal& y) {
    for (std::size_t d = 0; d <= a.truncation(); ++d)
        if (!same_subobject(a.cat, a[d], x[d], y[d])) return false;
    return true;
}

/// gr_J A = ⊕_k J^k/J^{k+1}. If the powers stabilise at a nonzero ideal, that
/// ideal is kept as the last layer.
template <TensorCategory C>
AssociatedGraded<C> gr_by_filtration(const GradedAlgebra<C>& a, const GradedIdeal& j) {
    const C& cat = a.cat;
    const Scalar p = cat.prime();
    const std::size_t n = a.truncation();
    AssociatedGraded<C> g{{cat, {}, empty_mult_table<C>(n)}, {}, {}};
    GradedIdeal whole;
    for (std::size_t d = 0; d <= n; ++d) whole.push_back(whole_subobject(cat, a[d]));
    g.powers.push_back(whole);
    g.powers.push_back(j);
    while (true) {
        const GradedIdeal& last = g.powers.back();
        bool zero = true;
        for (const auto& s : last) zero = zero && is_zero_object(cat, s.object);
        if (zero) break;
        GradedIdeal next = ideal_product(a, j, last);
        if (same_ideal(a, next, last)) {
            GradedIdeal z;
            for (std::size_t d = 0; d <= n; ++d) z.push_back(zero_subobject(cat, a[d]));
            g.powers.push_back(std::move(z));
            break;
        }
        g.powers.push_back(std::move(next));
    }
    const std::size_t levels = g.powers.size() - 1;
    // layer (k,d): J^k_d / J^{k+1}_d with maps into and out of A_d
    std::vector<std::vector<FpMatrix>> lift(levels, std::vector<FpMatrix>(n + 1));  // layer -> A_d (section then inclusion)
    std::vector<std::vector<FpMatrix>> proj(levels, std::vector<FpMatrix>(n + 1));  // J^k_d -> layer
    g.layers.assign(levels, std::vector<Module>(n + 1));
    for (std::size_t k = 0; k < levels; ++k)
        for (std::size_t d = 0; d <= n; ++d) {
            const Subobject& big = g.powers[k][d];
            const Subobject& small = g.powers[k + 1][d];
            const FpMatrix into = cat.lift_through_mono(big, a[d], small.object, small.inclusion);
            Quotient q = cat.cokernel(small.object, big.object, into);
            g.layers[k][d] = q.object;
            lift[k][d] = big.inclusion * q.section;
            proj[k][d] = std::move(q.projection);
        }
    std::vector<std::vector<std::size_t>> off(n + 1, std::vector<std::size_t>(levels, 0));
    for (std::size_t d = 0; d <= n; ++d) {
        std::vector<Module> parts;
        std::size_t o = 0;
        for (std::size_t k = 0; k < levels; ++k) {
            off[d][k] = o;
            o += g.layers[k][d].dim();
            parts.push_back(g.layers[k][d]);
        }
        g.alg.comps.push_back(direct_sum(parts, p).object);
    }
    for (std::size_t d = 0; d <= n; ++d)
        for (std::size_t e = 0; d + e <= n; ++e) {
            const std::size_t dd = g.alg[d].dim(), de = g.alg[e].dim();
            FpMatrix mm(g.alg[d + e].dim(), dd * de, p);
            for (std::size_t k = 0; k < levels; ++k)
                for (std::size_t l = 0; k + l < levels; ++l) {
                    const std::size_t lk = g.layers[k][d].dim(), ll = g.layers[l][e].dim();
                    if (!lk || !ll) continue;
                    const std::size_t target = k + l;
                    // product lands in J^{k+l}_{d+e}; project to its layer
                    const FpMatrix prod = a.m(d, e) * kron(lift[k][d], lift[l][e]);
                    const Module dom = cat.tensor(g.layers[k][d], g.layers[l][e]);
                    const FpMatrix in_power = cat.lift_through_mono(g.powers[target][d + e], a[d + e], dom, prod);
                    const FpMatrix blk = proj[target][d + e] * in_power;
                    for (std::size_t r = 0; r < blk.rows(); ++r)
                        for (std::size_t alpha = 0; alpha < lk; ++alpha)
                            for (std::size_t beta = 0; beta < ll; ++beta) {
                                const Scalar v = blk(r, alpha * ll + beta);
                                if (v) mm(off[d + e][target] + r, (off[d][k] + alpha) * de + off[e][l] + beta) = v;
                            }
                }
            g.alg.mult[d][e] = std::move(mm);
        }
    return g;
}

// ---------------------------------------------------------------------------
// Frobenius twist

namespace detail {

/// Compositions of d into `parts` nonnegative parts, lexicographic.
inline void compositions(std::size_t d, std::size_t parts, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() + 1 == parts) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::size_t k = 0; k <= d; ++k) {
        cur.push_back(k);
        compositions(d - k, parts, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// Joint kernel of the endomorphisms e - id of x, as a subobject.
template <TensorCategory C>
Subobject joint_fixed_points(const C& cat, const Module& x, const std::vector<FpMatrix>& endos) {
    const Scalar p = cat.prime();
    if (endos.empty()) return whole_subobject(cat, x);
    if constexpr (requires { cat.joint_fixed_points(x, endos); }) {
        return cat.joint_fixed_points(x, endos);
    } else {
        std::vector<FpMatrix> diffs;
        for (const auto& e : endos) diffs.push_back(e - FpMatrix::identity(x.dim(), p));
        const auto target = direct_sum(std::vector<Module>(endos.size(), x), p).object;
        return cat.kernel(x, target, vstack(diffs, x.dim(), p));
    }
}

/// A^{[1]} = image of Γ^p A = (A^{⊗p})^{S_p} under the p-fold multiplication,
/// as a subalgebra of A indexed by ambient degree.
template <TensorCategory C>
Subalgebra<C> frobenius_twist(const GradedAlgebra<C>& a) {
    const C& cat = a.cat;
    const Scalar p = cat.prime();
    const std::size_t n = a.truncation();
    std::vector<Subobject> subs;
    for (std::size_t d = 0; d <= n; ++d) {
        std::vector<std::vector<std::size_t>> comps;
        std::vector<std::size_t> cur;
        detail::compositions(d, p, cur, comps);
        // group compositions into S_p-orbits by their sorted multiset
        std::map<std::vector<std::size_t>, std::vector<std::size_t>> orbits;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            auto key = comps[c];
            std::sort(key.begin(), key.end());
            orbits[key].push_back(c);
        }
        Subobject acc = zero_subobject(cat, a[d]);
        for (const auto& [key, members] : orbits) {
            bool skip = false;
            for (auto deg : key) skip = skip || a[deg].dim() == 0;
            if (skip) continue;
            // summand modules, their offsets and the p-fold products
            std::vector<Module> parts;
            std::vector<std::size_t> offs;
            std::map<std::vector<std::size_t>, std::size_t> index;
            std::size_t total = 0;
            for (auto c : members) {
                Module t = cat.unit();
                for (auto deg : comps[c]) t = cat.tensor(t, a[deg]);
                index[comps[c]] = parts.size();
                offs.push_back(total);
                total += t.dim();
                parts.push_back(std::move(t));
            }
            check_size(total, "frobenius_twist orbit");
            const Module orbit = direct_sum(parts, p).object;
            std::vector<FpMatrix> taus;
            for (std::size_t i = 0; i + 1 < p; ++i) {
                FpMatrix tau(total, total, p);
                for (std::size_t s = 0; s < members.size(); ++s) {
                    const auto& w = comps[members[s]];
                    std::size_t left = 1, right = 1;
                    for (std::size_t k = 0; k < i; ++k) left *= a[w[k]].dim();
                    for (std::size_t k = i + 2; k < p; ++k) right *= a[w[k]].dim();
                    const FpMatrix blk =
                        kron(kron(FpMatrix::identity(left, p), cat.braiding(a[w[i]], a[w[i + 1]])), FpMatrix::identity(right, p));
                    auto swapped = w;
                    std::swap(swapped[i], swapped[i + 1]);
                    tau.set_block(offs[index.at(swapped)], offs[s], blk);
                }
                taus.push_back(std::move(tau));
            }
            const Subobject inv = joint_fixed_points(cat, orbit, taus);
            if (is_zero_object(cat, inv.object)) continue;
            // p-fold multiplication on each summand, right-nested
            FpMatrix mu(a[d].dim(), total, p);
            for (std::size_t s = 0; s < members.size(); ++s) {
                const auto& w = comps[members[s]];
                FpMatrix m = FpMatrix::identity(a[w[p - 1]].dim(), p);
                std::size_t deg = w[p - 1];
                for (std::size_t k = p - 1; k-- > 0;) {
                    m = a.m(w[k], deg) * kron(FpMatrix::identity(a[w[k]].dim(), p), m);
                    deg += w[k];
                }
                mu.set_block(0, offs[s], m);
            }
            const Subobject piece = cat.image(inv.object, a[d], mu * inv.inclusion);
            acc = subobject_sum(cat, a[d], acc, piece);
        }
        subs.push_back(cat.image(acc.object, a[d], acc.inclusion));
    }
    return subalgebra_from(a, std::move(subs));
}

}  // namespace verlinde
