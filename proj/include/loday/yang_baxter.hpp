/*
 * yang_baxter.hpp
 * ---------------
 * r-matrix machinery: slot products, the three Yang-Baxter defects
 * (Leibniz / classical / Zinbiel), invariance defects, coboundary
 * coproducts, quasi-triangular / triangular / factorizable classification,
 * the tensor-product lift of LYBE solutions, sharp maps, and O-operator
 * verification.
 *
 * Conventions for r = sum_i a_i (x) b_i:
 *   r_12 = sum a_i (x) b_i (x) 1,  r_13 = sum a_i (x) 1 (x) b_i,
 *   r_23 = sum 1 (x) a_i (x) b_i,  r_21 = tau(r) placed in slots (2,1).
 * In P * Q the product lands in the unique shared slot with P's factor on
 * the left; the remaining factors keep their declared slots.
 */
#pragma once

#include <array>
#include <string>
#include <vector>

#include "loday/algebra.hpp"
#include "loday/coalgebra.hpp"
#include "loday/errors.hpp"
#include "loday/tensor3.hpp"

namespace loday {

/// r = sum_{ij} coeffs[i][j] e_i (x) e_j.
struct TensorElem2 {
    int dim = 0;
    Matrix coeffs;

    static TensorElem2 zero(int dim) { return {dim, Matrix(dim, dim)}; }

    TensorElem2 tau() const { return {dim, coeffs.transpose()}; }
    bool symmetric() const { return coeffs == coeffs.transpose(); }
    bool skew() const { return coeffs == -coeffs.transpose(); }
    bool is_zero() const { return coeffs.is_zero(); }

    TensorElem2 operator+(const TensorElem2& o) const { return {dim, coeffs + o.coeffs}; }
    TensorElem2 operator-(const TensorElem2& o) const { return {dim, coeffs - o.coeffs}; }
    bool operator==(const TensorElem2& o) const { return dim == o.dim && coeffs == o.coeffs; }
};

struct TensorElem3 {
    int dim = 0;
    Tensor3 coeffs;

    static TensorElem3 zero(int dim) { return {dim, Tensor3::cube(dim)}; }
    bool is_zero() const { return coeffs.is_zero(); }
    TensorElem3 operator+(const TensorElem3& o) const { return {dim, coeffs + o.coeffs}; }
    TensorElem3 operator-(const TensorElem3& o) const { return {dim, coeffs - o.coeffs}; }
};

/// The nine two-sided slot placements used by the three Yang-Baxter defects.
enum class Placement {
    P12_13, P12_23, P23_12, P23_13, P13_23, P13_12, P13_21, P21_13, P23_21,
};

inline std::string to_string(Placement p) {
    switch (p) {
        case Placement::P12_13: return "12.13";
        case Placement::P12_23: return "12.23";
        case Placement::P23_12: return "23.12";
        case Placement::P23_13: return "23.13";
        case Placement::P13_23: return "13.23";
        case Placement::P13_12: return "13.12";
        case Placement::P13_21: return "13.21";
        case Placement::P21_13: return "21.13";
        case Placement::P23_21: return "23.21";
    }
    return "?";
}

namespace detail {

// Slots occupied by the first/second tensor factor for each side.
struct SlotPair {
    int first, second;
};

inline std::pair<SlotPair, SlotPair> placement_slots(Placement p) {
    const SlotPair s12{0, 1}, s13{0, 2}, s23{1, 2}, s21{1, 0};
    switch (p) {
        case Placement::P12_13: return {s12, s13};
        case Placement::P12_23: return {s12, s23};
        case Placement::P23_12: return {s23, s12};
        case Placement::P23_13: return {s23, s13};
        case Placement::P13_23: return {s13, s23};
        case Placement::P13_12: return {s13, s12};
        case Placement::P13_21: return {s13, s21};
        case Placement::P21_13: return {s21, s13};
        case Placement::P23_21: return {s23, s21};
    }
    throw ContractViolation("invalid slot placement");
}

}  // namespace detail

/// Place r and s into three slots per `placement` and multiply in the unique
/// shared slot (left operand's factor on the left of the product).
inline TensorElem3 slot_product(const FinAlgebra& alg, const TensorElem2& r, const TensorElem2& s,
                                Placement placement) {
    if (r.dim != alg.dim || s.dim != alg.dim)
        throw ContractViolation("slot_product: tensor dimension mismatch");
    const auto [left, right] = detail::placement_slots(placement);
    int shared = -1;
    for (int slot : {left.first, left.second})
        if (slot == right.first || slot == right.second) shared = slot;
    const int n = alg.dim;
    TensorElem3 out = TensorElem3::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Scalar& rij = r.coeffs.at(i, j);
            if (rij.is_zero()) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Scalar& skl = s.coeffs.at(k, l);
                    if (skl.is_zero()) continue;
                    const Scalar c = rij * skl;
                    int pos[3] = {-1, -1, -1};
                    // left operand's factor in the shared slot
                    const int u = (left.first == shared) ? i : j;
                    const int v = (right.first == shared) ? k : l;
                    if (left.first != shared) pos[left.first] = i;
                    if (left.second != shared) pos[left.second] = j;
                    if (right.first != shared) pos[right.first] = k;
                    if (right.second != shared) pos[right.second] = l;
                    for (int w = 0; w < n; ++w) {
                        const Scalar& cw = alg.product.at(u, v, w);
                        if (cw.is_zero()) continue;
                        pos[shared] = w;
                        out.coeffs.at(pos[0], pos[1], pos[2]) += c * cw;
                    }
                }
        }
    return out;
}

/// L_r = r12 o r13 - r12 o r23 - r23 o r12 + r23 o r13.
inline TensorElem3 lybe_defect(const FinAlgebra& leibniz, const TensorElem2& r) {
    ensure_kind(leibniz, AlgebraKind::Leibniz, "lybe_defect");
    return slot_product(leibniz, r, r, Placement::P12_13) -
           slot_product(leibniz, r, r, Placement::P12_23) -
           slot_product(leibniz, r, r, Placement::P23_12) +
           slot_product(leibniz, r, r, Placement::P23_13);
}

/// C_r = [r12, r13] + [r12, r23] + [r13, r23].
inline TensorElem3 cybe_defect(const FinAlgebra& lie, const TensorElem2& r) {
    ensure_kind(lie, AlgebraKind::Lie, "cybe_defect");
    return slot_product(lie, r, r, Placement::P12_13) +
           slot_product(lie, r, r, Placement::P12_23) +
           slot_product(lie, r, r, Placement::P13_23);
}

/// Z_r = r13.r21 + r21.r13 + r12.r23 + r23.r12
///       - r13.r23 - r23.r13 - r13.r12 - r23.r21.
inline TensorElem3 zybe_defect(const FinAlgebra& zinbiel, const TensorElem2& r) {
    ensure_kind(zinbiel, AlgebraKind::Zinbiel, "zybe_defect");
    return slot_product(zinbiel, r, r, Placement::P13_21) +
           slot_product(zinbiel, r, r, Placement::P21_13) +
           slot_product(zinbiel, r, r, Placement::P12_23) +
           slot_product(zinbiel, r, r, Placement::P23_12) -
           slot_product(zinbiel, r, r, Placement::P13_23) -
           slot_product(zinbiel, r, r, Placement::P23_13) -
           slot_product(zinbiel, r, r, Placement::P13_12) -
           slot_product(zinbiel, r, r, Placement::P23_21);
}

inline TensorElem3 ybe_defect(const FinAlgebra& alg, const TensorElem2& r, AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::Leibniz: return lybe_defect(alg, r);
        case AlgebraKind::Lie: return cybe_defect(alg, r);
        case AlgebraKind::Zinbiel: return zybe_defect(alg, r);
        default: throw ContractViolation("ybe_defect: unsupported kind");
    }
}

/// Per-basis-element invariance defect of r:
///   Leibniz: (id (x) r(b) - (l + r)(b) (x) id)(r)
///   Lie:     (id (x) ad(g) + ad(g) (x) id)(r)
///   Zinbiel: (id (x) (l + r)(a) - l(a) (x) id)(r)
inline std::vector<Matrix> invariance_defect(const FinAlgebra& alg, const TensorElem2& r,
                                             AlgebraKind kind) {
    if (r.dim != alg.dim) throw ContractViolation("invariance_defect: dimension mismatch");
    auto [l, rr] = regular_rep(alg);
    std::vector<Matrix> out;
    out.reserve(static_cast<size_t>(alg.dim));
    for (int a = 0; a < alg.dim; ++a) {
        Matrix d(alg.dim, alg.dim);
        switch (kind) {
            case AlgebraKind::Leibniz:
                d = r.coeffs * rr.of_basis(a).transpose() -
                    (l.of_basis(a) + rr.of_basis(a)) * r.coeffs;
                break;
            case AlgebraKind::Lie:
                d = r.coeffs * l.of_basis(a).transpose() + l.of_basis(a) * r.coeffs;
                break;
            case AlgebraKind::Zinbiel:
                d = r.coeffs * (l.of_basis(a) + rr.of_basis(a)).transpose() -
                    l.of_basis(a) * r.coeffs;
                break;
            default:
                throw ContractViolation("invariance_defect: unsupported kind");
        }
        out.push_back(std::move(d));
    }
    return out;
}

inline bool is_invariant(const FinAlgebra& alg, const TensorElem2& r, AlgebraKind kind) {
    for (const auto& d : invariance_defect(alg, r, kind))
        if (!d.is_zero()) return false;
    return true;
}

/// Coboundary coproduct generated by r (kind tag left Unchecked):
/// the basis-element invariance operator applied to r defines Delta(e_a).
inline Coalgebra coboundary_coproduct(const FinAlgebra& alg, const TensorElem2& r,
                                      AlgebraKind kind) {
    auto defects = invariance_defect(alg, r, kind);
    Coalgebra co = Coalgebra::zero(alg.dim);
    for (int a = 0; a < alg.dim; ++a)
        for (int i = 0; i < alg.dim; ++i)
            for (int j = 0; j < alg.dim; ++j)
                co.coproduct.at(i, j, a) = defects[static_cast<size_t>(a)].at(i, j);
    return co;
}

/// Matrix of r#: V* -> V, <r#(xi), eta> = <xi (x) eta, r>; in coordinate
/// bases this is the transpose of the coefficient grid.
inline Matrix r_sharp(const TensorElem2& r) { return r.coeffs.transpose(); }

enum class FactorizableVerdict { Yes, No, NotDefinedForZinbiel };

struct ClassifyRecord {
    bool solves_ybe = false;
    bool part_invariant = false;  // r - tau(r) (Leibniz/Zinbiel) or r + tau(r) (Lie)
    bool symmetric = false;
    bool skew = false;
    FactorizableVerdict factorizable = FactorizableVerdict::No;
    int sharp_pair_rank = 0;  // rank of r# -/+ tau(r)#

    bool quasi_triangular() const { return solves_ybe && part_invariant; }
    bool triangular(AlgebraKind kind) const {
        return solves_ybe && (kind == AlgebraKind::Lie ? skew : symmetric);
    }
};

/// All classification evidence for r at once; "quasi-triangular",
/// "triangular" and "factorizable" are derived predicates over the flags.
inline ClassifyRecord classify_r(const FinAlgebra& alg, const TensorElem2& r, AlgebraKind kind) {
    if (kind != AlgebraKind::Leibniz && kind != AlgebraKind::Lie && kind != AlgebraKind::Zinbiel)
        throw ContractViolation("classify_r: unsupported kind");
    ClassifyRecord rec;
    rec.solves_ybe = ybe_defect(alg, r, kind).is_zero();
    const TensorElem2 part =
        kind == AlgebraKind::Lie ? r + r.tau() : r - r.tau();
    rec.part_invariant = is_invariant(alg, part, kind);
    rec.symmetric = r.symmetric();
    rec.skew = r.skew();
    const Matrix pair_sharp = kind == AlgebraKind::Lie ? r_sharp(r) + r_sharp(r.tau())
                                                       : r_sharp(r) - r_sharp(r.tau());
    rec.sharp_pair_rank = rank(pair_sharp);
    if (kind == AlgebraKind::Zinbiel) {
        rec.factorizable = FactorizableVerdict::NotDefinedForZinbiel;
    } else {
        rec.factorizable = (rec.quasi_triangular() && rec.sharp_pair_rank == alg.dim)
                               ? FactorizableVerdict::Yes
                               : FactorizableVerdict::No;
    }
    return rec;
}

/// r0 = sum_j e_j (x) f_j over the dual basis of a nondegenerate form.
inline TensorElem2 canonical_pair_tensor(const BilinForm& form) {
    const auto duals = dual_basis(form.gram);
    TensorElem2 r0 = TensorElem2::zero(form.dim);
    for (int j = 0; j < form.dim; ++j)
        for (int w = 0; w < form.dim; ++w)
            r0.coeffs.at(j, w) = duals[static_cast<size_t>(j)][static_cast<size_t>(w)];
    return r0;
}

/// Lift of an LYBE solution r in B along a quadratic Zinbiel (A, kappa):
/// r~ = sum_{i,j} (e_j (x) x_i) (x) (f_j (x) y_i) on the flattened A (x) B.
inline TensorElem2 lift_lybe(const FinAlgebra& zinbiel, const BilinForm& kappa,
                             const FinAlgebra& leibniz, const TensorElem2& r) {
    require_quadratic(zinbiel, kappa, AlgebraKind::Zinbiel, "lift_lybe");
    if (r.dim != leibniz.dim) throw ContractViolation("lift_lybe: r dimension mismatch");
    const TensorElem2 r0 = canonical_pair_tensor(kappa);
    return {zinbiel.dim * leibniz.dim, kron(r0.coeffs, r.coeffs)};
}

/// Finite specialization of the completed lift: a ZYBE solution r in A pairs
/// with the dual pairs of a finite quadratic Leibniz (B, omega),
/// r^ = sum_{l,i} (x_i (x) e_l) (x) (y_i (x) f_l).
inline TensorElem2 lift_zybe_finite(const FinAlgebra& zinbiel, const TensorElem2& r,
                                    const FinAlgebra& leibniz, const BilinForm& omega) {
    require_quadratic(leibniz, omega, AlgebraKind::Leibniz, "lift_zybe_finite");
    if (r.dim != zinbiel.dim) throw ContractViolation("lift_zybe_finite: r dimension mismatch");
    const TensorElem2 pairs = canonical_pair_tensor(omega);
    return {zinbiel.dim * leibniz.dim, kron(r.coeffs, pairs.coeffs)};
}

/// O-operator check. Leibniz kind (l, r families on the carrier):
///   T(v1) o T(v2) = T( l(T(v1)) v2 + r(T(v2)) v1 )
/// Lie kind (family rho, second family ignored):
///   [T(v1), T(v2)] = T( rho(T(v1)) v2 - rho(T(v2)) v1 )
inline CheckReport check_o_operator(const FinAlgebra& alg, const Matrix& t,
                                    const LinearMapFamily& l, const LinearMapFamily& r,
                                    AlgebraKind kind) {
    if (t.rows() != alg.dim)
        throw ContractViolation("check_o_operator: T must map into the algebra");
    const int carrier = t.cols();
    if (l.algebra_dim != alg.dim || l.carrier_dim != carrier)
        throw ContractViolation("check_o_operator: left family shape mismatch");
    if (kind == AlgebraKind::Leibniz &&
        (r.algebra_dim != alg.dim || r.carrier_dim != carrier))
        throw ContractViolation("check_o_operator: right family shape mismatch");
    CheckReport report;
    report.name = "o-operator/" + to_string(kind);
    for (int u = 0; u < carrier; ++u) {
        Vec tu(static_cast<size_t>(alg.dim));
        for (int i = 0; i < alg.dim; ++i) tu[static_cast<size_t>(i)] = t.at(i, u);
        for (int v = 0; v < carrier; ++v) {
            Vec tv(static_cast<size_t>(alg.dim));
            for (int i = 0; i < alg.dim; ++i) tv[static_cast<size_t>(i)] = t.at(i, v);
            Vec lhs = multiply(alg, tu, tv);
            Vec action;
            if (kind == AlgebraKind::Leibniz) {
                action = l.of_vector(tu).apply(unit_vector(carrier, v)) +
                         r.of_vector(tv).apply(unit_vector(carrier, u));
            } else if (kind == AlgebraKind::Lie) {
                action = l.of_vector(tu).apply(unit_vector(carrier, v)) -
                         l.of_vector(tv).apply(unit_vector(carrier, u));
            } else {
                throw ContractViolation("check_o_operator: unsupported kind");
            }
            Vec d = lhs - t.apply(action);
            if (!is_zero(d)) report.record("o-operator", {u, v}, std::move(d));
        }
    }
    return report;
}

/// The coadjoint family rho = -ad* of a Lie algebra (matrix -ad(e_a)^T).
inline LinearMapFamily coadjoint_family(const FinAlgebra& lie) {
    auto [ad, unused] = regular_rep(lie);
    (void)unused;
    LinearMapFamily rho = LinearMapFamily::zero(lie.dim, lie.dim);
    for (int a = 0; a < lie.dim; ++a)
        rho.maps[static_cast<size_t>(a)] = -ad.of_basis(a).transpose();
    return rho;
}

/// Exhaustively enumerate symmetric YBE solutions with entries drawn from
/// `values` (the generator behind the randomized bialgebra suites).
inline std::vector<TensorElem2> symmetric_ybe_solutions(const FinAlgebra& alg, AlgebraKind kind,
                                                        const std::vector<Scalar>& values) {
    const int n = alg.dim;
    const int cells = n * (n + 1) / 2;
    std::vector<TensorElem2> found;
    std::vector<size_t> choice(static_cast<size_t>(cells), 0);
    const size_t base = values.size();
    while (true) {
        TensorElem2 r = TensorElem2::zero(n);
        int cell = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const Scalar& v = values[choice[static_cast<size_t>(cell++)]];
                r.coeffs.at(i, j) = v;
                r.coeffs.at(j, i) = v;
            }
        if (ybe_defect(alg, r, kind).is_zero()) found.push_back(std::move(r));
        int pos = 0;
        while (pos < cells) {
            if (++choice[static_cast<size_t>(pos)] < base) break;
            choice[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == cells) break;
    }
    return found;
}

}  // namespace loday
