/*
 * tensor_product.hpp
 * ------------------
 * The induced Lie algebra/coalgebra/bialgebra on A (x) B, product bilinear
 * forms, bialgebra compatibility checks, Manin-triple verification and the
 * standard double of a Lie bialgebra.
 *
 * Flattening is left-major everywhere: basis a_i (x) b_p of A (x) B sits at
 * index i*dim(B) + p. Golden files depend on this order.
 */
#pragma once

#include <string>
#include <utility>

#include "loday/algebra.hpp"
#include "loday/coalgebra.hpp"
#include "loday/errors.hpp"

namespace loday {

struct TensorBasisIndex {
    int left = 0;
    int right = 0;
};

inline int flatten(TensorBasisIndex idx, int right_dim) { return idx.left * right_dim + idx.right; }
inline TensorBasisIndex unflatten(int flat, int right_dim) {
    return {flat / right_dim, flat % right_dim};
}

/// The bracket [a1 (x) b1, a2 (x) b2] = a1.a2 (x) b1 o b2 - a2.a1 (x) b2 o b1
/// as a raw structure tensor, with no kind verification (the converse
/// detectors feed it arbitrary products on purpose).
inline FinAlgebra induced_bracket_raw(const FinAlgebra& a, const FinAlgebra& b) {
    const int na = a.dim, nb = b.dim;
    FinAlgebra g = FinAlgebra::zero(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < na; ++k) {
                const Scalar& cij = a.product.at(i, j, k);
                const Scalar& cji = a.product.at(j, i, k);
                if (cij.is_zero() && cji.is_zero()) continue;
                for (int p = 0; p < nb; ++p)
                    for (int q = 0; q < nb; ++q)
                        for (int r = 0; r < nb; ++r) {
                            Scalar v = cij * b.product.at(p, q, r) - cji * b.product.at(q, p, r);
                            if (!v.is_zero()) g.product.at(i * nb + p, j * nb + q, k * nb + r) += v;
                        }
            }
    for (int i = 0; i < na; ++i)
        for (int p = 0; p < nb; ++p) g.basis_labels.push_back(a.label(i) + "(x)" + b.label(p));
    return g;
}

/// Lie bracket on A (x) B induced by a Zinbiel A and a Leibniz B.
inline FinAlgebra induced_lie(const FinAlgebra& zinbiel, const FinAlgebra& leibniz) {
    ensure_kind(zinbiel, AlgebraKind::Zinbiel, "induced_lie");
    ensure_kind(leibniz, AlgebraKind::Leibniz, "induced_lie");
    return verified(induced_bracket_raw(zinbiel, leibniz), AlgebraKind::Lie);
}

/// Lie cobracket on A (x) B induced by a Zinbiel coalgebra and a Leibniz
/// coalgebra: delta(a (x) b) = (id - tau)(Delta(a) * theta(b)) with the
/// slotwise interleaving product *.
inline Coalgebra induced_lie_coalgebra(const Coalgebra& zinbiel_co, const Coalgebra& leibniz_co) {
    ensure_cokind(zinbiel_co, CoKind::ZinbielCo, "induced_lie_coalgebra");
    ensure_cokind(leibniz_co, CoKind::LeibnizCo, "induced_lie_coalgebra");
    const int na = zinbiel_co.dim, nb = leibniz_co.dim;
    Coalgebra out = Coalgebra::zero(na * nb);
    for (int k = 0; k < na; ++k)
        for (int r = 0; r < nb; ++r)
            for (int i = 0; i < na; ++i)
                for (int j = 0; j < na; ++j) {
                    const Scalar& dij = zinbiel_co.coproduct.at(i, j, k);
                    const Scalar& dji = zinbiel_co.coproduct.at(j, i, k);
                    if (dij.is_zero() && dji.is_zero()) continue;
                    for (int p = 0; p < nb; ++p)
                        for (int q = 0; q < nb; ++q) {
                            Scalar v = dij * leibniz_co.coproduct.at(p, q, r) -
                                       dji * leibniz_co.coproduct.at(q, p, r);
                            if (!v.is_zero())
                                out.coproduct.at(i * nb + p, j * nb + q, k * nb + r) += v;
                        }
                }
    return verified(std::move(out), CoKind::LieCo);
}

// ---------------------------------------------------------------------------
// Bialgebras
// ---------------------------------------------------------------------------

enum class BialgebraKind { LeibnizBi, LieBi, ZinbielBi };

inline std::string to_string(BialgebraKind k) {
    switch (k) {
        case BialgebraKind::LeibnizBi: return "leibniz_bi";
        case BialgebraKind::LieBi: return "lie_bi";
        case BialgebraKind::ZinbielBi: return "zinbiel_bi";
    }
    return "leibniz_bi";
}

struct Bialgebra {
    FinAlgebra algebra;
    Coalgebra coalgebra;
    BialgebraKind kind = BialgebraKind::LeibnizBi;
};

namespace detail {

/// Sparse views used by the compatibility sweeps: coproduct grids,
/// left/right multiplication operators and basis products.
struct SparseBiData {
    std::vector<SparseMat> grid, lmul, rmul;
    std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> prod;
};

inline SparseBiData sparse_bi_data(const FinAlgebra& a, const Coalgebra& co) {
    const int n = a.dim;
    SparseBiData d;
    d.grid.assign(static_cast<size_t>(n), SparseMat(n, n));
    d.lmul.assign(static_cast<size_t>(n), SparseMat(n, n));
    d.rmul.assign(static_cast<size_t>(n), SparseMat(n, n));
    d.prod.assign(static_cast<size_t>(n),
                  std::vector<std::vector<std::pair<int, Scalar>>>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Scalar& c = a.product.at(i, j, k);
                if (!c.is_zero()) {
                    d.lmul[static_cast<size_t>(i)].add_at(k, j, c);
                    d.rmul[static_cast<size_t>(j)].add_at(k, i, c);
                    d.prod[static_cast<size_t>(i)][static_cast<size_t>(j)].push_back({k, c});
                }
                const Scalar& dc = co.coproduct.at(i, j, k);
                if (!dc.is_zero()) d.grid[static_cast<size_t>(k)].add_at(i, j, dc);
            }
    return d;
}

inline SparseMat grid_of_product(const SparseBiData& d, int i, int j) {
    SparseMat g(d.grid[0].rows(), d.grid[0].cols());
    for (const auto& [c, v] : d.prod[static_cast<size_t>(i)][static_cast<size_t>(j)])
        g.accumulate(d.grid[static_cast<size_t>(c)], v);
    return g;
}

}  // namespace detail

/// Leibniz bialgebra compatibility:
///   theta(b1 o b2) = (id (x) r(b2) - (l + r)(b2) (x) id)(id + tau) theta(b1)
///                    + (id (x) l(b1) + l(b1) (x) id) theta(b2)
///   tau (r(b2) (x) id) theta(b1) = (r(b1) (x) id) theta(b2)
inline CheckReport check_leibniz_bialgebra(const Bialgebra& bi) {
    if (bi.algebra.dim != bi.coalgebra.dim)
        throw ContractViolation("check_leibniz_bialgebra: dimension mismatch");
    CheckReport report;
    report.name = "bialgebra/leibniz";
    if (bi.algebra.kind != AlgebraKind::Leibniz)
        report.absorb(check_identity(bi.algebra, AlgebraKind::Leibniz));
    if (bi.coalgebra.kind != CoKind::LeibnizCo)
        report.absorb(check_coidentity(bi.coalgebra, CoKind::LeibnizCo));
    const auto d = detail::sparse_bi_data(bi.algebra, bi.coalgebra);
    const int n = bi.algebra.dim;
    for (int i = 0; i < n; ++i) {
        const SparseMat& ti = d.grid[static_cast<size_t>(i)];
        SparseMat si = ti;
        si.accumulate(ti.transposed(), Scalar(1));
        const SparseMat& li = d.lmul[static_cast<size_t>(i)];
        const SparseMat& ri = d.rmul[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
            const SparseMat& tj = d.grid[static_cast<size_t>(j)];
            const SparseMat& lj = d.lmul[static_cast<size_t>(j)];
            const SparseMat& rj = d.rmul[static_cast<size_t>(j)];
            SparseMat lr_j = lj;
            lr_j.accumulate(rj, Scalar(1));
            SparseMat d1 = detail::grid_of_product(d, i, j);
            d1.accumulate(si.times(rj.transposed()), Scalar(-1));
            d1.accumulate(lr_j.times(si), Scalar(1));
            d1.accumulate(tj.times(li.transposed()), Scalar(-1));
            d1.accumulate(li.times(tj), Scalar(-1));
            if (!d1.zero()) report.record("cocycle", {i, j}, detail::flatten(d1.dense()));
            SparseMat d2 = rj.times(ti).transposed();
            d2.accumulate(ri.times(tj), Scalar(-1));
            if (!d2.zero()) report.record("co-symmetry", {i, j}, detail::flatten(d2.dense()));
        }
    }
    return report;
}

/// Lie bialgebra 1-cocycle condition:
///   delta([g1,g2]) = (ad(g1) (x) id + id (x) ad(g1)) delta(g2)
///                  - (ad(g2) (x) id + id (x) ad(g2)) delta(g1)
inline CheckReport check_lie_bialgebra(const Bialgebra& bi) {
    if (bi.algebra.dim != bi.coalgebra.dim)
        throw ContractViolation("check_lie_bialgebra: dimension mismatch");
    CheckReport report;
    report.name = "bialgebra/lie";
    if (bi.algebra.kind != AlgebraKind::Lie)
        report.absorb(check_identity(bi.algebra, AlgebraKind::Lie));
    if (bi.coalgebra.kind != CoKind::LieCo)
        report.absorb(check_coidentity(bi.coalgebra, CoKind::LieCo));
    const auto d = detail::sparse_bi_data(bi.algebra, bi.coalgebra);
    const int n = bi.algebra.dim;
    for (int i = 0; i < n; ++i) {
        const SparseMat& ti = d.grid[static_cast<size_t>(i)];
        const SparseMat& adi = d.lmul[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
            const SparseMat& tj = d.grid[static_cast<size_t>(j)];
            const SparseMat& adj = d.lmul[static_cast<size_t>(j)];
            SparseMat defect = detail::grid_of_product(d, i, j);
            defect.accumulate(adi.times(tj), Scalar(-1));
            defect.accumulate(tj.times(adi.transposed()), Scalar(-1));
            defect.accumulate(adj.times(ti), Scalar(1));
            defect.accumulate(ti.times(adj.transposed()), Scalar(1));
            if (!defect.zero()) report.record("cocycle", {i, j}, detail::flatten(defect.dense()));
        }
    }
    return report;
}

namespace detail {

/// First Zinbiel compatibility defect on a basis pair:
/// D(a1.a2) + D(a2.a1) - (id (x) (l+r)(a2)) D(a1) - (l(a1) (x) id) D(a2).
inline Matrix zbialg_sym_defect(const FinAlgebra& a, const Coalgebra& co, int i, int j) {
    auto [l, r] = regular_rep(a);
    return co.grid_of_vector(a.basis_product(i, j)) + co.grid_of_vector(a.basis_product(j, i)) -
           co.grid(i) * (l.of_basis(j) + r.of_basis(j)).transpose() - l.of_basis(i) * co.grid(j);
}

/// Second Zinbiel compatibility defect on a basis pair:
/// D(a1.a2) + tau D(a1.a2) - (id (x) r(a2)) D(a1) - (l(a1) (x) id)(D(a2) + tau D(a2)).
inline Matrix zbialg_tau_defect(const FinAlgebra& a, const Coalgebra& co, int i, int j) {
    auto [l, r] = regular_rep(a);
    const Matrix tij = co.grid_of_vector(a.basis_product(i, j));
    return tij + tij.transpose() - co.grid(i) * r.of_basis(j).transpose() -
           l.of_basis(i) * (co.grid(j) + co.grid(j).transpose());
}

}  // namespace detail

/// Zinbiel bialgebra compatibility (two identities evaluated on basis pairs).
inline CheckReport check_zinbiel_bialgebra(const Bialgebra& bi) {
    if (bi.algebra.dim != bi.coalgebra.dim)
        throw ContractViolation("check_zinbiel_bialgebra: dimension mismatch");
    CheckReport report;
    report.name = "bialgebra/zinbiel";
    if (bi.algebra.kind != AlgebraKind::Zinbiel)
        report.absorb(check_identity(bi.algebra, AlgebraKind::Zinbiel));
    if (bi.coalgebra.kind != CoKind::ZinbielCo)
        report.absorb(check_coidentity(bi.coalgebra, CoKind::ZinbielCo));
    const auto d = detail::sparse_bi_data(bi.algebra, bi.coalgebra);
    const int n = bi.algebra.dim;
    for (int i = 0; i < n; ++i) {
        const SparseMat& ti = d.grid[static_cast<size_t>(i)];
        const SparseMat& li = d.lmul[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
            const SparseMat& tj = d.grid[static_cast<size_t>(j)];
            SparseMat lr_j = d.lmul[static_cast<size_t>(j)];
            lr_j.accumulate(d.rmul[static_cast<size_t>(j)], Scalar(1));
            const SparseMat tij = detail::grid_of_product(d, i, j);
            SparseMat d1 = tij;
            d1.accumulate(detail::grid_of_product(d, j, i), Scalar(1));
            d1.accumulate(ti.times(lr_j.transposed()), Scalar(-1));
            d1.accumulate(li.times(tj), Scalar(-1));
            if (!d1.zero()) report.record("compat-sym", {i, j}, detail::flatten(d1.dense()));
            SparseMat d2 = tij;
            d2.accumulate(tij.transposed(), Scalar(1));
            d2.accumulate(ti.times(d.rmul[static_cast<size_t>(j)].transposed()), Scalar(-1));
            SparseMat tj_sym = tj;
            tj_sym.accumulate(tj.transposed(), Scalar(1));
            d2.accumulate(li.times(tj_sym), Scalar(-1));
            if (!d2.zero()) report.record("compat-tau", {i, j}, detail::flatten(d2.dense()));
        }
    }
    return report;
}

inline CheckReport check_bialgebra(const Bialgebra& bi) {
    switch (bi.kind) {
        case BialgebraKind::LeibnizBi: return check_leibniz_bialgebra(bi);
        case BialgebraKind::LieBi: return check_lie_bialgebra(bi);
        case BialgebraKind::ZinbielBi: return check_zinbiel_bialgebra(bi);
    }
    throw ContractViolation("check_bialgebra: unknown kind");
}

/// Kronecker product of Gram matrices in the canonical flattening order:
/// B(a1 (x) b1, a2 (x) b2) = kappa(a1, a2) omega(b1, b2).
inline BilinForm product_form(const BilinForm& kappa, const BilinForm& omega) {
    return {kappa.dim * omega.dim, kron(kappa.gram, omega.gram)};
}

/// Lie bialgebra on A (x) B induced from a Leibniz bialgebra by a quadratic
/// Zinbiel algebra: composes the quadratic coalgebra, the induced bracket and
/// the induced cobracket, then re-checks the Lie bialgebra cocycle.
inline Bialgebra induced_lie_bialgebra(const Bialgebra& leibniz_bi, const FinAlgebra& zinbiel,
                                       const BilinForm& kappa) {
    require_quadratic(zinbiel, kappa, AlgebraKind::Zinbiel, "induced_lie_bialgebra");
    auto leib_report = check_leibniz_bialgebra(leibniz_bi);
    if (!leib_report.passed())
        throw InvalidInputKind("induced_lie_bialgebra: input is not a Leibniz bialgebra (" +
                               std::to_string(leib_report.violations.size()) + " violations)");
    const Coalgebra delta_a = zinbiel_coalgebra_from_quadratic(zinbiel, kappa);
    Bialgebra out;
    out.algebra = induced_lie(zinbiel, leibniz_bi.algebra);
    out.coalgebra = induced_lie_coalgebra(delta_a, leibniz_bi.coalgebra);
    out.kind = BialgebraKind::LieBi;
    if (!check_lie_bialgebra(out).passed())
        throw CrossCheckFailure("induced_lie_bialgebra: output failed the cocycle check");
    return out;
}

// ---------------------------------------------------------------------------
// Manin triples and the double
// ---------------------------------------------------------------------------

/// Verify that (C, P1, P2) is a Manin triple for `form`:
/// vector-space direct sum, subalgebra closure, isotropy, form flags
/// (symmetric for Lie, skew for Leibniz; invariant; nondegenerate), and the
/// defining identity of `kind` on C. All failures are reported, none throw.
inline CheckReport verify_manin_triple(const FinAlgebra& c, const BilinForm& form,
                                       const std::vector<Vec>& p1, const std::vector<Vec>& p2,
                                       AlgebraKind kind) {
    if (form.dim != c.dim) throw ContractViolation("verify_manin_triple: form dimension mismatch");
    for (const auto& v : p1)
        if (static_cast<int>(v.size()) != c.dim)
            throw ContractViolation("verify_manin_triple: P1 vector length mismatch");
    for (const auto& v : p2)
        if (static_cast<int>(v.size()) != c.dim)
            throw ContractViolation("verify_manin_triple: P2 vector length mismatch");
    CheckReport report;
    report.name = "manin-triple/" + to_string(kind);

    // (i) C = P1 (+) P2 as vector spaces.
    const int total = static_cast<int>(p1.size() + p2.size());
    Matrix stacked(total, c.dim);
    int row = 0;
    for (const auto& v : p1) {
        for (int j = 0; j < c.dim; ++j) stacked.at(row, j) = v[static_cast<size_t>(j)];
        ++row;
    }
    for (const auto& v : p2) {
        for (int j = 0; j < c.dim; ++j) stacked.at(row, j) = v[static_cast<size_t>(j)];
        ++row;
    }
    const int stacked_rank = rank(stacked);
    if (total != c.dim || stacked_rank != c.dim)
        report.record("direct-sum", {}, {Scalar(stacked_rank), Scalar(total), Scalar(c.dim)});

    // (ii) closure of each part under the product of C.
    auto check_closure = [&](const std::vector<Vec>& part, int which) {
        if (part.empty()) return;
        Matrix span(c.dim, static_cast<int>(part.size()));
        for (int col = 0; col < static_cast<int>(part.size()); ++col)
            for (int i = 0; i < c.dim; ++i)
                span.at(i, col) = part[static_cast<size_t>(col)][static_cast<size_t>(i)];
        for (int u = 0; u < static_cast<int>(part.size()); ++u)
            for (int v = 0; v < static_cast<int>(part.size()); ++v) {
                Vec prod = multiply(c, part[static_cast<size_t>(u)], part[static_cast<size_t>(v)]);
                if (!solve(span, prod))
                    report.record("subalgebra-closure", {which, u, v}, prod);
            }
    };
    check_closure(p1, 1);
    check_closure(p2, 2);

    // (iii) isotropy of each part.
    auto check_isotropy = [&](const std::vector<Vec>& part, int which) {
        for (int u = 0; u < static_cast<int>(part.size()); ++u)
            for (int v = 0; v < static_cast<int>(part.size()); ++v) {
                Scalar val = form.value(part[static_cast<size_t>(u)], part[static_cast<size_t>(v)]);
                if (!val.is_zero()) report.record("isotropy", {which, u, v}, {val});
            }
    };
    check_isotropy(p1, 1);
    check_isotropy(p2, 2);

    // (iv) form flags.
    auto form_rep = check_form(c, form, kind);
    if (kind == AlgebraKind::Lie && !form_rep.symmetric) report.record("form-symmetric", {}, {});
    if (kind == AlgebraKind::Leibniz && !form_rep.skew) report.record("form-skew", {}, {});
    if (!form_rep.nondegenerate)
        report.record("form-nondegenerate", {}, {Scalar(rank(form.gram))});
    if (!form_rep.invariant) report.record("form-invariant", {}, {});

    // (v) the defining identity on C.
    report.absorb(check_identity(c, kind));
    return report;
}

/// The double Lie algebra on g (+) g* with the hyperbolic pairing
/// B_d((g1,x1),(g2,x2)) = <x1,g2> + <x2,g1>. Mixed brackets follow the
/// coadjoint formulas
///   <[x, eta]_{g*-part}, y>  = -<eta, [x, y]>
///   <zeta, [x, eta]_{g-part}> =  <[eta, zeta]_*, x>
/// with [-,-]_* the dual bracket of the cobracket. The output is validated
/// (Jacobi sweep); a failure means the input was not a Lie bialgebra.
inline std::pair<FinAlgebra, BilinForm> lie_double(const Bialgebra& bi) {
    auto pre = check_lie_bialgebra(bi);
    if (!pre.passed())
        throw InvalidInputKind("lie_double: input fails the Lie bialgebra cocycle check");
    const int n = bi.algebra.dim;
    FinAlgebra dbl = FinAlgebra::zero(2 * n);
    const Tensor3& c = bi.algebra.product;
    const Tensor3& d = bi.coalgebra.coproduct;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // [e_i, e_j] and [e_i*, e_j*]
                dbl.product.at(i, j, k) = c.at(i, j, k);
                dbl.product.at(n + i, n + j, n + k) = d.at(i, j, k);
                // [e_i, e_j*] = -sum_k c[i][k][j] e_k* + sum_k d[j][k][i] e_k
                dbl.product.at(i, n + j, n + k) = -c.at(i, k, j);
                dbl.product.at(i, n + j, k) = d.at(j, k, i);
                // [e_j*, e_i] = -[e_i, e_j*]
                dbl.product.at(n + j, i, n + k) = c.at(i, k, j);
                dbl.product.at(n + j, i, k) = -d.at(j, k, i);
            }
    auto jacobi = check_identity(dbl, AlgebraKind::Lie);
    if (!jacobi.passed())
        throw InconsistentBialgebra("lie_double: double fails the Jacobi identity (" +
                                    std::to_string(jacobi.violations.size()) + " violations)");
    dbl.kind = AlgebraKind::Lie;
    for (int i = 0; i < n; ++i) dbl.basis_labels.push_back(bi.algebra.label(i));
    for (int i = 0; i < n; ++i) dbl.basis_labels.push_back(bi.algebra.label(i) + "*");
    BilinForm form = BilinForm::zero(2 * n);
    for (int i = 0; i < n; ++i) {
        form.gram.at(i, n + i) = 1;
        form.gram.at(n + i, i) = 1;
    }
    return {std::move(dbl), std::move(form)};
}

/// Coordinate bases of the two halves of a double, for Manin verification.
inline std::pair<std::vector<Vec>, std::vector<Vec>> double_halves(int n) {
    std::vector<Vec> p1, p2;
    for (int i = 0; i < n; ++i) p1.push_back(unit_vector(2 * n, i));
    for (int i = 0; i < n; ++i) p2.push_back(unit_vector(2 * n, n + i));
    return {p1, p2};
}

}  // namespace loday
