/*
 * frobenius.hpp
 * -------------
 * Quasi-Frobenius Zinbiel algebras, pre-Zinbiel algebras, the A (x| A*
 * double, canonical r-matrices from nondegenerate forms, and induced
 * quasi-Frobenius (graded) Lie algebras.
 */
#pragma once

#include <utility>

#include "loday/algebra.hpp"
#include "loday/graded.hpp"
#include "loday/tensor_product.hpp"
#include "loday/yang_baxter.hpp"

namespace loday {

/// Two products < ("prec") and > ("succ") whose sum is Zinbiel.
struct PreZinbiel {
    int dim = 0;
    Tensor3 left;   // x < y = sum left[x][y][k] e_k
    Tensor3 right;  // x > y = sum right[x][y][k] e_k

    static PreZinbiel zero(int dim) { return {dim, Tensor3::cube(dim), Tensor3::cube(dim)}; }
};

/// Both defining identities on all basis triples:
///   x>(y>z) = (x>y)>z + (x<y)>z + (y>x)>z + (y<x)>z
///   x>(z<y) = z<(x>y) + z<(x<y) = (x>z)<y + (z<x)<y
inline CheckReport check_pre_zinbiel(const PreZinbiel& p) {
    CheckReport report;
    report.name = "pre-zinbiel";
    FinAlgebra prec = FinAlgebra::zero(p.dim), succ = FinAlgebra::zero(p.dim);
    prec.product = p.left;
    succ.product = p.right;
    auto unit = [&](int i) { return unit_vector(p.dim, i); };
    auto lv = [&](const FinAlgebra& alg, const Vec& a, const Vec& b) {
        return multiply(alg, a, b);
    };
    for (int x = 0; x < p.dim; ++x)
        for (int y = 0; y < p.dim; ++y)
            for (int z = 0; z < p.dim; ++z) {
                const Vec ux = unit(x), uy = unit(y), uz = unit(z);
                Vec d1 = lv(succ, ux, lv(succ, uy, uz)) - lv(succ, lv(succ, ux, uy), uz) -
                         lv(succ, lv(prec, ux, uy), uz) - lv(succ, lv(succ, uy, ux), uz) -
                         lv(succ, lv(prec, uy, ux), uz);
                if (!is_zero(d1)) report.record("succ-identity", {x, y, z}, std::move(d1));
                const Vec lhs = lv(succ, ux, lv(prec, uz, uy));
                Vec d2 = lhs - lv(prec, uz, lv(succ, ux, uy)) - lv(prec, uz, lv(prec, ux, uy));
                if (!is_zero(d2)) report.record("cross-identity-left", {x, y, z}, std::move(d2));
                Vec d3 = lhs - lv(prec, lv(succ, ux, uz), uy) - lv(prec, lv(prec, uz, ux), uy);
                if (!is_zero(d3)) report.record("cross-identity-right", {x, y, z}, std::move(d3));
            }
    return report;
}

/// The sub-adjacent Zinbiel algebra x.y = x<y + x>y (verified).
inline FinAlgebra sub_adjacent(const PreZinbiel& p) {
    auto rep = check_pre_zinbiel(p);
    if (!rep.passed())
        throw InvalidInputKind("sub_adjacent: input fails the pre-Zinbiel identities (" +
                               std::to_string(rep.violations.size()) + " violations)");
    FinAlgebra a = FinAlgebra::zero(p.dim);
    a.product = p.left + p.right;
    return verified(std::move(a), AlgebraKind::Zinbiel);
}

struct QuasiFrobeniusReport {
    bool symmetric = false;  // skew for the Lie variant
    bool nondegenerate = false;
    CheckReport details;

    bool passed() const { return symmetric && nondegenerate && details.passed(); }
};

/// Quasi-Frobenius Zinbiel check: varpi symmetric, nondegenerate, and
/// varpi(a1.a2, a3) - varpi(a1.a3 + a3.a1, a2) + varpi(a3.a2, a1) = 0.
inline QuasiFrobeniusReport check_quasi_frobenius_zinbiel(const FinAlgebra& a,
                                                          const BilinForm& varpi) {
    if (varpi.dim != a.dim)
        throw ContractViolation("check_quasi_frobenius_zinbiel: dimension mismatch");
    QuasiFrobeniusReport rep;
    rep.details.name = "quasi-frobenius/zinbiel";
    rep.symmetric = varpi.gram == varpi.gram.transpose();
    rep.nondegenerate = rank(varpi.gram) == a.dim;
    auto unit = [&](int i) { return unit_vector(a.dim, i); };
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                Scalar d = varpi.value(a.basis_product(i, j), unit(k)) -
                           varpi.value(a.basis_product(i, k) + a.basis_product(k, i), unit(j)) +
                           varpi.value(a.basis_product(k, j), unit(i));
                if (!d.is_zero()) rep.details.record("cocycle", {i, j, k}, {d});
            }
    return rep;
}

/// r = sum_i e_i (x) f_i over the dual basis of a nondegenerate form.
inline TensorElem2 canonical_r_from_form(const BilinForm& varpi) {
    return canonical_pair_tensor(varpi);
}

/// The quasi-Frobenius Zinbiel algebra A (x| A* built from a pre-Zinbiel
/// algebra: the dual space carries (l_>^* + r_<^*, -r_<^*), and
/// varpi((x,xi),(y,zeta)) = <xi,y> + <zeta,x>.
inline std::pair<FinAlgebra, BilinForm> pre_zinbiel_double(const PreZinbiel& p) {
    const FinAlgebra base = sub_adjacent(p);
    FinAlgebra prec = FinAlgebra::zero(p.dim), succ = FinAlgebra::zero(p.dim);
    prec.product = p.left;
    succ.product = p.right;
    auto [lp, rp] = regular_rep(prec);
    auto [ls, rs] = regular_rep(succ);
    LinearMapFamily dl = LinearMapFamily::zero(p.dim, p.dim);
    LinearMapFamily dr = LinearMapFamily::zero(p.dim, p.dim);
    for (int i = 0; i < p.dim; ++i) {
        dl.maps[static_cast<size_t>(i)] =
            ls.of_basis(i).transpose() + rp.of_basis(i).transpose();
        dr.maps[static_cast<size_t>(i)] = -rp.of_basis(i).transpose();
    }
    FinAlgebra dbl = semidirect_zinbiel(base, dl, dr);
    for (int i = 0; i < p.dim; ++i)
        dbl.basis_labels[static_cast<size_t>(p.dim + i)] = base.label(i) + "*";
    BilinForm varpi = BilinForm::zero(2 * p.dim);
    for (int i = 0; i < p.dim; ++i) {
        varpi.gram.at(i, p.dim + i) = 1;
        varpi.gram.at(p.dim + i, i) = 1;
    }
    if (!check_quasi_frobenius_zinbiel(dbl, varpi).passed())
        throw CrossCheckFailure("pre_zinbiel_double: output failed the quasi-Frobenius check");
    return {std::move(dbl), std::move(varpi)};
}

/// Quasi-Frobenius Lie check: B skew, nondegenerate, and
/// B([g1,g2],g3) + B([g3,g1],g2) + B([g2,g3],g1) = 0.
inline QuasiFrobeniusReport check_quasi_frobenius_lie(const FinAlgebra& g, const BilinForm& b) {
    if (b.dim != g.dim) throw ContractViolation("check_quasi_frobenius_lie: dimension mismatch");
    QuasiFrobeniusReport rep;
    rep.details.name = "quasi-frobenius/lie";
    rep.symmetric = b.gram == -b.gram.transpose();  // skewness for the Lie variant
    rep.nondegenerate = rank(b.gram) == g.dim;
    auto unit = [&](int i) { return unit_vector(g.dim, i); };
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j)
            for (int k = 0; k < g.dim; ++k) {
                Scalar d = b.value(g.basis_product(i, j), unit(k)) +
                           b.value(g.basis_product(k, i), unit(j)) +
                           b.value(g.basis_product(j, k), unit(i));
                if (!d.is_zero()) rep.details.record("cocycle", {i, j, k}, {d});
            }
    return rep;
}

/// Graded variant: the form pairs degree blocks (d, -d-m) through the fiber
/// Gram, so blockwise nondegeneracy, skewness and the cyclic identity all
/// reduce to the fiber-level check with B = varpi (x) kappa.
inline QuasiFrobeniusReport check_quasi_frobenius_lie_graded(const GradedLie& g,
                                                             const BilinForm& fiber_form) {
    return check_quasi_frobenius_lie(g.base, fiber_form);
}

/// Induced quasi-Frobenius Lie algebra on A (x) B with B = varpi . omega
/// (finite quadratic Leibniz factor).
inline std::pair<FinAlgebra, BilinForm> induced_qf_lie(const FinAlgebra& a, const BilinForm& varpi,
                                                       const FinAlgebra& b,
                                                       const BilinForm& omega) {
    if (!check_quasi_frobenius_zinbiel(a, varpi).passed())
        throw InvalidQuadraticStructure("induced_qf_lie: (A, varpi) is not quasi-Frobenius");
    require_quadratic(b, omega, AlgebraKind::Leibniz, "induced_qf_lie");
    FinAlgebra lie = induced_lie(a, b);
    BilinForm form = product_form(varpi, omega);
    if (!check_quasi_frobenius_lie(lie, form).passed())
        throw CrossCheckFailure("induced_qf_lie: output failed the quasi-Frobenius check");
    return {std::move(lie), std::move(form)};
}

/// Graded case: B is a Laurent affinization with a graded quadratic form;
/// the induced Z-graded Lie algebra is quasi-Frobenius per degree block.
inline std::pair<GradedLie, BilinForm> induced_qf_lie_graded(const FinAlgebra& a,
                                                             const BilinForm& varpi,
                                                             const AffineAlgebra& b,
                                                             const GradedForm& omega) {
    if (!check_quasi_frobenius_zinbiel(a, varpi).passed())
        throw InvalidQuadraticStructure("induced_qf_lie_graded: (A, varpi) is not quasi-Frobenius");
    require_quadratic(b.base, omega.base_form, AlgebraKind::Leibniz, "induced_qf_lie_graded");
    GradedLie lie = induced_graded_lie(a, b);
    BilinForm form = product_form(varpi, omega.base_form);
    if (!check_quasi_frobenius_lie_graded(lie, form).passed())
        throw CrossCheckFailure("induced_qf_lie_graded: output failed the quasi-Frobenius check");
    return {std::move(lie), std::move(form)};
}

}  // namespace loday
