/*
 * algebra.hpp
 * -----------
 * Finite-dimensional algebras presented by structure constants
 * (e_i * e_j = sum_k c[i][j][k] e_k), axiom checking for the supported
 * kinds, representations, semidirect products, and bilinear forms.
 *
 * Identity checks run over basis tuples only; multilinearity makes the
 * sweep complete and exact.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loday/errors.hpp"
#include "loday/matrix.hpp"
#include "loday/report.hpp"
#include "loday/tensor3.hpp"

namespace loday {

enum class AlgebraKind { Zinbiel, Leibniz, Lie, Associative, Unchecked };

inline std::string to_string(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Zinbiel: return "zinbiel";
        case AlgebraKind::Leibniz: return "leibniz";
        case AlgebraKind::Lie: return "lie";
        case AlgebraKind::Associative: return "associative";
        case AlgebraKind::Unchecked: return "unchecked";
    }
    return "unchecked";
}

struct FinAlgebra {
    int dim = 0;
    Tensor3 product;  // c[i][j][k]
    AlgebraKind kind = AlgebraKind::Unchecked;
    std::vector<std::string> basis_labels;

    static FinAlgebra zero(int dim) {
        FinAlgebra a;
        a.dim = dim;
        a.product = Tensor3::cube(dim);
        return a;
    }

    /// e_i * e_j as a coordinate vector.
    Vec basis_product(int i, int j) const {
        Vec v(static_cast<size_t>(dim));
        for (int k = 0; k < dim; ++k) v[static_cast<size_t>(k)] = product.at(i, j, k);
        return v;
    }

    std::string label(int i) const {
        if (i < static_cast<int>(basis_labels.size())) return basis_labels[static_cast<size_t>(i)];
        return "e" + std::to_string(i + 1);
    }
};

/// Bilinear extension of the structure constants.
inline Vec multiply(const FinAlgebra& alg, const Vec& x, const Vec& y) {
    if (static_cast<int>(x.size()) != alg.dim || static_cast<int>(y.size()) != alg.dim)
        throw ContractViolation("multiply: vector length must equal algebra dimension");
    Vec r(static_cast<size_t>(alg.dim), Scalar(0));
    for (int i = 0; i < alg.dim; ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < alg.dim; ++j) {
            if (y[static_cast<size_t>(j)].is_zero()) continue;
            const Scalar c = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            for (int k = 0; k < alg.dim; ++k)
                if (!alg.product.at(i, j, k).is_zero())
                    r[static_cast<size_t>(k)] += c * alg.product.at(i, j, k);
        }
    }
    return r;
}

/// Defect of the defining identity of `kind` on the basis triple (i, j, k).
inline Vec identity_defect(const FinAlgebra& alg, AlgebraKind kind, int i, int j, int k) {
    const auto p = [&](int a, int b) { return alg.basis_product(a, b); };
    const auto pv = [&](const Vec& a, int b) {
        Vec eb = unit_vector(alg.dim, b);
        return multiply(alg, a, eb);
    };
    const auto vp = [&](int a, const Vec& b) {
        Vec ea = unit_vector(alg.dim, a);
        return multiply(alg, ea, b);
    };
    switch (kind) {
        case AlgebraKind::Zinbiel:
            // e_i (e_j e_k) - (e_i e_j) e_k - (e_j e_i) e_k
            return vp(i, p(j, k)) - pv(p(i, j), k) - pv(p(j, i), k);
        case AlgebraKind::Leibniz:
            // e_i (e_j e_k) - (e_i e_j) e_k - e_j (e_i e_k)
            return vp(i, p(j, k)) - pv(p(i, j), k) - vp(j, p(i, k));
        case AlgebraKind::Associative:
            return vp(i, p(j, k)) - pv(p(i, j), k);
        case AlgebraKind::Lie:
            // Jacobi: [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
            return pv(p(i, j), k) + pv(p(j, k), i) + pv(p(k, i), j);
        case AlgebraKind::Unchecked:
            break;
    }
    throw ContractViolation("identity_defect: no defining identity for this kind");
}

/// Evaluate the defining identity of `kind` on all basis tuples.
/// The Lie case additionally checks the bilinear-alternating condition.
inline CheckReport check_identity(const FinAlgebra& alg, AlgebraKind kind) {
    CheckReport report;
    report.name = "identity/" + to_string(kind);
    if (kind == AlgebraKind::Unchecked)
        throw ContractViolation("check_identity: kind must not be Unchecked");
    if (kind == AlgebraKind::Lie) {
        for (int i = 0; i < alg.dim; ++i) {
            Vec d = alg.basis_product(i, i);
            if (!is_zero(d)) report.record("alternating", {i}, std::move(d));
        }
        for (int i = 0; i < alg.dim; ++i)
            for (int j = i + 1; j < alg.dim; ++j) {
                Vec d = alg.basis_product(i, j) + alg.basis_product(j, i);
                if (!is_zero(d)) report.record("antisymmetry", {i, j}, std::move(d));
            }
    }
    const std::string check = kind == AlgebraKind::Lie ? "jacobi" : to_string(kind) + "-identity";
    // Sparse product table; the triple sweep convolves these lists instead of
    // re-expanding dense products.
    const int n = alg.dim;
    std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> t(
        static_cast<size_t>(n),
        std::vector<std::vector<std::pair<int, Scalar>>>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!alg.product.at(i, j, k).is_zero())
                    t[static_cast<size_t>(i)][static_cast<size_t>(j)].push_back(
                        {k, alg.product.at(i, j, k)});
    Vec scratch(static_cast<size_t>(n), Scalar(0));
    std::vector<int> touched;
    auto add = [&](int l, const Scalar& v) {
        if (scratch[static_cast<size_t>(l)].is_zero()) touched.push_back(l);
        scratch[static_cast<size_t>(l)] += v;
    };
    // inner-first: sum over (m,c) in t[a][b] of c * t[i][m] (e_i . (e_a e_b))
    auto acc_vp = [&](int i, int a, int b, int sign) {
        for (const auto& [m, c] : t[static_cast<size_t>(a)][static_cast<size_t>(b)])
            for (const auto& [l, w] : t[static_cast<size_t>(i)][static_cast<size_t>(m)]) {
                Scalar v = c * w;
                if (sign < 0) v = -v;
                add(l, v);
            }
    };
    // outer-first: sum over (m,c) in t[a][b] of c * t[m][k] ((e_a e_b) . e_k)
    auto acc_pv = [&](int a, int b, int k, int sign) {
        for (const auto& [m, c] : t[static_cast<size_t>(a)][static_cast<size_t>(b)])
            for (const auto& [l, w] : t[static_cast<size_t>(m)][static_cast<size_t>(k)]) {
                Scalar v = c * w;
                if (sign < 0) v = -v;
                add(l, v);
            }
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                for (int l : touched) scratch[static_cast<size_t>(l)] = 0;
                touched.clear();
                switch (kind) {
                    case AlgebraKind::Zinbiel:
                        acc_vp(i, j, k, +1);
                        acc_pv(i, j, k, -1);
                        acc_pv(j, i, k, -1);
                        break;
                    case AlgebraKind::Leibniz:
                        acc_vp(i, j, k, +1);
                        acc_pv(i, j, k, -1);
                        acc_vp(j, i, k, -1);
                        break;
                    case AlgebraKind::Associative:
                        acc_vp(i, j, k, +1);
                        acc_pv(i, j, k, -1);
                        break;
                    case AlgebraKind::Lie:
                        acc_pv(i, j, k, +1);
                        acc_pv(j, k, i, +1);
                        acc_pv(k, i, j, +1);
                        break;
                    case AlgebraKind::Unchecked:
                        break;
                }
                bool nonzero = false;
                for (int l : touched)
                    if (!scratch[static_cast<size_t>(l)].is_zero()) nonzero = true;
                if (nonzero) report.record(check, {i, j, k}, scratch);
            }
    return report;
}

/// Trust a previously verified kind tag, otherwise run the sweep.
inline void ensure_kind(const FinAlgebra& alg, AlgebraKind kind, const std::string& who) {
    if (alg.kind == kind) return;
    if (!check_identity(alg, kind).passed())
        throw InvalidInputKind(who + ": algebra does not verify as " + to_string(kind));
}

/// Returns a copy with `kind` set after a passing sweep; throws otherwise.
inline FinAlgebra verified(FinAlgebra alg, AlgebraKind kind) {
    auto report = check_identity(alg, kind);
    if (!report.passed())
        throw InvalidInputKind("algebra fails the " + to_string(kind) + " identity (" +
                               std::to_string(report.violations.size()) + " violations)");
    alg.kind = kind;
    return alg;
}

/// The truncated polynomial Zinbiel algebra on x^0..x^cap with
/// x^m . x^n = x^{m+n+1}/(m+1), products above the cap truncated to zero.
inline FinAlgebra truncated_polynomial_zinbiel(int degree_cap) {
    if (degree_cap < 1) throw ContractViolation("truncated_polynomial_zinbiel: cap must be >= 1");
    FinAlgebra a = FinAlgebra::zero(degree_cap + 1);
    for (int m = 0; m <= degree_cap; ++m)
        for (int n = 0; n <= degree_cap; ++n)
            if (m + n + 1 <= degree_cap) a.product.at(m, n, m + n + 1) = Scalar(1, m + 1);
    for (int m = 0; m <= degree_cap; ++m) a.basis_labels.push_back("x^" + std::to_string(m));
    return verified(std::move(a), AlgebraKind::Zinbiel);
}

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

/// One carrier-space matrix per algebra basis element; extension to arbitrary
/// algebra elements is by linearity.
struct LinearMapFamily {
    int algebra_dim = 0;
    int carrier_dim = 0;
    std::vector<Matrix> maps;

    static LinearMapFamily zero(int algebra_dim, int carrier_dim) {
        LinearMapFamily f;
        f.algebra_dim = algebra_dim;
        f.carrier_dim = carrier_dim;
        f.maps.assign(static_cast<size_t>(algebra_dim), Matrix(carrier_dim, carrier_dim));
        return f;
    }

    const Matrix& of_basis(int i) const { return maps[static_cast<size_t>(i)]; }

    Matrix of_vector(const Vec& x) const {
        if (static_cast<int>(x.size()) != algebra_dim)
            throw ContractViolation("LinearMapFamily: vector length mismatch");
        Matrix m(carrier_dim, carrier_dim);
        for (int i = 0; i < algebra_dim; ++i)
            if (!x[static_cast<size_t>(i)].is_zero())
                m = m + x[static_cast<size_t>(i)] * maps[static_cast<size_t>(i)];
        return m;
    }
};

namespace detail {
inline Vec flatten(const Matrix& m) {
    Vec v;
    v.reserve(static_cast<size_t>(m.rows()) * static_cast<size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}
}  // namespace detail

/// Left/right multiplication families read off the structure tensor.
inline std::pair<LinearMapFamily, LinearMapFamily> regular_rep(const FinAlgebra& alg) {
    auto l = LinearMapFamily::zero(alg.dim, alg.dim);
    auto r = LinearMapFamily::zero(alg.dim, alg.dim);
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j)
            for (int k = 0; k < alg.dim; ++k) {
                l.maps[static_cast<size_t>(i)].at(k, j) = alg.product.at(i, j, k);
                r.maps[static_cast<size_t>(i)].at(k, j) = alg.product.at(j, i, k);
            }
    return {l, r};
}

/// Dual-space families built from transposes of the regular families:
/// Zinbiel (l* + r*, -r*); Leibniz (-l*, l* + r*).
inline std::pair<LinearMapFamily, LinearMapFamily> coregular_rep(const FinAlgebra& alg,
                                                                 AlgebraKind kind) {
    auto [l, r] = regular_rep(alg);
    auto cl = LinearMapFamily::zero(alg.dim, alg.dim);
    auto cr = LinearMapFamily::zero(alg.dim, alg.dim);
    for (int i = 0; i < alg.dim; ++i) {
        const Matrix lt = l.maps[static_cast<size_t>(i)].transpose();
        const Matrix rt = r.maps[static_cast<size_t>(i)].transpose();
        if (kind == AlgebraKind::Zinbiel) {
            cl.maps[static_cast<size_t>(i)] = lt + rt;
            cr.maps[static_cast<size_t>(i)] = -rt;
        } else if (kind == AlgebraKind::Leibniz) {
            cl.maps[static_cast<size_t>(i)] = -lt;
            cr.maps[static_cast<size_t>(i)] = lt + rt;
        } else {
            throw ContractViolation("coregular_rep: kind must be Zinbiel or Leibniz");
        }
    }
    return {cl, cr};
}

/// Check the defining representation identities of `kind` on all basis pairs.
/// For Lie only `l` is used.
inline CheckReport check_representation(const FinAlgebra& alg, const LinearMapFamily& l,
                                        const LinearMapFamily& r, AlgebraKind kind) {
    if (l.algebra_dim != alg.dim || r.algebra_dim != alg.dim)
        throw ContractViolation("check_representation: algebra dimension mismatch");
    if (l.carrier_dim != r.carrier_dim)
        throw ContractViolation("check_representation: carrier dimensions differ");
    CheckReport report;
    report.name = "representation/" + to_string(kind);
    auto lv = [&](const Vec& x) { return l.of_vector(x); };
    auto rv = [&](const Vec& x) { return r.of_vector(x); };
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j) {
            const Vec pij = alg.basis_product(i, j);
            const Vec pji = alg.basis_product(j, i);
            const Matrix li = l.of_basis(i), lj = l.of_basis(j);
            const Matrix ri = r.of_basis(i), rj = r.of_basis(j);
            std::vector<std::pair<std::string, Matrix>> defects;
            if (kind == AlgebraKind::Zinbiel) {
                // l(a2) l(a1) = l(a2.a1) + l(a1.a2); with a1 = e_i, a2 = e_j
                defects.emplace_back("left", lj * li - lv(pji) - lv(pij));
                // r(a1.a2) = r(a2) r(a1) + r(a2) l(a1) = l(a1) r(a2)
                defects.emplace_back("right", rv(pij) - rj * ri - rj * li);
                defects.emplace_back("right-mixed", rv(pij) - li * rj);
            } else if (kind == AlgebraKind::Leibniz) {
                // l(b1 o b2) = [l(b1), l(b2)],
                // r(b1) r(b2) = r(b2 o b1) - l(b2) r(b1) = -r(b1) l(b2).
                defects.emplace_back("left", lv(pij) - li * lj + lj * li);
                defects.emplace_back("right", ri * rj - rv(pji) + lj * ri);
                defects.emplace_back("right-mixed", ri * rj + ri * lj);
            } else if (kind == AlgebraKind::Lie) {
                defects.emplace_back("rho", lv(pij) - li * lj + lj * li);
            } else {
                throw ContractViolation("check_representation: unsupported kind");
            }
            for (auto& [what, d] : defects)
                if (!d.is_zero()) report.record(what, {i, j}, detail::flatten(d));
        }
    return report;
}

/// Semidirect product Zinbiel algebra on A (+) V:
/// (a + u) . (b + v) = a.b + l(a)v + r(b)u.
inline FinAlgebra semidirect_zinbiel(const FinAlgebra& alg, const LinearMapFamily& l,
                                     const LinearMapFamily& r) {
    auto rep = check_representation(alg, l, r, AlgebraKind::Zinbiel);
    if (!rep.passed())
        throw InvalidRepresentation("semidirect_zinbiel: (l, r) is not a Zinbiel representation (" +
                                    std::to_string(rep.violations.size()) + " violations)");
    const int n = alg.dim, m = l.carrier_dim;
    FinAlgebra out = FinAlgebra::zero(n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out.product.at(i, j, k) = alg.product.at(i, j, k);
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) {
                // e_i . u_q = l(e_i) u_q  and  u_p . e_i = r(e_i) u_p
                out.product.at(i, n + q, n + p) = l.of_basis(i).at(p, q);
                out.product.at(n + q, i, n + p) = r.of_basis(i).at(p, q);
            }
    for (int i = 0; i < n; ++i) out.basis_labels.push_back(alg.label(i));
    for (int p = 0; p < m; ++p) out.basis_labels.push_back("u" + std::to_string(p + 1));
    return verified(std::move(out), AlgebraKind::Zinbiel);
}

// ---------------------------------------------------------------------------
// Bilinear forms
// ---------------------------------------------------------------------------

struct BilinForm {
    int dim = 0;
    Matrix gram;  // gram[i][j] = B(e_i, e_j)

    static BilinForm zero(int dim) { return {dim, Matrix(dim, dim)}; }
    static BilinForm identity(int dim) { return {dim, Matrix::identity(dim)}; }

    Scalar value(const Vec& x, const Vec& y) const {
        if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
            throw ContractViolation("BilinForm::value: vector length mismatch");
        Scalar s(0);
        for (int i = 0; i < dim; ++i) {
            if (x[static_cast<size_t>(i)].is_zero()) continue;
            for (int j = 0; j < dim; ++j)
                if (!gram.at(i, j).is_zero())
                    s += x[static_cast<size_t>(i)] * gram.at(i, j) * y[static_cast<size_t>(j)];
        }
        return s;
    }
};

struct FormReport {
    bool symmetric = false;
    bool skew = false;
    bool nondegenerate = false;
    bool invariant = false;
    CheckReport details;

    /// "Quadratic" in the Zinbiel/Leibniz sense: skew + nondegenerate + invariant.
    bool quadratic() const { return skew && nondegenerate && invariant; }
};

/// Evaluate symmetry, skewness, nondegeneracy and kind-specific invariance.
/// For a quadratic Zinbiel/Leibniz form the derived identity
/// B(a.b, c) = -B(a, c.b) is checked as well.
inline FormReport check_form(const FinAlgebra& alg, const BilinForm& form, AlgebraKind kind) {
    if (form.dim != alg.dim) throw ContractViolation("check_form: dimension mismatch");
    FormReport rep;
    rep.details.name = "form/" + to_string(kind);
    rep.symmetric = form.gram == form.gram.transpose();
    rep.skew = form.gram == -form.gram.transpose();
    rep.nondegenerate = rank(form.gram) == form.dim;
    rep.invariant = true;
    auto unit = [&](int i) { return unit_vector(alg.dim, i); };
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j)
            for (int k = 0; k < alg.dim; ++k) {
                Scalar d;
                const Vec pij = alg.basis_product(i, j);
                switch (kind) {
                    case AlgebraKind::Zinbiel:
                        d = form.value(pij, unit(k)) -
                            form.value(unit(j), alg.basis_product(i, k) + alg.basis_product(k, i));
                        break;
                    case AlgebraKind::Leibniz:
                        d = form.value(pij, unit(k)) -
                            form.value(unit(i), alg.basis_product(j, k) + alg.basis_product(k, j));
                        break;
                    case AlgebraKind::Lie:
                    case AlgebraKind::Associative:
                        d = form.value(pij, unit(k)) - form.value(unit(i), alg.basis_product(j, k));
                        break;
                    default:
                        throw ContractViolation("check_form: unsupported kind");
                }
                if (!d.is_zero()) {
                    rep.invariant = false;
                    rep.details.record("invariance", {i, j, k}, {d});
                }
            }
    if ((kind == AlgebraKind::Zinbiel || kind == AlgebraKind::Leibniz) && rep.quadratic()) {
        for (int i = 0; i < alg.dim; ++i)
            for (int j = 0; j < alg.dim; ++j)
                for (int k = 0; k < alg.dim; ++k) {
                    Scalar d = form.value(alg.basis_product(i, j), unit(k)) +
                               form.value(unit(i), alg.basis_product(k, j));
                    if (!d.is_zero()) rep.details.record("derived-identity", {i, j, k}, {d});
                }
    }
    return rep;
}

/// Throws unless (alg, form) verifies as a quadratic algebra of `kind`.
inline void require_quadratic(const FinAlgebra& alg, const BilinForm& form, AlgebraKind kind,
                              const std::string& who) {
    auto rep = check_form(alg, form, kind);
    if (!rep.quadratic())
        throw InvalidQuadraticStructure(
            who + ": form is not quadratic for the " + to_string(kind) +
            " structure (skew=" + std::to_string(rep.skew) +
            ", nondegenerate=" + std::to_string(rep.nondegenerate) +
            ", invariant=" + std::to_string(rep.invariant) + ")");
}

}  // namespace loday
