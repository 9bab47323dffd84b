/*
 * coalgebra.hpp
 * -------------
 * Finite-dimensional coalgebras by costructure constants
 * (Delta(e_k) = sum_{ij} d[i][j][k] e_i (x) e_j), coidentity checks,
 * dualization, and the Zinbiel coalgebra carried by a quadratic Zinbiel
 * algebra.
 *
 * Pairing conventions, fixed once for the whole library:
 *   <xi (x) eta, x (x) y> = <xi, x><eta, y>
 *   <xi . eta, x>         = <xi (x) eta, Delta(x)>
 * and a bilinear form extends to tensor powers factorwise.
 */
#pragma once

#include <array>
#include <map>
#include <string>

#include "loday/algebra.hpp"
#include "loday/errors.hpp"
#include "loday/matrix.hpp"
#include "loday/report.hpp"
#include "loday/tensor3.hpp"

namespace loday {

enum class CoKind { ZinbielCo, LeibnizCo, LieCo, Unchecked };

inline std::string to_string(CoKind k) {
    switch (k) {
        case CoKind::ZinbielCo: return "zinbiel_co";
        case CoKind::LeibnizCo: return "leibniz_co";
        case CoKind::LieCo: return "lie_co";
        case CoKind::Unchecked: return "unchecked";
    }
    return "unchecked";
}

struct Coalgebra {
    int dim = 0;
    Tensor3 coproduct;  // d[i][j][k]
    CoKind kind = CoKind::Unchecked;

    static Coalgebra zero(int dim) {
        Coalgebra c;
        c.dim = dim;
        c.coproduct = Tensor3::cube(dim);
        return c;
    }

    /// Delta(e_k) as a dim x dim coefficient grid.
    Matrix grid(int k) const {
        Matrix m(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m.at(i, j) = coproduct.at(i, j, k);
        return m;
    }

    /// Delta extended linearly to a coordinate vector.
    Matrix grid_of_vector(const Vec& x) const {
        if (static_cast<int>(x.size()) != dim)
            throw ContractViolation("Coalgebra::grid_of_vector: length mismatch");
        Matrix m(dim, dim);
        for (int k = 0; k < dim; ++k)
            if (!x[static_cast<size_t>(k)].is_zero()) m = m + x[static_cast<size_t>(k)] * grid(k);
        return m;
    }
};

namespace detail {
inline Vec flatten(const Tensor3& t) {
    Vec v;
    v.reserve(static_cast<size_t>(t.dim(0)) * t.dim(1) * t.dim(2));
    for (int i = 0; i < t.dim(0); ++i)
        for (int j = 0; j < t.dim(1); ++j)
            for (int k = 0; k < t.dim(2); ++k) v.push_back(t.at(i, j, k));
    return v;
}
}  // namespace detail

namespace detail {

using SparseCube = std::map<std::array<int, 3>, Scalar>;

/// Sparse coassociativity-type defect of `kind` on basis element k.
inline SparseCube coidentity_defect_sparse(
    const std::vector<std::vector<std::array<int, 2>>>& support,
    const Coalgebra& co, CoKind kind, int k) {
    SparseCube inner, outer;  // (id (x) D)D and (D (x) id)D
    for (const auto& [i, j] : support[static_cast<size_t>(k)]) {
        const Scalar& dij = co.coproduct.at(i, j, k);
        for (const auto& [p, q] : support[static_cast<size_t>(j)])
            inner[{i, p, q}] += dij * co.coproduct.at(p, q, j);
        for (const auto& [p, q] : support[static_cast<size_t>(i)])
            outer[{p, q, j}] += dij * co.coproduct.at(p, q, i);
    }
    SparseCube defect = inner;
    for (const auto& [key, v] : outer) defect[key] -= v;
    if (kind == CoKind::ZinbielCo) {
        // ... - (tau (x) id)(D (x) id)D
        for (const auto& [key, v] : outer) defect[{key[1], key[0], key[2]}] -= v;
    } else if (kind == CoKind::LeibnizCo || kind == CoKind::LieCo) {
        // ... - (tau (x) id)(id (x) D)D
        for (const auto& [key, v] : inner) defect[{key[1], key[0], key[2]}] -= v;
    } else {
        throw ContractViolation("coidentity_defect: kind must not be Unchecked");
    }
    for (auto it = defect.begin(); it != defect.end();)
        it = it->second.is_zero() ? defect.erase(it) : std::next(it);
    return defect;
}

inline std::vector<std::vector<std::array<int, 2>>> coproduct_support(const Coalgebra& co) {
    std::vector<std::vector<std::array<int, 2>>> support(static_cast<size_t>(co.dim));
    for (int k = 0; k < co.dim; ++k)
        for (int i = 0; i < co.dim; ++i)
            for (int j = 0; j < co.dim; ++j)
                if (!co.coproduct.at(i, j, k).is_zero())
                    support[static_cast<size_t>(k)].push_back({i, j});
    return support;
}

}  // namespace detail

/// Coassociativity-type defect of `kind` on basis element k, in V (x) V (x) V.
inline Tensor3 coidentity_defect(const Coalgebra& co, CoKind kind, int k) {
    Tensor3 defect = Tensor3::cube(co.dim);
    for (const auto& [key, v] :
         detail::coidentity_defect_sparse(detail::coproduct_support(co), co, kind, k))
        defect.at(key[0], key[1], key[2]) = v;
    return defect;
}

inline CheckReport check_coidentity(const Coalgebra& co, CoKind kind) {
    CheckReport report;
    report.name = "coidentity/" + to_string(kind);
    if (kind == CoKind::LieCo) {
        for (int k = 0; k < co.dim; ++k)
            for (int i = 0; i < co.dim; ++i)
                for (int j = i; j < co.dim; ++j) {
                    Scalar d = co.coproduct.at(i, j, k) + co.coproduct.at(j, i, k);
                    if (!d.is_zero()) report.record("cocommutator-antisymmetry", {i, j, k}, {d});
                }
    }
    const auto support = detail::coproduct_support(co);
    for (int k = 0; k < co.dim; ++k) {
        const auto defect = detail::coidentity_defect_sparse(support, co, kind, k);
        if (!defect.empty()) {
            Tensor3 dense = Tensor3::cube(co.dim);
            for (const auto& [key, v] : defect) dense.at(key[0], key[1], key[2]) = v;
            report.record("coidentity", {k}, detail::flatten(dense));
        }
    }
    return report;
}

/// Trust a previously verified kind tag, otherwise run the sweep.
inline void ensure_cokind(const Coalgebra& co, CoKind kind, const std::string& who) {
    if (co.kind == kind) return;
    if (!check_coidentity(co, kind).passed())
        throw InvalidInputKind(who + ": coalgebra does not verify as " + to_string(kind));
}

inline Coalgebra verified(Coalgebra co, CoKind kind) {
    auto report = check_coidentity(co, kind);
    if (!report.passed())
        throw InvalidInputKind("coalgebra fails the " + to_string(kind) + " coidentity (" +
                               std::to_string(report.violations.size()) + " violations)");
    co.kind = kind;
    return co;
}

/// Algebra on the dual space: <xi.eta, x> = <xi (x) eta, Delta(x)> gives
/// structure constants c*[i][j][k] = d[i][j][k]. Kind is left Unchecked.
inline FinAlgebra dualize_coproduct(const Coalgebra& co) {
    FinAlgebra a = FinAlgebra::zero(co.dim);
    a.product = co.coproduct;
    return a;
}

/// Inverse of dualize_coproduct (costructure constants = structure constants).
inline Coalgebra dualize_product(const FinAlgebra& alg) {
    Coalgebra c = Coalgebra::zero(alg.dim);
    c.coproduct = alg.product;
    return c;
}

/// The Zinbiel coalgebra carried by a quadratic Zinbiel algebra (A, ., kappa):
/// Delta is determined by  kappa~(Delta(a), b (x) c) = kappa(b, a.c).
///
/// Computed two independent ways and cross-checked:
///   (a) closed form Delta(a) = -sum_j (a.e_j) (x) f_j over the dual basis f of kappa,
///   (b) a direct linear solve of the pairing system through the Kronecker Gram matrix.
/// A mismatch is a library bug, not a data problem.
inline Coalgebra zinbiel_coalgebra_from_quadratic(const FinAlgebra& alg, const BilinForm& kappa) {
    require_quadratic(alg, kappa, AlgebraKind::Zinbiel, "zinbiel_coalgebra_from_quadratic");
    const int n = alg.dim;

    // Route (a): dual-basis closed form.
    const auto duals = dual_basis(kappa.gram);
    Coalgebra route_a = Coalgebra::zero(n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            const Vec pkj = alg.basis_product(k, j);
            for (int s = 0; s < n; ++s) {
                if (pkj[static_cast<size_t>(s)].is_zero()) continue;
                for (int t = 0; t < n; ++t)
                    if (!duals[static_cast<size_t>(j)][static_cast<size_t>(t)].is_zero())
                        route_a.coproduct.at(s, t, k) -=
                            pkj[static_cast<size_t>(s)] * duals[static_cast<size_t>(j)][static_cast<size_t>(t)];
            }
        }

    // Route (b): solve kron(G^T, G^T) vec(C_k) = vec(R_k) with
    // R_k[s][t] = kappa(e_s, e_k . e_t).
    const Matrix gt = kappa.gram.transpose();
    const Matrix system = kron(gt, gt);
    Coalgebra route_b = Coalgebra::zero(n);
    for (int k = 0; k < n; ++k) {
        Vec rhs(static_cast<size_t>(n) * n, Scalar(0));
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                rhs[static_cast<size_t>(s) * n + t] =
                    kappa.value(unit_vector(n, s), alg.basis_product(k, t));
        auto x = solve(system, rhs);
        if (!x) throw CrossCheckFailure("zinbiel_coalgebra_from_quadratic: pairing solve failed");
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                route_b.coproduct.at(u, v, k) = (*x)[static_cast<size_t>(u) * n + v];
    }

    if (route_a.coproduct != route_b.coproduct)
        throw CrossCheckFailure(
            "zinbiel_coalgebra_from_quadratic: dual-basis and linear-solve routes disagree");
    return verified(std::move(route_a), CoKind::ZinbielCo);
}

/// The Leibniz coproduct carried by a finite quadratic Leibniz algebra
/// (B, o, omega): theta is determined by
/// omega~(theta(b), u (x) v) = -omega(b, u o v), i.e.
/// theta(e_q) = -sum_{u,v} omega(e_q, f_u o f_v) e_u (x) e_v over the dual
/// basis f of omega. This is the degree-zero block of the completed
/// coproduct of a graded quadratic structure.
inline Coalgebra leibniz_coalgebra_from_quadratic(const FinAlgebra& alg, const BilinForm& omega) {
    require_quadratic(alg, omega, AlgebraKind::Leibniz, "leibniz_coalgebra_from_quadratic");
    const int n = alg.dim;
    const auto duals = dual_basis(omega.gram);
    Coalgebra out = Coalgebra::zero(n);
    for (int q = 0; q < n; ++q)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                Scalar c(0);
                const Vec prod = multiply(alg, duals[static_cast<size_t>(u)],
                                          duals[static_cast<size_t>(v)]);
                for (int w = 0; w < n; ++w)
                    if (!prod[static_cast<size_t>(w)].is_zero() &&
                        !omega.gram.at(q, w).is_zero())
                        c -= omega.gram.at(q, w) * prod[static_cast<size_t>(w)];
                out.coproduct.at(u, v, q) = c;
            }
    return verified(std::move(out), CoKind::LeibnizCo);
}

}  // namespace loday
