/*
 * Shared fixtures: the structure-constant instances used across the test
 * suites, transcribed from their product tables.
 */
#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "loday/algebra.hpp"
#include "loday/coalgebra.hpp"

namespace loday::testing {

struct Entry {
    int i, j, k;
    long long num;
    long long den = 1;
};

struct FormEntry {
    int i, j;
    long long num;
    long long den = 1;
};

inline FinAlgebra make_algebra(int dim, std::initializer_list<Entry> entries,
                               AlgebraKind kind = AlgebraKind::Unchecked) {
    FinAlgebra a = FinAlgebra::zero(dim);
    for (const auto& e : entries) a.product.at(e.i, e.j, e.k) = Scalar(e.num, e.den);
    if (kind != AlgebraKind::Unchecked) a = verified(std::move(a), kind);
    return a;
}

inline Coalgebra make_coalgebra(int dim, std::initializer_list<Entry> entries,
                                CoKind kind = CoKind::Unchecked) {
    Coalgebra c = Coalgebra::zero(dim);
    for (const auto& e : entries) c.coproduct.at(e.i, e.j, e.k) = Scalar(e.num, e.den);
    if (kind != CoKind::Unchecked) c = verified(std::move(c), kind);
    return c;
}

inline BilinForm make_form(int dim, std::initializer_list<FormEntry> entries) {
    BilinForm f = BilinForm::zero(dim);
    for (const auto& e : entries) f.gram.at(e.i, e.j) = Scalar(e.num, e.den);
    return f;
}

// 2-dim Zinbiel algebra, e1.e1 = e2.
inline FinAlgebra zinbiel_dim2() {
    return make_algebra(2, {{0, 0, 1, 1}}, AlgebraKind::Zinbiel);
}

// 3-dim Zinbiel algebra, e1.e1 = e1.e2 = e2.e1 = e3.
inline FinAlgebra zinbiel_dim3() {
    return make_algebra(3, {{0, 0, 2, 1}, {0, 1, 2, 1}, {1, 0, 2, 1}}, AlgebraKind::Zinbiel);
}

// 2-dim Leibniz algebra, e2.e1 = e1 = e2.e2.
inline FinAlgebra leibniz_dim2() {
    return make_algebra(2, {{1, 0, 0, 1}, {1, 1, 0, 1}}, AlgebraKind::Leibniz);
}

// 3-dim Leibniz algebra, e3.e1 = e2, e3.e2 = e1.
inline FinAlgebra leibniz_dim3() {
    return make_algebra(3, {{2, 0, 1, 1}, {2, 1, 0, 1}}, AlgebraKind::Leibniz);
}

// 2-dim Leibniz algebra, x2.x2 = x1 (the factor used for the 8-dim tensor example).
inline FinAlgebra leibniz_b2() {
    return make_algebra(2, {{1, 1, 0, 1}}, AlgebraKind::Leibniz);
}

// 4-dim quadratic Zinbiel algebra:
// e1.e1 = e2, e4.e4 = e3, e1.e4 = 2e3 - e2, e4.e1 = 2e2 - e3.
inline FinAlgebra zinbiel_quzib() {
    return make_algebra(4,
                        {{0, 0, 1, 1},
                         {3, 3, 2, 1},
                         {0, 3, 2, 2},
                         {0, 3, 1, -1},
                         {3, 0, 1, 2},
                         {3, 0, 2, -1}},
                        AlgebraKind::Zinbiel);
}

// kappa(e3,e1) = kappa(e4,e2) = 1 = -kappa(e2,e4) = -kappa(e1,e3).
inline BilinForm quzib_kappa() {
    return make_form(4, {{2, 0, 1}, {3, 1, 1}, {0, 2, -1}, {1, 3, -1}});
}

// 4-dim Leibniz algebra V4: v1.v2 = v1 = -v2.v1, v1.v3 = -v4, v2.v3 = v3.
inline FinAlgebra leibniz_v4() {
    return make_algebra(4, {{0, 1, 0, 1}, {1, 0, 0, -1}, {0, 2, 3, -1}, {1, 2, 2, 1}},
                        AlgebraKind::Leibniz);
}

// Fiber form of the graded quadratic structure on V4:
// kappa(v1,v3) = kappa(v2,v4) = 1, skew, rest zero.
inline BilinForm v4_kappa() {
    return make_form(4, {{0, 2, 1}, {1, 3, 1}, {2, 0, -1}, {3, 1, -1}});
}

// 4-dim quadratic Leibniz algebra of the quasi-Frobenius example:
// x1.x2 = x1 = -x2.x1, x1.x3 = -x4, x2.x3 = x3 (same table as V4),
// omega(x1,x3) = 1 = omega(x2,x4), skew.
inline FinAlgebra qf_leibniz_b4() { return leibniz_v4(); }
inline BilinForm qf_omega() { return v4_kappa(); }

}  // namespace loday::testing
