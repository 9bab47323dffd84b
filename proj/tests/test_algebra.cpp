#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "loday/algebra.hpp"
#include "support.hpp"

using namespace loday;
using namespace loday::testing;

namespace {

Scalar q(long long n, long long d = 1) { return Scalar(n, d); }

// Independent oracle: identity defects computed directly from raw structure
// constants, bypassing multiply().
Vec zinbiel_defect_oracle(const FinAlgebra& a, int i, int j, int k) {
    Vec d(static_cast<size_t>(a.dim), Scalar(0));
    for (int l = 0; l < a.dim; ++l) {
        Scalar s(0);
        for (int m = 0; m < a.dim; ++m) {
            s += a.product.at(j, k, m) * a.product.at(i, m, l);
            s -= a.product.at(i, j, m) * a.product.at(m, k, l);
            s -= a.product.at(j, i, m) * a.product.at(m, k, l);
        }
        d[static_cast<size_t>(l)] = s;
    }
    return d;
}

Vec leibniz_defect_oracle(const FinAlgebra& a, int i, int j, int k) {
    Vec d(static_cast<size_t>(a.dim), Scalar(0));
    for (int l = 0; l < a.dim; ++l) {
        Scalar s(0);
        for (int m = 0; m < a.dim; ++m) {
            s += a.product.at(j, k, m) * a.product.at(i, m, l);
            s -= a.product.at(i, j, m) * a.product.at(m, k, l);
            s -= a.product.at(i, k, m) * a.product.at(j, m, l);
        }
        d[static_cast<size_t>(l)] = s;
    }
    return d;
}

std::mt19937_64 rng(77001);

}  // namespace

TEST_CASE("multiply extends the structure constants bilinearly") {
    const auto a2 = zinbiel_dim2();
    CHECK(multiply(a2, unit_vector(2, 0), unit_vector(2, 0)) == Vec{q(0), q(1)});
    CHECK(multiply(a2, Vec{q(0), q(0)}, Vec{q(5), q(7)}) == Vec{q(0), q(0)});
    const auto b2 = leibniz_dim2();
    // e2 . (e1 + e2) = e1 + e1 = 2 e1
    CHECK(multiply(b2, unit_vector(2, 1), Vec{q(1), q(1)}) == Vec{q(2), q(0)});
    CHECK_THROWS_AS(multiply(a2, Vec{q(1)}, unit_vector(2, 0)), ContractViolation);
}

TEST_CASE("check_identity on the corpus instances") {
    CHECK(check_identity(zinbiel_dim3(), AlgebraKind::Zinbiel).passed());
    CHECK(check_identity(FinAlgebra::zero(3), AlgebraKind::Zinbiel).passed());
    CHECK(check_identity(FinAlgebra::zero(3), AlgebraKind::Leibniz).passed());
    CHECK(check_identity(FinAlgebra::zero(3), AlgebraKind::Lie).passed());

    const auto v4 = leibniz_v4();
    CHECK(check_identity(v4, AlgebraKind::Leibniz).passed());
    auto lie = check_identity(v4, AlgebraKind::Lie);
    CHECK_FALSE(lie.passed());
    // v1.v3 = -v4 while v3.v1 = 0 breaks antisymmetry
    bool found = false;
    for (const auto& v : lie.violations)
        if (v.check == "antisymmetry" && v.indices == std::vector<int>{0, 2}) {
            found = true;
            CHECK(v.defect == Vec{q(0), q(0), q(0), q(-1)});
        }
    CHECK(found);

    CHECK_FALSE(check_identity(v4, AlgebraKind::Zinbiel).passed());
    CHECK_FALSE(check_identity(leibniz_dim2(), AlgebraKind::Zinbiel).passed());
    CHECK_FALSE(check_identity(leibniz_dim3(), AlgebraKind::Zinbiel).passed());
}

TEST_CASE("identity defects agree with the raw structure-constant oracle") {
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        FinAlgebra a = FinAlgebra::zero(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) a.product.at(i, j, k) = coeff(rng);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) {
                    CHECK(identity_defect(a, AlgebraKind::Zinbiel, i, j, k) ==
                          zinbiel_defect_oracle(a, i, j, k));
                    CHECK(identity_defect(a, AlgebraKind::Leibniz, i, j, k) ==
                          leibniz_defect_oracle(a, i, j, k));
                }
    }
}

TEST_CASE("truncated polynomial Zinbiel algebra") {
    const auto degree2 = truncated_polynomial_zinbiel(2);
    CHECK(degree2.dim == 3);
    CHECK(degree2.basis_product(0, 0) == Vec{q(0), q(1), q(0)});  // x^0 . x^0 = x^1
    CHECK(degree2.basis_product(1, 1) == Vec{q(0), q(0), q(0)});  // 1/2 x^3 truncated
    CHECK(degree2.product.at(1, 0, 2) == q(1, 2));                // x^1 . x^0 = x^2 / 2

    const auto degree6 = truncated_polynomial_zinbiel(6);
    CHECK(degree6.kind == AlgebraKind::Zinbiel);
    CHECK(check_identity(degree6, AlgebraKind::Zinbiel).passed());
}

TEST_CASE("regular representations read off the structure tensor") {
    const auto a2 = zinbiel_dim2();
    auto [l, r] = regular_rep(a2);
    Matrix expected(2, 2);
    expected.at(1, 0) = 1;
    CHECK(l.of_basis(0) == expected);
    CHECK(r.of_basis(0) == expected);
    CHECK(l.of_basis(1).is_zero());
    CHECK(check_representation(a2, l, r, AlgebraKind::Zinbiel).passed());

    auto [lz, rz] = regular_rep(FinAlgebra::zero(3));
    CHECK(lz.of_basis(0).is_zero());
    CHECK(rz.of_basis(2).is_zero());

    const auto b3 = leibniz_dim3();
    auto [lb, rb] = regular_rep(b3);
    Matrix r1(3, 3);
    r1.at(1, 2) = 1;  // e3 . e1 = e2
    CHECK(rb.of_basis(0) == r1);
    CHECK(check_representation(b3, lb, rb, AlgebraKind::Leibniz).passed());
}

TEST_CASE("coregular representations") {
    const auto a2 = zinbiel_dim2();
    auto [cl, cr] = coregular_rep(a2, AlgebraKind::Zinbiel);
    CHECK(check_representation(a2, cl, cr, AlgebraKind::Zinbiel).passed());

    const auto v4 = leibniz_v4();
    auto [cl4, cr4] = coregular_rep(v4, AlgebraKind::Leibniz);
    CHECK(check_representation(v4, cl4, cr4, AlgebraKind::Leibniz).passed());

    const auto b2 = leibniz_dim2();
    auto [clb, crb] = coregular_rep(b2, AlgebraKind::Leibniz);
    CHECK(check_representation(b2, clb, crb, AlgebraKind::Leibniz).passed());

    const auto b3 = leibniz_dim3();
    auto [clb3, crb3] = coregular_rep(b3, AlgebraKind::Leibniz);
    CHECK(check_representation(b3, clb3, crb3, AlgebraKind::Leibniz).passed());

    auto [zl, zr] = coregular_rep(FinAlgebra::zero(2), AlgebraKind::Zinbiel);
    CHECK(zl.of_basis(1).is_zero());
    CHECK(zr.of_basis(0).is_zero());

    CHECK_THROWS_AS(coregular_rep(a2, AlgebraKind::Lie), ContractViolation);
}

TEST_CASE("zero maps are a representation of any kind") {
    const auto a = zinbiel_dim3();
    auto z = LinearMapFamily::zero(3, 2);
    CHECK(check_representation(a, z, z, AlgebraKind::Zinbiel).passed());
    CHECK(check_representation(leibniz_dim3(), LinearMapFamily::zero(3, 2),
                               LinearMapFamily::zero(3, 2), AlgebraKind::Leibniz)
              .passed());
}

TEST_CASE("semidirect product Zinbiel algebra") {
    const auto a2 = zinbiel_dim2();
    auto [l, r] = regular_rep(a2);
    const auto sd = semidirect_zinbiel(a2, l, r);
    CHECK(sd.dim == 4);
    CHECK(sd.kind == AlgebraKind::Zinbiel);
    CHECK(check_identity(sd, AlgebraKind::Zinbiel).passed());

    // V = 0 keeps the algebra unchanged.
    const auto same = semidirect_zinbiel(a2, LinearMapFamily::zero(2, 0),
                                         LinearMapFamily::zero(2, 0));
    CHECK(same.dim == 2);
    CHECK(same.product == a2.product);

    // A (x| A* for the 2-dim pre-Zinbiel algebra e1>e1 = 2e2, e1<e1 = -e2,
    // acting through (l_>^* + r_<^*, -r_<^*): e1 . e2* = e1* = e2* . e1.
    Matrix l_succ(2, 2), r_prec(2, 2);
    l_succ.at(1, 0) = 2;   // e1 > e1 = 2 e2
    r_prec.at(1, 0) = -1;  // e1 < e1 = -e2
    auto dl = LinearMapFamily::zero(2, 2);
    auto dr = LinearMapFamily::zero(2, 2);
    dl.maps[0] = l_succ.transpose() + r_prec.transpose();
    dr.maps[0] = -r_prec.transpose();
    const auto sub_adjacent = zinbiel_dim2();  // e1.e1 = e2 is the sum product
    const auto dbl = semidirect_zinbiel(sub_adjacent, dl, dr);
    CHECK(dbl.basis_product(0, 3) == Vec{q(0), q(0), q(1), q(0)});  // e1 . e2* = e1*
    CHECK(dbl.basis_product(3, 0) == Vec{q(0), q(0), q(1), q(0)});  // e2* . e1 = e1*
    CHECK(dbl.basis_product(0, 0) == Vec{q(0), q(1), q(0), q(0)});  // e1 . e1 = e2

    // A non-representation is rejected.
    auto bad = LinearMapFamily::zero(2, 1);
    bad.maps[1] = Matrix::identity(1);
    CHECK_THROWS_AS(semidirect_zinbiel(a2, bad, LinearMapFamily::zero(2, 1)),
                    InvalidRepresentation);
}

TEST_CASE("check_form flags") {
    const auto a = zinbiel_quzib();
    const auto kappa = quzib_kappa();
    auto rep = check_form(a, kappa, AlgebraKind::Zinbiel);
    CHECK(rep.skew);
    CHECK_FALSE(rep.symmetric);
    CHECK(rep.nondegenerate);
    CHECK(rep.invariant);
    CHECK(rep.quadratic());
    CHECK(rep.details.passed());  // derived identity holds as well

    auto v4rep = check_form(leibniz_v4(), v4_kappa(), AlgebraKind::Leibniz);
    CHECK(v4rep.quadratic());

    auto zero = check_form(zinbiel_dim2(), BilinForm::zero(2), AlgebraKind::Zinbiel);
    CHECK(zero.symmetric);
    CHECK(zero.skew);
    CHECK_FALSE(zero.nondegenerate);
    CHECK(zero.invariant);
    CHECK_FALSE(zero.quadratic());

    CHECK_THROWS_AS(check_form(a, BilinForm::zero(3), AlgebraKind::Zinbiel), ContractViolation);
}

TEST_CASE("symmetrised product of a Zinbiel algebra is commutative associative") {
    for (const auto& a : {zinbiel_dim2(), zinbiel_dim3(), zinbiel_quzib(),
                          truncated_polynomial_zinbiel(4)}) {
        FinAlgebra sym = FinAlgebra::zero(a.dim);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j)
                for (int k = 0; k < a.dim; ++k)
                    sym.product.at(i, j, k) = a.product.at(i, j, k) + a.product.at(j, i, k);
        CHECK(check_identity(sym, AlgebraKind::Associative).passed());
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j)
                CHECK(sym.basis_product(i, j) == sym.basis_product(j, i));
    }
}

TEST_CASE("quadratic structure makes regular and coregular representations equivalent") {
    const auto a = zinbiel_quzib();
    const auto kappa = quzib_kappa();
    auto [l, r] = regular_rep(a);
    auto [cl, cr] = coregular_rep(a, AlgebraKind::Zinbiel);
    const Matrix p = kappa.gram.transpose();
    const auto pinv = inverse(p);
    REQUIRE(pinv.has_value());
    for (int i = 0; i < a.dim; ++i) {
        CHECK(p * l.of_basis(i) * *pinv == cl.of_basis(i));
        CHECK(p * r.of_basis(i) * *pinv == cr.of_basis(i));
    }
}

TEST_CASE("single-entry perturbations are detected and localize") {
    const auto base = zinbiel_quzib();
    int bumps = 0, detected = 0;
    for (int p = 0; p < base.dim; ++p)
        for (int s = 0; s < base.dim; ++s)
            for (int t = 0; t < base.dim; ++t) {
                FinAlgebra mutant = base;
                mutant.product.at(p, s, t) += 1;
                ++bumps;
                auto rep = check_identity(mutant, AlgebraKind::Zinbiel);
                if (rep.passed()) continue;
                ++detected;
                for (const auto& v : rep.violations) {
                    bool touches = false;
                    for (int idx : v.indices)
                        if (idx == p || idx == s) touches = true;
                    CHECK(touches);
                }
            }
    INFO("detected " << detected << " of " << bumps << " single-entry bumps");
    CHECK(detected * 2 >= bumps);  // detection rate tracked by the test
}
