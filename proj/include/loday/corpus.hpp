/*
 * corpus.hpp
 * ----------
 * The bundled structure-constant corpus and its verification suite. Every
 * reference value of every bundled instance is pinned here: coproducts,
 * brackets, lifted r-matrices, sharp maps, doubles and forms, each checked
 * exactly (tolerance zero). `run_corpus` is deterministic: fixed check
 * order, no timestamps in the machine report unless asked for.
 */
#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "loday/io.hpp"

namespace loday {

struct ReportCheck {
    std::string name;
    bool passed = false;
    int violations = 0;
    std::string detail;
};

struct Report {
    std::vector<ReportCheck> checks;
    long long timing_ms = 0;  // populated only on request; excluded from machine output otherwise

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

inline std::string render_text(const Report& report, bool include_timing = false) {
    std::ostringstream out;
    int failed = 0;
    for (const auto& c : report.checks) {
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.passed && c.violations > 0) out << " (" << c.violations << " violations)";
        if (!c.passed && !c.detail.empty()) out << ": " << c.detail;
        out << "\n";
        if (!c.passed) ++failed;
    }
    out << (report.passed() ? "all " : "FAILED: ") << report.checks.size() << " checks";
    if (failed > 0) out << ", " << failed << " failed";
    if (include_timing) out << " [" << report.timing_ms << " ms]";
    out << "\n";
    return out.str();
}

inline std::string render_json(const Report& report, bool include_timing = false) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["suite"] = "corpus";
    j["passed"] = report.passed();
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back(json{{"name", c.name},
                              {"passed", c.passed},
                              {"violations", c.violations},
                              {"detail", c.detail}});
    j["checks"] = std::move(checks);
    j["timing_ms"] = include_timing ? report.timing_ms : 0;
    return j.dump(2) + "\n";
}

namespace corpus_detail {

struct Runner {
    std::string dir;
    Report report;

    LoadedObject get(const std::string& name) const { return load(dir + "/" + name); }

    void run(const std::string& name, const std::function<CheckReport()>& fn) {
        ReportCheck c;
        c.name = name;
        try {
            CheckReport r = fn();
            c.passed = r.passed();
            c.violations = static_cast<int>(r.violations.size());
            if (!c.passed && !r.violations.empty()) {
                std::ostringstream detail;
                const auto& v = r.violations.front();
                detail << v.check << " at (";
                for (size_t m = 0; m < v.indices.size(); ++m)
                    detail << (m ? "," : "") << v.indices[m];
                detail << ")";
                if (!v.note.empty()) detail << " " << v.note;
                c.detail = detail.str();
            }
        } catch (const std::exception& e) {
            c.passed = false;
            c.violations = 1;
            c.detail = e.what();
        }
        report.checks.push_back(std::move(c));
    }

    void expect(const std::string& name, const std::function<bool()>& fn,
                const std::string& why_failed = "value mismatch") {
        run(name, [&]() {
            CheckReport r;
            r.name = name;
            if (!fn()) r.record(why_failed, {}, {});
            return r;
        });
    }
};

inline Vec single(int dim, int index, const Scalar& value) {
    Vec v(static_cast<size_t>(dim), Scalar(0));
    v[static_cast<size_t>(index)] = value;
    return v;
}

}  // namespace corpus_detail

/// Run the full worked-example suite over the bundled corpus directory.
inline Report run_corpus(const std::string& dir) {
    using corpus_detail::single;
    corpus_detail::Runner r{dir, {}};

    // ---- axiom sweeps: declared kind passes, a designated wrong kind fails
    const std::vector<std::string> algebra_files = {
        "zinbiel_dim2.json",  "zinbiel_dim3.json", "zinbiel_quzib.json", "leibniz_dim2.json",
        "leibniz_dim3.json",  "leibniz_b2.json",   "leibniz_v4.json",    "leibniz_qf_b4.json",
    };
    for (const auto& file : algebra_files) {
        const auto obj = r.get(file);
        const auto kind = algebra_kind_from_string(obj.declared_kind);
        r.run("axioms/" + file + "/declared-" + obj.declared_kind, [&]() {
            if (!kind || *kind == AlgebraKind::Unchecked)
                throw ParseError("corpus algebra must declare a kind");
            return check_identity(obj.algebra, *kind);
        });
        auto fails_it = obj.metadata.find("fails_kinds");
        std::string fails = fails_it == obj.metadata.end() ? "" : fails_it->second;
        std::istringstream split(fails);
        std::string wrong;
        while (std::getline(split, wrong, ',')) {
            const auto wrong_kind = algebra_kind_from_string(wrong);
            r.expect("axioms/" + file + "/fails-" + wrong,
                     [&, wrong_kind]() {
                         return wrong_kind && !check_identity(obj.algebra, *wrong_kind).passed();
                     },
                     "expected the " + wrong + " sweep to fail");
        }
    }
    r.run("axioms/truncated-polynomial-cap6/zinbiel", [&]() {
        return check_identity(truncated_polynomial_zinbiel(6), AlgebraKind::Zinbiel);
    });

    // ---- shared corpus objects
    const FinAlgebra quzib = r.get("zinbiel_quzib.json").algebra;
    const BilinForm kappa = r.get("form_quzib_kappa.json").form;
    const FinAlgebra b2 = r.get("leibniz_b2.json").algebra;
    const TensorElem2 tri_r = r.get("rmatrix_tri.json").rmatrix;
    const auto tri_bi_file = r.get("bialgebra_tri.json");
    const FinAlgebra zin2 = r.get("zinbiel_dim2.json").algebra;
    const TensorElem2 zr = r.get("rmatrix_zybe.json").rmatrix;
    const FinAlgebra v4 = r.get("leibniz_v4.json").algebra;
    const BilinForm v4k = r.get("form_v4_kappa.json").form;
    const auto graded_form_file = r.get("graded_form_v4.json");
    const GradedForm omega{graded_form_file.form, graded_form_file.form_offset};
    const PreZinbiel pre = r.get("prezinbiel_qf.json").pre_zinbiel;
    const FinAlgebra qf_b = r.get("leibniz_qf_b4.json").algebra;
    const BilinForm qf_w = r.get("form_qf_omega.json").form;

    // ---- quadratic structures
    r.expect("forms/quzib-kappa-quadratic",
             [&]() { return check_form(quzib, kappa, AlgebraKind::Zinbiel).quadratic(); });
    r.expect("forms/v4-kappa-quadratic",
             [&]() { return check_form(v4, v4k, AlgebraKind::Leibniz).quadratic(); });
    r.expect("forms/qf-omega-quadratic",
             [&]() { return check_form(qf_b, qf_w, AlgebraKind::Leibniz).quadratic(); });

    // ---- the quadratic Zinbiel coalgebra, against the pinned values and the golden file
    r.expect("quzib/delta-values", [&]() {
        const Coalgebra delta = zinbiel_coalgebra_from_quadratic(quzib, kappa);
        Coalgebra expected = Coalgebra::zero(4);
        expected.coproduct.at(1, 1, 0) = -1;
        expected.coproduct.at(1, 2, 0) = -1;
        expected.coproduct.at(2, 1, 0) = 2;
        expected.coproduct.at(2, 2, 3) = 1;
        expected.coproduct.at(1, 2, 3) = -2;
        expected.coproduct.at(2, 1, 3) = 1;
        const Coalgebra golden = r.get("golden/quzib_delta.json").coalgebra;
        return delta.coproduct == expected.coproduct && delta.coproduct == golden.coproduct;
    });
    r.run("quzib/delta-coidentity", [&]() {
        return check_coidentity(zinbiel_coalgebra_from_quadratic(quzib, kappa), CoKind::ZinbielCo);
    });

    // ---- the triangular Leibniz bialgebra and its induced Lie bialgebra
    r.expect("tri/r-solves-lybe", [&]() { return lybe_defect(b2, tri_r).is_zero(); });
    r.expect("tri/classification-triangular", [&]() {
        const auto rec = classify_r(b2, tri_r, AlgebraKind::Leibniz);
        return rec.triangular(AlgebraKind::Leibniz) && rec.quasi_triangular() &&
               rec.factorizable == FactorizableVerdict::No;
    });
    r.expect("tri/theta-values", [&]() {
        const Coalgebra theta = coboundary_coproduct(b2, tri_r, AlgebraKind::Leibniz);
        Coalgebra expected = Coalgebra::zero(2);
        expected.coproduct.at(0, 0, 1) = -1;  // theta(x2) = -x1 (x) x1
        return theta.coproduct == expected.coproduct &&
               theta.coproduct == tri_bi_file.coalgebra.coproduct;
    });
    r.run("tri/leibniz-bialgebra", [&]() {
        return check_leibniz_bialgebra(
            {tri_bi_file.algebra, tri_bi_file.coalgebra, BialgebraKind::LeibnizBi});
    });
    Bialgebra tri_induced;
    r.expect("tri/induced-bracket-values", [&]() {
        tri_induced = induced_lie_bialgebra(
            {tri_bi_file.algebra, tri_bi_file.coalgebra, BialgebraKind::LeibnizBi}, quzib, kappa);
        Vec expected(16 / 2, Scalar(0));
        expected[2 * 2 + 0] = 3;
        expected[1 * 2 + 0] = -3;
        return tri_induced.algebra.basis_product(0 * 2 + 1, 3 * 2 + 1) == expected;
    });
    r.expect("tri/induced-delta-values", [&]() {
        Coalgebra expected = Coalgebra::zero(8);
        expected.coproduct.at(1 * 2 + 0, 2 * 2 + 0, 0 * 2 + 1) = 3;
        expected.coproduct.at(2 * 2 + 0, 1 * 2 + 0, 0 * 2 + 1) = -3;
        expected.coproduct.at(1 * 2 + 0, 2 * 2 + 0, 3 * 2 + 1) = 3;
        expected.coproduct.at(2 * 2 + 0, 1 * 2 + 0, 3 * 2 + 1) = -3;
        const Coalgebra golden = r.get("golden/tri_delta8.json").coalgebra;
        return tri_induced.coalgebra.coproduct == expected.coproduct &&
               tri_induced.coalgebra.coproduct == golden.coproduct;
    });
    r.run("tri/lie-bialgebra-cocycle", [&]() { return check_lie_bialgebra(tri_induced); });
    TensorElem2 rtilde;
    r.expect("tri/r-tilde-values", [&]() {
        rtilde = lift_lybe(quzib, kappa, b2, tri_r);
        Matrix expected(8, 8);
        expected.at(0, 5) = 1;
        expected.at(1, 4) = 1;
        expected.at(2, 7) = 1;
        expected.at(3, 6) = 1;
        expected.at(4, 1) = -1;
        expected.at(5, 0) = -1;
        expected.at(6, 3) = -1;
        expected.at(7, 2) = -1;
        const TensorElem2 golden = r.get("golden/tri_rtilde.json").rmatrix;
        return rtilde.coeffs == expected && rtilde.coeffs == golden.coeffs;
    });
    r.expect("tri/r-tilde-solves-cybe",
             [&]() { return cybe_defect(tri_induced.algebra, rtilde).is_zero(); });
    r.expect("tri/r-tilde-skew-and-invariant", [&]() {
        TensorElem2 sym = rtilde + rtilde.tau();
        return rtilde.skew() && is_invariant(tri_induced.algebra, sym, AlgebraKind::Lie);
    });
    r.expect("tri/sharp-values", [&]() {
        const Matrix rs = r_sharp(tri_r);
        const Matrix r0s = r_sharp(canonical_pair_tensor(kappa));
        const Matrix rts = r_sharp(rtilde);
        bool ok = rs.apply(unit_vector(2, 0)) == single(2, 1, 1) &&     // r#(eta1) = x2
                  rs.apply(unit_vector(2, 1)) == single(2, 0, 1) &&     // r#(eta2) = x1
                  r0s.apply(unit_vector(4, 0)) == single(4, 2, 1) &&    // r0#(xi1) = e3
                  r0s.apply(unit_vector(4, 1)) == single(4, 3, 1) &&    // r0#(xi2) = e4
                  r0s.apply(unit_vector(4, 2)) == single(4, 0, -1) &&   // r0#(xi3) = -e1
                  r0s.apply(unit_vector(4, 3)) == single(4, 1, -1);     // r0#(xi4) = -e2
        const int targets[8] = {5, 4, 7, 6, 1, 0, 3, 2};
        const long long signs[8] = {1, 1, 1, 1, -1, -1, -1, -1};
        for (int u = 0; u < 8; ++u)
            ok = ok && rts.apply(unit_vector(8, u)) == single(8, targets[u], signs[u]);
        return ok && rts == kron(r0s, rs);
    });
    r.expect("tri/delta-coincides-with-coboundary", [&]() {
        const Coalgebra cob = coboundary_coproduct(tri_induced.algebra, rtilde, AlgebraKind::Lie);
        return tri_induced.coalgebra.coproduct == cob.coproduct;
    });
    r.run("tri/o-operator-coregular", [&]() {
        auto [cl, cr] = coregular_rep(b2, AlgebraKind::Leibniz);
        return check_o_operator(b2, r_sharp(tri_r), cl, cr, AlgebraKind::Leibniz);
    });
    r.run("tri/o-operator-coadjoint", [&]() {
        const auto rho = coadjoint_family(tri_induced.algebra);
        return check_o_operator(tri_induced.algebra, r_sharp(rtilde), rho, rho, AlgebraKind::Lie);
    });
    r.expect("tri/factorizability-rank-identity", [&]() {
        return rank(r_sharp(rtilde) + r_sharp(rtilde.tau())) ==
               quzib.dim * rank(r_sharp(tri_r) - r_sharp(tri_r.tau()));
    });
    r.run("tri/double-manin-triple", [&]() {
        auto [dbl, form] = lie_double(tri_induced);
        auto [p1, p2] = double_halves(8);
        return verify_manin_triple(dbl, form, p1, p2, AlgebraKind::Lie);
    });
    r.expect("tri/dual-bracket-is-lie", [&]() {
        return check_identity(dualize_coproduct(tri_induced.coalgebra), AlgebraKind::Lie).passed();
    });

    // ---- the symmetric ZYBE solution and its triangular Zinbiel bialgebra
    r.expect("zybe/r-solves-zybe", [&]() { return zybe_defect(zin2, zr).is_zero(); });
    r.expect("zybe/delta-values", [&]() {
        const Coalgebra delta = coboundary_coproduct(zin2, zr, AlgebraKind::Zinbiel);
        Coalgebra expected = Coalgebra::zero(2);
        expected.coproduct.at(1, 1, 0) = 1;  // Delta(e1) = e2 (x) e2
        return delta.coproduct == expected.coproduct;
    });
    r.run("zybe/zinbiel-bialgebra", [&]() {
        const Coalgebra delta = coboundary_coproduct(zin2, zr, AlgebraKind::Zinbiel);
        return check_zinbiel_bialgebra({zin2, delta, BialgebraKind::ZinbielBi});
    });
    r.expect("zybe/classification-triangular", [&]() {
        const auto rec = classify_r(zin2, zr, AlgebraKind::Zinbiel);
        return rec.triangular(AlgebraKind::Zinbiel) &&
               rec.factorizable == FactorizableVerdict::NotDefinedForZinbiel;
    });

    // ---- the completed structures over V4[t, t^-1]
    const AffineAlgebra v4_affine = affinize(v4);
    const CompletedCoproduct theta = completed_coalgebra_from_graded_form(v4_affine, omega);
    r.expect("graded/theta-values", [&]() {
        const AffineExpr I = AffineExpr::sym(0);
        auto fam = [&](const Scalar& c, int b1, int b2) {
            DegreeTensor t(2, 4);
            DegreeTerm term;
            term.coeff = c;
            term.bases = {b1, b2};
            term.offsets = {AffineExpr(0), I};
            term.pmat = {{1}, {-1}};
            t.add_term(std::move(term));
            return t;
        };
        DegreeTensor t3 = fam(Scalar(1), 2, 3) + fam(Scalar(-1), 3, 2);
        return theta.of_basis(0).equals(fam(Scalar(1), 3, 0)) &&
               theta.of_basis(1).equals(fam(Scalar(-1), 2, 0)) &&
               theta.of_basis(2).equals(t3) && theta.of_basis(3).is_zero();
    });
    r.run("graded/theta-coidentity", [&]() {
        CompletedContext ctx;
        ctx.rule = &theta;
        return check_completed_identity(CompletedIdentity::LeibnizCo, ctx);
    });

    // ---- the induced completed Lie bialgebra of the 2-dim Zinbiel bialgebra
    const GradedLie graded_g = induced_graded_lie(zin2, v4_affine);
    const Coalgebra zdelta = coboundary_coproduct(zin2, zr, AlgebraKind::Zinbiel);
    const CompletedCoproduct delta_rule = completed_lie_cobracket(zdelta, theta);
    r.expect("graded/bracket-values", [&]() {
        Vec b01(8, Scalar(0)), b12(8, Scalar(0)), b20(8, Scalar(0));
        b01[4] = 2;  // [e1 v1, e1 v2] = 2 e2 v1
        b12[6] = 1;  // [e1 v2, e1 v3] = e2 v3
        b20[7] = 1;  // [e1 v3, e1 v1] = e2 v4
        return graded_g.base.basis_product(0, 1) == b01 &&
               graded_g.base.basis_product(1, 2) == b12 &&
               graded_g.base.basis_product(2, 0) == b20;
    });
    r.expect("graded/delta-values", [&]() {
        const AffineExpr I = AffineExpr::sym(0);
        auto fam = [&](const Scalar& c, int b1, int b2) {
            DegreeTensor t(2, 8);
            DegreeTerm term;
            term.coeff = c;
            term.bases = {b1, b2};
            term.offsets = {AffineExpr(0), I};
            term.pmat = {{1}, {-1}};
            t.add_term(std::move(term));
            return t;
        };
        const int e2v = 4;  // e2 (x) v_* block starts at 1*4
        DegreeTensor d1 = fam(Scalar(1), e2v + 3, e2v + 0) + fam(Scalar(-1), e2v + 0, e2v + 3);
        DegreeTensor d2 = fam(Scalar(1), e2v + 0, e2v + 2) + fam(Scalar(-1), e2v + 2, e2v + 0);
        DegreeTensor d3 = fam(Scalar(2), e2v + 2, e2v + 3) + fam(Scalar(-2), e2v + 3, e2v + 2);
        return delta_rule.of_basis(0).equals(d1) && delta_rule.of_basis(1).equals(d2) &&
               delta_rule.of_basis(2).equals(d3) && delta_rule.of_basis(3).is_zero();
    });
    r.run("graded/lie-coidentity", [&]() {
        CompletedContext ctx;
        ctx.rule = &delta_rule;
        return check_completed_identity(CompletedIdentity::LieCo, ctx);
    });
    r.run("graded/cocycle", [&]() {
        CompletedContext ctx;
        ctx.rule = &delta_rule;
        ctx.base = &graded_g.base;
        return check_completed_identity(CompletedIdentity::LieBiCocycle, ctx);
    });
    const DegreeTensor r_hat = lift_zybe(zin2, zr, v4_affine, omega);
    r.expect("graded/r-hat-values", [&]() {
        DegreeTensor expected(2, 8);
        auto fam = [&](long long c, int a1, int w1, int a2, int w2) {
            DegreeTerm term;
            term.coeff = Scalar(c);
            term.bases = {a1 * 4 + w1, a2 * 4 + w2};
            term.offsets = {AffineExpr(0), AffineExpr(0)};
            term.pmat = {{1}, {-1}};
            expected.add_term(std::move(term));
        };
        fam(1, 0, 2, 1, 0);
        fam(1, 1, 2, 0, 0);
        fam(1, 0, 3, 1, 1);
        fam(1, 1, 3, 0, 1);
        fam(-1, 0, 0, 1, 2);
        fam(-1, 1, 0, 0, 2);
        fam(-1, 0, 1, 1, 3);
        fam(-1, 1, 1, 0, 3);
        return r_hat.equals(expected);
    });
    r.expect("graded/r-hat-skew", [&]() { return (r_hat + r_hat.tau()).is_zero(); });
    r.run("graded/r-hat-solves-completed-cybe", [&]() {
        CompletedContext ctx;
        ctx.base = &graded_g.base;
        ctx.r_hat = &r_hat;
        return check_completed_identity(CompletedIdentity::Cybe, ctx);
    });
    r.expect("graded/delta-coincides-with-coboundary", [&]() {
        for (int b = 0; b < 8; ++b)
            if (!delta_rule.of_basis(b).equals(completed_invariance_defect(graded_g.base, r_hat, b)))
                return false;
        return true;
    });
    r.expect("graded/truncation-agreement", [&]() {
        CompletedContext co_ctx;
        co_ctx.rule = &theta;
        CompletedContext bi_ctx;
        bi_ctx.rule = &delta_rule;
        bi_ctx.base = &graded_g.base;
        CompletedContext cybe_ctx;
        cybe_ctx.base = &graded_g.base;
        cybe_ctx.r_hat = &r_hat;
        return check_completed_identity_truncated(CompletedIdentity::LeibnizCo, co_ctx) &&
               check_completed_identity_truncated(CompletedIdentity::LieCo, bi_ctx) &&
               check_completed_identity_truncated(CompletedIdentity::LieBiCocycle, bi_ctx) &&
               check_completed_identity_truncated(CompletedIdentity::Cybe, cybe_ctx);
    });

    // ---- the k = 5 coboundary Zinbiel bialgebra file
    r.run("bialg/k5-compatible", [&]() {
        const auto bi = r.get("bialgebra_bialg_k5.json");
        return check_zinbiel_bialgebra({bi.algebra, bi.coalgebra, BialgebraKind::ZinbielBi});
    });

    // ---- the quasi-Frobenius chain
    r.run("qf/pre-zinbiel", [&]() { return check_pre_zinbiel(pre); });
    std::pair<FinAlgebra, BilinForm> dbl;
    r.expect("qf/double-products-values", [&]() {
        dbl = pre_zinbiel_double(pre);
        return dbl.first.basis_product(0, 0) == single(4, 1, 1) &&   // e1.e1 = e2
               dbl.first.basis_product(0, 3) == single(4, 2, 1) &&   // e1.e2* = e1*
               dbl.first.basis_product(3, 0) == single(4, 2, 1);     // e2*.e1 = e1*
    });
    r.expect("qf/double-form-values", [&]() {
        return dbl.second.gram.at(0, 2) == Scalar(1) && dbl.second.gram.at(2, 0) == Scalar(1) &&
               dbl.second.gram.at(1, 3) == Scalar(1) && dbl.second.gram.at(0, 1) == Scalar(0);
    });
    r.expect("qf/double-quasi-frobenius",
             [&]() { return check_quasi_frobenius_zinbiel(dbl.first, dbl.second).passed(); });
    r.expect("qf/canonical-r-solves-zybe", [&]() {
        return zybe_defect(dbl.first, canonical_r_from_form(dbl.second)).is_zero();
    });
    std::pair<FinAlgebra, BilinForm> qf16;
    r.expect("qf/16dim-brackets-values", [&]() {
        qf16 = induced_qf_lie(dbl.first, dbl.second, qf_b, qf_w);
        auto flat = [](int a, int x) { return a * 4 + x; };
        auto is = [&](int g1, int g2, int target, long long c) {
            return qf16.first.basis_product(g1, g2) == single(16, target, c) &&
                   qf16.first.basis_product(g2, g1) == single(16, target, -c);
        };
        return is(flat(0, 0), flat(0, 1), flat(1, 0), 2) &&
               is(flat(0, 1), flat(0, 2), flat(1, 2), 1) &&
               is(flat(0, 2), flat(0, 0), flat(1, 3), 1) &&
               is(flat(0, 2), flat(3, 0), flat(2, 3), 1) &&
               is(flat(0, 0), flat(3, 1), flat(2, 0), 2) &&
               is(flat(0, 1), flat(3, 2), flat(2, 2), 1);
    });
    r.expect("qf/16dim-form-values", [&]() {
        auto flat = [](int a, int x) { return a * 4 + x; };
        return qf16.second.gram.at(flat(0, 0), flat(2, 2)) == Scalar(1) &&
               qf16.second.gram.at(flat(0, 1), flat(2, 3)) == Scalar(1) &&
               qf16.second.gram.at(flat(1, 0), flat(3, 2)) == Scalar(1) &&
               qf16.second.gram.at(flat(1, 1), flat(3, 3)) == Scalar(1);
    });
    r.expect("qf/16dim-quasi-frobenius",
             [&]() { return check_quasi_frobenius_lie(qf16.first, qf16.second).passed(); });
    r.expect("qf/graded-quasi-frobenius", [&]() {
        auto [graded, gform] =
            induced_qf_lie_graded(dbl.first, dbl.second, v4_affine, GradedForm{v4k, 0});
        return check_quasi_frobenius_lie_graded(graded, gform).passed();
    });

    return r.report;
}

}  // namespace loday
