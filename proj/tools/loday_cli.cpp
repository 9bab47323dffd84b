/*
 * loday -- exact checkers and constructions for Zinbiel/Leibniz/Lie
 * (co/bi)algebras given by structure constants.
 *
 * Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input error.
 */
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "loday/corpus.hpp"
#include "loday/io.hpp"

using namespace loday;

namespace {

std::string default_corpus_dir() {
    if (const char* env = std::getenv("LODAY_CORPUS_DIR")) return env;
#ifdef LODAY_CORPUS_DIR
    return LODAY_CORPUS_DIR;
#else
    return "data/corpus";
#endif
}

void print_report(const CheckReport& report, int max_violations = 8) {
    if (report.passed()) {
        std::cout << "[PASS] " << report.name << "\n";
        return;
    }
    std::cout << "[FAIL] " << report.name << " (" << report.violations.size()
              << " violations)\n";
    int shown = 0;
    for (const auto& v : report.violations) {
        if (shown++ >= max_violations) {
            std::cout << "  ...\n";
            break;
        }
        std::cout << "  " << v.check << " at (";
        for (size_t m = 0; m < v.indices.size(); ++m)
            std::cout << (m ? "," : "") << v.indices[m] + 1;
        std::cout << ")";
        if (!v.defect.empty()) {
            std::cout << " defect [";
            for (size_t m = 0; m < v.defect.size() && m < 16; ++m)
                std::cout << (m ? ", " : "") << rational_to_string(v.defect[m]);
            if (v.defect.size() > 16) std::cout << ", ...";
            std::cout << "]";
        }
        if (!v.note.empty()) std::cout << " " << v.note;
        std::cout << "\n";
    }
}

int report_exit(const CheckReport& report) {
    print_report(report);
    return report.passed() ? 0 : 1;
}

LoadedObject load_role(const std::string& path, std::initializer_list<Role> roles) {
    LoadedObject obj = load(path);
    for (Role r : roles)
        if (obj.role == r) return obj;
    throw ParseError(path + ": unexpected role \"" + to_string(obj.role) + "\"");
}

FinAlgebra load_verified_algebra(const std::string& path, AlgebraKind kind) {
    auto obj = load_role(path, {Role::Algebra, Role::Affine, Role::Bialgebra});
    return verified(obj.algebra, kind);
}

int run_check(const std::string& path, const std::string& kind) {
    const LoadedObject obj = load(path);
    if (auto ak = algebra_kind_from_string(kind); ak && *ak != AlgebraKind::Unchecked) {
        if (obj.role != Role::Algebra && obj.role != Role::Affine && obj.role != Role::Bialgebra)
            throw ParseError("role \"" + to_string(obj.role) + "\" carries no product");
        return report_exit(check_identity(obj.algebra, *ak));
    }
    if (auto ck = cokind_from_string(kind); ck && *ck != CoKind::Unchecked) {
        if (obj.role != Role::Coalgebra && obj.role != Role::Bialgebra)
            throw ParseError("role \"" + to_string(obj.role) + "\" carries no coproduct");
        return report_exit(check_coidentity(obj.coalgebra, *ck));
    }
    if (auto bk = bikind_from_string(kind)) {
        if (obj.role != Role::Bialgebra)
            throw ParseError("role \"" + to_string(obj.role) + "\" is not a bialgebra");
        return report_exit(check_bialgebra({obj.algebra, obj.coalgebra, *bk}));
    }
    throw CLI::ValidationError("--as", "unknown kind \"" + kind + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"loday: exact verification of Zinbiel/Leibniz/Lie (co/bi)algebra structures"};
    app.require_subcommand(1);
    std::string corpus_dir = default_corpus_dir();

    // check <file> --as <kind>
    std::string check_file, check_kind;
    auto* cmd_check = app.add_subcommand("check", "verify a defining identity on a file");
    cmd_check->add_option("file", check_file)->required();
    cmd_check->add_option("--as", check_kind, "zinbiel|leibniz|lie|associative|zinbiel_co|...")
        ->required();

    // induce --zinbiel A --leibniz B [--affine] [--out F]
    std::string ind_a, ind_b, ind_out;
    bool ind_affine = false;
    auto* cmd_induce = app.add_subcommand("induce", "induced Lie bracket on A (x) B");
    cmd_induce->add_option("--zinbiel", ind_a)->required();
    cmd_induce->add_option("--leibniz", ind_b)->required();
    cmd_induce->add_flag("--affine", ind_affine, "B is a Laurent affinization");
    cmd_induce->add_option("--out", ind_out);

    // coalgebra-from-form --algebra A --form K [--out F]
    std::string cff_alg, cff_form, cff_out;
    auto* cmd_cff = app.add_subcommand("coalgebra-from-form",
                                       "the coproduct carried by a quadratic structure");
    cmd_cff->add_option("--algebra", cff_alg)->required();
    cmd_cff->add_option("--form", cff_form)->required();
    cmd_cff->add_option("--out", cff_out);

    // ybe --type {lybe|cybe|zybe} --algebra F --r R
    std::string ybe_type, ybe_alg, ybe_r;
    auto* cmd_ybe = app.add_subcommand("ybe", "Yang-Baxter defect of an r-matrix");
    cmd_ybe->add_option("--type", ybe_type, "lybe|cybe|zybe")->required();
    cmd_ybe->add_option("--algebra", ybe_alg)->required();
    cmd_ybe->add_option("--r", ybe_r)->required();

    // lift --mode {r-tilde|r-hat} ...
    std::string lift_mode, lift_a, lift_form, lift_b, lift_r, lift_out;
    auto* cmd_lift = app.add_subcommand("lift", "lift an r-matrix to the tensor product");
    cmd_lift->add_option("--mode", lift_mode, "r-tilde|r-hat")->required();
    cmd_lift->add_option("--zinbiel", lift_a)->required();
    cmd_lift->add_option("--form", lift_form)->required();
    cmd_lift->add_option("--leibniz", lift_b, "Leibniz factor (finite or affine)")->required();
    cmd_lift->add_option("--r", lift_r)->required();
    cmd_lift->add_option("--out", lift_out);

    // classify --algebra F --r R --as <kind>
    std::string cls_alg, cls_r, cls_kind;
    auto* cmd_classify = app.add_subcommand("classify", "classification evidence for r");
    cmd_classify->add_option("--algebra", cls_alg)->required();
    cmd_classify->add_option("--r", cls_r)->required();
    cmd_classify->add_option("--as", cls_kind, "leibniz|lie|zinbiel")->required();

    // manin --double D --form F --p1 .. --p2 .. [--as kind]
    std::string man_double, man_form, man_p1, man_p2, man_kind = "lie";
    auto* cmd_manin = app.add_subcommand("manin", "verify a Manin triple");
    cmd_manin->add_option("--double", man_double)->required();
    cmd_manin->add_option("--form", man_form)->required();
    cmd_manin->add_option("--p1", man_p1)->required();
    cmd_manin->add_option("--p2", man_p2)->required();
    cmd_manin->add_option("--as", man_kind, "lie|leibniz (default lie)");

    // frobenius ...
    auto* cmd_fro = app.add_subcommand("frobenius", "quasi-Frobenius constructions");
    cmd_fro->require_subcommand(1);
    std::string fro_alg, fro_form, fro_pre, fro_out, fro_out_form, fro_b, fro_omega;
    bool fro_affine = false;
    auto* fro_check_z = cmd_fro->add_subcommand("check-zinbiel", "quasi-Frobenius Zinbiel check");
    fro_check_z->add_option("--algebra", fro_alg)->required();
    fro_check_z->add_option("--form", fro_form)->required();
    auto* fro_check_l = cmd_fro->add_subcommand("check-lie", "quasi-Frobenius Lie check");
    fro_check_l->add_option("--algebra", fro_alg)->required();
    fro_check_l->add_option("--form", fro_form)->required();
    auto* fro_pre_check = cmd_fro->add_subcommand("pre-check", "pre-Zinbiel identity check");
    fro_pre_check->add_option("--pre", fro_pre)->required();
    auto* fro_double = cmd_fro->add_subcommand("double", "the A (x| A* quasi-Frobenius double");
    fro_double->add_option("--pre", fro_pre)->required();
    fro_double->add_option("--out", fro_out);
    fro_double->add_option("--out-form", fro_out_form);
    auto* fro_canonical = cmd_fro->add_subcommand("canonical-r", "r = sum e_i (x) f_i of a form");
    fro_canonical->add_option("--form", fro_form)->required();
    fro_canonical->add_option("--out", fro_out);
    auto* fro_induce = cmd_fro->add_subcommand("induce", "induced quasi-Frobenius Lie algebra");
    fro_induce->add_option("--zinbiel", fro_alg)->required();
    fro_induce->add_option("--form", fro_form)->required();
    fro_induce->add_option("--leibniz", fro_b)->required();
    fro_induce->add_option("--omega", fro_omega)->required();
    fro_induce->add_flag("--affine", fro_affine, "the Leibniz factor is an affinization");

    // report --out <path> --format {json|text}
    std::string rep_out, rep_format = "json";
    bool rep_timings = false;
    auto* cmd_report = app.add_subcommand("report", "run the corpus suite and write a report");
    cmd_report->add_option("--out", rep_out)->required();
    cmd_report->add_option("--format", rep_format, "json|text (default json)");
    cmd_report->add_option("--corpus", corpus_dir, "corpus directory");
    cmd_report->add_flag("--timings", rep_timings, "include wall-clock timing");

    // corpus verify
    auto* cmd_corpus = app.add_subcommand("corpus", "bundled corpus operations");
    cmd_corpus->require_subcommand(1);
    bool corpus_json = false, corpus_timings = false;
    auto* cmd_verify = cmd_corpus->add_subcommand("verify", "run the full worked-example suite");
    cmd_verify->add_option("--corpus", corpus_dir, "corpus directory");
    cmd_verify->add_flag("--json", corpus_json, "machine-readable output");
    cmd_verify->add_flag("--timings", corpus_timings, "include wall-clock timing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints usage/help
        return e.get_name() == "CallForHelp" ? 0 : 2;
    }

    try {
        if (*cmd_check) return run_check(check_file, check_kind);

        if (*cmd_induce) {
            const FinAlgebra a = load_verified_algebra(ind_a, AlgebraKind::Zinbiel);
            const FinAlgebra b = load_verified_algebra(ind_b, AlgebraKind::Leibniz);
            FinAlgebra g = ind_affine ? induced_graded_lie(a, AffineAlgebra{b}).base
                                      : induced_lie(a, b);
            std::cout << "[PASS] induced Lie " << (ind_affine ? "(graded, fiber level) " : "")
                      << "bracket on dimension " << g.dim << "\n";
            if (!ind_out.empty()) {
                LoadedObject o;
                o.role = Role::Algebra;
                o.declared_kind = "lie";
                o.dim = g.dim;
                o.basis_labels = g.basis_labels;
                o.algebra = g;
                save(ind_out, o);
                std::cout << "wrote " << ind_out << "\n";
            }
            return 0;
        }

        if (*cmd_cff) {
            const auto form_file = load_role(cff_form, {Role::Form});
            const auto alg_file = load_role(cff_alg, {Role::Algebra, Role::Affine});
            if (form_file.graded_form || alg_file.role == Role::Affine) {
                const AffineAlgebra b{verified(alg_file.algebra, AlgebraKind::Leibniz)};
                const auto theta = completed_coalgebra_from_graded_form(
                    b, GradedForm{form_file.form, form_file.form_offset});
                for (int q = 0; q < theta.fiber_dim; ++q)
                    std::cout << "theta(" << b.base.label(q) << " t^i) = "
                              << theta.of_basis(q).str(b.base.basis_labels) << "\n";
                return 0;
            }
            const FinAlgebra a = verified(alg_file.algebra, AlgebraKind::Zinbiel);
            const Coalgebra delta = zinbiel_coalgebra_from_quadratic(a, form_file.form);
            std::cout << "[PASS] quadratic Zinbiel coproduct on dimension " << delta.dim << "\n";
            if (!cff_out.empty()) {
                LoadedObject o;
                o.role = Role::Coalgebra;
                o.declared_kind = "zinbiel_co";
                o.dim = delta.dim;
                o.coalgebra = delta;
                save(cff_out, o);
                std::cout << "wrote " << cff_out << "\n";
            }
            return 0;
        }

        if (*cmd_ybe) {
            const auto r = load_role(ybe_r, {Role::RMatrix}).rmatrix;
            AlgebraKind kind;
            if (ybe_type == "lybe") kind = AlgebraKind::Leibniz;
            else if (ybe_type == "cybe") kind = AlgebraKind::Lie;
            else if (ybe_type == "zybe") kind = AlgebraKind::Zinbiel;
            else throw ParseError("--type must be lybe, cybe or zybe");
            const FinAlgebra alg = load_verified_algebra(ybe_alg, kind);
            const TensorElem3 defect = ybe_defect(alg, r, kind);
            CheckReport report;
            report.name = "ybe/" + ybe_type;
            for (int i = 0; i < defect.dim; ++i)
                for (int j = 0; j < defect.dim; ++j)
                    for (int k = 0; k < defect.dim; ++k)
                        if (!defect.coeffs.at(i, j, k).is_zero())
                            report.record("defect", {i, j, k}, {defect.coeffs.at(i, j, k)});
            return report_exit(report);
        }

        if (*cmd_lift) {
            const FinAlgebra a = load_verified_algebra(lift_a, AlgebraKind::Zinbiel);
            const auto form_file = load_role(lift_form, {Role::Form});
            const auto r = load_role(lift_r, {Role::RMatrix}).rmatrix;
            const auto b_file = load_role(lift_b, {Role::Algebra, Role::Affine});
            if (lift_mode == "r-tilde") {
                const FinAlgebra b = verified(b_file.algebra, AlgebraKind::Leibniz);
                const TensorElem2 rt = lift_lybe(a, form_file.form, b, r);
                std::cout << "[PASS] lifted r~ on dimension " << rt.dim << "\n";
                if (!lift_out.empty()) {
                    LoadedObject o;
                    o.role = Role::RMatrix;
                    o.dim = rt.dim;
                    o.rmatrix = rt;
                    save(lift_out, o);
                    std::cout << "wrote " << lift_out << "\n";
                }
                return 0;
            }
            if (lift_mode == "r-hat") {
                const AffineAlgebra b{verified(b_file.algebra, AlgebraKind::Leibniz)};
                const DegreeTensor r_hat =
                    lift_zybe(a, r, b, GradedForm{form_file.form, form_file.form_offset});
                std::cout << "r^ = " << r_hat.str() << "\n";
                if (!lift_out.empty()) {
                    json j;
                    j["schema_version"] = kSchemaVersion;
                    j["role"] = "degree_tensor";
                    j["data"] = degree_tensor_to_json(r_hat);
                    std::ofstream out(lift_out);
                    out << j.dump(2) << "\n";
                    std::cout << "wrote " << lift_out << "\n";
                }
                return 0;
            }
            throw ParseError("--mode must be r-tilde or r-hat");
        }

        if (*cmd_classify) {
            const auto kind = algebra_kind_from_string(cls_kind);
            if (!kind || (*kind != AlgebraKind::Leibniz && *kind != AlgebraKind::Lie &&
                          *kind != AlgebraKind::Zinbiel))
                throw ParseError("--as must be leibniz, lie or zinbiel");
            const FinAlgebra alg = load_verified_algebra(cls_alg, *kind);
            const auto r = load_role(cls_r, {Role::RMatrix}).rmatrix;
            const auto rec = classify_r(alg, r, *kind);
            auto yn = [](bool b) { return b ? "yes" : "no"; };
            std::cout << "solves " << cls_kind << " YBE:   " << yn(rec.solves_ybe) << "\n"
                      << "part invariant:       " << yn(rec.part_invariant) << "\n"
                      << "symmetric:            " << yn(rec.symmetric) << "\n"
                      << "skew:                 " << yn(rec.skew) << "\n"
                      << "quasi-triangular:     " << yn(rec.quasi_triangular()) << "\n"
                      << "triangular:           " << yn(rec.triangular(*kind)) << "\n"
                      << "factorizable:         "
                      << (rec.factorizable == FactorizableVerdict::Yes ? "yes"
                          : rec.factorizable == FactorizableVerdict::No
                              ? "no"
                              : "not defined for zinbiel")
                      << " (sharp pair rank " << rec.sharp_pair_rank << ")\n";
            return 0;
        }

        if (*cmd_manin) {
            const auto kind = algebra_kind_from_string(man_kind);
            if (!kind || (*kind != AlgebraKind::Lie && *kind != AlgebraKind::Leibniz))
                throw ParseError("--as must be lie or leibniz");
            const auto dbl = load_role(man_double, {Role::Algebra}).algebra;
            const auto form = load_role(man_form, {Role::Form}).form;
            const auto p1 = load_role(man_p1, {Role::Subspace}).vectors;
            const auto p2 = load_role(man_p2, {Role::Subspace}).vectors;
            return report_exit(verify_manin_triple(dbl, form, p1, p2, *kind));
        }

        if (*fro_check_z) {
            const auto alg = load_role(fro_alg, {Role::Algebra}).algebra;
            const auto form = load_role(fro_form, {Role::Form}).form;
            auto rep = check_quasi_frobenius_zinbiel(alg, form);
            if (!rep.symmetric) rep.details.record("form-symmetric", {}, {});
            if (!rep.nondegenerate) rep.details.record("form-nondegenerate", {}, {});
            return report_exit(rep.details);
        }
        if (*fro_check_l) {
            const auto alg = load_role(fro_alg, {Role::Algebra}).algebra;
            const auto form = load_role(fro_form, {Role::Form}).form;
            auto rep = check_quasi_frobenius_lie(alg, form);
            if (!rep.symmetric) rep.details.record("form-skew", {}, {});
            if (!rep.nondegenerate) rep.details.record("form-nondegenerate", {}, {});
            return report_exit(rep.details);
        }
        if (*fro_pre_check)
            return report_exit(check_pre_zinbiel(load_role(fro_pre, {Role::PreZinbiel}).pre_zinbiel));
        if (*fro_double) {
            auto [dbl, varpi] = pre_zinbiel_double(load_role(fro_pre, {Role::PreZinbiel}).pre_zinbiel);
            std::cout << "[PASS] quasi-Frobenius double on dimension " << dbl.dim << "\n";
            if (!fro_out.empty()) {
                LoadedObject o;
                o.role = Role::Algebra;
                o.declared_kind = "zinbiel";
                o.dim = dbl.dim;
                o.basis_labels = dbl.basis_labels;
                o.algebra = dbl;
                save(fro_out, o);
                std::cout << "wrote " << fro_out << "\n";
            }
            if (!fro_out_form.empty()) {
                LoadedObject o;
                o.role = Role::Form;
                o.dim = varpi.dim;
                o.form = varpi;
                save(fro_out_form, o);
                std::cout << "wrote " << fro_out_form << "\n";
            }
            return 0;
        }
        if (*fro_canonical) {
            const auto form = load_role(fro_form, {Role::Form}).form;
            const TensorElem2 rr = canonical_r_from_form(form);
            std::cout << "[PASS] canonical r on dimension " << rr.dim << "\n";
            if (!fro_out.empty()) {
                LoadedObject o;
                o.role = Role::RMatrix;
                o.dim = rr.dim;
                o.rmatrix = rr;
                save(fro_out, o);
                std::cout << "wrote " << fro_out << "\n";
            }
            return 0;
        }
        if (*fro_induce) {
            const auto a = load_role(fro_alg, {Role::Algebra}).algebra;
            const auto varpi = load_role(fro_form, {Role::Form}).form;
            const auto b_file = load_role(fro_b, {Role::Algebra, Role::Affine});
            const auto omega_file = load_role(fro_omega, {Role::Form});
            if (fro_affine || b_file.role == Role::Affine) {
                auto [g, form] = induced_qf_lie_graded(
                    a, varpi, AffineAlgebra{verified(b_file.algebra, AlgebraKind::Leibniz)},
                    GradedForm{omega_file.form, omega_file.form_offset});
                std::cout << "[PASS] graded quasi-Frobenius Lie algebra, fiber dimension "
                          << g.base.dim << "\n";
                return 0;
            }
            auto [g, form] = induced_qf_lie(a, varpi, b_file.algebra, omega_file.form);
            std::cout << "[PASS] quasi-Frobenius Lie algebra on dimension " << g.dim << "\n";
            return 0;
        }

        if (*cmd_report) {
            const Report report = run_corpus(corpus_dir);
            std::string text =
                rep_format == "text" ? render_text(report, rep_timings)
                : rep_format == "json"
                    ? render_json(report, rep_timings)
                    : throw ParseError("--format must be json or text");
            std::ofstream out(rep_out);
            if (!out) throw ParseError("cannot open \"" + rep_out + "\" for writing");
            out << text;
            std::cout << (report.passed() ? "[PASS] " : "[FAIL] ") << "corpus suite ("
                      << report.checks.size() << " checks), report written to " << rep_out << "\n";
            return report.passed() ? 0 : 1;
        }

        if (*cmd_verify) {
            const Report report = run_corpus(corpus_dir);
            std::cout << (corpus_json ? render_json(report, corpus_timings)
                                      : render_text(report, corpus_timings));
            return report.passed() ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
