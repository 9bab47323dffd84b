/*
 * io.hpp
 * ------
 * The JSON structure-constant file format. One file carries one object
 * (algebra, coalgebra, bialgebra, form, r-matrix, pre-Zinbiel pair, affine
 * algebra, or a subspace basis) as exact rational grids; rationals are
 * integers or "p/q" strings, never floats. Kind tags arrive Unchecked and
 * are verified on demand.
 */
#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "loday/algebra.hpp"
#include "loday/coalgebra.hpp"
#include "loday/frobenius.hpp"
#include "loday/graded.hpp"
#include "loday/tensor_product.hpp"
#include "loday/yang_baxter.hpp"

namespace loday {

using nlohmann::json;

constexpr const char* kSchemaVersion = "1";

enum class Role { Algebra, Coalgebra, Bialgebra, Form, RMatrix, PreZinbiel, Affine, Subspace };

inline std::string to_string(Role r) {
    switch (r) {
        case Role::Algebra: return "algebra";
        case Role::Coalgebra: return "coalgebra";
        case Role::Bialgebra: return "bialgebra";
        case Role::Form: return "form";
        case Role::RMatrix: return "rmatrix";
        case Role::PreZinbiel: return "pre_zinbiel";
        case Role::Affine: return "affine";
        case Role::Subspace: return "subspace";
    }
    return "algebra";
}

inline Role role_from_string(const std::string& s) {
    if (s == "algebra") return Role::Algebra;
    if (s == "coalgebra") return Role::Coalgebra;
    if (s == "bialgebra") return Role::Bialgebra;
    if (s == "form") return Role::Form;
    if (s == "rmatrix") return Role::RMatrix;
    if (s == "pre_zinbiel") return Role::PreZinbiel;
    if (s == "affine") return Role::Affine;
    if (s == "subspace") return Role::Subspace;
    throw ParseError("unknown role \"" + s + "\"");
}

inline std::optional<AlgebraKind> algebra_kind_from_string(const std::string& s) {
    if (s == "zinbiel") return AlgebraKind::Zinbiel;
    if (s == "leibniz") return AlgebraKind::Leibniz;
    if (s == "lie") return AlgebraKind::Lie;
    if (s == "associative") return AlgebraKind::Associative;
    if (s == "unchecked") return AlgebraKind::Unchecked;
    return std::nullopt;
}

inline std::optional<CoKind> cokind_from_string(const std::string& s) {
    if (s == "zinbiel_co") return CoKind::ZinbielCo;
    if (s == "leibniz_co") return CoKind::LeibnizCo;
    if (s == "lie_co") return CoKind::LieCo;
    if (s == "unchecked") return CoKind::Unchecked;
    return std::nullopt;
}

inline std::optional<BialgebraKind> bikind_from_string(const std::string& s) {
    if (s == "leibniz_bi") return BialgebraKind::LeibnizBi;
    if (s == "lie_bi") return BialgebraKind::LieBi;
    if (s == "zinbiel_bi") return BialgebraKind::ZinbielBi;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// JSON encoding of the exact grids
// ---------------------------------------------------------------------------

inline json rational_to_json(const Scalar& x) {
    const Int num = numerator(x), den = denominator(x);
    if (den == 1 && num >= std::numeric_limits<long long>::min() &&
        num <= std::numeric_limits<long long>::max())
        return static_cast<long long>(num);
    return rational_to_string(x);
}

inline Scalar rational_from_json(const json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_float())
        throw ParseError("floating-point value rejected; rationals must be exact");
    throw ParseError("expected an integer or a \"p/q\" string");
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const json& j, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw ParseError("grid has wrong row count");
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[static_cast<size_t>(i)].is_array() ||
            static_cast<int>(j[static_cast<size_t>(i)].size()) != cols)
            throw ParseError("grid has wrong column count");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = rational_from_json(j[static_cast<size_t>(i)][static_cast<size_t>(c)]);
    }
    return m;
}

inline json tensor3_to_json(const Tensor3& t) {
    json out = json::array();
    for (int i = 0; i < t.dim(0); ++i) {
        json plane = json::array();
        for (int j = 0; j < t.dim(1); ++j) {
            json row = json::array();
            for (int k = 0; k < t.dim(2); ++k) row.push_back(rational_to_json(t.at(i, j, k)));
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

inline Tensor3 tensor3_from_json(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw ParseError("rank-3 grid has wrong outer dimension");
    Tensor3 t = Tensor3::cube(dim);
    for (int i = 0; i < dim; ++i) {
        const json& plane = j[static_cast<size_t>(i)];
        if (!plane.is_array() || static_cast<int>(plane.size()) != dim)
            throw ParseError("rank-3 grid has wrong middle dimension");
        for (int jj = 0; jj < dim; ++jj) {
            const json& row = plane[static_cast<size_t>(jj)];
            if (!row.is_array() || static_cast<int>(row.size()) != dim)
                throw ParseError("rank-3 grid has wrong inner dimension");
            for (int k = 0; k < dim; ++k)
                t.at(i, jj, k) = rational_from_json(row[static_cast<size_t>(k)]);
        }
    }
    return t;
}

inline json affine_expr_to_json(const AffineExpr& e) {
    json syms = json::array();
    for (const auto& [id, c] : e.syms) syms.push_back(json::array({id, c}));
    return json{{"const", e.c0}, {"syms", std::move(syms)}};
}

inline json degree_tensor_to_json(const DegreeTensor& t) {
    const DegreeTensor c = t.canonical();
    json terms = json::array();
    for (const auto& term : c.terms()) {
        json offsets = json::array();
        for (const auto& off : term.offsets) offsets.push_back(affine_expr_to_json(off));
        json pmat = json::array();
        for (const auto& row : term.pmat) {
            json jrow = json::array();
            for (long long v : row) jrow.push_back(v);
            pmat.push_back(std::move(jrow));
        }
        terms.push_back(json{{"coeff", rational_to_json(term.coeff)},
                             {"bases", term.bases},
                             {"offsets", std::move(offsets)},
                             {"params", std::move(pmat)}});
    }
    return json{{"arity", c.arity()}, {"fiber_dim", c.fiber_dim()}, {"terms", std::move(terms)}};
}

// ---------------------------------------------------------------------------
// Typed file objects
// ---------------------------------------------------------------------------

/// A loaded structure-constant file. Exactly the members implied by `role`
/// are populated; kind tags on algebras/coalgebras stay Unchecked until a
/// checker verifies them.
struct LoadedObject {
    Role role = Role::Algebra;
    std::string declared_kind = "unchecked";
    int dim = 0;
    std::vector<std::string> basis_labels;
    std::map<std::string, std::string> metadata;

    FinAlgebra algebra;        // Algebra, Affine (base)
    Coalgebra coalgebra;       // Coalgebra, Bialgebra
    BilinForm form;            // Form
    bool graded_form = false;  // Form with a grading flag
    long long form_offset = 0;
    TensorElem2 rmatrix;       // RMatrix
    PreZinbiel pre_zinbiel;    // PreZinbiel
    std::vector<Vec> vectors;  // Subspace
};

inline json save_to_json(const LoadedObject& obj) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["role"] = to_string(obj.role);
    j["kind"] = obj.declared_kind;
    j["dim"] = obj.dim;
    if (!obj.basis_labels.empty()) j["basis_labels"] = obj.basis_labels;
    if (!obj.metadata.empty()) {
        json meta;
        for (const auto& [k, v] : obj.metadata) meta[k] = v;
        j["metadata"] = std::move(meta);
    }
    json data;
    switch (obj.role) {
        case Role::Algebra:
            data["product"] = tensor3_to_json(obj.algebra.product);
            break;
        case Role::Affine:
            data["base"] = json{{"product", tensor3_to_json(obj.algebra.product)}};
            data["graded"] = true;
            break;
        case Role::Coalgebra:
            data["coproduct"] = tensor3_to_json(obj.coalgebra.coproduct);
            break;
        case Role::Bialgebra:
            data["product"] = tensor3_to_json(obj.algebra.product);
            data["coproduct"] = tensor3_to_json(obj.coalgebra.coproduct);
            break;
        case Role::Form:
            data["gram"] = matrix_to_json(obj.form.gram);
            if (obj.graded_form) {
                data["graded"] = true;
                data["offset"] = obj.form_offset;
            }
            break;
        case Role::RMatrix:
            data["coeffs"] = matrix_to_json(obj.rmatrix.coeffs);
            break;
        case Role::PreZinbiel:
            data["left"] = tensor3_to_json(obj.pre_zinbiel.left);
            data["right"] = tensor3_to_json(obj.pre_zinbiel.right);
            break;
        case Role::Subspace: {
            json vecs = json::array();
            for (const auto& v : obj.vectors) {
                json row = json::array();
                for (const auto& x : v) row.push_back(rational_to_json(x));
                vecs.push_back(std::move(row));
            }
            data["vectors"] = std::move(vecs);
            break;
        }
    }
    j["data"] = std::move(data);
    return j;
}

inline std::string save_to_string(const LoadedObject& obj) {
    return save_to_json(obj).dump(2) + "\n";
}

inline void save(const std::string& path, const LoadedObject& obj) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open \"" + path + "\" for writing");
    out << save_to_string(obj);
}

inline LoadedObject load_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("top level must be an object");
    if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
        throw ParseError("unsupported schema_version (expected \"" +
                         std::string(kSchemaVersion) + "\")");
    LoadedObject obj;
    obj.role = role_from_string(j.value("role", std::string("algebra")));
    obj.declared_kind = j.value("kind", std::string("unchecked"));
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("missing integer \"dim\"");
    obj.dim = j["dim"].get<int>();
    if (obj.dim < 0) throw ParseError("negative dimension");
    if (j.contains("basis_labels"))
        obj.basis_labels = j["basis_labels"].get<std::vector<std::string>>();
    if (j.contains("metadata"))
        for (const auto& [k, v] : j["metadata"].items())
            obj.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
    if (!j.contains("data") || !j["data"].is_object()) throw ParseError("missing \"data\" object");
    const json& data = j["data"];
    auto need = [&](const char* field) -> const json& {
        if (!data.contains(field))
            throw ParseError(std::string("missing data field \"") + field + "\"");
        return data[field];
    };
    switch (obj.role) {
        case Role::Algebra:
            obj.algebra.dim = obj.dim;
            obj.algebra.product = tensor3_from_json(need("product"), obj.dim);
            obj.algebra.basis_labels = obj.basis_labels;
            break;
        case Role::Affine: {
            const json& base = need("base");
            if (!base.is_object() || !base.contains("product"))
                throw ParseError("affine role requires data.base.product");
            obj.algebra.dim = obj.dim;
            obj.algebra.product = tensor3_from_json(base["product"], obj.dim);
            obj.algebra.basis_labels = obj.basis_labels;
            break;
        }
        case Role::Coalgebra:
            obj.coalgebra.dim = obj.dim;
            obj.coalgebra.coproduct = tensor3_from_json(need("coproduct"), obj.dim);
            break;
        case Role::Bialgebra:
            obj.algebra.dim = obj.dim;
            obj.algebra.product = tensor3_from_json(need("product"), obj.dim);
            obj.algebra.basis_labels = obj.basis_labels;
            obj.coalgebra.dim = obj.dim;
            obj.coalgebra.coproduct = tensor3_from_json(need("coproduct"), obj.dim);
            break;
        case Role::Form:
            obj.form.dim = obj.dim;
            obj.form.gram = matrix_from_json(need("gram"), obj.dim, obj.dim);
            obj.graded_form = data.value("graded", false);
            obj.form_offset = data.value("offset", 0LL);
            break;
        case Role::RMatrix:
            obj.rmatrix.dim = obj.dim;
            obj.rmatrix.coeffs = matrix_from_json(need("coeffs"), obj.dim, obj.dim);
            break;
        case Role::PreZinbiel:
            obj.pre_zinbiel.dim = obj.dim;
            obj.pre_zinbiel.left = tensor3_from_json(need("left"), obj.dim);
            obj.pre_zinbiel.right = tensor3_from_json(need("right"), obj.dim);
            break;
        case Role::Subspace: {
            const json& vecs = need("vectors");
            if (!vecs.is_array()) throw ParseError("subspace vectors must be an array");
            for (const auto& row : vecs) {
                if (!row.is_array() || static_cast<int>(row.size()) != obj.dim)
                    throw ParseError("subspace vector length mismatch");
                Vec v;
                for (const auto& x : row) v.push_back(rational_from_json(x));
                obj.vectors.push_back(std::move(v));
            }
            break;
        }
    }
    return obj;
}

inline LoadedObject load_from_string(const std::string& text, const std::string& where = "<string>") {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(where + ": " + e.what());
    }
    try {
        return load_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

inline LoadedObject load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_from_string(buf.str(), path);
}

}  // namespace loday
