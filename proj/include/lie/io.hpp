#pragma once

#include "lie/constructions.hpp"
#include "lie/report.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

namespace lie {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::size_t line_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

inline const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
    return obj.at(key);
}

inline std::size_t as_index(const Json& v, const std::string& where) {
    if (!v.is_number_unsigned()) throw ParseError(where + ": expected a non-negative integer");
    return v.get<std::size_t>();
}

inline Scalar as_rational(const Json& v, const std::string& where) {
    if (!v.is_string()) throw ParseError(where + ": rationals must be strings of the form \"p/q\"");
    try {
        return parse_scalar(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

}  // namespace detail

inline Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(format_vector(m.row(r)));
    return rows;
}

inline Matrix matrix_from_json(const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n) throw ParseError(where + ": expected " + std::to_string(n) + " rows");
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::string rw = where + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != n) throw ParseError(rw + ": expected " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c) m(r, c) = detail::as_rational(j[r][c], rw + "[" + std::to_string(c) + "]");
    }
    return m;
}

/// AlgebraFile: {"dim", "labels", "brackets": [{"i", "j", "value": [[k, "p/q"], ...]}]}, i < j.
inline Json to_json(const LieAlgebra& g) {
    Json out;
    out["dim"] = g.dim();
    out["labels"] = g.labels();
    Json brackets = Json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            const auto& v = g.basis_bracket(i, j);
            if (v.empty()) continue;
            Json value = Json::array();
            for (const auto& [k, x] : v) value.push_back(Json::array({k, format_scalar(x)}));
            brackets.push_back(Json{{"i", i}, {"j", j}, {"value", std::move(value)}});
        }
    out["brackets"] = std::move(brackets);
    return out;
}

inline LieAlgebra algebra_from_json(const Json& doc, const std::string& where = "algebra") {
    const std::size_t n = detail::as_index(detail::field(doc, "dim", where), where + ".dim");
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        const Json& l = doc.at("labels");
        if (!l.is_array() || l.size() != n) throw ParseError(where + ".labels: expected " + std::to_string(n) + " strings");
        for (std::size_t i = 0; i < n; ++i) {
            if (!l[i].is_string()) throw ParseError(where + ".labels[" + std::to_string(i) + "]: expected a string");
            labels.push_back(l[i].get<std::string>());
        }
    } else {
        labels = StructureTable::default_labels(n);
    }
    StructureTable t(std::move(labels));
    const Json& brackets = detail::field(doc, "brackets", where);
    if (!brackets.is_array()) throw ParseError(where + ".brackets: expected an array");
    std::vector<bool> seen(n * n, false);
    for (std::size_t b = 0; b < brackets.size(); ++b) {
        const std::string bw = where + ".brackets[" + std::to_string(b) + "]";
        const std::size_t i = detail::as_index(detail::field(brackets[b], "i", bw), bw + ".i");
        const std::size_t j = detail::as_index(detail::field(brackets[b], "j", bw), bw + ".j");
        if (i >= n || j >= n) throw ParseError(bw + ": index out of range for dim " + std::to_string(n));
        if (i >= j) throw ParseError(bw + ": brackets must be listed with i < j");
        if (seen[i * n + j]) throw ParseError(bw + ": duplicate bracket");
        seen[i * n + j] = true;
        const Json& value = detail::field(brackets[b], "value", bw);
        if (!value.is_array()) throw ParseError(bw + ".value: expected an array of [index, \"p/q\"] pairs");
        std::vector<Scalar> dense(n);
        for (std::size_t e = 0; e < value.size(); ++e) {
            const std::string ew = bw + ".value[" + std::to_string(e) + "]";
            if (!value[e].is_array() || value[e].size() != 2) throw ParseError(ew + ": expected [index, \"p/q\"]");
            const std::size_t k = detail::as_index(value[e][0], ew + "[0]");
            if (k >= n) throw ParseError(ew + ": index out of range for dim " + std::to_string(n));
            dense[k] += detail::as_rational(value[e][1], ew + "[1]");
        }
        t.set(i, j, dense);
    }
    return LieAlgebra(std::move(t));
}

inline Json parse_json_text(std::string_view text, const std::string& where) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(where + ": line " + std::to_string(detail::line_of(text, e.byte)) + ": " + e.what());
    }
}

/// Parses an AlgebraFile document. Jacobi failures surface as JacobiFailure.
inline LieAlgebra parse_algebra(std::string_view text) {
    return algebra_from_json(parse_json_text(text, "algebra file"));
}

inline std::string serialize_algebra(const LieAlgebra& g) { return to_json(g).dump(2) + "\n"; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Source specifier: "catalog:<name>", "graded-power:<src>:<n>", "full-graph:<src>", or a file path.
inline CatalogEntry resolve_source(std::string_view spec, std::size_t dim_cap = kDefaultDimCap) {
    auto starts = [&](std::string_view p) { return spec.substr(0, p.size()) == p; };
    if (starts("catalog:")) return catalog_entry(spec.substr(8), dim_cap);
    if (starts("graded-power:")) {
        const auto rest = spec.substr(13);
        const auto colon = rest.rfind(':');
        if (colon == std::string_view::npos) throw UnknownName("graded-power source needs ':<n>'");
        const std::size_t n = detail::parse_count(rest.substr(colon + 1), spec);
        if (n == 0) throw UnknownName("graded-power needs n >= 1");
        const auto inner = resolve_source(rest.substr(0, colon), dim_cap);
        if (inner.algebra.dim() * n > dim_cap) throw CapExceeded("graded power exceeds the dimension cap");
        auto gp = graded_power(inner.algebra, n);
        return {gp.algebra, gp};
    }
    if (starts("full-graph:")) {
        const auto inner = resolve_source(spec.substr(11), dim_cap);
        const auto ds = derivations(inner.algebra);
        if (ds.dim() + inner.algebra.dim() > dim_cap) throw CapExceeded("full graph exceeds the dimension cap");
        return {full_graph(ds).whole, std::nullopt};
    }
    const std::string path(spec);
    return {algebra_from_json(parse_json_text(read_file(path), path), path), std::nullopt};
}

inline LieAlgebra algebra_from_value(const Json& v, const std::string& where, std::size_t dim_cap) {
    if (v.is_string()) return resolve_source(v.get<std::string>(), dim_cap).algebra;
    return algebra_from_json(v, where);
}

/// Homomorphism file: {"source": <algebra or source string>, "target": <...>, "images": [matrix, ...]}.
inline DerHomomorphism parse_homomorphism(std::string_view text, std::size_t dim_cap = kDefaultDimCap) {
    const Json doc = parse_json_text(text, "homomorphism file");
    LieAlgebra source = algebra_from_value(detail::field(doc, "source", "homomorphism"), "source", dim_cap);
    LieAlgebra target = algebra_from_value(detail::field(doc, "target", "homomorphism"), "target", dim_cap);
    const Json& images = detail::field(doc, "images", "homomorphism");
    if (!images.is_array() || images.size() != source.dim())
        throw ParseError("homomorphism.images: expected one matrix per source basis vector");
    std::vector<Matrix> mats;
    for (std::size_t a = 0; a < images.size(); ++a)
        mats.push_back(matrix_from_json(images[a], target.dim(), "homomorphism.images[" + std::to_string(a) + "]"));
    return DerHomomorphism(std::move(source), std::move(target), std::move(mats));
}

inline Json to_json(const DerHomomorphism& phi) {
    Json out;
    out["source"] = to_json(phi.source());
    out["target"] = to_json(phi.target());
    Json images = Json::array();
    for (const auto& m : phi.images()) images.push_back(to_json(m));
    out["images"] = std::move(images);
    return out;
}

/// Torus file: {"torus": [matrix, ...]} or a bare array of matrices.
inline std::vector<Matrix> parse_torus(std::string_view text, std::size_t n) {
    const Json doc = parse_json_text(text, "torus file");
    const Json& list = doc.is_object() ? detail::field(doc, "torus", "torus file") : doc;
    if (!list.is_array()) throw ParseError("torus file: expected an array of matrices");
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < list.size(); ++i)
        out.push_back(matrix_from_json(list[i], n, "torus[" + std::to_string(i) + "]"));
    return out;
}

inline Json to_json(const Report& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json j{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
        if (!c.witness.empty()) j["witness"] = c.witness;
        checks.push_back(std::move(j));
    }
    Json dims = Json::object();
    for (const auto& [k, v] : rep.dims) dims[k] = v;
    Json out{{"title", rep.title}, {"checks", std::move(checks)}, {"dimensions", std::move(dims)}};
    if (!rep.notes.empty()) out["notes"] = rep.notes;
    out["status"] = rep.all_pass() ? "pass" : "fail";
    return out;
}

}  // namespace lie
