#include "treach/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "treach/errors.hpp"

namespace treach {

namespace {

using Json = nlohmann::ordered_json;

Scalar entry_to_scalar(const Json& j, const std::string& where) {
    try {
        if (j.is_string()) return parse_scalar(j.get<std::string>());
        if (j.is_number()) return parse_scalar(j.dump());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": expected a number or a string entry");
}

Vec parse_vec(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    Vec out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(entry_to_scalar(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Mat parse_mat(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a non-empty 2-D array");
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < j.size(); ++i)
        rows.push_back(parse_vec(j[i], where + "[" + std::to_string(i) + "]"));
    for (const auto& r : rows)
        if (r.size() != rows[0].size())
            throw DimensionMismatch(where + ": ragged rows");
    Mat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows[i].size(); ++k) m.at(i, k) = rows[i][k];
    return m;
}

std::vector<Vec> parse_gen_list(const Json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of generators");
    std::vector<Vec> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        Vec v = parse_vec(j[i], where + "[" + std::to_string(i) + "]");
        if (v.size() != dim)
            throw DimensionMismatch(where + "[" + std::to_string(i) + "]: expected dimension " +
                                    std::to_string(dim));
        out.push_back(std::move(v));
    }
    return out;
}

Polyhedron parse_set(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("dim"))
        throw ParseError(where + ": expected an object with 'dim'");
    std::size_t dim = j.at("dim").get<std::size_t>();
    if (dim == 0) throw ParseError(where + ": dim must be positive");
    std::vector<Vec> span, conv;
    if (j.contains("span")) span = parse_gen_list(j.at("span"), dim, where + ".span");
    if (j.contains("conv")) conv = parse_gen_list(j.at("conv"), dim, where + ".conv");
    return make_polyhedron(dim, std::move(span), std::move(conv));
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& e : v) out.push_back(to_string(e));
    return out;
}

Json gens_to_json(const std::vector<Vec>& gens) {
    Json out = Json::array();
    for (const auto& g : gens) out.push_back(vec_to_json(g));
    return out;
}

Json mat_to_json(const Mat& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
    return out;
}

Json set_to_json(const Polyhedron& p) {
    Json out;
    out["dim"] = p.dim;
    out["span"] = gens_to_json(p.span_gens);
    out["conv"] = gens_to_json(p.conv_gens);
    return out;
}

} // namespace

Problem parse_problem_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    for (const char* key : {"A", "B", "C", "U", "W", "target"})
        if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");

    Problem p;
    p.model.A = parse_mat(j.at("A"), "A");
    p.model.B = parse_mat(j.at("B"), "B");
    p.model.C = parse_mat(j.at("C"), "C");
    p.model.U = parse_set(j.at("U"), "U");
    p.model.W = parse_set(j.at("W"), "W");
    if (!j.at("target").is_object() || !j.at("target").contains("lhs") ||
        !j.at("target").contains("rhs"))
        throw ParseError("target: expected an object with 'lhs' and 'rhs'");
    p.target.lhs = parse_mat(j.at("target").at("lhs"), "target.lhs");
    p.target.rhs = parse_mat(j.at("target").at("rhs"), "target.rhs");

    const std::size_t n = p.model.A.rows();
    if (p.model.A.cols() != n) throw DimensionMismatch("A: must be square");
    if (p.model.B.rows() != n) throw DimensionMismatch("B: must have as many rows as A");
    if (p.model.C.rows() != n) throw DimensionMismatch("C: must have as many rows as A");
    if (p.model.U.dim != p.model.B.cols())
        throw DimensionMismatch("U: dim must equal the number of columns of B");
    if (p.model.W.dim != p.model.C.cols())
        throw DimensionMismatch("W: dim must equal the number of columns of C");
    p.target.dim = n;
    if (p.target.lhs.rows() != p.target.rhs.rows() || p.target.lhs.cols() != p.target.rhs.cols())
        throw DimensionMismatch("target: lhs and rhs must have the same shape");
    if (p.target.lhs.cols() != n + 1)
        throw DimensionMismatch("target: constraint matrices must have n+1 columns");
    return p;
}

Problem parse_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

std::string serialize_result(const Result& r) {
    Json out;
    out["status"] = r.set.is_empty() ? "empty" : "nonempty";
    out["dim"] = r.set.dim;
    out["span_gens"] = gens_to_json(r.set.span_gens);
    out["conv_gens"] = gens_to_json(r.set.conv_gens);
    Json prov = Json::array();
    for (const auto& e : r.trace) {
        Json entry;
        entry["stage"] = e.stage;
        entry["generators"] = e.generators;
        prov.push_back(entry);
    }
    out["provenance"] = prov;
    return out.dump(2) + "\n";
}

std::string serialize_problem(const Problem& p) {
    Json out;
    out["A"] = mat_to_json(p.model.A);
    out["B"] = mat_to_json(p.model.B);
    out["C"] = mat_to_json(p.model.C);
    out["U"] = set_to_json(p.model.U);
    out["W"] = set_to_json(p.model.W);
    out["target"] = Json{{"lhs", mat_to_json(p.target.lhs)}, {"rhs", mat_to_json(p.target.rhs)}};
    return out.dump(2) + "\n";
}

std::string sample_csv(const Polyhedron& p, const Scalar& x1min, const Scalar& x1max,
                       const Scalar& x2min, const Scalar& x2max, std::size_t res) {
    if (p.dim != 2) throw PreconditionViolated("sample: set must be 2-dimensional");
    if (res < 1) throw PreconditionViolated("sample: resolution must be >= 1");
    if (x1min.is_bottom() || x1max.is_bottom() || x2min.is_bottom() || x2max.is_bottom())
        throw PreconditionViolated("sample: box bounds must be finite");
    auto axis = [&](const Scalar& lo, const Scalar& hi) {
        std::vector<Scalar> pts;
        if (res == 1) {
            pts.push_back(lo);
            return pts;
        }
        Rational step = (hi.value() - lo.value()) / Rational(res - 1);
        for (std::size_t i = 0; i < res; ++i)
            pts.push_back(Scalar{lo.value() + step * Rational(i)});
        return pts;
    };
    std::string out = "x1,x2,member\n";
    for (const auto& x1 : axis(x1min, x1max))
        for (const auto& x2 : axis(x2min, x2max)) {
            bool in = poly_contains(p, Vec{x1, x2});
            out += to_string(x1) + "," + to_string(x2) + "," + (in ? "1" : "0") + "\n";
        }
    return out;
}

} // namespace treach
