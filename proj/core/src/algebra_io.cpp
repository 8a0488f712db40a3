/*
   Copyright 2026 The omegapi Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "omegapi/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "omegapi/errors.hpp"

namespace omegapi {
namespace {

using nlohmann::json;

Rational entry_from_json(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw Error("matrix entries must be integers or \"a/b\" strings, got " + v.dump());
}

json entry_to_json(const Rational& r) {
    if (r.is_integer() && r.is_small()) return json(static_cast<std::int64_t>(r.to_double()));
    return json(r.to_string());
}

Matrix matrix_from_json(const json& rows, const std::string& what) {
    if (!rows.is_array()) throw Error(what + ": matrix must be an array of rows");
    std::vector<std::vector<Rational>> dense;
    for (const auto& row : rows) {
        if (!row.is_array()) throw Error(what + ": matrix rows must be arrays");
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(entry_from_json(v));
        if (!dense.empty() && r.size() != dense.front().size()) throw DimensionError(what + ": ragged matrix");
        dense.push_back(std::move(r));
    }
    return Matrix::from_dense(dense);
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (const auto& row : m.to_dense()) {
        json r = json::array();
        for (const auto& v : row) r.push_back(entry_to_json(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

const json& member(const json& obj, const char* key, const std::string& what) {
    if (!obj.is_object() || !obj.contains(key)) throw Error(what + ": missing \"" + key + "\"");
    return obj.at(key);
}

std::size_t natural(const json& v, const std::string& what) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw Error(what + " must be a non-negative integer");
    return v.get<std::size_t>();
}

FiniteOmegaAlgebra build_algebra(const json& doc) {
    std::size_t dim = natural(member(doc, "dim", "algebra"), "dim");

    FieldSpec field = FieldSpec::rationals();
    if (doc.contains("field")) {
        const json& f = doc.at("field");
        std::string type = member(f, "type", "field").get<std::string>();
        if (type == "GFp") {
            field = FieldSpec::gf(natural(member(f, "p", "field"), "p"));
        } else if (type != "Q") {
            throw Error("unknown field type \"" + type + "\"");
        }
    }

    Braiding braiding = Braiding::swap();
    if (doc.contains("braiding")) {
        const json& b = doc.at("braiding");
        if (b.is_string()) {
            if (b.get<std::string>() != "swap") throw Error("braiding must be \"swap\" or {\"matrix\": ...}");
        } else {
            braiding = Braiding::custom(matrix_from_json(member(b, "matrix", "braiding"), "braiding"));
        }
    }

    Signature sig;
    std::vector<Matrix> mats;
    if (doc.contains("generators")) {
        const json& gens = doc.at("generators");
        if (!gens.is_array()) throw Error("generators must be an array");
        for (const auto& g : gens) {
            std::string name = member(g, "name", "generator").get<std::string>();
            std::size_t arity = natural(member(g, "arity", name), name + ".arity");
            std::size_t coarity = natural(member(g, "coarity", name), name + ".coarity");
            sig.add({name, arity, coarity});
            mats.push_back(matrix_from_json(member(g, "matrix", name), name));
        }
    }
    return FiniteOmegaAlgebra(std::move(sig), dim, std::move(mats), std::move(braiding), field);
}

}  // namespace

FiniteOmegaAlgebra algebra_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
    try {
        return build_algebra(doc);
    } catch (const json::exception& e) {
        throw Error(std::string("algebra file does not fit the schema: ") + e.what());
    }
}

std::string algebra_to_json(const FiniteOmegaAlgebra& alg) {
    json doc;
    doc["dim"] = alg.dim();
    if (alg.field().kind == FieldSpec::Kind::Prime)
        doc["field"] = {{"type", "GFp"}, {"p", alg.field().prime}};
    else
        doc["field"] = {{"type", "Q"}};
    if (alg.braiding().kind == Braiding::Kind::Swap)
        doc["braiding"] = "swap";
    else
        doc["braiding"] = {{"matrix", matrix_to_json(alg.braiding().c)}};
    json gens = json::array();
    for (std::size_t i = 0; i < alg.signature().size(); ++i) {
        const auto& g = alg.signature().generators()[i];
        gens.push_back({{"name", g.name},
                        {"arity", g.arity},
                        {"coarity", g.coarity},
                        {"matrix", matrix_to_json(alg.structure()[i])}});
    }
    doc["generators"] = std::move(gens);
    return doc.dump(2);
}

FiniteOmegaAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open algebra file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return algebra_from_json(ss.str());
}

}  // namespace omegapi
