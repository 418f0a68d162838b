/*
 * Copyright 2026 The opalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "opalg/scenario_doc.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

#include "opalg/errors.hpp"
#include "opalg/inclosure.hpp"

namespace opalg {

using json = nlohmann::ordered_json;

const std::vector<std::string>& analysis_kinds() {
    static const std::vector<std::string> kinds{
        "active",  "propagation", "identity",  "liar",             "witnesses",
        "diagonal", "inclosure",  "commutant", "projector-search", "expand"};
    return kinds;
}

const Matrix* ScenarioDoc::find_matrix(const std::string& name) const {
    for (const auto& [n, m] : matrices) {
        if (n == name) return &m;
    }
    return nullptr;
}

const std::string* ScenarioDoc::find_expression(const std::string& name) const {
    for (const auto& [n, e] : expressions) {
        if (n == name) return &e;
    }
    return nullptr;
}

std::map<std::string, Generator> ScenarioDoc::generator_table() const {
    std::map<std::string, Generator> table;
    table.emplace(kUpdateName, Generator{kUpdateName, false});
    table.emplace(kDiscriminationName, Generator{kDiscriminationName, false});
    for (const auto& [name, g] : generators) table.emplace(name, g);
    for (const auto& [name, m] : matrices) {
        (void)m;
        table.emplace(name, Generator{name, false});
    }
    return table;
}

namespace {

Rational rational_from_json(const json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ValidationError(where + ": " + e.what());
        }
    }
    if (v.is_number_integer()) {
        return Rational(static_cast<long>(v.get<long long>()));
    }
    throw ValidationError(where + ": rationals must be strings like \"3/7\" or integers");
}

Matrix matrix_from_json(const json& v, std::size_t dim, const std::string& where) {
    if (!v.is_array() || v.size() != dim) {
        throw ValidationError(where + ": expected " + std::to_string(dim) + " rows");
    }
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const json& row = v[i];
        if (!row.is_array() || row.size() != dim) {
            throw ValidationError(where + ": row " + std::to_string(i) + " must have " +
                                  std::to_string(dim) + " entries");
        }
        for (std::size_t j = 0; j < dim; ++j) {
            m.at(i, j) = rational_from_json(row[j], where + "[" + std::to_string(i) + "][" +
                                                        std::to_string(j) + "]");
        }
    }
    return m;
}

Vector vector_from_json(const json& v, std::size_t dim, const std::string& where) {
    if (!v.is_array() || v.size() != dim) {
        throw ValidationError(where + ": expected " + std::to_string(dim) + " entries");
    }
    Vector out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        out[i] = rational_from_json(v[i], where + "[" + std::to_string(i) + "]");
    }
    return out;
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.count(key)) {
            throw ValidationError(where + ": unknown key \"" + key + "\"");
        }
    }
}

bool resolves_to_operand(const ScenarioDoc& doc, const std::string& name) {
    return doc.find_matrix(name) != nullptr || doc.find_expression(name) != nullptr;
}

} // namespace

void validate_request(const ScenarioDoc& doc, const AnalysisRequest& req) {
    const auto& kinds = analysis_kinds();
    if (std::find(kinds.begin(), kinds.end(), req.kind) == kinds.end()) {
        throw ValidationError("unknown analysis kind \"" + req.kind + "\"");
    }
    if (req.budget < 1) {
        throw ValidationError("analysis \"" + req.kind + "\": budget must be at least 1");
    }
    if (req.kind == "commutant") {
        if (!req.matrix) {
            throw ValidationError("analysis \"commutant\" needs a \"matrix\" name");
        }
        if (!resolves_to_operand(doc, *req.matrix)) {
            throw ValidationError("analysis \"commutant\": \"" + *req.matrix +
                                  "\" names no matrix or expression");
        }
    } else if (req.matrix) {
        throw ValidationError("analysis \"" + req.kind + "\" takes no \"matrix\" parameter");
    }
    if (req.kind == "projector-search") {
        if (req.of.empty()) {
            throw ValidationError("analysis \"projector-search\" needs a non-empty \"of\" list");
        }
        for (const std::string& name : req.of) {
            if (!resolves_to_operand(doc, name)) {
                throw ValidationError("analysis \"projector-search\": \"" + name +
                                      "\" names no matrix or expression");
            }
        }
    } else if (!req.of.empty()) {
        throw ValidationError("analysis \"" + req.kind + "\" takes no \"of\" parameter");
    }
    if (req.kind == "expand") {
        if (!req.expr) {
            throw ValidationError("analysis \"expand\" needs an \"expr\" name");
        }
        if (!doc.find_expression(*req.expr)) {
            throw ValidationError("analysis \"expand\": \"" + *req.expr +
                                  "\" names no expression");
        }
    } else if (req.expr) {
        throw ValidationError("analysis \"" + req.kind + "\" takes no \"expr\" parameter");
    }
    if (req.kind == "diagonal") {
        if (!req.state) {
            throw ValidationError("analysis \"diagonal\" needs a \"state\" index");
        }
        if (!doc.admissible_set) {
            throw ValidationError("analysis \"diagonal\" needs an admissible_set to index");
        }
        if (*req.state >= doc.admissible_set->size()) {
            throw ValidationError("analysis \"diagonal\": state " + std::to_string(*req.state) +
                                  " is out of range (set has " +
                                  std::to_string(doc.admissible_set->size()) + " configs)");
        }
    } else if (req.state) {
        throw ValidationError("analysis \"" + req.kind + "\" takes no \"state\" parameter");
    }
}

ScenarioDoc parse_scenario(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!root.is_object()) throw ValidationError("scenario must be a JSON object");
    reject_unknown_keys(root,
                        {"name", "dim", "matrices", "generators", "expressions",
                         "admissible_set", "analysis"},
                        "scenario");

    ScenarioDoc doc;
    if (root.contains("name")) {
        if (!root["name"].is_string()) throw ValidationError("\"name\" must be a string");
        doc.name = root["name"].get<std::string>();
    }
    if (!root.contains("dim") || !root["dim"].is_number_integer()) {
        throw ValidationError("\"dim\" is required and must be an integer");
    }
    long long dim_raw = root["dim"].get<long long>();
    if (dim_raw < 1) throw ValidationError("\"dim\" must be at least 1");
    if (dim_raw > static_cast<long long>(kMaxAmbientDim)) {
        throw ValidationError("\"dim\" = " + std::to_string(dim_raw) + " exceeds the limit of " +
                              std::to_string(kMaxAmbientDim));
    }
    doc.dim = static_cast<std::size_t>(dim_raw);

    if (root.contains("matrices")) {
        if (!root["matrices"].is_object()) throw ValidationError("\"matrices\" must be an object");
        for (const auto& [name, v] : root["matrices"].items()) {
            doc.matrices.emplace_back(name, matrix_from_json(v, doc.dim, "matrix \"" + name + "\""));
        }
    }

    if (root.contains("generators")) {
        if (!root["generators"].is_object()) {
            throw ValidationError("\"generators\" must be an object");
        }
        for (const auto& [name, v] : root["generators"].items()) {
            if (name == kUpdateName || name == kDiscriminationName) {
                throw ValidationError("generator name \"" + name + "\" is reserved");
            }
            if (!v.is_object()) {
                throw ValidationError("generator \"" + name + "\" must be an object");
            }
            reject_unknown_keys(v, {"commutes_with_update"}, "generator \"" + name + "\"");
            if (!v.contains("commutes_with_update") || !v["commutes_with_update"].is_boolean()) {
                throw ValidationError("generator \"" + name +
                                      "\" needs a boolean \"commutes_with_update\"");
            }
            doc.generators.emplace_back(name,
                                        Generator{name, v["commutes_with_update"].get<bool>()});
        }
    }

    if (root.contains("expressions")) {
        if (!root["expressions"].is_object()) {
            throw ValidationError("\"expressions\" must be an object");
        }
        for (const auto& [name, v] : root["expressions"].items()) {
            if (!v.is_string()) {
                throw ValidationError("expression \"" + name + "\" must be a string");
            }
            for (const auto& [mname, m] : doc.matrices) {
                (void)m;
                if (mname == name) {
                    throw ValidationError("name \"" + name +
                                          "\" denotes both a matrix and an expression");
                }
            }
            for (const auto& [gname, g] : doc.generators) {
                (void)g;
                if (gname == name) {
                    throw ValidationError("name \"" + name +
                                          "\" denotes both a generator and an expression");
                }
            }
            doc.expressions.emplace_back(name, v.get<std::string>());
        }
    }

    // Syntax and name resolution of every expression, against the final
    // name table.
    {
        auto table = doc.generator_table();
        for (const auto& [name, text_expr] : doc.expressions) {
            try {
                parse_expr(text_expr, table);
            } catch (const ParseError& e) {
                throw ParseError("expression \"" + name + "\": " + e.what(), e.column);
            } catch (const ValidationError& e) {
                throw ValidationError("expression \"" + name + "\": " + e.what());
            }
        }
    }

    if (root.contains("admissible_set")) {
        if (!root["admissible_set"].is_array()) {
            throw ValidationError("\"admissible_set\" must be an array of vectors");
        }
        std::vector<Vector> configs;
        std::size_t i = 0;
        for (const json& v : root["admissible_set"]) {
            configs.push_back(
                vector_from_json(v, doc.dim, "admissible_set[" + std::to_string(i) + "]"));
            ++i;
        }
        doc.admissible_set = AdmissibleSet::make(std::move(configs)).configs;
    }

    if (root.contains("analysis")) {
        if (!root["analysis"].is_array()) {
            throw ValidationError("\"analysis\" must be an array");
        }
        for (const json& a : root["analysis"]) {
            if (!a.is_object() || !a.contains("kind") || !a["kind"].is_string()) {
                throw ValidationError("each analysis needs a string \"kind\"");
            }
            AnalysisRequest req;
            req.kind = a["kind"].get<std::string>();
            reject_unknown_keys(a, {"kind", "budget", "seed", "matrix", "of", "expr", "state"},
                                "analysis \"" + req.kind + "\"");
            if (a.contains("budget")) {
                if (!a["budget"].is_number_integer()) {
                    throw ValidationError("analysis \"" + req.kind +
                                          "\": budget must be an integer");
                }
                req.budget = static_cast<long>(a["budget"].get<long long>());
            }
            if (a.contains("seed")) {
                if (!a["seed"].is_number_unsigned() && !a["seed"].is_number_integer()) {
                    throw ValidationError("analysis \"" + req.kind +
                                          "\": seed must be an integer");
                }
                req.seed = a["seed"].get<std::uint64_t>();
            }
            if (a.contains("matrix")) {
                if (!a["matrix"].is_string()) {
                    throw ValidationError("analysis \"" + req.kind +
                                          "\": matrix must be a string");
                }
                req.matrix = a["matrix"].get<std::string>();
            }
            if (a.contains("of")) {
                if (!a["of"].is_array()) {
                    throw ValidationError("analysis \"" + req.kind +
                                          "\": of must be an array of names");
                }
                for (const json& n : a["of"]) {
                    if (!n.is_string()) {
                        throw ValidationError("analysis \"" + req.kind +
                                              "\": of must contain strings");
                    }
                    req.of.push_back(n.get<std::string>());
                }
            }
            if (a.contains("expr")) {
                if (!a["expr"].is_string()) {
                    throw ValidationError("analysis \"" + req.kind + "\": expr must be a string");
                }
                req.expr = a["expr"].get<std::string>();
            }
            if (a.contains("state")) {
                if (!a["state"].is_number_integer() || a["state"].get<long long>() < 0) {
                    throw ValidationError("analysis \"" + req.kind +
                                          "\": state must be a non-negative integer");
                }
                req.state = static_cast<std::size_t>(a["state"].get<long long>());
            }
            validate_request(doc, req);
            doc.analysis.push_back(std::move(req));
        }
    }
    return doc;
}

std::string serialize_scenario(const ScenarioDoc& doc) {
    json root = json::object();
    root["name"] = doc.name;
    root["dim"] = doc.dim;
    if (!doc.matrices.empty()) {
        json ms = json::object();
        for (const auto& [name, m] : doc.matrices) {
            json rows = json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
                rows.push_back(std::move(row));
            }
            ms[name] = std::move(rows);
        }
        root["matrices"] = std::move(ms);
    }
    if (!doc.generators.empty()) {
        json gs = json::object();
        for (const auto& [name, g] : doc.generators) {
            gs[name] = json{{"commutes_with_update", g.commutes_with_update}};
        }
        root["generators"] = std::move(gs);
    }
    if (!doc.expressions.empty()) {
        json es = json::object();
        for (const auto& [name, e] : doc.expressions) es[name] = e;
        root["expressions"] = std::move(es);
    }
    if (doc.admissible_set) {
        json vs = json::array();
        for (const Vector& v : *doc.admissible_set) {
            json entries = json::array();
            for (std::size_t i = 0; i < v.dim(); ++i) entries.push_back(v[i].str());
            vs.push_back(std::move(entries));
        }
        root["admissible_set"] = std::move(vs);
    }
    if (!doc.analysis.empty()) {
        json as = json::array();
        for (const AnalysisRequest& req : doc.analysis) {
            json a = json::object();
            a["kind"] = req.kind;
            if (req.kind == "identity" || req.kind == "projector-search") {
                a["budget"] = req.budget;
                a["seed"] = req.seed;
            }
            if (req.matrix) a["matrix"] = *req.matrix;
            if (!req.of.empty()) a["of"] = req.of;
            if (req.expr) a["expr"] = *req.expr;
            if (req.state) a["state"] = *req.state;
            as.push_back(std::move(a));
        }
        root["analysis"] = std::move(as);
    }
    return root.dump(2) + "\n";
}

} // namespace opalg
