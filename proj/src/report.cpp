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

#include "opalg/report.hpp"

#include <sstream>

namespace opalg {

using json = nlohmann::ordered_json;

json json_of(const Rational& r) {
    return r.str();
}

json json_of(const Vector& v) {
    json out = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(v[i].str());
    return out;
}

json json_of(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        out.push_back(std::move(row));
    }
    return out;
}

json report_to_json(const Report& r) {
    json out = json::object();
    out["scenario"] = r.scenario_name;
    out["tool_version"] = r.tool_version;
    out["seed"] = r.seed;
    json sections = json::array();
    for (const ReportSection& s : r.sections) {
        json sec = json::object();
        sec["analysis"] = s.analysis;
        sec["result"] = s.result;
        sec["verdict"] = s.verdict;
        sections.push_back(std::move(sec));
    }
    out["sections"] = std::move(sections);
    return out;
}

std::string render_json(const Report& r) {
    return report_to_json(r).dump(2) + "\n";
}

namespace {

// Strings render bare (they are mostly exact rationals); containers render
// compact on one line.
std::string inline_value(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

} // namespace

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "scenario: " << r.scenario_name << "\n";
    os << "tool_version: " << r.tool_version << "\n";
    os << "seed: " << r.seed << "\n";
    for (const ReportSection& s : r.sections) {
        os << "\n== " << s.analysis << " ==\n";
        for (const auto& [key, value] : s.result.items()) {
            os << key << ": " << inline_value(value) << "\n";
        }
        os << "verdict: " << s.verdict << "\n";
    }
    return os.str();
}

} // namespace opalg
