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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opalg/commutant.hpp"
#include "opalg/matrix.hpp"
#include "opalg/ncexpr.hpp"

namespace opalg {

/// One requested analysis. budget/seed apply to the searching kinds
/// ("identity", "projector-search") and are materialized to the defaults
/// when omitted.
struct AnalysisRequest {
    std::string kind;
    long budget = kDefaultSearchBudget;
    std::uint64_t seed = kDefaultSearchSeed;
    std::optional<std::string> matrix;     // commutant
    std::vector<std::string> of;           // projector-search
    std::optional<std::string> expr;       // expand
    std::optional<std::size_t> state;      // diagonal: index into admissible_set
};

/// The analysis kinds a document may request, in no particular order.
const std::vector<std::string>& analysis_kinds();

/// Parsed scenario file. Maps preserve document order. A generator entry
/// tags the same-named matrix for symbolic use; expression names must not
/// collide with matrix or generator names.
struct ScenarioDoc {
    std::string name = "scenario";
    std::size_t dim = 0;
    std::vector<std::pair<std::string, Matrix>> matrices;
    std::vector<std::pair<std::string, Generator>> generators;
    std::vector<std::pair<std::string, std::string>> expressions;
    std::optional<std::vector<Vector>> admissible_set;
    std::vector<AnalysisRequest> analysis;

    const Matrix* find_matrix(const std::string& name) const;
    const std::string* find_expression(const std::string& name) const;
    /// Identifier resolution for expression parsing: "U" and "D" untagged,
    /// declared generators with their tags, remaining matrix names
    /// untagged.
    std::map<std::string, Generator> generator_table() const;
};

/// Parses and validates a JSON scenario. Rationals are strings ("3/7") or
/// integers; matrices are arrays of row arrays. Throws ParseError on
/// malformed JSON or expression syntax, ValidationError on semantic
/// violations (unknown names, shape or dimension-budget breaches, unknown
/// analysis kinds or parameters).
ScenarioDoc parse_scenario(const std::string& text);

/// Canonical JSON rendering: stable key order, rationals as strings,
/// searching kinds with budget and seed materialized. parse_scenario on
/// the output yields a semantically equal document.
std::string serialize_scenario(const ScenarioDoc& doc);

/// Validates a single request against a document exactly as parse_scenario
/// validates the analysis list; used for CLI-synthesized requests.
void validate_request(const ScenarioDoc& doc, const AnalysisRequest& req);

} // namespace opalg
