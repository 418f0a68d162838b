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
#include <string>
#include <vector>

#include "json.hpp"

#include "opalg/matrix.hpp"

namespace opalg {

inline constexpr const char* kToolVersion = "0.1.0";

/// One analysis outcome: a structured result object (rationals rendered as
/// strings) and a one-line verdict. Failures appear as a result holding an
/// "error" key; they are data, not exceptions.
struct ReportSection {
    std::string analysis;
    nlohmann::ordered_json result;
    std::string verdict;
};

struct Report {
    std::string scenario_name;
    std::string tool_version = kToolVersion;
    std::uint64_t seed = 0;
    std::vector<ReportSection> sections;
};

/// JSON encoders for exact values.
nlohmann::ordered_json json_of(const Rational& r);
nlohmann::ordered_json json_of(const Vector& v);
nlohmann::ordered_json json_of(const Matrix& m);

nlohmann::ordered_json report_to_json(const Report& r);
std::string render_json(const Report& r);
/// Key/value text rendering of the same content; deterministic.
std::string render_text(const Report& r);

} // namespace opalg
