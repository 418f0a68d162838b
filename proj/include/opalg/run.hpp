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

#include "opalg/report.hpp"
#include "opalg/scenario_doc.hpp"

namespace opalg {

/// Executes one analysis. Library errors never escape: they come back as a
/// section whose result holds an "error" key.
ReportSection run_analysis(const ScenarioDoc& doc, const AnalysisRequest& req);

/// Executes the document's analyses in declared order.
Report run(const ScenarioDoc& doc);

} // namespace opalg
