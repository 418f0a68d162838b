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

#include "opalg/run.hpp"

#include <sstream>

#include "opalg/errors.hpp"
#include "opalg/inclosure.hpp"
#include "opalg/scenarios.hpp"
#include "opalg/triple.hpp"

namespace opalg {

using json = nlohmann::ordered_json;

namespace {

Assignment doc_assignment(const ScenarioDoc& doc) {
    Assignment a;
    for (const auto& [name, m] : doc.matrices) a.emplace(name, m);
    return a;
}

const Matrix& require_matrix(const ScenarioDoc& doc, const std::string& name) {
    const Matrix* m = doc.find_matrix(name);
    if (!m) throw ValidationError("scenario defines no matrix \"" + name + "\"");
    return *m;
}

/// A named operand is either a matrix literal or an expression evaluated
/// under the document's matrices.
Matrix resolve_operand(const ScenarioDoc& doc, const std::string& name) {
    if (const Matrix* m = doc.find_matrix(name)) return *m;
    if (const std::string* text = doc.find_expression(name)) {
        NcExpr e = parse_expr(*text, doc.generator_table());
        return evaluate(e, doc_assignment(doc), doc.dim);
    }
    throw ValidationError("\"" + name + "\" names no matrix or expression");
}

ActionTriple make_triple(const ScenarioDoc& doc) {
    const Matrix& u = require_matrix(doc, kUpdateName);
    const Matrix& d = require_matrix(doc, kDiscriminationName);
    if (const std::string* text = doc.find_expression("R")) {
        NcExpr r = parse_expr(*text, doc.generator_table());
        return ActionTriple(u, d, std::move(r), doc_assignment(doc));
    }
    if (const Matrix* r = doc.find_matrix("R")) {
        return ActionTriple(u, d, *r);
    }
    throw ValidationError("scenario defines no self-representation \"R\"");
}

const char* search_verdict_name(ProjectorSearchOutcome::Verdict v) {
    switch (v) {
        case ProjectorSearchOutcome::Verdict::Found: return "Found";
        case ProjectorSearchOutcome::Verdict::NotFoundWithinBudget: return "NotFoundWithinBudget";
        case ProjectorSearchOutcome::Verdict::ProvedTrivial: return "ProvedTrivial";
    }
    throw Error("internal: unknown search verdict");
}

json json_of_outcome(const ProjectorSearchOutcome& o) {
    json out = json::object();
    out["verdict"] = search_verdict_name(o.verdict);
    out["attempts"] = o.attempts;
    out["budget"] = o.budget;
    if (o.projector) out["projector"] = json_of(*o.projector);
    return out;
}

ReportSection run_active(const ScenarioDoc& doc) {
    const Matrix& u = require_matrix(doc, kUpdateName);
    const Matrix& d = require_matrix(doc, kDiscriminationName);
    ActionTriple probe(u, d, d);
    ActivityResult r = is_active_classA(probe);
    json result = json::object();
    result["bracket"] = json_of(r.bracket);
    result["active"] = r.active;
    return {"active", std::move(result), r.active ? "active" : "inactive"};
}

ReportSection run_propagation(const ScenarioDoc& doc) {
    ActionTriple t = make_triple(doc);
    PropagationReport r = propagation_report(t);
    json result = json::object();
    result["direct"] = json_of(r.direct);
    result["vanishes"] = r.vanishes;
    std::string verdict;
    if (r.classification) {
        result["expansion"] = to_string(*r.expansion);
        result["expansion_terms"] = r.expansion->terms.size();
        result["expansion_value"] = json_of(*r.expansion_value);
        result["expansion_matches_direct"] = *r.expansion_matches_direct;
        switch (*r.classification) {
            case VanishingClass::NoDOccurrence: verdict = "NoDOccurrence"; break;
            case VanishingClass::EmpiricalCancellation: verdict = "EmpiricalCancellation"; break;
            case VanishingClass::NonVanishing: verdict = "NonVanishing"; break;
        }
        result["classification"] = verdict;
    } else {
        verdict = r.vanishes ? "vanishes" : "does not vanish";
    }
    return {"propagation", std::move(result), std::move(verdict)};
}

ReportSection run_identity(const ScenarioDoc& doc, const AnalysisRequest& req) {
    ActionTriple t = make_triple(doc);
    IdentityVerdict v = classify_identity(t, req.budget, req.seed);
    json result = json::object();
    result["budget"] = req.budget;
    result["seed"] = req.seed;
    json per = json::array();
    for (const auto& [subset, outcome] : v.per_subset) {
        json row = json_of_outcome(outcome);
        json keyed = json::object();
        keyed["subset"] = subset_name(subset);
        for (auto& [k, val] : row.items()) keyed[k] = val;
        per.push_back(std::move(keyed));
    }
    result["per_subset"] = std::move(per);
    std::string verdict;
    switch (v.kind) {
        case IdentityVerdict::Kind::Unconditional:
            result["unifying"] = json_of(*v.unifying);
            verdict = "Unconditional";
            break;
        case IdentityVerdict::Kind::Supplemental: {
            json frames = json::array();
            std::ostringstream os;
            os << "Supplemental(";
            for (std::size_t i = 0; i < v.frames.size(); ++i) {
                frames.push_back(subset_name(v.frames[i]));
                if (i) os << ", ";
                os << subset_name(v.frames[i]);
            }
            os << ")";
            result["frames"] = std::move(frames);
            verdict = os.str();
            break;
        }
        case IdentityVerdict::Kind::Inconclusive: verdict = "Inconclusive"; break;
    }
    return {"identity", std::move(result), std::move(verdict)};
}

ReportSection run_liar(const ScenarioDoc& doc) {
    const Matrix& t = require_matrix(doc, "T");
    const Matrix& proj = require_matrix(doc, "PiL");
    const Matrix* f = doc.find_matrix("F");
    Matrix falsity = f ? *f : Matrix::zero(doc.dim, doc.dim);
    LiarScenario s = LiarScenario::from_projector(t, std::move(falsity), proj);
    LiarVerdict v = liar_collapse_check(s);
    json result = json::object();
    result["liar_vec"] = json_of(s.liar_vec);
    result["collapsed"] = v.collapsed;
    std::string verdict;
    if (v.collapsed) {
        result["lambda"] = v.lambda->str();
        result["demonstrative"] = v.demonstrative;
        verdict = "Collapse(lambda=" + v.lambda->str() + ")";
    } else {
        result["commutator"] = json_of(*v.commutator_value);
        verdict = "NoCollapse";
    }
    return {"liar", std::move(result), std::move(verdict)};
}

ReportSection run_witnesses(const ScenarioDoc& doc) {
    const Matrix& u = require_matrix(doc, kUpdateName);
    const Matrix& d = require_matrix(doc, kDiscriminationName);
    WitnessReport r = find_witnesses(u, d);
    json result = json::object();
    if (r.grafting) result["grafting"] = json_of(*r.grafting);
    if (r.supplementary) result["supplementary"] = json_of(*r.supplementary);
    result["ker_d_dim"] = r.ker_d_dim;
    result["ker_du_dim"] = r.ker_du_dim;
    result["ker_u_dim"] = r.ker_u_dim;
    result["rank_u"] = r.rank_u;
    std::string verdict = std::string(r.grafting ? "grafting witness" : "no grafting witness") +
                          ", " +
                          (r.supplementary ? "supplementary witness" : "no supplementary witness");
    return {"witnesses", std::move(result), std::move(verdict)};
}

ReportSection run_diagonal(const ScenarioDoc& doc, const AnalysisRequest& req) {
    ActionTriple t = make_triple(doc);
    if (!req.state) throw ValidationError("analysis \"diagonal\" needs a \"state\" index");
    if (!doc.admissible_set || *req.state >= doc.admissible_set->size()) {
        throw ValidationError("diagonal state index is out of range");
    }
    const Vector& s = (*doc.admissible_set)[*req.state];
    DiagonalDefect d = diagonal_defect(t, s);
    json result = json::object();
    result["state"] = *req.state;
    result["s"] = json_of(s);
    result["rho0"] = json_of(d.rho0);
    result["rho1"] = json_of(d.rho1);
    result["defect"] = json_of(d.defect);
    result["in_kernel"] = d.in_kernel;
    return {"diagonal", std::move(result),
            d.in_kernel ? "defect vanishes (state in ker [U,R])" : "nonzero defect"};
}

ReportSection run_inclosure(const ScenarioDoc& doc) {
    ActionTriple t = make_triple(doc);
    if (!doc.admissible_set) {
        throw ValidationError("analysis \"inclosure\" needs an admissible_set");
    }
    AdmissibleSet v_s = AdmissibleSet::make(*doc.admissible_set);
    InclosureReport r = inclosure_check(t, v_s);
    json result = json::object();
    json omega = json::array();
    for (const Vector& o : r.omega) omega.push_back(json_of(o));
    result["omega"] = std::move(omega);
    json rows = json::array();
    for (const InclosureRow& row : r.rows) {
        json jr = json::object();
        jr["omega_index"] = row.omega_index;
        jr["rho"] = json_of(row.rho);
        jr["representative"] = json_of(row.representative);
        jr["sigma"] = json_of(row.sigma);
        jr["closure"] = row.closure_ok;
        jr["transcendence"] = row.transcendence;
        jr["predicted_transcendence"] = row.predicted_transcendence;
        jr["prediction_match"] = row.prediction_match;
        rows.push_back(std::move(jr));
    }
    result["rows"] = std::move(rows);
    result["closure_all"] = r.closure_all;
    result["prediction_all_match"] = r.prediction_all_match;
    std::string verdict = std::string("closure ") + (r.closure_all ? "holds" : "fails") +
                          ", kernel prediction " +
                          (r.prediction_all_match ? "matches" : "mismatches");
    return {"inclosure", std::move(result), std::move(verdict)};
}

ReportSection run_commutant(const ScenarioDoc& doc, const AnalysisRequest& req) {
    if (!req.matrix) throw ValidationError("analysis \"commutant\" needs a \"matrix\" name");
    Matrix x = resolve_operand(doc, *req.matrix);
    SubalgebraBasis b = commutant_basis(x);
    json result = json::object();
    result["of"] = *req.matrix;
    result["dim"] = b.dim();
    json basis = json::array();
    for (const Matrix& e : b.elements()) basis.push_back(json_of(e));
    result["basis"] = std::move(basis);
    return {"commutant", std::move(result), "dimension " + std::to_string(b.dim())};
}

ReportSection run_projector_search(const ScenarioDoc& doc, const AnalysisRequest& req) {
    if (req.of.empty()) {
        throw ValidationError("analysis \"projector-search\" needs a non-empty \"of\" list");
    }
    std::vector<SubalgebraBasis> commutants;
    for (const std::string& name : req.of) {
        commutants.push_back(commutant_basis(resolve_operand(doc, name)));
    }
    SubalgebraBasis joint = intersect(commutants);
    ProjectorSearchOutcome outcome = find_unifying_projector(joint, req.budget, req.seed);
    json result = json::object();
    result["of"] = req.of;
    result["intersection_dim"] = joint.dim();
    result["seed"] = req.seed;
    json o = json_of_outcome(outcome);
    for (auto& [k, v] : o.items()) result[k] = v;
    return {"projector-search", std::move(result), search_verdict_name(outcome.verdict)};
}

ReportSection run_expand(const ScenarioDoc& doc, const AnalysisRequest& req) {
    if (!req.expr) throw ValidationError("analysis \"expand\" needs an \"expr\" name");
    const std::string* text = doc.find_expression(*req.expr);
    if (!text) {
        throw ValidationError("\"" + *req.expr + "\" names no expression");
    }
    NcExpr e = parse_expr(*text, doc.generator_table());
    NormalForm nf = normal_form(e);
    ExpansionForm form = leibniz_expand(e, Generator{kDiscriminationName, false});
    json result = json::object();
    result["expr"] = *req.expr;
    result["input"] = *text;
    result["normal_form"] = to_string(normalized_expr(nf));
    result["expansion"] = to_string(form);
    result["terms"] = form.terms.size();
    try {
        Matrix value = evaluate_expansion(form, doc_assignment(doc), doc.dim);
        result["value"] = json_of(value);
    } catch (const MissingAssignment&) {
        // Symbolic document; the expansion stands on its own.
    }
    return {"expand", std::move(result),
            std::to_string(form.terms.size()) + (form.terms.size() == 1 ? " term" : " terms")};
}

} // namespace

ReportSection run_analysis(const ScenarioDoc& doc, const AnalysisRequest& req) {
    try {
        if (req.kind == "active") return run_active(doc);
        if (req.kind == "propagation") return run_propagation(doc);
        if (req.kind == "identity") return run_identity(doc, req);
        if (req.kind == "liar") return run_liar(doc);
        if (req.kind == "witnesses") return run_witnesses(doc);
        if (req.kind == "diagonal") return run_diagonal(doc, req);
        if (req.kind == "inclosure") return run_inclosure(doc);
        if (req.kind == "commutant") return run_commutant(doc, req);
        if (req.kind == "projector-search") return run_projector_search(doc, req);
        if (req.kind == "expand") return run_expand(doc, req);
        throw ValidationError("unknown analysis kind \"" + req.kind + "\"");
    } catch (const Error& e) {
        json result = json::object();
        result["error"] = e.what();
        return {req.kind, std::move(result), std::string("error: ") + e.what()};
    }
}

Report run(const ScenarioDoc& doc) {
    Report report;
    report.scenario_name = doc.name;
    report.seed = kDefaultSearchSeed;
    for (const AnalysisRequest& req : doc.analysis) {
        report.sections.push_back(run_analysis(doc, req));
    }
    return report;
}

} // namespace opalg
