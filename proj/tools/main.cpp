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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "opalg/errors.hpp"
#include "opalg/report.hpp"
#include "opalg/run.hpp"
#include "opalg/scenario_doc.hpp"
#include "opalg/scenarios.hpp"

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open \"" + path + "\"");
    buf << in.rdbuf();
    return buf.str();
}

void emit(const opalg::Report& report, const std::string& format) {
    if (format == "json") {
        std::cout << opalg::render_json(report);
    } else {
        std::cout << opalg::render_text(report);
    }
}

/// One CLI-synthesized analysis against a loaded scenario. Parameter
/// problems exit through ValidationError; analysis failures become report
/// sections.
opalg::Report single(const opalg::ScenarioDoc& doc, const opalg::AnalysisRequest& req) {
    opalg::validate_request(doc, req);
    opalg::Report report;
    report.scenario_name = doc.name;
    report.seed = req.seed;
    report.sections.push_back(opalg::run_analysis(doc, req));
    return report;
}

void check_gen_dim(std::size_t dim) {
    if (dim > opalg::kMaxAmbientDim) {
        throw opalg::ValidationError("dimension " + std::to_string(dim) + " exceeds the limit of " +
                                     std::to_string(opalg::kMaxAmbientDim));
    }
}

opalg::ScenarioDoc liar_doc(std::size_t dim) {
    check_gen_dim(dim);
    opalg::SupplementedLiar built = opalg::build_supplemented_liar(dim);
    opalg::ScenarioDoc doc;
    doc.name = "supplemented-liar-" + std::to_string(dim);
    doc.dim = dim;
    doc.matrices.emplace_back("T", built.scenario.token_op);
    doc.matrices.emplace_back("F", built.scenario.falsity_op);
    doc.matrices.emplace_back("PiL", built.scenario.liar_proj);
    doc.matrices.emplace_back("Sigma", built.supplement);
    opalg::AnalysisRequest liar;
    liar.kind = "liar";
    doc.analysis.push_back(std::move(liar));
    return doc;
}

opalg::ScenarioDoc classA_doc(std::size_t dim, bool active) {
    check_gen_dim(dim);
    if (dim < 2 || dim % 2 != 0) {
        throw opalg::ValidationError("the discrimination toy needs an even dimension >= 2");
    }
    opalg::ClassAToyBuild built = opalg::build_classA_toy(dim / 2, active);
    opalg::ScenarioDoc doc;
    doc.name = std::string("discrimination-toy-") + (active ? "active" : "inactive") + "-" +
               std::to_string(dim);
    doc.dim = dim;
    doc.matrices.emplace_back("U", built.triple.update());
    doc.matrices.emplace_back("D", built.triple.discrimination());
    doc.expressions.emplace_back("R", "D");

    auto request = [](const std::string& kind) {
        opalg::AnalysisRequest req;
        req.kind = kind;
        return req;
    };
    doc.analysis.push_back(request("active"));
    doc.analysis.push_back(request("propagation"));
    doc.analysis.push_back(request("identity"));
    doc.analysis.push_back(request("witnesses"));
    if (active) {
        // The active update permutes unit configurations, so they form a
        // closed admissible set; the rescaling update does not.
        std::vector<opalg::Vector> configs;
        for (std::size_t i = 0; i < dim; ++i) configs.push_back(opalg::Vector::unit(dim, i));
        doc.admissible_set = std::move(configs);
        opalg::AnalysisRequest diag = request("diagonal");
        diag.state = 0;
        doc.analysis.push_back(std::move(diag));
        doc.analysis.push_back(request("inclosure"));
    }
    return doc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for update/discrimination/self-representation operator triples"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "report encoding")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string file;
    const char* file_help = "scenario file, or - for standard input";

    CLI::App* analyze = app.add_subcommand("analyze", "run every analysis the scenario requests");
    analyze->fallthrough();
    analyze->add_option("file", file, file_help)->required();

    std::string expr_name;
    CLI::App* expand = app.add_subcommand("expand", "derivation expansion of one expression");
    expand->fallthrough();
    expand->add_option("file", file, file_help)->required();
    expand->add_option("--expr", expr_name, "expression name")->required();

    std::string matrix_name;
    CLI::App* commutant = app.add_subcommand("commutant", "commutant basis of one operand");
    commutant->fallthrough();
    commutant->add_option("file", file, file_help)->required();
    commutant->add_option("--matrix", matrix_name, "matrix or expression name")->required();

    std::vector<std::string> of_names;
    long budget = opalg::kDefaultSearchBudget;
    std::uint64_t seed = opalg::kDefaultSearchSeed;
    CLI::App* search = app.add_subcommand(
        "projector-search", "search the joint commutant of the operands for a projector");
    search->fallthrough();
    search->add_option("file", file, file_help)->required();
    search->add_option("--of", of_names, "operand names")->required()->expected(-1);
    search->add_option("--budget", budget, "candidate budget")->capture_default_str();
    search->add_option("--seed", seed, "random-phase seed")->capture_default_str();

    std::size_t state = 0;
    CLI::App* diagonal = app.add_subcommand("diagonal", "diagonal defect at one admissible state");
    diagonal->fallthrough();
    diagonal->add_option("file", file, file_help)->required();
    diagonal->add_option("--state", state, "index into the admissible set")->required();

    CLI::App* inclosure =
        app.add_subcommand("inclosure", "closure and transcendence over the admissible set");
    inclosure->fallthrough();
    inclosure->add_option("file", file, file_help)->required();

    CLI::App* gen = app.add_subcommand("gen", "emit a builder scenario to standard output");
    gen->fallthrough();
    gen->require_subcommand(1);
    std::size_t gen_dim = 2;
    bool gen_active = false;
    CLI::App* gen_liar = gen->add_subcommand("liar", "supplemented liar configuration");
    gen_liar->fallthrough();
    gen_liar->add_option("--dim", gen_dim, "ambient dimension")->capture_default_str();
    CLI::App* gen_classA =
        gen->add_subcommand("classA", "discrimination toy (features and contrasts)");
    gen_classA->fallthrough();
    gen_classA->add_option("--dim", gen_dim, "ambient dimension, even")->capture_default_str();
    gen_classA->add_flag("--active", gen_active, "update moves the discriminated coordinates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*gen) {
            opalg::ScenarioDoc doc = *gen_liar ? liar_doc(gen_dim) : classA_doc(gen_dim, gen_active);
            std::cout << opalg::serialize_scenario(doc);
            return 0;
        }

        opalg::ScenarioDoc doc = opalg::parse_scenario(read_input(file));
        if (*analyze) {
            emit(opalg::run(doc), format);
            return 0;
        }

        opalg::AnalysisRequest req;
        if (*expand) {
            req.kind = "expand";
            req.expr = expr_name;
        } else if (*commutant) {
            req.kind = "commutant";
            req.matrix = matrix_name;
        } else if (*search) {
            req.kind = "projector-search";
            req.of = of_names;
            req.budget = budget;
            req.seed = seed;
        } else if (*diagonal) {
            req.kind = "diagonal";
            req.state = state;
        } else if (*inclosure) {
            req.kind = "inclosure";
        }
        emit(single(doc, req), format);
        return 0;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const opalg::ParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.column != 0) std::cerr << " (column " << e.column << ")";
        std::cerr << "\n";
        return 1;
    } catch (const opalg::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const opalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
