#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orbigeo/defects.hpp"
#include "orbigeo/hyperbolicity.hpp"
#include "orbigeo/scenario.hpp"

namespace orbigeo {

struct FileOptions {
    bool check_incidence = false;
    std::optional<long long> param_filter;
};

// Analysis of one instantiated orbifold configuration.
struct AnalysisReport {
    std::string scenario;
    std::optional<std::string> param_symbol;
    std::optional<long long> param_value;

    OrbifoldConfig config;
    std::optional<long long> cover_degree;
    std::vector<std::string> analyses;

    std::vector<Rational> point_betas;  // parallel to config.singular_points
    ChernReport base_chern;
    ChernReport chern;  // after cover scaling (equal to base_chern without cover)
    std::vector<Verdict> verdicts;
    std::vector<std::string> notes;
    std::vector<std::string> declared_warnings;  // from `warn` directives
    std::vector<std::string> warnings;           // declared + engine-generated
};

struct CoverOutcome {
    CoverRequest request;
    ChernReport chern;
    std::vector<Verdict> geo;
    std::optional<HorikawaClassification> horikawa;
    std::vector<std::string> notes;
};

struct DefectCoverOutcome {
    DefectCoverRequest request;
    DefectVerdict verdict;
    DefectVerdict gate;  // log general type gate for the same hyperplane targets
    std::vector<std::string> notes;
};

struct DefectProductOutcome {
    DefectProductRequest request;
    ProductVerdict verdict;
};

using RequestOutcome = std::variant<CoverOutcome, DefectCoverOutcome, DefectProductOutcome>;

// Everything computed from one scenario file.
struct FileReport {
    std::string name;
    bool is_orbifold = false;
    std::vector<AnalysisReport> instances;
    std::vector<RequestOutcome> requests;
};

AnalysisReport analyze_instance(const ScenarioDoc& doc, const ScenarioInstance& inst,
                                const FileOptions& options = {});
RequestOutcome run_request(const Request& req);
FileReport run_scenario_text(const std::string& text, const std::string& name,
                             const FileOptions& options = {});

// The scenario-echo portion of the text report; parsing it reproduces the
// instance exactly.
std::string echo_scenario(const AnalysisReport& r);

enum class ReportFormat { Text, Json };

// Stable line-oriented text: the echo lines verbatim plus '#'-prefixed
// analysis lines, so a whole single-instance report reparses as the same
// scenario.
std::string render_text(const AnalysisReport& r);
std::string render_text(const FileReport& r);

// One JSON document; every number in it is an integer (rationals appear as
// {"num":..,"den":..} pairs).
std::string render_json(const FileReport& r);
FileReport parse_file_json(const std::string& text);

std::string render_report(const FileReport& r, ReportFormat format);

// Drives several files concurrently; output blocks are sorted by file name.
struct NamedText {
    std::string name;
    std::string body;        // rendered report, or the error message
    int exit_code = 0;       // 0 ok, 1 refused, 2 parse error, 3 internal
};
std::vector<NamedText> run_files(const std::vector<std::pair<std::string, std::string>>& named_texts,
                                 ReportFormat format, const FileOptions& options = {});

}  // namespace orbigeo
