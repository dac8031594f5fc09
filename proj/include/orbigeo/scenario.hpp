#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orbigeo/invariants.hpp"

namespace orbigeo {

// Line-oriented scenario DSL ('#' starts a comment):
//
//   surface P2 | surface F<N>
//   param <sym> in {v1,v2,...,vMax}          (optional, one symbol; "..." fills a run)
//   component <id> class=<d>|class=(<a>,<b>) mult=<int|sym> genus=<int> removed=<int>
//   singular <id> type=<ADE> branches=<id>,<id>,...
//   cover <deg>                              (optional: scale invariants by a covering degree)
//   analyze chern segre jet2 geography       (any subset)
//   note <text> / warn <text>                (echoed into the report)
//
// Request files carry analysis requests instead of a pair:
//
//   cover d=<int> n=<int>
//   defect-cover dim=<int> q=<int> m=<int>
//   defect-product fibers1=<csv> fibers2=<csv> [exceptional=<csv>]

struct ParamSpec {
    std::string symbol;
    std::vector<long long> values;
};

struct MultExpr {
    bool is_param = false;
    long long value = 1;
};

struct RawComponent {
    std::string id;
    bool pair_class = false;
    long long class_a = 0;
    long long class_b = 0;
    MultExpr mult;
    long long genus = 0;
    long long removed = 0;
};

struct CoverRequest {
    long long d = 0;
    long long n = 0;
};

struct DefectCoverRequest {
    long long dim = 0;
    long long q = 0;
    long long m = 0;
};

struct DefectProductRequest {
    std::vector<long long> fibers1;
    std::vector<long long> fibers2;
    std::vector<std::string> exceptional;
};

using Request = std::variant<CoverRequest, DefectCoverRequest, DefectProductRequest>;

struct ScenarioDoc {
    std::string name;
    bool is_orbifold = false;

    BaseSurface base;
    std::optional<ParamSpec> param;
    std::vector<RawComponent> components;
    std::vector<SingularPointSpec> points;
    std::optional<long long> cover_degree;
    std::vector<std::string> analyses;  // canonical order: chern segre jet2 geography

    std::vector<std::string> notes;
    std::vector<std::string> declared_warnings;

    std::vector<Request> requests;
};

struct ScenarioInstance {
    std::optional<long long> param_value;
    OrbifoldConfig config;
};

ScenarioDoc parse_scenario(const std::string& text, const std::string& name = "");

// One configuration per parameter value (a single instance when the scenario
// is unparameterized); `only` restricts to a declared value.
std::vector<ScenarioInstance> instantiate(const ScenarioDoc& doc,
                                          std::optional<long long> only = std::nullopt);

}  // namespace orbigeo
