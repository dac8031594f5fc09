#include "orbigeo/report.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "orbigeo/errors.hpp"

namespace orbigeo {

namespace {

using nlohmann::json;

std::string param_suffix(const AnalysisReport& r) {
    if (!r.param_symbol || !r.param_value) return "";
    return " (" + *r.param_symbol + "=" + std::to_string(*r.param_value) + ")";
}

std::string csv_join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
    return out;
}

std::string verdict_text(const Verdict& v) {
    switch (v.criterion) {
        case Criterion::SegrePositive: {
            std::string rel = v.outcome == Outcome::Holds
                                  ? " > 0: quasi-hyperbolic (McQuillan); h^0(S^m Omega) >= c m^3"
                                  : (v.outcome == Outcome::Boundary
                                         ? " = 0: boundary; McQuillan criterion inconclusive"
                                         : " < 0: not positive; McQuillan criterion inconclusive");
            std::string head = "verdict segre: s2 = " + v.witness.to_string();
            // keep "s2 = <w> > 0" literal, so strip the duplicated witness for = 0
            if (v.outcome == Outcome::Boundary) return "verdict segre: s2 = 0: boundary; McQuillan criterion inconclusive";
            return head + rel;
        }
        case Criterion::Jet2Positive: {
            if (v.outcome == Outcome::Holds) {
                return "verdict jet2: 13c1^2-9c2 = " + v.witness.to_string() + " > 0: " + v.detail;
            }
            if (v.outcome == Outcome::Boundary) {
                return "verdict jet2: 13c1^2-9c2 = 0: boundary; no order-2 conclusion";
            }
            return "verdict jet2: 13c1^2-9c2 = " + v.witness.to_string() +
                   " < 0: no order-2 conclusion";
        }
        default:
            return "verdict geography " + criterion_name(v.criterion) + ": " +
                   outcome_name(v.outcome) + " (margin " + v.witness.to_string() + ") -- " +
                   v.citation;
    }
}

json rational_json(const Rational& r) {
    json out;
    // BigInt values in this project stay well within 64 bits; serialize as
    // plain integers so the structured output carries integer pairs only.
    out["num"] = r.num().to_longlong();
    out["den"] = r.den().to_longlong();
    return out;
}

Rational rational_from_json(const json& j) {
    return Rational(BigInt(j.at("num").get<long long>()), BigInt(j.at("den").get<long long>()));
}

json chern_json(const ChernReport& c) {
    json out;
    out["c1sq"] = rational_json(c.c1sq);
    out["c2"] = rational_json(c.c2);
    out["s2"] = rational_json(c.segre2());
    out["jet2"] = rational_json(c.jet2());
    out["chi"] = rational_json(c.chi());
    out["chi_integral"] = c.chi_integral();
    return out;
}

ChernReport chern_from_json(const json& j) {
    return {rational_from_json(j.at("c1sq")), rational_from_json(j.at("c2"))};
}

json verdict_json(const Verdict& v) {
    json out;
    out["criterion"] = criterion_name(v.criterion);
    out["outcome"] = outcome_name(v.outcome);
    out["witness"] = rational_json(v.witness);
    out["citation"] = v.citation;
    out["detail"] = v.detail;
    return out;
}

Criterion criterion_from_name(const std::string& name) {
    for (Criterion c : {Criterion::SegrePositive, Criterion::Jet2Positive, Criterion::Noether,
                        Criterion::BMY, Criterion::BallQuotient, Criterion::HorikawaEvenExtremal,
                        Criterion::HorikawaOddExtremal, Criterion::NodalSegre}) {
        if (criterion_name(c) == name) return c;
    }
    throw usage_error("unknown criterion '" + name + "'");
}

Outcome outcome_from_name(const std::string& name) {
    for (Outcome o : {Outcome::Holds, Outcome::Fails, Outcome::Boundary}) {
        if (outcome_name(o) == name) return o;
    }
    throw usage_error("unknown outcome '" + name + "'");
}

Verdict verdict_from_json(const json& j) {
    return {criterion_from_name(j.at("criterion").get<std::string>()),
            outcome_from_name(j.at("outcome").get<std::string>()),
            rational_from_json(j.at("witness")), j.at("citation").get<std::string>(),
            j.at("detail").get<std::string>()};
}

json defect_verdict_json(const DefectVerdict& v) {
    json out;
    out["outcome"] = outcome_name(v.outcome);
    out["witness"] = rational_json(v.witness);
    out["defect_sum"] = rational_json(v.defect_sum);
    json terms = json::array();
    for (const auto& t : v.terms) terms.push_back(rational_json(t));
    out["terms"] = terms;
    out["trace"] = v.trace;
    return out;
}

DefectVerdict defect_verdict_from_json(const json& j) {
    DefectVerdict v;
    v.outcome = outcome_from_name(j.at("outcome").get<std::string>());
    v.witness = rational_from_json(j.at("witness"));
    v.defect_sum = rational_from_json(j.at("defect_sum"));
    for (const auto& t : j.at("terms")) v.terms.push_back(rational_from_json(t));
    v.trace = j.at("trace").get<std::vector<std::string>>();
    return v;
}

}  // namespace

AnalysisReport analyze_instance(const ScenarioDoc& doc, const ScenarioInstance& inst,
                                const FileOptions& options) {
    AnalysisReport r;
    r.scenario = doc.name;
    if (doc.param) r.param_symbol = doc.param->symbol;
    r.param_value = inst.param_value;
    r.config = inst.config;
    r.cover_degree = doc.cover_degree;
    r.analyses = doc.analyses;
    r.notes = doc.notes;
    r.declared_warnings = doc.declared_warnings;
    r.warnings = doc.declared_warnings;

    for (const auto& p : r.config.singular_points) {
        r.point_betas.push_back(beta_at(r.config, p));
        if (uses_odd_d_row(p.ade)) r.warnings.push_back(odd_d_row_warning(p.ade, p.id));
    }
    if (options.check_incidence) {
        for (auto& msg : incidence_mismatches(r.config)) {
            r.warnings.push_back("incidence check: " + msg);
        }
    }

    r.base_chern = chern_of(r.config);
    r.chern = r.cover_degree ? scale_report(r.base_chern, *r.cover_degree) : r.base_chern;

    for (const auto& a : r.analyses) {
        if (a == "segre") {
            r.verdicts.push_back(check_segre(r.chern));
        } else if (a == "jet2") {
            r.verdicts.push_back(jet2_bound(r.chern).verdict);
        } else if (a == "geography") {
            for (auto& v : geography(r.chern)) r.verdicts.push_back(v);
        }
    }
    return r;
}

RequestOutcome run_request(const Request& req) {
    if (std::holds_alternative<CoverRequest>(req)) {
        const auto& c = std::get<CoverRequest>(req);
        CoverOutcome out;
        out.request = c;
        out.chern = cyclic_cover_chern(c.d, c.n);
        out.geo = geography(out.chern);
        if (out.chern.c1sq.is_zero() && out.chern.c2 == Rational(24)) {
            out.notes.push_back("c1^2 = 0, c2 = 24: K3 invariants, not of general type");
        } else if (out.chern.c1sq.signum() <= 0) {
            out.notes.push_back("c1^2 <= 0: not of general type (numeric)");
        }
        for (const auto& v : out.geo) {
            if (v.criterion == Criterion::HorikawaEvenExtremal && v.outcome == Outcome::Holds) {
                out.horikawa = classify_horikawa(out.chern);
            }
            if (v.criterion == Criterion::HorikawaOddExtremal && v.outcome == Outcome::Holds) {
                out.notes.push_back(
                    "odd-extremal Horikawa invariants (c2 = 5c1^2 + 30); the published "
                    "classification covers even c1^2 only");
            }
        }
        return out;
    }
    if (std::holds_alternative<DefectCoverRequest>(req)) {
        const auto& c = std::get<DefectCoverRequest>(req);
        DefectCoverOutcome out;
        out.request = c;
        DefectScenario s;
        s.dim = c.dim;
        s.targets.push_back({c.m, c.q});
        out.verdict = cartan_contradiction(s);
        out.gate = log_general_type_gate(
            c.dim, std::vector<std::pair<long long, long long>>(c.q, {1, c.m}));
        if (out.gate.outcome == Outcome::Holds && out.verdict.outcome != Outcome::Holds) {
            out.notes.push_back(
                "the targets are of log general type but the truncated defect relation is "
                "inconclusive here: degeneracy of entire curves is conjectural");
        }
        return out;
    }
    const auto& c = std::get<DefectProductRequest>(req);
    DefectProductOutcome out;
    out.request = c;
    out.verdict = product_projection_argument(c.fibers1, c.fibers2, c.exceptional);
    return out;
}

FileReport run_scenario_text(const std::string& text, const std::string& name,
                             const FileOptions& options) {
    ScenarioDoc doc = parse_scenario(text, name);
    FileReport report;
    report.name = name;
    report.is_orbifold = doc.is_orbifold;
    if (doc.is_orbifold) {
        for (const auto& inst : instantiate(doc, options.param_filter)) {
            report.instances.push_back(analyze_instance(doc, inst, options));
        }
    } else {
        for (const auto& req : doc.requests) report.requests.push_back(run_request(req));
    }
    return report;
}

std::string echo_scenario(const AnalysisReport& r) {
    std::ostringstream out;
    out << "surface " << r.config.base.name() << "\n";
    for (const auto& c : r.config.components) {
        out << "component " << c.id << " class=" << c.cls.to_string() << " mult=" << c.mult
            << " genus=" << c.genus << " removed=" << c.removed << "\n";
    }
    for (const auto& p : r.config.singular_points) {
        out << "singular " << p.id << " type=" << p.ade.name() << " branches=";
        for (std::size_t i = 0; i < p.branches.size(); ++i) {
            out << (i != 0 ? "," : "") << p.branches[i];
        }
        out << "\n";
    }
    if (r.cover_degree) out << "cover " << *r.cover_degree << "\n";
    if (!r.analyses.empty()) {
        out << "analyze";
        for (const auto& a : r.analyses) out << " " << a;
        out << "\n";
    }
    for (const auto& n : r.notes) out << "note " << n << "\n";
    for (const auto& w : r.declared_warnings) out << "warn " << w << "\n";
    return out.str();
}

std::string render_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "# scenario " << r.scenario << param_suffix(r) << "\n";
    out << echo_scenario(r);
    bool chern_wanted = std::find(r.analyses.begin(), r.analyses.end(), "chern") != r.analyses.end();
    if (chern_wanted) {
        for (std::size_t i = 0; i < r.config.singular_points.size(); ++i) {
            const auto& p = r.config.singular_points[i];
            std::string mults;
            for (std::size_t b = 0; b < p.branches.size(); ++b) {
                mults += (b != 0 ? "," : "") +
                         std::to_string(r.config.component(p.branches[b]).mult);
            }
            out << "# beta " << p.id << " type=" << p.ade.name() << " mults=" << mults << " -> "
                << r.point_betas[i].to_string() << "\n";
        }
        if (r.cover_degree) {
            out << "# base pair: c1^2 = " << r.base_chern.c1sq.to_string()
                << ", c2 = " << r.base_chern.c2.to_string() << "\n";
            out << "# cover degree " << *r.cover_degree << ": invariants scaled by "
                << *r.cover_degree << "\n";
        }
        out << "# c1^2 = " << r.chern.c1sq.to_string() << "\n";
        out << "# c2 = " << r.chern.c2.to_string() << "\n";
        out << "# s2 = " << r.chern.segre2().to_string() << "\n";
        out << "# 13c1^2-9c2 = " << r.chern.jet2().to_string() << "\n";
        out << "# chi = " << r.chern.chi().to_string()
            << (r.chern.chi_integral() ? "" : " (not a smooth-surface chi)") << "\n";
    }
    for (const auto& v : r.verdicts) out << "# " << verdict_text(v) << "\n";
    for (const auto& w : r.warnings) out << "# warning: " << w << "\n";
    return out.str();
}

namespace {

std::string render_request_text(const RequestOutcome& outcome) {
    std::ostringstream out;
    if (std::holds_alternative<CoverOutcome>(outcome)) {
        const auto& c = std::get<CoverOutcome>(outcome);
        out << "cover d=" << c.request.d << " n=" << c.request.n << "\n";
        out << "# c1^2 = " << c.chern.c1sq.to_string() << "\n";
        out << "# c2 = " << c.chern.c2.to_string() << "\n";
        out << "# s2 = " << c.chern.segre2().to_string() << "\n";
        out << "# chi = " << c.chern.chi().to_string()
            << (c.chern.chi_integral() ? "" : " (not a smooth-surface chi)") << "\n";
        for (const auto& v : c.geo) out << "# " << verdict_text(v) << "\n";
        if (c.horikawa) {
            out << "# horikawa classification (chi = " << c.horikawa->chi.to_string() << "):";
            bool first = true;
            if (c.horikawa->type1) {
                out << " type (1) double plane branched along an octic";
                first = false;
            }
            if (c.horikawa->type2) {
                out << (first ? " " : "; ") << "type (2) double plane branched in degree 10";
                first = false;
            }
            if (!c.horikawa->type3.empty()) {
                out << (first ? " " : "; ") << "type (3) double cover of F_N branched in (6,2a):";
                for (std::size_t i = 0; i < c.horikawa->type3.size(); ++i) {
                    out << (i != 0 ? "," : "") << " (N,a)=(" << c.horikawa->type3[i].n << ","
                        << c.horikawa->type3[i].a << ")";
                }
            }
            out << "\n";
        }
        for (const auto& n : c.notes) out << "# note: " << n << "\n";
    } else if (std::holds_alternative<DefectCoverOutcome>(outcome)) {
        const auto& c = std::get<DefectCoverOutcome>(outcome);
        out << "defect-cover dim=" << c.request.dim << " q=" << c.request.q
            << " m=" << c.request.m << "\n";
        out << "# cartan: " << outcome_name(c.verdict.outcome) << " (defect sum "
            << c.verdict.defect_sum.to_string() << ", margin " << c.verdict.witness.to_string()
            << ")\n";
        for (const auto& line : c.verdict.trace) out << "#   " << line << "\n";
        out << "# log gate: " << outcome_name(c.gate.outcome) << " (mass "
            << c.gate.defect_sum.to_string() << ", margin " << c.gate.witness.to_string()
            << ")\n";
        for (const auto& n : c.notes) out << "# note: " << n << "\n";
    } else {
        const auto& c = std::get<DefectProductOutcome>(outcome);
        out << "defect-product fibers1=";
        for (std::size_t i = 0; i < c.request.fibers1.size(); ++i) {
            out << (i != 0 ? "," : "") << c.request.fibers1[i];
        }
        out << " fibers2=";
        for (std::size_t i = 0; i < c.request.fibers2.size(); ++i) {
            out << (i != 0 ? "," : "") << c.request.fibers2[i];
        }
        if (!c.request.exceptional.empty()) out << " exceptional=" << csv_join(c.request.exceptional);
        out << "\n";
        out << "# product argument: " << outcome_name(c.verdict.outcome);
        if (!c.request.exceptional.empty() && c.verdict.outcome == Outcome::Holds) {
            out << "; exceptional locus {" << csv_join(c.request.exceptional) << "}";
        }
        out << "\n";
        for (const auto& line : c.verdict.trace) out << "#   " << line << "\n";
    }
    return out.str();
}

}  // namespace

std::string render_text(const FileReport& r) {
    std::ostringstream out;
    if (r.is_orbifold) {
        for (std::size_t i = 0; i < r.instances.size(); ++i) {
            if (i != 0) out << "# ----------------------------------------\n";
            out << render_text(r.instances[i]);
        }
    } else {
        out << "# scenario " << r.name << "\n";
        for (const auto& req : r.requests) out << render_request_text(req);
    }
    return out.str();
}

std::string render_json(const FileReport& r) {
    json doc;
    doc["scenario"] = r.name;
    doc["kind"] = r.is_orbifold ? "orbifold" : "requests";
    json instances = json::array();
    for (const auto& inst : r.instances) {
        json j;
        if (inst.param_symbol && inst.param_value) {
            j["param"] = {{"symbol", *inst.param_symbol}, {"value", *inst.param_value}};
        } else {
            j["param"] = nullptr;
        }
        if (inst.config.base.is_plane()) {
            j["surface"] = {{"kind", "P2"}};
        } else {
            j["surface"] = {{"kind", "F"}, {"n", inst.config.base.hirzebruch_n}};
        }
        json comps = json::array();
        for (const auto& c : inst.config.components) {
            json cj;
            cj["id"] = c.id;
            cj["class"] = c.cls.surface.is_plane() ? json::array({c.cls.a})
                                                   : json::array({c.cls.a, c.cls.b});
            cj["mult"] = c.mult;
            cj["genus"] = c.genus;
            cj["removed"] = c.removed;
            comps.push_back(cj);
        }
        j["components"] = comps;
        json points = json::array();
        for (std::size_t i = 0; i < inst.config.singular_points.size(); ++i) {
            const auto& p = inst.config.singular_points[i];
            json pj;
            pj["id"] = p.id;
            pj["type"] = p.ade.name();
            pj["branches"] = p.branches;
            pj["beta"] = rational_json(inst.point_betas[i]);
            points.push_back(pj);
        }
        j["singular_points"] = points;
        j["cover"] = inst.cover_degree ? json(*inst.cover_degree) : json(nullptr);
        j["analyses"] = inst.analyses;
        j["base_chern"] = chern_json(inst.base_chern);
        j["chern"] = chern_json(inst.chern);
        json verdicts = json::array();
        for (const auto& v : inst.verdicts) verdicts.push_back(verdict_json(v));
        j["verdicts"] = verdicts;
        j["notes"] = inst.notes;
        j["warnings"] = inst.warnings;
        instances.push_back(j);
    }
    doc["instances"] = instances;
    json requests = json::array();
    for (const auto& outcome : r.requests) {
        json j;
        if (std::holds_alternative<CoverOutcome>(outcome)) {
            const auto& c = std::get<CoverOutcome>(outcome);
            j["type"] = "cover";
            j["d"] = c.request.d;
            j["n"] = c.request.n;
            j["chern"] = chern_json(c.chern);
            json geo = json::array();
            for (const auto& v : c.geo) geo.push_back(verdict_json(v));
            j["geography"] = geo;
            if (c.horikawa) {
                json h;
                h["chi"] = rational_json(c.horikawa->chi);
                h["type1"] = c.horikawa->type1;
                h["type2"] = c.horikawa->type2;
                json t3 = json::array();
                for (const auto& s : c.horikawa->type3) {
                    t3.push_back({{"N", s.n}, {"a", s.a}});
                }
                h["type3"] = t3;
                j["horikawa"] = h;
            } else {
                j["horikawa"] = nullptr;
            }
            j["notes"] = c.notes;
        } else if (std::holds_alternative<DefectCoverOutcome>(outcome)) {
            const auto& c = std::get<DefectCoverOutcome>(outcome);
            j["type"] = "defect-cover";
            j["dim"] = c.request.dim;
            j["q"] = c.request.q;
            j["m"] = c.request.m;
            j["verdict"] = defect_verdict_json(c.verdict);
            j["gate"] = defect_verdict_json(c.gate);
            j["notes"] = c.notes;
        } else {
            const auto& c = std::get<DefectProductOutcome>(outcome);
            j["type"] = "defect-product";
            j["fibers1"] = c.request.fibers1;
            j["fibers2"] = c.request.fibers2;
            j["exceptional"] = c.request.exceptional;
            j["outcome"] = outcome_name(c.verdict.outcome);
            j["stage1"] = defect_verdict_json(c.verdict.stage1);
            j["stage2"] = c.verdict.stage2_ran ? defect_verdict_json(c.verdict.stage2) : json(nullptr);
            j["trace"] = c.verdict.trace;
        }
        requests.push_back(j);
    }
    doc["requests"] = requests;
    return doc.dump(2) + "\n";
}

FileReport parse_file_json(const std::string& text) {
    json doc = json::parse(text);
    FileReport r;
    r.name = doc.at("scenario").get<std::string>();
    r.is_orbifold = doc.at("kind").get<std::string>() == "orbifold";
    for (const auto& j : doc.at("instances")) {
        AnalysisReport inst;
        inst.scenario = r.name;
        if (!j.at("param").is_null()) {
            inst.param_symbol = j.at("param").at("symbol").get<std::string>();
            inst.param_value = j.at("param").at("value").get<long long>();
        }
        const auto& sj = j.at("surface");
        inst.config.base = sj.at("kind").get<std::string>() == "P2"
                               ? BaseSurface::plane()
                               : BaseSurface::hirzebruch(sj.at("n").get<long long>());
        for (const auto& cj : j.at("components")) {
            BranchComponent c;
            c.id = cj.at("id").get<std::string>();
            const auto& cls = cj.at("class");
            c.cls = inst.config.base.is_plane()
                        ? DivisorClass::on_plane(cls.at(0).get<long long>())
                        : DivisorClass::on_hirzebruch(inst.config.base, cls.at(0).get<long long>(),
                                                      cls.at(1).get<long long>());
            c.mult = cj.at("mult").get<long long>();
            c.genus = cj.at("genus").get<long long>();
            c.removed = cj.at("removed").get<long long>();
            inst.config.components.push_back(c);
        }
        for (const auto& pj : j.at("singular_points")) {
            SingularPointSpec p;
            p.id = pj.at("id").get<std::string>();
            p.ade = AdeType::parse(pj.at("type").get<std::string>());
            p.branches = pj.at("branches").get<std::vector<std::string>>();
            inst.config.singular_points.push_back(p);
            inst.point_betas.push_back(rational_from_json(pj.at("beta")));
        }
        if (!j.at("cover").is_null()) inst.cover_degree = j.at("cover").get<long long>();
        inst.analyses = j.at("analyses").get<std::vector<std::string>>();
        inst.base_chern = chern_from_json(j.at("base_chern"));
        inst.chern = chern_from_json(j.at("chern"));
        for (const auto& vj : j.at("verdicts")) inst.verdicts.push_back(verdict_from_json(vj));
        inst.notes = j.at("notes").get<std::vector<std::string>>();
        inst.warnings = j.at("warnings").get<std::vector<std::string>>();
        r.instances.push_back(inst);
    }
    for (const auto& j : doc.at("requests")) {
        std::string type = j.at("type").get<std::string>();
        if (type == "cover") {
            CoverOutcome c;
            c.request = {j.at("d").get<long long>(), j.at("n").get<long long>()};
            c.chern = chern_from_json(j.at("chern"));
            for (const auto& vj : j.at("geography")) c.geo.push_back(verdict_from_json(vj));
            if (!j.at("horikawa").is_null()) {
                HorikawaClassification h;
                h.chi = rational_from_json(j.at("horikawa").at("chi"));
                h.type1 = j.at("horikawa").at("type1").get<bool>();
                h.type2 = j.at("horikawa").at("type2").get<bool>();
                for (const auto& tj : j.at("horikawa").at("type3")) {
                    h.type3.push_back({tj.at("N").get<long long>(), tj.at("a").get<long long>()});
                }
                c.horikawa = h;
            }
            c.notes = j.at("notes").get<std::vector<std::string>>();
            r.requests.push_back(c);
        } else if (type == "defect-cover") {
            DefectCoverOutcome c;
            c.request = {j.at("dim").get<long long>(), j.at("q").get<long long>(),
                         j.at("m").get<long long>()};
            c.verdict = defect_verdict_from_json(j.at("verdict"));
            c.gate = defect_verdict_from_json(j.at("gate"));
            c.notes = j.at("notes").get<std::vector<std::string>>();
            r.requests.push_back(c);
        } else if (type == "defect-product") {
            DefectProductOutcome c;
            c.request.fibers1 = j.at("fibers1").get<std::vector<long long>>();
            c.request.fibers2 = j.at("fibers2").get<std::vector<long long>>();
            c.request.exceptional = j.at("exceptional").get<std::vector<std::string>>();
            c.verdict.outcome = outcome_from_name(j.at("outcome").get<std::string>());
            c.verdict.stage1 = defect_verdict_from_json(j.at("stage1"));
            if (!j.at("stage2").is_null()) {
                c.verdict.stage2 = defect_verdict_from_json(j.at("stage2"));
                c.verdict.stage2_ran = true;
            }
            c.verdict.exceptional = c.request.exceptional;
            c.verdict.trace = j.at("trace").get<std::vector<std::string>>();
            r.requests.push_back(c);
        } else {
            throw usage_error("unknown request type '" + type + "' in report JSON");
        }
    }
    return r;
}

std::string render_report(const FileReport& r, ReportFormat format) {
    return format == ReportFormat::Text ? render_text(r) : render_json(r);
}

std::vector<NamedText> run_files(
    const std::vector<std::pair<std::string, std::string>>& named_texts, ReportFormat format,
    const FileOptions& options) {
    auto run_one = [&](const std::pair<std::string, std::string>& item) -> NamedText {
        NamedText out;
        out.name = item.first;
        try {
            FileReport report = run_scenario_text(item.second, item.first, options);
            out.body = render_report(report, format);
        } catch (const parse_error& e) {
            out.body = std::string("error: ") + e.what() + "\n";
            out.exit_code = 2;
        } catch (const usage_error& e) {
            out.body = std::string("refused: ") + e.what() + "\n";
            out.exit_code = 1;
        } catch (const std::exception& e) {
            out.body = std::string("internal error: ") + e.what() + "\n";
            out.exit_code = 3;
        }
        return out;
    };

    std::vector<std::future<NamedText>> futures;
    futures.reserve(named_texts.size());
    for (const auto& item : named_texts) {
        futures.push_back(std::async(std::launch::async, run_one, item));
    }
    std::vector<NamedText> out;
    out.reserve(futures.size());
    for (auto& f : futures) out.push_back(f.get());
    std::sort(out.begin(), out.end(),
              [](const NamedText& a, const NamedText& b) { return a.name < b.name; });
    return out;
}

}  // namespace orbigeo
