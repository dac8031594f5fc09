#include "orbigeo/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>

#include "orbigeo/errors.hpp"

namespace orbigeo {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

long long parse_int(const std::string& text, std::size_t line, std::size_t col) {
    if (text.empty()) throw parse_error("expected an integer", line, col);
    std::size_t pos = text[0] == '-' || text[0] == '+' ? 1 : 0;
    if (pos == text.size()) throw parse_error("expected an integer, got '" + text + "'", line, col);
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw parse_error("expected an integer, got '" + text + "'", line, col);
        }
    }
    return std::strtoll(text.c_str(), nullptr, 10);
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

// "key=value" -> value, enforcing the key
std::string expect_kv(const Token& tok, const std::string& key, std::size_t line) {
    std::size_t eq = tok.text.find('=');
    if (eq == std::string::npos) {
        throw parse_error("expected " + key + "=<value>, got '" + tok.text + "'", line, tok.column);
    }
    std::string k = tok.text.substr(0, eq);
    if (k != key) {
        throw parse_error("unknown key '" + k + "' (expected '" + key + "')", line, tok.column);
    }
    return tok.text.substr(eq + 1);
}

std::string kv_key(const Token& tok) {
    std::size_t eq = tok.text.find('=');
    return eq == std::string::npos ? std::string() : tok.text.substr(0, eq);
}

std::string kv_value(const Token& tok) {
    std::size_t eq = tok.text.find('=');
    return eq == std::string::npos ? std::string() : tok.text.substr(eq + 1);
}

std::vector<long long> parse_int_csv(const std::string& text, std::size_t line, std::size_t col) {
    std::vector<long long> out;
    for (const auto& part : split_csv(text)) out.push_back(parse_int(part, line, col));
    return out;
}

// brace list {2,3,...,10} with optional ellipsis runs
std::vector<long long> parse_value_set(const std::string& text, std::size_t line,
                                       std::size_t col) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
        throw parse_error("expected a braced value set, got '" + text + "'", line, col);
    }
    std::vector<std::string> parts = split_csv(text.substr(1, text.size() - 2));
    std::vector<long long> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == "...") {
            if (out.empty() || i + 1 >= parts.size()) {
                throw parse_error("'...' needs a value on both sides", line, col);
            }
            long long next = parse_int(parts[i + 1], line, col);
            for (long long v = out.back() + 1; v < next; ++v) out.push_back(v);
            continue;
        }
        long long v = parse_int(parts[i], line, col);
        if (!out.empty() && v <= out.back()) {
            throw parse_error("parameter values must be strictly increasing", line, col);
        }
        out.push_back(v);
    }
    if (out.empty()) throw parse_error("empty parameter value set", line, col);
    return out;
}

std::string rest_of_line(const std::vector<Token>& toks, std::size_t from) {
    std::string out;
    for (std::size_t i = from; i < toks.size(); ++i) {
        if (!out.empty()) out += ' ';
        out += toks[i].text;
    }
    return out;
}

const std::vector<std::string> kAnalyses = {"chern", "segre", "jet2", "geography"};

}  // namespace

ScenarioDoc parse_scenario(const std::string& text, const std::string& name) {
    ScenarioDoc doc;
    doc.name = name;
    bool surface_seen = false;
    std::set<std::string> component_ids;
    std::set<std::string> point_ids;
    std::set<std::string> analyses_seen;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::vector<Token> toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::string& head = toks[0].text;

        if (head == "surface") {
            if (surface_seen) throw parse_error("surface declared twice", lineno, toks[0].column);
            if (toks.size() != 2) throw parse_error("usage: surface P2 | surface F<N>", lineno, toks[0].column);
            const std::string& s = toks[1].text;
            if (s == "P2") {
                doc.base = BaseSurface::plane();
            } else if (s.size() >= 2 && s[0] == 'F') {
                long long n = parse_int(s.substr(1), lineno, toks[1].column);
                if (n < 0) throw parse_error("Hirzebruch index must be >= 0", lineno, toks[1].column);
                doc.base = BaseSurface::hirzebruch(n);
            } else {
                throw parse_error("unknown surface '" + s + "'", lineno, toks[1].column);
            }
            surface_seen = true;
            doc.is_orbifold = true;
        } else if (head == "param") {
            if (doc.param) throw parse_error("at most one parameter symbol", lineno, toks[0].column);
            if (toks.size() != 4 || toks[2].text != "in") {
                throw parse_error("usage: param <sym> in {v1,v2,...}", lineno, toks[0].column);
            }
            ParamSpec spec;
            spec.symbol = toks[1].text;
            spec.values = parse_value_set(toks[3].text, lineno, toks[3].column);
            doc.param = spec;
        } else if (head == "component") {
            if (!surface_seen) {
                throw parse_error("component before the surface declaration", lineno,
                                  toks[0].column);
            }
            if (toks.size() != 6) {
                throw parse_error("usage: component <id> class=... mult=... genus=... removed=...",
                                  lineno, toks[0].column);
            }
            RawComponent comp;
            comp.id = toks[1].text;
            if (!component_ids.insert(comp.id).second) {
                throw parse_error("duplicate component id '" + comp.id + "'", lineno, toks[1].column);
            }
            std::string cls = expect_kv(toks[2], "class", lineno);
            if (!cls.empty() && cls.front() == '(') {
                if (cls.back() != ')') {
                    throw parse_error("expected class=(<a>,<b>)", lineno, toks[2].column);
                }
                std::vector<std::string> parts = split_csv(cls.substr(1, cls.size() - 2));
                if (parts.size() != 2) {
                    throw parse_error("expected class=(<a>,<b>)", lineno, toks[2].column);
                }
                comp.pair_class = true;
                comp.class_a = parse_int(parts[0], lineno, toks[2].column);
                comp.class_b = parse_int(parts[1], lineno, toks[2].column);
            } else {
                comp.class_a = parse_int(cls, lineno, toks[2].column);
            }
            if (doc.base.is_plane() && comp.pair_class) {
                throw parse_error("class on P2 is a single degree", lineno, toks[2].column);
            }
            if (!doc.base.is_plane() && !comp.pair_class) {
                throw parse_error("class on F_N is a pair (a,b)", lineno, toks[2].column);
            }
            std::string mult = expect_kv(toks[3], "mult", lineno);
            if (doc.param && mult == doc.param->symbol) {
                comp.mult.is_param = true;
            } else if (!mult.empty() && (std::isdigit(static_cast<unsigned char>(mult[0])) != 0 ||
                                         mult[0] == '-')) {
                comp.mult.value = parse_int(mult, lineno, toks[3].column);
                if (comp.mult.value < 1) {
                    throw parse_error("multiplicity must be >= 1", lineno, toks[3].column);
                }
            } else {
                throw parse_error("mult must be an integer or the declared parameter symbol",
                                  lineno, toks[3].column);
            }
            comp.genus = parse_int(expect_kv(toks[4], "genus", lineno), lineno, toks[4].column);
            comp.removed = parse_int(expect_kv(toks[5], "removed", lineno), lineno, toks[5].column);
            if (comp.genus < 0 || comp.removed < 0) {
                throw parse_error("genus and removed must be >= 0", lineno, toks[4].column);
            }
            doc.components.push_back(comp);
        } else if (head == "singular") {
            if (toks.size() != 4) {
                throw parse_error("usage: singular <id> type=<ADE> branches=<id>,...", lineno,
                                  toks[0].column);
            }
            SingularPointSpec point;
            point.id = toks[1].text;
            if (!point_ids.insert(point.id).second) {
                throw parse_error("duplicate singular point id '" + point.id + "'", lineno,
                                  toks[1].column);
            }
            std::string type = expect_kv(toks[2], "type", lineno);
            try {
                point.ade = AdeType::parse(type);
            } catch (const usage_error& e) {
                throw parse_error(e.what(), lineno, toks[2].column);
            }
            point.branches = split_csv(expect_kv(toks[3], "branches", lineno));
            for (const auto& b : point.branches) {
                if (component_ids.count(b) == 0) {
                    throw parse_error("unknown component reference '" + b + "'", lineno,
                                      toks[3].column);
                }
            }
            if (static_cast<int>(point.branches.size()) != point.ade.branch_count()) {
                throw parse_error("type " + point.ade.name() + " takes " +
                                      std::to_string(point.ade.branch_count()) +
                                      " branches, got " + std::to_string(point.branches.size()),
                                  lineno, toks[3].column);
            }
            doc.points.push_back(point);
        } else if (head == "analyze") {
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (std::find(kAnalyses.begin(), kAnalyses.end(), toks[i].text) == kAnalyses.end()) {
                    throw parse_error("unknown analysis '" + toks[i].text + "'", lineno,
                                      toks[i].column);
                }
                analyses_seen.insert(toks[i].text);
            }
        } else if (head == "cover") {
            if (toks.size() >= 2 && kv_key(toks[1]) == "d") {
                // request form: cover d=<int> n=<int>
                if (toks.size() != 3) {
                    throw parse_error("usage: cover d=<int> n=<int>", lineno, toks[0].column);
                }
                CoverRequest req;
                req.d = parse_int(kv_value(toks[1]), lineno, toks[1].column);
                req.n = parse_int(expect_kv(toks[2], "n", lineno), lineno, toks[2].column);
                doc.requests.push_back(req);
            } else {
                if (toks.size() != 2) {
                    throw parse_error("usage: cover <degree>", lineno, toks[0].column);
                }
                if (doc.cover_degree) {
                    throw parse_error("cover degree declared twice", lineno, toks[0].column);
                }
                long long deg = parse_int(toks[1].text, lineno, toks[1].column);
                if (deg < 1) throw parse_error("cover degree must be >= 1", lineno, toks[1].column);
                doc.cover_degree = deg;
            }
        } else if (head == "defect-cover") {
            if (toks.size() != 4) {
                throw parse_error("usage: defect-cover dim=<int> q=<int> m=<int>", lineno,
                                  toks[0].column);
            }
            DefectCoverRequest req;
            req.dim = parse_int(expect_kv(toks[1], "dim", lineno), lineno, toks[1].column);
            req.q = parse_int(expect_kv(toks[2], "q", lineno), lineno, toks[2].column);
            req.m = parse_int(expect_kv(toks[3], "m", lineno), lineno, toks[3].column);
            doc.requests.push_back(req);
        } else if (head == "defect-product") {
            if (toks.size() != 3 && toks.size() != 4) {
                throw parse_error(
                    "usage: defect-product fibers1=<csv> fibers2=<csv> [exceptional=<csv>]",
                    lineno, toks[0].column);
            }
            DefectProductRequest req;
            req.fibers1 = parse_int_csv(expect_kv(toks[1], "fibers1", lineno), lineno, toks[1].column);
            req.fibers2 = parse_int_csv(expect_kv(toks[2], "fibers2", lineno), lineno, toks[2].column);
            if (toks.size() == 4) {
                req.exceptional = split_csv(expect_kv(toks[3], "exceptional", lineno));
            }
            doc.requests.push_back(req);
        } else if (head == "note") {
            doc.notes.push_back(rest_of_line(toks, 1));
        } else if (head == "warn") {
            doc.declared_warnings.push_back(rest_of_line(toks, 1));
        } else {
            throw parse_error("unknown directive '" + head + "'", lineno, toks[0].column);
        }
    }

    if (!surface_seen && doc.requests.empty()) {
        throw parse_error("scenario declares neither a surface nor any request", 1, 1);
    }
    if (surface_seen && !doc.requests.empty()) {
        throw parse_error("a file is either one orbifold scenario or a request list", 1, 1);
    }
    if (!doc.is_orbifold && doc.cover_degree) {
        throw parse_error("cover <degree> needs an orbifold scenario", 1, 1);
    }
    // canonical analysis order
    for (const auto& a : kAnalyses) {
        if (analyses_seen.count(a) != 0) doc.analyses.push_back(a);
    }
    if (doc.is_orbifold && doc.analyses.empty()) doc.analyses.push_back("chern");
    return doc;
}

std::vector<ScenarioInstance> instantiate(const ScenarioDoc& doc, std::optional<long long> only) {
    if (!doc.is_orbifold) return {};
    std::vector<long long> values;
    if (doc.param) {
        values = doc.param->values;
        if (only) {
            if (std::find(values.begin(), values.end(), *only) == values.end()) {
                throw usage_error("parameter value " + std::to_string(*only) +
                                  " is not in the declared set of '" + doc.name + "'");
            }
            values = {*only};
        }
    } else {
        if (only) throw usage_error("scenario '" + doc.name + "' has no parameter");
        values = {0};  // dummy single pass
    }

    std::vector<ScenarioInstance> out;
    for (long long v : values) {
        ScenarioInstance inst;
        if (doc.param) inst.param_value = v;
        inst.config.base = doc.base;
        for (const auto& raw : doc.components) {
            BranchComponent comp;
            comp.id = raw.id;
            if (doc.base.is_plane()) {
                if (raw.pair_class) {
                    throw usage_error("component '" + raw.id + "': class on P2 is a degree");
                }
                comp.cls = DivisorClass::on_plane(raw.class_a);
            } else {
                if (!raw.pair_class) {
                    throw usage_error("component '" + raw.id + "': class on F_N is a pair (a,b)");
                }
                comp.cls = DivisorClass::on_hirzebruch(doc.base, raw.class_a, raw.class_b);
            }
            comp.mult = raw.mult.is_param ? v : raw.mult.value;
            if (comp.mult < 1) {
                throw usage_error("component '" + raw.id + "': multiplicity must be >= 1");
            }
            comp.genus = raw.genus;
            comp.removed = raw.removed;
            inst.config.components.push_back(comp);
        }
        inst.config.singular_points = doc.points;
        inst.config.validate();
        out.push_back(std::move(inst));
    }
    return out;
}

}  // namespace orbigeo
