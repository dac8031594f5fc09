#include "orbigeo/defects.hpp"

#include "orbigeo/errors.hpp"

namespace orbigeo {

namespace {

Outcome strict_outcome(const Rational& margin) {
    if (margin.signum() > 0) return Outcome::Holds;
    return margin.is_zero() ? Outcome::Boundary : Outcome::Fails;
}

}  // namespace

DefectVerdict cartan_contradiction(const DefectScenario& s) {
    if (s.dim < 1) throw usage_error("defect scenario: ambient dimension must be >= 1");
    DefectVerdict v;
    v.defect_sum = Rational(0);
    v.trace.push_back("targets assumed in general position (recorded, not verified)");
    int step = 1;
    for (const auto& t : s.targets) {
        if (t.mult < 2) throw usage_error("defect scenario: multiplicities must be >= 2");
        if (t.count < 1) throw usage_error("defect scenario: counts must be positive");
        Rational bound = Rational(1) - Rational(s.dim, t.mult);
        v.terms.push_back(bound);
        v.defect_sum += Rational(t.count) * bound;
        v.trace.push_back(std::to_string(step++) + ". " + std::to_string(t.count) +
                          " target(s) with ramification order >= " + std::to_string(t.mult) +
                          ": delta^[" + std::to_string(s.dim) + "] >= 1 - " +
                          std::to_string(s.dim) + "/" + std::to_string(t.mult) + " = " +
                          bound.to_string() + " each");
    }
    Rational cap(s.dim + 1);
    v.witness = v.defect_sum - cap;
    v.outcome = strict_outcome(v.witness);
    v.trace.push_back(std::to_string(step++) + ". total defect lower bound: " +
                      v.defect_sum.to_string());
    v.trace.push_back(std::to_string(step++) +
                      ". Cartan truncated defect relation: sum of defects <= n+1 = " +
                      cap.to_string());
    switch (v.outcome) {
        case Outcome::Holds:
            v.trace.push_back(std::to_string(step) + ". " + v.defect_sum.to_string() + " > " +
                              cap.to_string() +
                              ": contradiction, every such curve is degenerate");
            break;
        case Outcome::Boundary:
            v.trace.push_back(std::to_string(step) + ". " + v.defect_sum.to_string() + " = " +
                              cap.to_string() + ": boundary case, no contradiction");
            break;
        case Outcome::Fails:
            v.trace.push_back(std::to_string(step) + ". " + v.defect_sum.to_string() + " < " +
                              cap.to_string() + ": no contradiction");
            break;
    }
    return v;
}

ProductVerdict product_projection_argument(const std::vector<long long>& fibers1,
                                           const std::vector<long long>& fibers2,
                                           const std::vector<std::string>& exceptional) {
    auto to_scenario = [](const std::vector<long long>& mults) {
        DefectScenario s;
        s.dim = 1;
        for (long long m : mults) {
            bool merged = false;
            for (auto& t : s.targets) {
                if (t.mult == m) {
                    ++t.count;
                    merged = true;
                    break;
                }
            }
            if (!merged) s.targets.push_back({m, 1});
        }
        return s;
    };
    ProductVerdict out;
    out.exceptional = exceptional;
    out.trace.push_back("stage 1: first projection, marked points " +
                        std::to_string(fibers1.size()));
    out.stage1 = cartan_contradiction(to_scenario(fibers1));
    for (const auto& line : out.stage1.trace) out.trace.push_back("  " + line);
    if (out.stage1.outcome != Outcome::Holds) {
        out.outcome = out.stage1.outcome;
        out.trace.push_back("stage 1 gives no contradiction; argument stops");
        return out;
    }
    out.trace.push_back("stage 1 holds: the first projection of every orbifold entire "
                        "curve is constant, so its image lies in a single fiber");
    out.trace.push_back("stage 2: marked points on a generic fiber, " +
                        std::to_string(fibers2.size()));
    out.stage2 = cartan_contradiction(to_scenario(fibers2));
    out.stage2_ran = true;
    for (const auto& line : out.stage2.trace) out.trace.push_back("  " + line);
    out.outcome = out.stage2.outcome;
    if (out.outcome == Outcome::Holds) {
        if (exceptional.empty()) {
            out.trace.push_back(
                "stage 2 holds on every fiber: every orbifold entire curve is constant; "
                "the pair is quasi-hyperbolic");
        } else {
            std::string locus;
            for (const auto& f : exceptional) locus += (locus.empty() ? "" : ", ") + f;
            out.trace.push_back(
                "stage 2 holds on every generic fiber: every orbifold entire curve is "
                "constant or contained in the exceptional locus {" +
                locus + "}; the pair is quasi-hyperbolic");
        }
    } else {
        out.trace.push_back("stage 2 gives no contradiction on a generic fiber");
    }
    return out;
}

DefectVerdict log_general_type_gate(
    long long dim, const std::vector<std::pair<long long, long long>>& targets) {
    if (dim < 1) throw usage_error("log gate: ambient dimension must be >= 1");
    DefectVerdict v;
    v.defect_sum = Rational(0);
    int step = 1;
    for (const auto& [degree, mult] : targets) {
        if (degree < 1) throw usage_error("log gate: degrees must be >= 1");
        if (mult < 2) throw usage_error("log gate: multiplicities must be >= 2");
        Rational term = (Rational(1) - Rational(1, mult)) * Rational(degree);
        v.terms.push_back(term);
        v.defect_sum += term;
        v.trace.push_back(std::to_string(step++) + ". target of degree " +
                          std::to_string(degree) + " with multiplicity " + std::to_string(mult) +
                          ": contributes " + term.to_string());
    }
    Rational cap(dim + 1);
    v.witness = v.defect_sum - cap;
    v.outcome = strict_outcome(v.witness);
    v.trace.push_back(std::to_string(step) + ". sum " + v.defect_sum.to_string() +
                      (v.outcome == Outcome::Holds ? " > " : " <= ") + cap.to_string() +
                      ": K + Delta is " + (v.outcome == Outcome::Holds ? "" : "not ") +
                      "of log general type" +
                      (v.outcome == Outcome::Holds
                           ? "; degeneracy of entire curves is conjectured"
                           : ""));
    return v;
}

}  // namespace orbigeo
