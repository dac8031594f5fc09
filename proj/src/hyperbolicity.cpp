#include "orbigeo/hyperbolicity.hpp"

#include "orbigeo/errors.hpp"

namespace orbigeo {

std::string criterion_name(Criterion c) {
    switch (c) {
        case Criterion::SegrePositive: return "SegrePositive";
        case Criterion::Jet2Positive: return "Jet2Positive";
        case Criterion::Noether: return "Noether";
        case Criterion::BMY: return "BMY";
        case Criterion::BallQuotient: return "BallQuotient";
        case Criterion::HorikawaEvenExtremal: return "HorikawaEvenExtremal";
        case Criterion::HorikawaOddExtremal: return "HorikawaOddExtremal";
        case Criterion::NodalSegre: return "NodalSegre";
    }
    return "?";
}

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Holds: return "Holds";
        case Outcome::Fails: return "Fails";
        case Outcome::Boundary: return "Boundary";
    }
    return "?";
}

namespace {

Outcome strict_outcome(const Rational& margin) {
    if (margin.signum() > 0) return Outcome::Holds;
    return margin.is_zero() ? Outcome::Boundary : Outcome::Fails;
}

bool is_even_integer(const Rational& v) {
    return v.is_integer() && (v.num() % BigInt(2)).is_zero();
}

Verdict equality_verdict(Criterion c, const Rational& deviation, bool extra_ok,
                         std::string citation, std::string detail) {
    Outcome out = (deviation.is_zero() && extra_ok) ? Outcome::Holds : Outcome::Fails;
    return {c, out, deviation, std::move(citation), std::move(detail)};
}

}  // namespace

Verdict check_segre(const ChernReport& r) {
    Rational s2 = r.segre2();
    Verdict v{Criterion::SegrePositive, strict_outcome(s2), s2,
              "McQuillan: positive second Segre number implies quasi-hyperbolicity",
              ""};
    if (v.outcome == Outcome::Holds) {
        v.detail =
            "quasi-hyperbolic; h^0(S^m Omega) >= c m^3 for some c > 0 (orbifold Riemann-Roch)";
    } else {
        v.detail = "second Segre number is not positive; criterion inconclusive";
    }
    return v;
}

Jet2Result jet2_bound(const ChernReport& r) {
    Rational margin = r.jet2();
    Rational coeff = margin / 648;
    Verdict v{Criterion::Jet2Positive, strict_outcome(margin), margin,
              "order-2 jet differentials with Ahlfors-Schwarz vanishing (Demailly; "
              "McQuillan for orbifolds)",
              ""};
    if (v.outcome == Outcome::Holds) {
        v.detail = "h^0(E_{2,m}) >= " + coeff.to_string() +
                   " m^4 + O(m^3); every orbifold entire curve satisfies an order-2 "
                   "algebraic differential equation";
    } else {
        v.detail = "13c1^2 - 9c2 is not positive; no order-2 jet conclusion";
    }
    return {v, coeff};
}

std::vector<Verdict> geography(const ChernReport& r) {
    std::vector<Verdict> out;
    Rational noether = r.c1sq - (r.c2 - 36) / 5;
    out.push_back({Criterion::Noether, strict_outcome(noether), noether,
                   "Noether inequality c1^2 >= (c2 - 36)/5",
                   "numeric geography only (minimality and general type not checked)"});
    Rational bmy = 3 * r.c2 - r.c1sq;
    out.push_back({Criterion::BMY, strict_outcome(bmy), bmy,
                   "Bogomolov-Miyaoka-Yau inequality c1^2 <= 3c2",
                   "numeric geography only (minimality and general type not checked)"});
    Rational ball = r.c1sq - 3 * r.c2;
    out.push_back(equality_verdict(Criterion::BallQuotient, ball, true,
                                   "Yau: c1^2 = 3c2 characterizes ball quotients",
                                   ball.is_zero() ? "on the Bogomolov-Miyaoka-Yau line: "
                                                    "quotient of the unit ball, hyperbolic"
                                                  : "not on the c1^2 = 3c2 line"));
    Rational even_dev = r.c2 - (5 * r.c1sq + 36);
    out.push_back(equality_verdict(
        Criterion::HorikawaEvenExtremal, even_dev, is_even_integer(r.c1sq),
        "Horikawa line c2 = 5c1^2 + 36 (c1^2 even)",
        even_dev.is_zero() && is_even_integer(r.c1sq)
            ? "even-extremal: minimal Segre number in the geography"
            : "not on the even Horikawa line"));
    Rational odd_dev = r.c2 - (5 * r.c1sq + 30);
    bool odd_c1 = r.c1sq.is_integer() && !is_even_integer(r.c1sq);
    out.push_back(equality_verdict(Criterion::HorikawaOddExtremal, odd_dev, odd_c1,
                                   "Horikawa line c2 = 5c1^2 + 30 (c1^2 odd)",
                                   odd_dev.is_zero() && odd_c1
                                       ? "odd-extremal: minimal Segre number in the geography"
                                       : "not on the odd Horikawa line"));
    return out;
}

HorikawaClassification classify_horikawa(const ChernReport& r) {
    Rational even_dev = r.c2 - (5 * r.c1sq + 36);
    Rational odd_dev = r.c2 - (5 * r.c1sq + 30);
    if (odd_dev.is_zero() && r.c1sq.is_integer() && !is_even_integer(r.c1sq)) {
        throw usage_error(
            "classify_horikawa: odd-extremal input (c2 = 5c1^2 + 30); the published "
            "classification covers even c1^2 only");
    }
    if (!even_dev.is_zero() || !is_even_integer(r.c1sq)) {
        throw usage_error("classify_horikawa: input is not even-Horikawa extremal "
                          "(c2 - 5c1^2 - 36 = " +
                          even_dev.to_string() + ")");
    }
    HorikawaClassification out;
    out.chi = r.chi();
    if (!out.chi.is_integer()) {
        throw usage_error("classify_horikawa: chi = " + out.chi.to_string() +
                          " is not an integer");
    }
    long long chi = out.chi.num().to_longlong();
    out.type1 = chi == 4;
    out.type2 = chi == 7;
    // double covers of F_N branched in type (6, 2a): chi = 3N + 2a - 1 with
    // 2a >= -N, so 2N <= chi + 1 bounds the enumeration completely
    for (long long n = 0; 2 * n <= chi + 1; ++n) {
        long long two_a = chi + 1 - 3 * n;
        if (two_a % 2 != 0) continue;
        if (two_a < -n) continue;
        out.type3.push_back({n, two_a / 2});
    }
    return out;
}

Verdict nodal_segre_condition(long long d, long long l) {
    if (d < 1) throw usage_error("nodal_segre_condition: degree must be >= 1");
    if (l < 0) throw usage_error("nodal_segre_condition: node count must be >= 0");
    Rational threshold = Rational(8, 3) * (Rational(d * d) - Rational(5, 2) * Rational(d));
    Rational margin = Rational(l) - threshold;
    Verdict v{Criterion::NodalSegre, strict_outcome(margin), margin,
              "Bogomolov-De Oliveira: nodal surfaces in P^3 with l > (8/3)(d^2 - 5d/2) "
              "nodes carry a positive orbifold Segre number",
              "threshold (8/3)(d^2 - 5d/2) = " + threshold.to_string()};
    return v;
}

}  // namespace orbigeo
