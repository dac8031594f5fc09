#pragma once

#include <string>
#include <vector>

#include "orbigeo/invariants.hpp"
#include "orbigeo/rational.hpp"

namespace orbigeo {

enum class Criterion {
    SegrePositive,
    Jet2Positive,
    Noether,
    BMY,
    BallQuotient,
    HorikawaEvenExtremal,
    HorikawaOddExtremal,
    NodalSegre,
};

enum class Outcome { Holds, Fails, Boundary };

std::string criterion_name(Criterion c);
std::string outcome_name(Outcome o);

// Outcome of one numeric criterion with its exact margin and the classical
// result it invokes.  Strict-inequality criteria report Boundary exactly
// when the margin vanishes; equality criteria (ball quotient, Horikawa
// lines) hold exactly when the deviation vanishes.
struct Verdict {
    Criterion criterion;
    Outcome outcome;
    Rational witness;
    std::string citation;
    std::string detail;
};

// s2 = c1^2 - c2 > 0: quasi-hyperbolic by McQuillan, and symmetric
// differentials grow like m^3.
Verdict check_segre(const ChernReport& r);

struct Jet2Result {
    Verdict verdict;
    Rational coefficient;  // (13 c1^2 - 9 c2) / 648
};

// Order-2 jet differentials: h^0(E_{2,m}) >= coefficient * m^4 + O(m^3);
// positive coefficient forces an order-2 differential equation on every
// orbifold entire curve.
Jet2Result jet2_bound(const ChernReport& r);

// Numeric geography gates: Noether (c1^2 >= (c2-36)/5), BMY (c1^2 <= 3c2),
// ball quotient (c1^2 = 3c2), and the two Horikawa lines.
std::vector<Verdict> geography(const ChernReport& r);

struct HorikawaType3 {
    long long n;  // Hirzebruch index
    long long a;  // branch curve of type (6, 2a)
};

struct HorikawaClassification {
    Rational chi;
    bool type1 = false;  // double plane, octic branch (chi = 4)
    bool type2 = false;  // double plane, degree-10 branch (chi = 7)
    std::vector<HorikawaType3> type3;  // (N, a) with 3N + 2a - 1 = chi, 2a >= -N
};

// Requires an even-extremal report (c2 = 5 c1^2 + 36, c1^2 even); refuses
// odd-extremal input (classification out of scope) and non-extremal input,
// naming the margin.
HorikawaClassification classify_horikawa(const ChernReport& r);

// Nodal surfaces in P^3 of degree d with l nodes: positive orbifold Segre
// number iff l > (8/3)(d^2 - (5/2)d).
Verdict nodal_segre_condition(long long d, long long l);

}  // namespace orbigeo
