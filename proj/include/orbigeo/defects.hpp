#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbigeo/hyperbolicity.hpp"
#include "orbigeo/rational.hpp"

namespace orbigeo {

// Targets for a truncated defect argument in P^n: `count` hyperplanes (or
// hypersurfaces) over which the curve ramifies to order at least `mult`.
struct DefectTarget {
    long long mult = 2;
    long long count = 1;
};

struct DefectScenario {
    long long dim = 1;  // truncation level n of the defect relation in P^n
    std::vector<DefectTarget> targets;
};

struct DefectVerdict {
    Outcome outcome;           // Holds = forces degeneracy / constancy
    Rational witness;          // sum of defect lower bounds minus (n+1)
    Rational defect_sum;
    std::vector<Rational> terms;     // one defect lower bound per target group
    std::vector<std::string> trace;  // numbered inequality chain
};

// Cartan's truncated defect relation: sum delta^[n] <= n+1, against the
// lower bound delta^[n] >= 1 - n/m for ramification order m.  Holds exactly
// when sum count (1 - n/m) exceeds n+1 strictly; the boundary reports
// Outcome::Boundary.
DefectVerdict cartan_contradiction(const DefectScenario& s);

struct ProductVerdict {
    Outcome outcome;
    DefectVerdict stage1;
    DefectVerdict stage2;
    bool stage2_ran = false;
    std::vector<std::string> exceptional;  // fibers exempt from the stage-2 count
    std::vector<std::string> trace;
};

// Two-projection argument on P^1 x P^1: stage 1 forces the first projection
// of an orbifold entire curve to be constant, stage 2 forces constancy
// inside a generic fiber; fibers named `exceptional` escape stage 2 and are
// reported as the exceptional locus.
ProductVerdict product_projection_argument(const std::vector<long long>& fibers1,
                                           const std::vector<long long>& fibers2,
                                           const std::vector<std::string>& exceptional = {});

// Log general type gate in P^n: sum (1 - 1/m_i) d_i > n+1.  A scenario that
// passes the gate but fails cartan_contradiction is only conjecturally
// degenerate.
DefectVerdict log_general_type_gate(long long dim,
                                    const std::vector<std::pair<long long, long long>>& targets);

}  // namespace orbigeo
