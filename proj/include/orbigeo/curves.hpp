#pragma once

#include <array>
#include <string>
#include <vector>

#include "orbigeo/rational.hpp"

namespace orbigeo {

// Orbifold Riemann surface: genus plus marked points of multiplicity >= 2.
struct OrbCurve {
    long long genus = 0;
    std::vector<long long> marks;
};

// deg K = 2g - 2 + sum (1 - 1/m_i)
Rational canonical_degree(const OrbCurve& c);

enum class CurveKind { Rational, Elliptic, Hyperbolic };

struct CurveClassification {
    CurveKind kind;
    Rational degree;
    // for elliptic curves, which of the degree-zero patterns matched:
    // "(E,)", "(2,3,6)", "(2,4,4)", "(3,3,3)", "(2,2,2,2)"
    std::string elliptic_type;
};

// Sign classification of the canonical degree; the degree-zero cases are
// exactly the four patterns above (enforced by an exhaustiveness test).
CurveClassification classify_curve(const OrbCurve& c);

// Minimal orbifold multiplicity at one point of a curve mapping to an
// n-cyclic cover: lcm_j(n / gcd(n, t_j)) over the positive pullback
// multiplicities t_j; the result is the least m with n | m t_j for all j.
long long minimal_multiplicity(long long n, const std::vector<long long>& row);

// Genus bound for curves on the n-cyclic cover of P^2 branched along a very
// general degree-d curve (not contained in the branch locus):
//   deg K_C >= (d - d/n - 4) deg C.
// `ambient` generalizes to covers of P^ambient branched along a hypersurface:
// the coefficient becomes d - d/n - (ambient + 2).
Rational plane_cover_bound(long long d, long long n, long long deg_c, long long ambient = 2);

enum class CoverVerdict { AlgebraicallyHyperbolic, NoRationalCurves, Inconclusive };
std::string cover_verdict_name(CoverVerdict v);

// Trichotomy of the coefficient d - d/n - 4; every verdict is modulo curves
// in the branch locus.
CoverVerdict plane_cover_verdict(long long d, long long n);

// Genus bound for curves on the n-cyclic cover of F_N branched along a very
// general divisor of class aT + bF, for an image curve of class cT + ddF:
//   deg K_C >= min(a-3, b-2)(c(N+1) + dd) - (bc + a dd + acN)/n.
Rational hirzebruch_cover_bound(long long N, long long a, long long b, long long n,
                                long long c, long long dd);

struct EllipticObstruction {
    long long n;
    bool holds;
    std::vector<long long> checked;  // the multiplicities of the elliptic patterns
    std::vector<long long> shared;   // entries not coprime to n
};

// Coprimality of n with every multiplicity {2,3,4,6} occurring in the
// elliptic orbifold patterns; when it holds, every elliptic curve on the
// n-cyclic cover maps to a singular genus-one curve meeting each branch line
// with multiplicity divisible by n.
EllipticObstruction elliptic_image_obstruction(long long n);

struct SeveriCount {
    long long conditions = 0;  // D
    long long parameters = 0;  // P = 3d + g - 1
    long long excess = 0;      // D - P
};

// Condition count for genus-g plane curves of degree d meeting each of five
// lines with the given tangency orders (positive multiples of 5 summing to
// d on every line):  D = sum_i (d - #parts_i) >= 4d.
SeveriCount severi_condition_count(long long d,
                                   const std::array<std::vector<long long>, 5>& partitions,
                                   long long g);

}  // namespace orbigeo
