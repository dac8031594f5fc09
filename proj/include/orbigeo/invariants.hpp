#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbigeo/rational.hpp"
#include "orbigeo/singularities.hpp"
#include "orbigeo/surface.hpp"

namespace orbigeo {

// One irreducible branch divisor of the pair: numerical class, orbifold
// multiplicity m, geometric genus of the normalization, and the number of
// preimages of the singular set on the normalization.
struct BranchComponent {
    std::string id;
    DivisorClass cls;
    long long mult = 1;
    long long genus = 0;
    long long removed = 0;
};

// An ADE point of the boundary divisor with its ordered branch assignment;
// branch multiplicities are drawn from the referenced components.  A
// component id may repeat when two local branches belong to one component.
struct SingularPointSpec {
    std::string id;
    AdeType ade;
    std::vector<std::string> branches;
};

struct OrbifoldConfig {
    BaseSurface base;
    std::vector<BranchComponent> components;
    std::vector<SingularPointSpec> singular_points;

    const BranchComponent& component(const std::string& id) const;
    // unique ids, resolvable references, branch counts matching the type
    void validate() const;
};

// Exact orbifold Chern data.  segre2 and jet2 are derived so the identities
// s2 = c1^2 - c2 and jet2 = 13 c1^2 - 9 c2 hold by construction.
struct ChernReport {
    Rational c1sq;
    Rational c2;

    Rational segre2() const { return c1sq - c2; }
    Rational jet2() const { return 13 * c1sq - 9 * c2; }
    Rational chi() const { return (c1sq + c2) / 12; }
    // whole-surface Euler characteristic, i.e. c1^2 + c2 divisible by 12
    bool chi_integral() const { return chi().is_integer(); }
};

// e(D \ S) for one open component: 2 - 2g - r
long long euler_open_component(long long genus, long long removed);

// (K_X + sum (1 - 1/m_i) D_i)^2 by bilinearity on the Neron-Severi lattice
Rational c1_squared(const OrbifoldConfig& cfg);

// isotropy order at one singular point of the configuration
Rational beta_at(const OrbifoldConfig& cfg, const SingularPointSpec& point);

// orbifold Gauss-Bonnet:
//   e(X) - sum (1 - 1/m_i) e(D_i \ S) - sum_p (1 - 1/beta(p))
// Appends one warning per point that exercises the odd-D isotropy row.
Rational c2_orbifold(const OrbifoldConfig& cfg, std::vector<std::string>* warnings = nullptr);

ChernReport chern_of(const OrbifoldConfig& cfg, std::vector<std::string>* warnings = nullptr);

// Contraction of ADE configurations of (-2)-curves: c1^2 is unchanged and
// each contracted point adjusts c2 by megyesi_correction(type).
ChernReport megyesi_contract(const Rational& c1sq, const Rational& c2,
                             const std::map<AdeType, long long>& counts);

// Chern numbers of the desingularised n-cyclic cover of P^2 branched along a
// degree-d curve:  c1^2 = n(-3 + (1 - 1/n)d)^2,  c2 = 3n + (n-1)(d^2 - 3d).
ChernReport cyclic_cover_chern(long long d, long long n);

// An orbifold covering of degree deg multiplies both Chern numbers.
ChernReport cover_multiplicativity(const OrbifoldConfig& cfg, long long deg);
ChernReport scale_report(const ChernReport& r, long long deg);

// Optional bookkeeping check: branch-slot incidences per component vs the
// declared removed count.  Returns one message per mismatching component.
std::vector<std::string> incidence_mismatches(const OrbifoldConfig& cfg);

}  // namespace orbigeo
