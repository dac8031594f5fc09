#include "orbigeo/invariants.hpp"

#include <set>

#include "orbigeo/errors.hpp"

namespace orbigeo {

const BranchComponent& OrbifoldConfig::component(const std::string& id) const {
    for (const auto& c : components) {
        if (c.id == id) return c;
    }
    throw usage_error("unknown component '" + id + "'");
}

void OrbifoldConfig::validate() const {
    std::set<std::string> seen;
    for (const auto& c : components) {
        if (!seen.insert(c.id).second) throw usage_error("duplicate component id '" + c.id + "'");
        if (c.cls.surface != base) throw usage_error("component '" + c.id + "' lives on another surface");
        if (c.mult < 1) throw usage_error("component '" + c.id + "': multiplicity must be >= 1");
        if (c.genus < 0 || c.removed < 0) {
            throw usage_error("component '" + c.id + "': genus and removed must be >= 0");
        }
    }
    std::set<std::string> seen_points;
    for (const auto& p : singular_points) {
        if (!seen_points.insert(p.id).second) {
            throw usage_error("duplicate singular point id '" + p.id + "'");
        }
        if (static_cast<int>(p.branches.size()) != p.ade.branch_count()) {
            throw usage_error("singular point '" + p.id + "': type " + p.ade.name() +
                              " takes " + std::to_string(p.ade.branch_count()) +
                              " branches, got " + std::to_string(p.branches.size()));
        }
        for (const auto& b : p.branches) component(b);
    }
}

long long euler_open_component(long long genus, long long removed) {
    if (genus < 0 || removed < 0) throw usage_error("genus and removed must be >= 0");
    return 2 - 2 * genus - removed;
}

Rational c1_squared(const OrbifoldConfig& cfg) {
    QClass log_canonical(canonical_class(cfg.base));
    for (const auto& c : cfg.components) {
        log_canonical.add_scaled(Rational(1) - Rational(1, c.mult), c.cls);
    }
    return self_intersection(log_canonical);
}

Rational beta_at(const OrbifoldConfig& cfg, const SingularPointSpec& point) {
    std::vector<long long> mults;
    mults.reserve(point.branches.size());
    for (const auto& id : point.branches) mults.push_back(cfg.component(id).mult);
    return beta(point.ade, mults, point.id);
}

Rational c2_orbifold(const OrbifoldConfig& cfg, std::vector<std::string>* warnings) {
    Rational total(base_euler(cfg.base));
    for (const auto& c : cfg.components) {
        total -= (Rational(1) - Rational(1, c.mult)) *
                 Rational(euler_open_component(c.genus, c.removed));
    }
    for (const auto& p : cfg.singular_points) {
        Rational b = beta_at(cfg, p);
        if (warnings && uses_odd_d_row(p.ade)) {
            warnings->push_back(odd_d_row_warning(p.ade, p.id));
        }
        total -= Rational(1) - b.reciprocal();
    }
    return total;
}

ChernReport chern_of(const OrbifoldConfig& cfg, std::vector<std::string>* warnings) {
    return {c1_squared(cfg), c2_orbifold(cfg, warnings)};
}

ChernReport megyesi_contract(const Rational& c1sq, const Rational& c2,
                             const std::map<AdeType, long long>& counts) {
    Rational adjusted = c2;
    for (const auto& [type, count] : counts) {
        if (count < 0) throw usage_error("megyesi_contract: counts must be non-negative");
        adjusted += Rational(count) * megyesi_correction(type);
    }
    return {c1sq, adjusted};
}

ChernReport cyclic_cover_chern(long long d, long long n) {
    if (d < 1) throw usage_error("cyclic cover: branch degree must be >= 1");
    if (n < 2) throw usage_error("cyclic cover: degree must be >= 2");
    if (d % n != 0) {
        throw usage_error("cyclic cover: " + std::to_string(n) + " does not divide " +
                          std::to_string(d));
    }
    Rational inner = Rational(-3) + (Rational(1) - Rational(1, n)) * Rational(d);
    Rational c1sq = Rational(n) * inner.squared();
    Rational c2 = Rational(3 * n) + Rational(n - 1) * Rational(d * d - 3 * d);
    return {c1sq, c2};
}

ChernReport scale_report(const ChernReport& r, long long deg) {
    if (deg < 1) throw usage_error("covering degree must be >= 1");
    return {Rational(deg) * r.c1sq, Rational(deg) * r.c2};
}

ChernReport cover_multiplicativity(const OrbifoldConfig& cfg, long long deg) {
    return scale_report(chern_of(cfg), deg);
}

std::vector<std::string> incidence_mismatches(const OrbifoldConfig& cfg) {
    std::vector<std::string> out;
    for (const auto& c : cfg.components) {
        long long slots = 0;
        for (const auto& p : cfg.singular_points) {
            for (const auto& b : p.branches) {
                if (b == c.id) ++slots;
            }
        }
        if (slots != c.removed) {
            out.push_back("component '" + c.id + "': removed=" + std::to_string(c.removed) +
                          " but " + std::to_string(slots) +
                          " branch incidences are declared at singular points");
        }
    }
    return out;
}

}  // namespace orbigeo
