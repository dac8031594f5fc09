#include "orbigeo/singularities.hpp"

#include <cstdlib>

#include "orbigeo/errors.hpp"

namespace orbigeo {

AdeType AdeType::a(long long k) {
    if (k < 1) throw usage_error("A_k requires k >= 1");
    return {AdeFamily::A, k};
}

AdeType AdeType::d(long long k) {
    if (k < 4) throw usage_error("D_k requires k >= 4");
    return {AdeFamily::D, k};
}

AdeType AdeType::e(long long k) {
    if (k < 6 || k > 8) throw usage_error("E_k requires k in {6,7,8}");
    return {AdeFamily::E, k};
}

AdeType AdeType::parse(const std::string& text) {
    if (text.size() < 2) throw usage_error("unsupported singularity type '" + text + "'");
    char fam = text[0];
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw usage_error("unsupported singularity type '" + text + "'");
        }
    }
    long long k = std::strtoll(text.c_str() + 1, nullptr, 10);
    try {
        switch (fam) {
            case 'A': return a(k);
            case 'D': return d(k);
            case 'E': return e(k);
            default: break;
        }
    } catch (const usage_error&) {
        throw usage_error("unsupported singularity type '" + text + "'");
    }
    throw usage_error("unsupported singularity type '" + text + "'");
}

std::string AdeType::name() const {
    const char fam = family == AdeFamily::A ? 'A' : (family == AdeFamily::D ? 'D' : 'E');
    return fam + std::to_string(index);
}

int AdeType::branch_count() const {
    switch (family) {
        case AdeFamily::A: return index % 2 == 0 ? 1 : 2;
        case AdeFamily::D: return 3;
        case AdeFamily::E: return index == 7 ? 2 : 1;
    }
    return 0;
}

bool uses_odd_d_row(const AdeType& t) {
    return t.family == AdeFamily::D && t.index % 2 == 1;
}

std::string odd_d_row_warning(const AdeType& t, const std::string& point_id) {
    return "beta(" + t.name() + (point_id.empty() ? "" : " at '" + point_id + "'") +
           "): odd D-index isotropy row; published table and diagram disagree on the "
           "indexing of this family (D_{2n+3} vs D_{2n+1}); using 2(2n+1)m^2 for the "
           "straight-branch multiplicity m with both curved slots fixed at 2";
}

namespace {

void expect_slots(const AdeType& t, const std::vector<long long>& mults) {
    if (static_cast<int>(mults.size()) != t.branch_count()) {
        throw usage_error("beta(" + t.name() + "): expected " +
                          std::to_string(t.branch_count()) + " branch multiplicities, got " +
                          std::to_string(mults.size()));
    }
    for (long long m : mults) {
        if (m < 1) throw usage_error("beta(" + t.name() + "): multiplicities must be >= 1");
    }
}

Rational reciprocal_square_row(const Rational& front, const Rational& bracket,
                               const AdeType& t, const std::string& point_id) {
    if (bracket.signum() <= 0) {
        std::string where = point_id.empty() ? "" : " at '" + point_id + "'";
        throw non_klt_error("beta(" + t.name() + ")" + where +
                                ": bracket " + bracket.to_string() +
                                " is not positive (configuration is not klt)",
                            point_id);
    }
    return front * bracket.reciprocal().squared();
}

}  // namespace

Rational beta(const AdeType& t, const std::vector<long long>& mults,
              const std::string& point_id) {
    expect_slots(t, mults);
    switch (t.family) {
        case AdeFamily::A: {
            if (t.index == 1) {
                return Rational(mults[0]) * Rational(mults[1]);
            }
            if (t.index % 2 == 0) {
                // A_{2n}
                long long n = t.index / 2;
                Rational bracket = Rational(1, mults[0]) + Rational(1, 2 * n + 1) - Rational(1, 2);
                return reciprocal_square_row(Rational(2, 2 * n + 1), bracket, t, point_id);
            }
            // A_{2n-1}, n >= 2
            long long n = (t.index + 1) / 2;
            Rational bracket =
                Rational(1, mults[0]) + Rational(1, mults[1]) + Rational(1, n) - Rational(1);
            return reciprocal_square_row(Rational(4, n), bracket, t, point_id);
        }
        case AdeFamily::D: {
            if (t.index % 2 == 0) {
                // D_{2n+2}: slots (m_i, m_j, m_k), straight branch last
                long long n = (t.index - 2) / 2;
                Rational bracket = Rational(1, mults[0]) + Rational(1, mults[1]) +
                                   Rational(1, n * mults[2]) - Rational(1);
                return reciprocal_square_row(Rational(4, n), bracket, t, point_id);
            }
            // D_{2n+3}: the two curved slots must carry multiplicity 2, the
            // straight branch carries the free multiplicity
            long long n = (t.index - 3) / 2;
            if (mults[0] != 2 || mults[1] != 2) {
                throw usage_error("beta(" + t.name() +
                                  "): the two curved branches must have multiplicity 2");
            }
            return Rational(2 * (2 * n + 1)) * Rational(mults[2]) * Rational(mults[2]);
        }
        case AdeFamily::E: {
            if (t.index != 7) {
                throw unsupported_singularity_error(
                    "beta(" + t.name() + "): only E_7 appears in the isotropy table");
            }
            if (mults[0] != 2 || mults[1] != 2) {
                throw usage_error("beta(E7): both branch multiplicities must equal 2");
            }
            return Rational(96);
        }
    }
    throw usage_error("beta: invalid singularity type");
}

Rational megyesi_correction(const AdeType& t) {
    Rational group_order;
    switch (t.family) {
        case AdeFamily::A: group_order = Rational(t.index + 1); break;
        case AdeFamily::D: group_order = Rational(4 * (t.index - 2)); break;
        case AdeFamily::E:
            group_order = Rational(t.index == 6 ? 24 : (t.index == 7 ? 48 : 120));
            break;
    }
    return Rational(-(t.index + 1)) + group_order.reciprocal();
}

}  // namespace orbigeo
