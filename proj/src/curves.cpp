#include "orbigeo/curves.hpp"

#include <algorithm>
#include <numeric>

#include "orbigeo/errors.hpp"

namespace orbigeo {

Rational canonical_degree(const OrbCurve& c) {
    if (c.genus < 0) throw usage_error("orbifold curve: genus must be >= 0");
    Rational deg(2 * c.genus - 2);
    for (long long m : c.marks) {
        if (m < 2) throw usage_error("orbifold curve: marked multiplicities must be >= 2");
        deg += Rational(1) - Rational(1, m);
    }
    return deg;
}

CurveClassification classify_curve(const OrbCurve& c) {
    Rational deg = canonical_degree(c);
    if (deg.signum() < 0) return {CurveKind::Rational, deg, ""};
    if (deg.signum() > 0) return {CurveKind::Hyperbolic, deg, ""};
    if (c.genus == 1 && c.marks.empty()) return {CurveKind::Elliptic, deg, "(E,)"};
    std::vector<long long> sorted = c.marks;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == std::vector<long long>{2, 3, 6}) return {CurveKind::Elliptic, deg, "(2,3,6)"};
    if (sorted == std::vector<long long>{2, 4, 4}) return {CurveKind::Elliptic, deg, "(2,4,4)"};
    if (sorted == std::vector<long long>{3, 3, 3}) return {CurveKind::Elliptic, deg, "(3,3,3)"};
    if (sorted == std::vector<long long>{2, 2, 2, 2}) {
        return {CurveKind::Elliptic, deg, "(2,2,2,2)"};
    }
    throw std::logic_error("classify_curve: canonical degree 0 outside the elliptic list");
}

long long minimal_multiplicity(long long n, const std::vector<long long>& row) {
    if (n < 2) throw usage_error("minimal_multiplicity: cover degree must be >= 2");
    bool any = false;
    long long out = 1;
    for (long long t : row) {
        if (t < 0) throw usage_error("minimal_multiplicity: pullback multiplicities must be >= 0");
        if (t == 0) continue;
        any = true;
        long long factor = n / std::gcd(n, t);
        out = std::lcm(out, factor);
    }
    if (!any) throw usage_error("minimal_multiplicity: row has no positive entry");
    return out;
}

Rational plane_cover_bound(long long d, long long n, long long deg_c, long long ambient) {
    if (d < 1) throw usage_error("plane cover: branch degree must be >= 1");
    if (n < 2) throw usage_error("plane cover: cover degree must be >= 2");
    if (d % n != 0) {
        throw usage_error("plane cover: " + std::to_string(n) + " does not divide " +
                          std::to_string(d));
    }
    if (deg_c < 1) throw usage_error("plane cover: deg C must be >= 1");
    if (ambient < 2) throw usage_error("plane cover: ambient dimension must be >= 2");
    return Rational(d - d / n - (ambient + 2)) * Rational(deg_c);
}

std::string cover_verdict_name(CoverVerdict v) {
    switch (v) {
        case CoverVerdict::AlgebraicallyHyperbolic: return "AlgebraicallyHyperbolic";
        case CoverVerdict::NoRationalCurves: return "NoRationalCurves";
        case CoverVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

CoverVerdict plane_cover_verdict(long long d, long long n) {
    Rational coeff = plane_cover_bound(d, n, 1);
    if (coeff.signum() > 0) return CoverVerdict::AlgebraicallyHyperbolic;
    if (coeff.is_zero()) return CoverVerdict::NoRationalCurves;
    return CoverVerdict::Inconclusive;
}

Rational hirzebruch_cover_bound(long long N, long long a, long long b, long long n,
                                long long c, long long dd) {
    if (N < 0) throw usage_error("Hirzebruch cover: N must be >= 0");
    if (n < 2) throw usage_error("Hirzebruch cover: cover degree must be >= 2");
    if (a % n != 0 || b % n != 0) {
        throw usage_error("Hirzebruch cover: " + std::to_string(n) +
                          " must divide both a and b");
    }
    if (a * (N - 1) + b < 0) {
        throw usage_error("Hirzebruch cover: branch class needs a(N-1) + b >= 0");
    }
    if (c < 0 || c * N + dd < 0) {
        throw usage_error("Hirzebruch cover: (c,dd) is not a plausible effective class");
    }
    Rational lead(std::min(a - 3, b - 2));
    Rational deg_c1(c * (N + 1) + dd);
    Rational pairing(b * c + a * dd + a * c * N);
    return lead * deg_c1 - pairing / Rational(n);
}

EllipticObstruction elliptic_image_obstruction(long long n) {
    if (n < 2) throw usage_error("elliptic_image_obstruction: n must be >= 2");
    EllipticObstruction out;
    out.n = n;
    out.checked = {2, 3, 4, 6};
    for (long long m : out.checked) {
        if (std::gcd(n, m) != 1) out.shared.push_back(m);
    }
    out.holds = out.shared.empty();
    return out;
}

SeveriCount severi_condition_count(long long d,
                                   const std::array<std::vector<long long>, 5>& partitions,
                                   long long g) {
    if (d < 5) throw usage_error("severi count: degree must be >= 5");
    if (g < 0) throw usage_error("severi count: genus must be >= 0");
    SeveriCount out;
    out.parameters = 3 * d + g - 1;
    for (const auto& parts : partitions) {
        long long sum = 0;
        for (long long p : parts) {
            if (p < 5 || p % 5 != 0) {
                throw usage_error("severi count: tangency orders must be positive multiples of 5");
            }
            sum += p;
        }
        if (sum != d) {
            throw usage_error("severi count: tangency orders on each line must sum to the degree");
        }
        out.conditions += d - static_cast<long long>(parts.size());
    }
    out.excess = out.conditions - out.parameters;
    return out;
}

}  // namespace orbigeo
