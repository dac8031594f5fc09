#pragma once

#include <string>

#include "orbigeo/errors.hpp"
#include "orbigeo/rational.hpp"

namespace orbigeo {

enum class SurfaceKind { ProjectivePlane, Hirzebruch };

// P^2 or the Hirzebruch surface F_N.  On F_N the Neron-Severi basis is
// (T, F) with T^2 = N, T.F = 1, F^2 = 0.
struct BaseSurface {
    SurfaceKind kind = SurfaceKind::ProjectivePlane;
    long long hirzebruch_n = 0;

    static BaseSurface plane() { return {SurfaceKind::ProjectivePlane, 0}; }
    static BaseSurface hirzebruch(long long n) {
        if (n < 0) throw usage_error("Hirzebruch index must be non-negative");
        return {SurfaceKind::Hirzebruch, n};
    }

    bool is_plane() const { return kind == SurfaceKind::ProjectivePlane; }
    std::string name() const {
        return is_plane() ? "P2" : "F" + std::to_string(hirzebruch_n);
    }
    friend bool operator==(const BaseSurface& a, const BaseSurface& b) {
        return a.kind == b.kind && (a.is_plane() || a.hirzebruch_n == b.hirzebruch_n);
    }
    friend bool operator!=(const BaseSurface& a, const BaseSurface& b) { return !(a == b); }
};

// Numerical divisor class: degree d on P^2, or aT + bF on F_N.
struct DivisorClass {
    BaseSurface surface;
    long long a = 0;  // degree on P^2
    long long b = 0;  // unused on P^2

    static DivisorClass on_plane(long long degree) {
        return {BaseSurface::plane(), degree, 0};
    }
    static DivisorClass on_hirzebruch(const BaseSurface& s, long long a, long long b) {
        if (s.is_plane()) throw usage_error("pair classes live on Hirzebruch surfaces");
        return {s, a, b};
    }

    std::string to_string() const {
        if (surface.is_plane()) return std::to_string(a);
        return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
        return x.surface == y.surface && x.a == y.a && x.b == y.b;
    }
};

inline DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    if (x.surface != y.surface) {
        throw usage_error("divisor classes on different base surfaces");
    }
    return {x.surface, x.a + y.a, x.b + y.b};
}

inline DivisorClass operator*(long long c, const DivisorClass& x) {
    return {x.surface, c * x.a, c * x.b};
}

// symmetric bilinear pairing: d1*d2 on P^2, a1*a2*N + a1*b2 + a2*b1 on F_N
inline long long intersect(const DivisorClass& x, const DivisorClass& y) {
    if (x.surface != y.surface) {
        throw usage_error("intersection of classes on different base surfaces");
    }
    if (x.surface.is_plane()) return x.a * y.a;
    return x.a * y.a * x.surface.hirzebruch_n + x.a * y.b + y.a * x.b;
}

// K_{P^2} = -3H, K_{F_N} = -2T + (N-2)F; self-intersection 9 resp. 8
inline DivisorClass canonical_class(const BaseSurface& s) {
    if (s.is_plane()) return DivisorClass::on_plane(-3);
    return DivisorClass::on_hirzebruch(s, -2, s.hirzebruch_n - 2);
}

// topological Euler number of the base: e(P^2) = 3, e(F_N) = 4
inline long long base_euler(const BaseSurface& s) { return s.is_plane() ? 3 : 4; }

// Q-divisor class with rational coefficients, for K_X + Delta arithmetic.
struct QClass {
    BaseSurface surface;
    Rational a;
    Rational b;

    QClass(const BaseSurface& s) : surface(s) {}  // NOLINT
    QClass(const DivisorClass& c) : surface(c.surface), a(c.a), b(c.b) {}  // NOLINT

    QClass& add_scaled(const Rational& coeff, const DivisorClass& c) {
        if (c.surface != surface) {
            throw usage_error("divisor classes on different base surfaces");
        }
        a += coeff * Rational(c.a);
        b += coeff * Rational(c.b);
        return *this;
    }
};

inline Rational intersect(const QClass& x, const QClass& y) {
    if (x.surface != y.surface) {
        throw usage_error("intersection of classes on different base surfaces");
    }
    if (x.surface.is_plane()) return x.a * y.a;
    return x.a * y.a * Rational(x.surface.hirzebruch_n) + x.a * y.b + y.a * x.b;
}

inline Rational self_intersection(const QClass& x) { return intersect(x, x); }

}  // namespace orbigeo
