#include "doctest.h"
#include "orbigeo/rational.hpp"

#include <cstdint>

using orbigeo::BigInt;
using orbigeo::Rational;

namespace {

// deterministic generator for property checks
struct Lcg {
    std::uint64_t state = 0x243f6a8885a308d3ull;
    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 16;
    }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace

TEST_CASE("bigint decimal round trip") {
    for (const char* s : {"0", "1", "-1", "999999999", "1000000000", "-1000000001",
                          "123456789012345678901234567890", "-98765432109876543210"}) {
        CHECK(BigInt::from_string(s).to_string() == s);
    }
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt::from_string("-0").to_string() == "0");
    CHECK(BigInt::from_string("007").to_string() == "7");
    CHECK_THROWS(BigInt::from_string("12a"));
    CHECK_THROWS(BigInt::from_string(""));
}

TEST_CASE("bigint arithmetic agrees with machine integers in range") {
    Lcg rng;
    for (int i = 0; i < 2000; ++i) {
        long long a = rng.range(-1000000, 1000000);
        long long b = rng.range(-1000000, 1000000);
        CHECK((BigInt(a) + BigInt(b)).to_longlong() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_longlong() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_longlong() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_longlong() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_longlong() == a % b);
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("bigint long division invariants on wide values") {
    Lcg rng;
    for (int i = 0; i < 500; ++i) {
        BigInt a = BigInt(rng.range(-1000000000, 1000000000)) * BigInt(rng.range(0, 1000000000)) +
                   BigInt(rng.range(-1000000, 1000000));
        BigInt b = BigInt(rng.range(1, 2000000000)) * BigInt(rng.range(1, 1000000)) +
                   BigInt(rng.range(0, 999));
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.is_negative() == a.is_negative());
    }
}

TEST_CASE("bigint gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    BigInt big = BigInt::from_string("123456789012345678901234567890");
    CHECK(BigInt::gcd(big * BigInt(35), big * BigInt(21)) == big * BigInt(7));
}

TEST_CASE("rational normalization keeps lowest terms and positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).num() == BigInt(-1));
    CHECK(Rational(2, -4).den() == BigInt(2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).den() == BigInt(1));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational arithmetic and comparisons against a cross-multiplication oracle") {
    Lcg rng;
    for (int i = 0; i < 2000; ++i) {
        long long an = rng.range(-500, 500), ad = rng.range(1, 60);
        long long bn = rng.range(-500, 500), bd = rng.range(1, 60);
        Rational a(an, ad), b(bn, bd);
        CHECK(a + b == Rational(an * bd + bn * ad, ad * bd));
        CHECK(a - b == Rational(an * bd - bn * ad, ad * bd));
        CHECK(a * b == Rational(an * bn, ad * bd));
        if (bn != 0) CHECK(a / b == Rational(an * bd, ad * bn));
        CHECK((a < b) == (an * bd < bn * ad));
        CHECK((a == b) == (an * bd == bn * ad));
    }
}

TEST_CASE("rational parse and to_string") {
    CHECK(Rational::parse("7/5").to_string() == "7/5");
    CHECK(Rational::parse("-6/4").to_string() == "-3/2");
    CHECK(Rational::parse("10/2").to_string() == "5");
    CHECK(Rational::parse("-12").to_string() == "-12");
    CHECK(Rational(33, 32) - Rational(2, 3) + Rational(1, 9) == Rational::parse("137/288"));
    CHECK(Rational(1, 3).is_integer() == false);
    CHECK(Rational(9, 3).is_integer());
}

TEST_CASE("rational reciprocal and squares") {
    CHECK(Rational(3, 4).reciprocal() == Rational(4, 3));
    CHECK(Rational(-1, 4).reciprocal().squared() == Rational(16));
    CHECK_THROWS(Rational(0).reciprocal());
}
