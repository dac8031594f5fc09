#include "doctest.h"
#include "orbigeo/errors.hpp"
#include "orbigeo/invariants.hpp"

#include <cstdint>

using namespace orbigeo;

namespace {

// five general lines of multiplicity 5 in the plane with their ten nodes
OrbifoldConfig quintic_base_pair() {
    OrbifoldConfig cfg;
    cfg.base = BaseSurface::plane();
    for (int i = 1; i <= 5; ++i) {
        cfg.components.push_back(
            {"L" + std::to_string(i), DivisorClass::on_plane(1), 5, 0, 4});
    }
    int n = 0;
    for (int i = 1; i <= 5; ++i) {
        for (int j = i + 1; j <= 5; ++j) {
            cfg.singular_points.push_back({"n" + std::to_string(++n), AdeType::a(1),
                                           {"L" + std::to_string(i), "L" + std::to_string(j)}});
        }
    }
    cfg.validate();
    return cfg;
}

// Persson's chi = 2k-1 configuration on P1 x P1
OrbifoldConfig persson_pair(long long k) {
    OrbifoldConfig cfg;
    cfg.base = BaseSurface::hirzebruch(0);
    auto cls = [&](long long a, long long b) { return DivisorClass::on_hirzebruch(cfg.base, a, b); };
    cfg.components = {
        {"F1", cls(0, 1), k, 0, 4}, {"F2", cls(0, 1), k, 0, 4}, {"C1", cls(1, 1), 2, 0, 4},
        {"C2", cls(1, 1), 2, 0, 4}, {"E0", cls(1, 0), 2, 0, 3}, {"E1", cls(1, 0), 2, 0, 3},
        {"E2", cls(1, 0), 2, 0, 3}, {"E3", cls(1, 0), 2, 0, 2},
    };
    cfg.singular_points = {
        {"d6", AdeType::d(6), {"C1", "C2", "E0"}}, {"q1", AdeType::d(4), {"C1", "E3", "F1"}},
        {"q2", AdeType::d(4), {"C2", "E2", "F1"}}, {"q3", AdeType::d(4), {"C1", "E1", "F2"}},
        {"q4", AdeType::d(4), {"C2", "E3", "F2"}}, {"n1", AdeType::a(1), {"C1", "E2"}},
        {"n2", AdeType::a(1), {"C2", "E1"}},       {"n3", AdeType::a(1), {"E0", "F1"}},
        {"n4", AdeType::a(1), {"E0", "F2"}},       {"n5", AdeType::a(1), {"E1", "F1"}},
        {"n6", AdeType::a(1), {"E2", "F2"}},
    };
    cfg.validate();
    return cfg;
}

struct Lcg {
    std::uint64_t state = 0xb5297a4d3f84d5b5ull;
    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 16;
    }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace

TEST_CASE("open component euler numbers") {
    CHECK(euler_open_component(0, 4) == -2);
    CHECK(euler_open_component(0, 0) == 2);
    CHECK(euler_open_component(1, 3) == -3);
    CHECK_THROWS_AS(euler_open_component(-1, 0), usage_error);
}

TEST_CASE("log canonical self-intersection") {
    OrbifoldConfig octic;
    octic.base = BaseSurface::plane();
    octic.components.push_back({"C", DivisorClass::on_plane(8), 2, 0, 0});
    CHECK(c1_squared(octic) == Rational(1));  // (-3 + 4)^2

    OrbifoldConfig bare_plane;
    bare_plane.base = BaseSurface::plane();
    CHECK(c1_squared(bare_plane) == Rational(9));
    OrbifoldConfig bare_ruled;
    bare_ruled.base = BaseSurface::hirzebruch(5);
    CHECK(c1_squared(bare_ruled) == Rational(8));

    for (long long k = 2; k <= 10; ++k) {
        CHECK(c1_squared(persson_pair(k)) == Rational(2) * (Rational(1) - Rational(2, k)));
    }
}

TEST_CASE("gauss-bonnet on the recorded configurations") {
    OrbifoldConfig bare_plane;
    bare_plane.base = BaseSurface::plane();
    CHECK(c2_orbifold(bare_plane) == Rational(3));

    CHECK(c2_orbifold(quintic_base_pair()) == Rational(7, 5));

    for (long long k = 2; k <= 10; ++k) {
        Rational expected = Rational(33, 32) - Rational(2, k) + Rational(1, k * k);
        CHECK(c2_orbifold(persson_pair(k)) == expected);
    }
    CHECK(c2_orbifold(persson_pair(3)) == Rational(137, 288));
}

TEST_CASE("beta errors carry the offending point id") {
    OrbifoldConfig cfg;
    cfg.base = BaseSurface::plane();
    cfg.components.push_back({"C", DivisorClass::on_plane(2), 4, 0, 1});
    cfg.components.push_back({"D", DivisorClass::on_plane(2), 4, 0, 1});
    cfg.singular_points.push_back({"bad", AdeType::a(3), {"C", "D"}});
    cfg.validate();
    try {
        c2_orbifold(cfg);
        CHECK(false);
    } catch (const non_klt_error& e) {
        CHECK(e.point == "bad");
    }

    OrbifoldConfig unsupported;
    unsupported.base = BaseSurface::plane();
    unsupported.components.push_back({"C", DivisorClass::on_plane(2), 2, 0, 1});
    unsupported.singular_points.push_back({"e6", AdeType::e(6), {"C"}});
    unsupported.validate();
    CHECK_THROWS_AS(c2_orbifold(unsupported), unsupported_singularity_error);
}

TEST_CASE("contraction of ten a4 points reproduces the quintic orbifold pair") {
    ChernReport r = megyesi_contract(Rational(5), Rational(55), {{AdeType::a(4), 10}});
    CHECK(r.c1sq == Rational(5));
    CHECK(r.c2 == Rational(7));

    ChernReport untouched = megyesi_contract(Rational(3), Rational(17), {});
    CHECK(untouched.c1sq == Rational(3));
    CHECK(untouched.c2 == Rational(17));

    ChernReport one_node = megyesi_contract(Rational(0), Rational(24), {{AdeType::a(1), 1}});
    CHECK(one_node.c2 == Rational(45, 2));

    CHECK_THROWS_AS(megyesi_contract(Rational(0), Rational(0), {{AdeType::a(1), -1}}), usage_error);
}

TEST_CASE("two computation paths agree on the quintic") {
    Rational via_cover = Rational(5) * c2_orbifold(quintic_base_pair());
    Rational via_contraction = megyesi_contract(Rational(5), Rational(55), {{AdeType::a(4), 10}}).c2;
    CHECK(via_cover == via_contraction);
    CHECK(via_cover == Rational(7));
}

TEST_CASE("cyclic cover chern numbers") {
    ChernReport r82 = cyclic_cover_chern(8, 2);
    CHECK(r82.c1sq == Rational(2));
    CHECK(r82.c2 == Rational(46));
    CHECK(r82.chi() == Rational(4));
    CHECK(r82.chi_integral());

    ChernReport r102 = cyclic_cover_chern(10, 2);
    CHECK(r102.c1sq == Rational(8));
    CHECK(r102.c2 == Rational(76));
    CHECK(r102.chi() == Rational(7));

    ChernReport r55 = cyclic_cover_chern(5, 5);
    CHECK(r55.c1sq == Rational(5));
    CHECK(r55.c2 == Rational(55));
    CHECK(r55.chi() == Rational(5));

    ChernReport r62 = cyclic_cover_chern(6, 2);
    CHECK(r62.c1sq == Rational(0));
    CHECK(r62.c2 == Rational(24));

    ChernReport r63 = cyclic_cover_chern(6, 3);
    CHECK(r63.c1sq == Rational(3));
    CHECK(r63.c2 == Rational(45));

    CHECK_THROWS_AS(cyclic_cover_chern(7, 2), usage_error);
    CHECK_THROWS_AS(cyclic_cover_chern(6, 4), usage_error);
    CHECK_THROWS_AS(cyclic_cover_chern(6, 1), usage_error);
    CHECK_THROWS_AS(cyclic_cover_chern(0, 2), usage_error);
}

TEST_CASE("cover chi is a whole number and extremal cases sit on the horikawa lines") {
    for (long long d = 1; d <= 30; ++d) {
        for (long long n = 2; n <= d; ++n) {
            if (d % n != 0) continue;
            ChernReport r = cyclic_cover_chern(d, n);
            CHECK(r.chi_integral());
        }
    }
    CHECK(cyclic_cover_chern(8, 2).c2 == 5 * cyclic_cover_chern(8, 2).c1sq + 36);
    CHECK(cyclic_cover_chern(10, 2).c2 == 5 * cyclic_cover_chern(10, 2).c1sq + 36);
    CHECK(cyclic_cover_chern(6, 3).c2 == 5 * cyclic_cover_chern(6, 3).c1sq + 30);
}

TEST_CASE("covering degree scales both invariants") {
    ChernReport quintic = cover_multiplicativity(quintic_base_pair(), 5);
    CHECK(quintic.c1sq == Rational(5));
    CHECK(quintic.c2 == Rational(7));

    ChernReport identity = cover_multiplicativity(quintic_base_pair(), 1);
    CHECK(identity.c1sq == Rational(1));
    CHECK(identity.c2 == Rational(7, 5));

    ChernReport persson = cover_multiplicativity(persson_pair(3), 6);
    CHECK(persson.c1sq == Rational(4));
    CHECK(persson.c2 == Rational(137, 48));

    CHECK_THROWS_AS(scale_report(ChernReport{Rational(1), Rational(1)}, 0), usage_error);
}

TEST_CASE("derived chern fields satisfy their identities") {
    Lcg rng;
    for (int i = 0; i < 300; ++i) {
        Rational c1sq(rng.range(-400, 400), rng.range(1, 40));
        Rational c2(rng.range(-400, 400), rng.range(1, 40));
        ChernReport r{c1sq, c2};
        CHECK(r.segre2() == c1sq - c2);
        CHECK(r.jet2() == Rational(13) * c1sq - Rational(9) * c2);
        CHECK(r.chi() * Rational(12) == c1sq + c2);
    }
}

TEST_CASE("multiplicity-one components are invisible") {
    OrbifoldConfig cfg = quintic_base_pair();
    Rational c1 = c1_squared(cfg), c2 = c2_orbifold(cfg);
    cfg.components.push_back({"ghost", DivisorClass::on_plane(3), 1, 1, 2});
    cfg.validate();
    CHECK(c1_squared(cfg) == c1);
    CHECK(c2_orbifold(cfg) == c2);
}

TEST_CASE("incidence bookkeeping check") {
    OrbifoldConfig cfg = quintic_base_pair();
    CHECK(incidence_mismatches(cfg).empty());
    cfg.components[0].removed = 3;
    auto msgs = incidence_mismatches(cfg);
    REQUIRE(msgs.size() == 1);
    CHECK(msgs[0].find("L1") != std::string::npos);
}

TEST_CASE("config validation rejects malformed data") {
    OrbifoldConfig cfg;
    cfg.base = BaseSurface::plane();
    cfg.components.push_back({"C", DivisorClass::on_plane(1), 2, 0, 0});
    cfg.components.push_back({"C", DivisorClass::on_plane(1), 2, 0, 0});
    CHECK_THROWS_AS(cfg.validate(), usage_error);

    OrbifoldConfig dangling;
    dangling.base = BaseSurface::plane();
    dangling.components.push_back({"C", DivisorClass::on_plane(1), 2, 0, 0});
    dangling.singular_points.push_back({"p", AdeType::a(1), {"C", "Z"}});
    CHECK_THROWS_AS(dangling.validate(), usage_error);

    OrbifoldConfig short_point;
    short_point.base = BaseSurface::plane();
    short_point.components.push_back({"C", DivisorClass::on_plane(1), 2, 0, 0});
    short_point.singular_points.push_back({"p", AdeType::d(4), {"C", "C"}});
    CHECK_THROWS_AS(short_point.validate(), usage_error);
}
