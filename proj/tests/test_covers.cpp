#include "cell24/covers.hpp"

#include "cell24/errors.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace cell24;

namespace {

CoverComplex cover_nm(int n, int m) {
    const Polytope24& p = Polytope24::instance();
    const SidePairing& sp = fixtures::bundled_pairing();
    return build_cover(CoverSpec::from_homs(sp, p, fixtures::hom_h(), fixtures::hom_v(), n, m));
}

std::map<FlatType, int> type_counts(const std::vector<CensusEntry>& census) {
    std::map<FlatType, int> out;
    for (const CensusEntry& e : census) ++out[e.cls.type];
    return out;
}

} // namespace

TEST_CASE("the trivial cover is the base manifold") {
    CoverComplex cc = cover_nm(1, 1);
    CHECK(cc.degree() == 1);
    auto census = cusp_census(cc);
    auto counts = type_counts(census);
    CHECK(counts[FlatType::F1] == 2);
    CHECK(counts[FlatType::F4] == 1);
    auto [ss, sa] = signature(census);
    CHECK(ss == 1); // the frozen eta convention gives the base manifold +1
    CHECK(sa == 1);
    GeographyReport rep = geography(cc);
    CHECK(rep.chi == 1);
    CHECK(rep.slope == Rational(1));
    CHECK(rep.bounds_ok);
}

TEST_CASE("cover construction rejects bad labels") {
    const Polytope24& p = Polytope24::instance();
    const SidePairing& sp = fixtures::bundled_pairing();
    CoverSpec spec = CoverSpec::from_homs(sp, p, fixtures::hom_h(), fixtures::hom_v(), 2, 1);
    spec.labels[0].first ^= 1; // break one relator sum
    CHECK_THROWS_AS(build_cover(spec), geometry_error);

    CoverSpec zero = CoverSpec::from_homs(sp, p, fixtures::hom_h(), fixtures::hom_v(), 2, 1);
    for (auto& l : zero.labels) l.first = 0;
    CHECK_THROWS_AS(build_cover(zero), geometry_error); // disconnected
}

TEST_CASE("pure h-covers multiply the signature") {
    for (int n : {2, 3}) {
        CoverComplex cc = cover_nm(n, 1);
        CHECK(verify_cover(cc));
        GeographyReport rep = geography(cc);
        CHECK(rep.chi == n);
        CHECK(rep.sigma_signed == n);
        auto counts = type_counts(rep.cusps);
        CHECK(counts[FlatType::F4] == n);
        // All chiral cusps coherently oriented.
        std::set<int> hands;
        for (const CensusEntry& e : rep.cusps)
            if (e.cls.type == FlatType::F4) hands.insert(e.cls.handedness);
        CHECK(hands.size() == 1);
    }
}

TEST_CASE("v-covers change cusp type with m mod 4") {
    // m = 2: the cusps over the chiral cusp become half-twist sections.
    {
        CoverComplex cc = cover_nm(1, 2);
        GeographyReport rep = geography(cc);
        CHECK(rep.chi == 2);
        CHECK(rep.sigma_signed == 0);
        for (const CensusEntry& e : rep.cusps) {
            if (e.base_cycle_least == 16) CHECK(e.cls.type == FlatType::F2);
        }
    }
    // m = 4: the quarter twist unrolls completely; everything is a torus.
    {
        CoverComplex cc = cover_nm(1, 4);
        GeographyReport rep = geography(cc);
        CHECK(rep.sigma_signed == 0);
        CHECK(rep.slope == Rational(0));
        for (const CensusEntry& e : rep.cusps) CHECK(e.cls.type == FlatType::F1);
    }
    // m = 3 (odd): the chiral cusp survives; slope 1/3.
    {
        CoverComplex cc = cover_nm(1, 3);
        GeographyReport rep = geography(cc);
        CHECK(rep.chi == 3);
        CHECK(rep.sigma_abs == 1);
        CHECK(rep.slope.abs() == Rational(1, 3));
        auto counts = type_counts(rep.cusps);
        CHECK(counts[FlatType::F4] == 1);
    }
}

TEST_CASE("deck shift permutes the chiral cusps transitively") {
    const int n = 3;
    CoverComplex cc = cover_nm(n, 1);
    // Copy shift k -> k+1 is an automorphism of the gluing system.
    auto shift = [&](int copy) { return (copy + 1) % n; };
    for (int k = 0; k < n; ++k)
        for (int s = 0; s < 24; ++s)
            CHECK(cc.gs.target_copy[shift(k)][s] == shift(cc.gs.target_copy[k][s]));

    // It induces a permutation of the vertex cycles; the chiral ones form a
    // single orbit.
    auto cycles = vertex_cycles(cc.gs);
    std::map<int, int> cycle_of; // least vertex -> index
    std::vector<bool> chiral(cycles.size());
    for (size_t i = 0; i < cycles.size(); ++i) {
        cycle_of[cycles[i].vertices.front()] = int(i);
        chiral[i] = classify_flat(cusp_complex(cycles[i], cc.gs)).type == FlatType::F4;
    }
    auto image_cycle = [&](int idx) {
        int v = cycles[idx].vertices.front();
        int moved = shift(v / 24) * 24 + (v % 24);
        for (size_t i = 0; i < cycles.size(); ++i)
            if (std::binary_search(cycles[i].vertices.begin(), cycles[i].vertices.end(), moved))
                return int(i);
        FAIL("shifted vertex lost");
        return -1;
    };
    std::set<int> chiral_orbit;
    int start = -1;
    for (size_t i = 0; i < cycles.size(); ++i)
        if (chiral[i]) { start = int(i); break; }
    REQUIRE(start >= 0);
    int cur = start;
    for (int step = 0; step < n; ++step) {
        chiral_orbit.insert(cur);
        cur = image_cycle(cur);
    }
    CHECK(cur == start);
    int chiral_count = 0;
    for (bool c : chiral)
        if (c) ++chiral_count;
    CHECK(int(chiral_orbit.size()) == chiral_count);
}

TEST_CASE("two-stage and one-stage covers agree") {
    const Polytope24& p = Polytope24::instance();
    const SidePairing& sp = fixtures::bundled_pairing();
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
        CoverComplex one = cover_nm(n, m);
        CoverComplex two =
            build_cover_two_stage(sp, p, fixtures::hom_h(), fixtures::hom_v(), n, m);
        CHECK(verify_cover(two));
        auto census1 = cusp_census(one);
        auto census2 = cusp_census(two);
        auto key = [](const std::vector<CensusEntry>& c) {
            std::multiset<std::tuple<int, int, int, int>> k;
            for (const CensusEntry& e : c)
                k.insert({int(e.cls.type), e.cls.handedness, e.size, e.base_cycle_least});
            return k;
        };
        CHECK(key(census1) == key(census2));
        HomologyProfile h1 = homology(truncated_complex(one.gs));
        HomologyProfile h2 = homology(truncated_complex(two.gs));
        CHECK(h1 == h2);
    }
}

TEST_CASE("geography report fields and bounds") {
    CoverComplex cc = cover_nm(2, 3);
    GeographyReport rep = geography(cc);
    CHECK(rep.degree == 6);
    CHECK(rep.chi == 6);
    CHECK(rep.cusp_count == int(rep.cusps.size()));
    CHECK(rep.sigma_abs == 2);
    CHECK(rep.volume_pi2_coeff == Rational(8)); // 4*chi/3 = 8
    CHECK(rep.bounds_ok);
    // |sigma| <= (4/3) k and chi > 0.03493 |sigma| hold with room.
    CHECK(Rational(4, 3) * Rational(rep.cusp_count) >= Rational(rep.sigma_abs));
    CHECK(Rational(rep.chi) > Rational(3493, 100000) * Rational(rep.sigma_abs));
}
