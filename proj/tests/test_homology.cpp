#include "cell24/homology.hpp"

#include "cell24/covers.hpp"
#include "fixtures.hpp"

#include <doctest.h>

using namespace cell24;

namespace {

GluingSystem base_system() {
    return GluingSystem::for_base(fixtures::bundled_pairing(), Polytope24::instance());
}

HomologyDegree deg(int rank, std::vector<Int> torsion = {}) { return {rank, torsion}; }

} // namespace

TEST_CASE("homology of the bundled manifold") {
    GluingSystem gs = base_system();
    CWComplex c = truncated_complex(gs); // dd = 0 asserted inside
    CHECK(euler_characteristic(c) == 1);
    HomologyProfile prof = homology(c);
    REQUIRE(prof.degrees.size() == 5);
    CHECK(prof.degrees[0] == deg(1));
    CHECK(prof.degrees[1] == deg(3));
    CHECK(prof.degrees[2] == deg(5));
    CHECK(prof.degrees[3] == deg(2));
    CHECK(prof.degrees[4] == deg(0));
    CHECK(prof.euler_from_ranks() == 1);

    // H1 agrees with the abelianized presentation.
    GroupPresentation pres = presentation(fixtures::bundled_pairing(), Polytope24::instance());
    AbelianGroup h1 = cokernel(abelianized_matrix(pres));
    CHECK(h1.rank == prof.degrees[1].rank);
    CHECK(h1.torsion == prof.degrees[1].torsion);
}

TEST_CASE("cusp section homology") {
    GluingSystem gs = base_system();
    auto cycles = vertex_cycles(gs);
    // Torus cusps: (Z, Z^3, Z^3, Z); chi = 0.
    for (int i : {0, 1}) {
        HomologyProfile prof = cusp_section_homology(cusp_complex(cycles[i], gs));
        REQUIRE(prof.degrees.size() == 4);
        CHECK(prof.degrees[0] == deg(1));
        CHECK(prof.degrees[1] == deg(3));
        CHECK(prof.degrees[2] == deg(3));
        CHECK(prof.degrees[3] == deg(1));
        CHECK(prof.euler_from_ranks() == 0);
    }
    // The quarter-twist cusp: H1 = Z + Z/2; closed orientable, so H3 = Z.
    HomologyProfile prof = cusp_section_homology(cusp_complex(cycles[2], gs));
    CHECK(prof.degrees[0] == deg(1));
    CHECK(prof.degrees[1] == deg(1, {Int(2)}));
    CHECK(prof.degrees[2] == deg(1));
    CHECK(prof.degrees[3] == deg(1));
    CHECK(prof.euler_from_ranks() == 0);
}

TEST_CASE("single-cube three-torus through the quotient machinery") {
    // One vertex-link cube with opposite faces identified by translations:
    // the smallest flat cube complex. Built directly on the CW builder.
    const Polytope24& p = Polytope24::instance();
    const int v = 16; // v17 = (1, 0, 0, 0, 1)
    Rational t(1, 4);
    auto flag_point = [&p, t](int gid) {
        int a = gid / 24, b = gid % 24;
        Vec5 pt = p.vertex(a);
        for (int k = 0; k < 5; ++k) pt[k] += t * (p.vertex(b)[k] - p.vertex(a)[k]);
        return pt;
    };
    cw::Builder b(3, flag_point);
    auto fid = [&](int w) { return v * 24 + w; };

    std::vector<int> cube_flags;
    for (int w : p.neighbors(v)) cube_flags.push_back(fid(w));
    b.add_cell(3, {0, 0, v, 0}, cube_flags);
    for (int w : p.neighbors(v)) b.add_cell(0, {3, 0, v, w}, {fid(w)});
    for (int s : p.facets_at_vertex(v)) {
        std::vector<int> sq;
        for (int w : p.neighbors_in_facet(v, s)) sq.push_back(fid(w));
        b.add_cell(2, {1, 0, v, s}, sq);
        b.add_boundary(3, {0, 0, v, 0}, {1, 0, v, s});
    }
    for (size_t r = 0; r < p.ridges().size(); ++r) {
        const auto& rd = p.ridges()[r];
        if (rd.vertices[0] != v && rd.vertices[1] != v && rd.vertices[2] != v) continue;
        std::array<int, 2> o{};
        int k = 0;
        for (int u : rd.vertices)
            if (u != v) o[k++] = u;
        b.add_cell(1, {2, 0, v, int(r)}, {fid(o[0]), fid(o[1])});
        b.add_boundary(1, {2, 0, v, int(r)}, {3, 0, v, o[0]});
        b.add_boundary(1, {2, 0, v, int(r)}, {3, 0, v, o[1]});
    }
    for (int s : p.facets_at_vertex(v)) {
        auto nb = p.neighbors_in_facet(v, s);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (!p.adjacent_vertices(nb[i], nb[j])) continue;
                int r = p.ridge_through(v, nb[i], nb[j]);
                if (r >= 0) b.add_boundary(2, {1, 0, v, s}, {2, 0, v, r});
            }
    }

    // Identify opposite faces by coordinate translation: the neighbors of
    // v17 are the sixteen-cell vertices with first coordinate +1/2; opposite
    // faces of the link cube differ by one sign flip in a fixed coordinate.
    auto flip = [&](int w, int coord) {
        Vec5 x = p.vertex(w);
        x[coord] = -x[coord];
        for (int u = 0; u < 24; ++u)
            if (p.vertex(u) == x) return u;
        FAIL("flip target missing");
        return -1;
    };
    const auto& facets = p.facets_at_vertex(v);
    for (int s : facets) {
        // Pair s with the opposite facet at v (the one sharing no neighbor).
        for (int s2 : facets) {
            if (s2 <= s) continue;
            auto na = p.neighbors_in_facet(v, s);
            auto nb = p.neighbors_in_facet(v, s2);
            bool disjoint = true;
            for (int x : na)
                for (int y : nb)
                    if (x == y) disjoint = false;
            if (!disjoint) continue;
            // Translation direction: the coordinate where the two faces differ.
            int coord = -1;
            for (int cd = 1; cd < 4; ++cd)
                if (flip(na[0], cd) == nb[0] || std::find(nb.begin(), nb.end(), flip(na[0], cd)) != nb.end())
                    coord = cd;
            REQUIRE(coord >= 0);
            std::map<int, int> fm;
            for (int w : na) fm[fid(w)] = fid(flip(w, coord));
            b.identify(2, {1, 0, v, s}, {1, 0, v, s2}, fm);
            for (int w : na) b.identify(0, {3, 0, v, w}, {3, 0, v, flip(w, coord)}, fm);
            for (size_t i = 0; i < na.size(); ++i)
                for (size_t j = i + 1; j < na.size(); ++j) {
                    if (!p.adjacent_vertices(na[i], na[j])) continue;
                    int r = p.ridge_through(v, na[i], na[j]);
                    int r2 = p.ridge_through(v, flip(na[i], coord), flip(na[j], coord));
                    REQUIRE(r >= 0);
                    REQUIRE(r2 >= 0);
                    b.identify(1, {2, 0, v, r}, {2, 0, v, r2}, fm);
                }
        }
    }

    HomologyProfile prof = cw::homology_of(b.quotient());
    CHECK(prof.degrees[0] == deg(1));
    CHECK(prof.degrees[1] == deg(3));
    CHECK(prof.degrees[2] == deg(3));
    CHECK(prof.degrees[3] == deg(1));
    CHECK(flat_type_from_h1(prof.degrees[1]) == FlatType::F1);
}

TEST_CASE("cover complexes scale every cell count by the degree") {
    const Polytope24& p = Polytope24::instance();
    const SidePairing& sp = fixtures::bundled_pairing();
    GroupPresentation pres = presentation(sp, p);
    CoverSpec spec = CoverSpec::from_homs(sp, p, fixtures::hom_h(), fixtures::hom_v(), 2, 1);
    CoverComplex cc = build_cover(spec);
    CWComplex base = truncated_complex(base_system());
    CWComplex cover = truncated_complex(cc.gs);
    REQUIRE(base.cells.size() == cover.cells.size());
    for (size_t d = 0; d < base.cells.size(); ++d)
        CHECK(cover.cells[d] == 2 * base.cells[d]);
    CHECK(euler_characteristic(cover) == 2);
    HomologyProfile prof = homology(cover);
    CHECK(prof.degrees[0] == deg(1));
    CHECK(prof.euler_from_ranks() == 2);
}
