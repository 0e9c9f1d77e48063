#include "cell24/polytope.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace cell24;

namespace {

std::vector<int> facet_1based(const Polytope24& p, int side_1based) {
    std::vector<int> out;
    for (int v : p.facet(side_1based - 1)) out.push_back(v + 1);
    return out;
}

} // namespace

TEST_CASE("canonical facet vertex sets") {
    const Polytope24& p = Polytope24::instance();
    CHECK(facet_1based(p, 1) == std::vector<int>{13, 14, 15, 16, 17, 19});
    CHECK(facet_1based(p, 2) == std::vector<int>{5, 6, 7, 8, 18, 19});
    CHECK(p.ridges().size() == 96);
    CHECK(p.edges().size() == 96);
    for (int v = 0; v < 24; ++v) {
        CHECK(p.facets_at_vertex(v).size() == 6);
        CHECK(p.neighbors(v).size() == 8);
    }
}

TEST_CASE("facet adjacency") {
    const Polytope24& p = Polytope24::instance();
    auto adj = facet_adjacency(p);
    int count = 0;
    for (int g = 0; g < 24; ++g)
        if (adj[0][g]) ++count;
    CHECK(count == 8);
    // Facets 1 and 2 share only one vertex (v19), so no ridge.
    CHECK(!adj[0][1]);
    for (int f = 0; f < 24; ++f)
        for (int g = 0; g < 24; ++g) CHECK(adj[f][g] == adj[g][f]);
}

TEST_CASE("Gram fingerprint and the edge value") {
    const Polytope24& p = Polytope24::instance();
    std::set<std::string> values;
    int edge_pairs = 0;
    for (int i = 0; i < 24; ++i)
        for (int j = i + 1; j < 24; ++j) {
            Rational g = p.gram(i, j);
            values.insert(g.str());
            if (g == kEdgeGram) ++edge_pairs;
            CHECK(g < Rational(0)); // distinct light-like rays never orthogonal here
        }
    CHECK(values == std::set<std::string>{"-1/2", "-1", "-3/2", "-2"});
    CHECK(edge_pairs == 96);
    // Edges are exactly the minimal-magnitude class.
    for (auto [a, b] : p.edges()) CHECK(p.gram(a, b) == kEdgeGram);
}

TEST_CASE("boundary complex Euler characteristic") {
    const Polytope24& p = Polytope24::instance();
    int chi = 24 - int(p.edges().size()) + int(p.ridges().size()) - 24;
    CHECK(chi == 0);
}

TEST_CASE("vertex links are cubes") {
    const Polytope24& p = Polytope24::instance();
    for (int v = 0; v < 24; ++v) {
        CHECK(p.facets_at_vertex(v).size() == 6); // faces
        CHECK(p.neighbors(v).size() == 8);        // vertices
        int link_edges = 0;                       // ridges through v
        for (const auto& r : p.ridges())
            if (r.vertices[0] == v || r.vertices[1] == v || r.vertices[2] == v) ++link_edges;
        CHECK(link_edges == 12);
        for (int f : p.facets_at_vertex(v)) CHECK(p.neighbors_in_facet(v, f).size() == 4);
    }
}

TEST_CASE("symmetry group order and closure") {
    const Polytope24& p = Polytope24::instance();
    static SymmetryGroup g = symmetry_group(p);
    CHECK(g.size() == 1152);

    std::array<int, 24> id{};
    for (int i = 0; i < 24; ++i) id[i] = i;
    CHECK(g.index_of(id) >= 0);

    // Every element maps the facet set to itself and preserves the form.
    int odd = 0;
    for (const SymmetryElement& e : g.elements()) {
        CHECK(lorentz_check(e.matrix));
        std::set<int> facets(e.facet_perm.begin(), e.facet_perm.end());
        CHECK(facets.size() == 24);
        if (!e.orientation_preserving) ++odd;
    }
    CHECK(odd == 576);

    // Closure under composition and inverse on random samples.
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<size_t> pick(0, g.size() - 1);
    for (int trial = 0; trial < 25; ++trial) {
        const SymmetryElement& a = g[pick(rng)];
        const SymmetryElement& b = g[pick(rng)];
        std::array<int, 24> prod{};
        for (int v = 0; v < 24; ++v) prod[v] = a.vertex_perm[b.vertex_perm[v]];
        CHECK(g.index_of(prod) >= 0);
        std::array<int, 24> inv{};
        for (int v = 0; v < 24; ++v) inv[a.vertex_perm[v]] = v;
        CHECK(g.index_of(inv) >= 0);
    }

    // Gram preservation by the permutations.
    for (int trial = 0; trial < 10; ++trial) {
        const SymmetryElement& e = g[pick(rng)];
        for (int i = 0; i < 24; ++i)
            for (int j = 0; j < 24; ++j)
                CHECK(p.gram(i, j) == p.gram(e.vertex_perm[i], e.vertex_perm[j]));
    }
}
