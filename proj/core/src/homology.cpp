#include "cell24/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cell24 {

namespace {

// Cell key types in the truncated complex.
enum : int {
    kTruncOct = 0, // (side, 0)
    kCube = 1,     // (vertex, 0)
    kHexagon = 2,  // (ridge, 0)
    kSquare = 3,   // (vertex, side)
    kShortEdge = 4, // (edge index, 0)
    kCubeEdge = 5, // (vertex, ridge)
    kFlag = 6,     // (vertex, vertex)
    kBody = 7,     // (0, 0)
};

int edge_index(const Polytope24& p, int v, int w) {
    std::pair<int, int> key{std::min(v, w), std::max(v, w)};
    auto it = std::lower_bound(p.edges().begin(), p.edges().end(), key);
    if (it == p.edges().end() || *it != key)
        throw std::logic_error("truncated_complex: missing edge");
    return int(it - p.edges().begin());
}

} // namespace

CWComplex truncated_complex(const GluingSystem& gs) {
    const Polytope24& p = *gs.poly;
    Rational t(1, 4);
    auto flag_point = [&p, t](int gid) {
        int v = gid / 24, w = gid % 24;
        Vec5 pt = p.vertex(v);
        for (int k = 0; k < 5; ++k) pt[k] += t * (p.vertex(w)[k] - p.vertex(v)[k]);
        return pt;
    };
    cw::Builder b(4, flag_point);
    auto fid = [](int v, int w) { return v * 24 + w; };

    auto ridges_of_side = [&p](int s) {
        std::vector<int> out;
        for (size_t r = 0; r < p.ridges().size(); ++r)
            if (p.ridges()[r].facet_a == s || p.ridges()[r].facet_b == s) out.push_back(int(r));
        return out;
    };

    for (int k = 0; k < gs.copies; ++k) {
        // 0-cells and 1-cells.
        for (auto [v, w] : p.edges()) {
            b.add_cell(0, {kFlag, k, v, w}, {fid(v, w)});
            b.add_cell(0, {kFlag, k, w, v}, {fid(w, v)});
            int e = edge_index(p, v, w);
            b.add_cell(1, {kShortEdge, k, e, 0}, {fid(v, w), fid(w, v)});
            b.add_boundary(1, {kShortEdge, k, e, 0}, {kFlag, k, v, w});
            b.add_boundary(1, {kShortEdge, k, e, 0}, {kFlag, k, w, v});
        }
        for (size_t r = 0; r < p.ridges().size(); ++r) {
            const auto& rd = p.ridges()[r];
            for (int v : rd.vertices) {
                std::array<int, 2> others{};
                int c = 0;
                for (int u : rd.vertices)
                    if (u != v) others[c++] = u;
                b.add_cell(1, {kCubeEdge, k, v, int(r)}, {fid(v, others[0]), fid(v, others[1])});
                b.add_boundary(1, {kCubeEdge, k, v, int(r)}, {kFlag, k, v, others[0]});
                b.add_boundary(1, {kCubeEdge, k, v, int(r)}, {kFlag, k, v, others[1]});
            }
        }
        // 2-cells: hexagons and squares.
        for (size_t r = 0; r < p.ridges().size(); ++r) {
            const auto& rd = p.ridges()[r];
            std::vector<int> flags;
            for (int a : rd.vertices)
                for (int bv : rd.vertices)
                    if (a != bv) flags.push_back(fid(a, bv));
            b.add_cell(2, {kHexagon, k, int(r), 0}, flags);
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    int e = edge_index(p, rd.vertices[i], rd.vertices[j]);
                    b.add_boundary(2, {kHexagon, k, int(r), 0}, {kShortEdge, k, e, 0});
                }
            for (int v : rd.vertices)
                b.add_boundary(2, {kHexagon, k, int(r), 0}, {kCubeEdge, k, v, int(r)});
        }
        for (int v = 0; v < 24; ++v)
            for (int s : p.facets_at_vertex(v)) {
                std::vector<int> flags;
                for (int w : p.neighbors_in_facet(v, s)) flags.push_back(fid(v, w));
                b.add_cell(2, {kSquare, k, v, s}, flags);
                auto nb = p.neighbors_in_facet(v, s);
                for (size_t i = 0; i < nb.size(); ++i)
                    for (size_t j = i + 1; j < nb.size(); ++j) {
                        if (!p.adjacent_vertices(nb[i], nb[j])) continue;
                        int r = p.ridge_through(v, nb[i], nb[j]);
                        if (r < 0) continue;
                        b.add_boundary(2, {kSquare, k, v, s}, {kCubeEdge, k, v, r});
                    }
            }
        // 3-cells: truncated octahedra and cubes.
        for (int s = 0; s < 24; ++s) {
            std::vector<int> flags;
            for (int v : p.facet(s))
                for (int w : p.neighbors_in_facet(v, s)) flags.push_back(fid(v, w));
            b.add_cell(3, {kTruncOct, k, s, 0}, flags);
            for (int r : ridges_of_side(s))
                b.add_boundary(3, {kTruncOct, k, s, 0}, {kHexagon, k, r, 0});
            for (int v : p.facet(s))
                b.add_boundary(3, {kTruncOct, k, s, 0}, {kSquare, k, v, s});
        }
        for (int v = 0; v < 24; ++v) {
            std::vector<int> flags;
            for (int w : p.neighbors(v)) flags.push_back(fid(v, w));
            b.add_cell(3, {kCube, k, v, 0}, flags);
            for (int s : p.facets_at_vertex(v))
                b.add_boundary(3, {kCube, k, v, 0}, {kSquare, k, v, s});
        }
        // The 4-cell.
        {
            std::vector<int> flags;
            for (auto [v, w] : p.edges()) {
                flags.push_back(fid(v, w));
                flags.push_back(fid(w, v));
            }
            b.add_cell(4, {kBody, k, 0, 0}, flags);
            for (int s = 0; s < 24; ++s)
                b.add_boundary(4, {kBody, k, 0, 0}, {kTruncOct, k, s, 0});
            for (int v = 0; v < 24; ++v)
                b.add_boundary(4, {kBody, k, 0, 0}, {kCube, k, v, 0});
        }
    }

    // Identifications along every side of every copy.
    for (int k = 0; k < gs.copies; ++k)
        for (int s = 0; s < 24; ++s) {
            int k2 = gs.target_copy[k][s];
            int s2 = gs.base->partner[s];
            const auto& phi = gs.base->vmap[s];
            std::map<int, int> fm;
            for (int v : p.facet(s))
                for (int w : p.neighbors_in_facet(v, s)) fm[fid(v, w)] = fid(phi[v], phi[w]);

            b.identify(3, {kTruncOct, k, s, 0}, {kTruncOct, k2, s2, 0}, fm);
            for (int r : ridges_of_side(s)) {
                const auto& rd = p.ridges()[r];
                int r2 = p.ridge_through(phi[rd.vertices[0]], phi[rd.vertices[1]],
                                         phi[rd.vertices[2]]);
                if (r2 < 0) throw std::logic_error("truncated_complex: ridge image missing");
                b.identify(2, {kHexagon, k, r, 0}, {kHexagon, k2, r2, 0}, fm);
                for (int v : rd.vertices)
                    b.identify(1, {kCubeEdge, k, v, r}, {kCubeEdge, k2, phi[v], r2}, fm);
            }
            for (int v : p.facet(s)) {
                b.identify(2, {kSquare, k, v, s}, {kSquare, k2, phi[v], s2}, fm);
                for (int w : p.neighbors_in_facet(v, s)) {
                    b.identify(0, {kFlag, k, v, w}, {kFlag, k2, phi[v], phi[w]}, fm);
                    if (v < w) {
                        int e = edge_index(p, v, w);
                        int e2 = edge_index(p, phi[v], phi[w]);
                        b.identify(1, {kShortEdge, k, e, 0}, {kShortEdge, k2, e2, 0}, fm);
                    }
                }
            }
        }

    return b.quotient();
}

HomologyProfile homology(const CWComplex& c) { return cw::homology_of(c); }

int euler_characteristic(const CWComplex& c) {
    int chi = 0, sign = 1;
    for (int n : c.cells) {
        chi += sign * n;
        sign = -sign;
    }
    return chi;
}

} // namespace cell24
