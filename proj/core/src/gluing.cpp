#include "cell24/gluing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cell24 {

GluingSystem GluingSystem::for_base(const SidePairing& sp, const Polytope24& p) {
    GluingSystem gs;
    gs.poly = &p;
    gs.base = &sp;
    gs.copies = 1;
    gs.target_copy.push_back({});
    gs.target_copy[0].fill(0);
    return gs;
}

int GluingSystem::glued_side(int gside) const {
    int k = copy_of(gside), s = local_of(gside);
    return global_side(target_copy[k][s], base->partner[s]);
}

int GluingSystem::glued_vertex(int gside, int gvertex) const {
    int k = copy_of(gside), s = local_of(gside);
    int v = gvertex % 24;
    int w = base->vmap[s][v];
    if (w < 0) throw std::logic_error("glued_vertex: vertex not on side");
    if (gvertex / 24 != k) throw std::logic_error("glued_vertex: copy mismatch");
    return target_copy[k][s] * 24 + w;
}

bool GluingRidgeCycle::pass() const { return length == 4 && return_map.is_identity(); }

std::vector<GluingRidgeCycle> gluing_ridge_cycles(const GluingSystem& gs) {
    const Polytope24& p = *gs.poly;
    const SidePairing& sp = *gs.base;
    const int rcount = int(p.ridges().size());
    std::vector<bool> ridge_done(size_t(gs.copies) * rcount, false);
    std::vector<GluingRidgeCycle> out;

    for (int k = 0; k < gs.copies; ++k) {
        for (int rid = 0; rid < rcount; ++rid) {
            if (ridge_done[size_t(k) * rcount + rid]) continue;
            const auto& ridge = p.ridges()[rid];
            int start_side = gs.global_side(k, std::min(ridge.facet_a, ridge.facet_b));
            GluingRidgeCycle cyc;
            cyc.return_map = ExactMatrix::identity();
            int side = start_side;
            int cur_rid = rid, cur_copy = k;
            const int cap = gs.copies * rcount * 2 + 2;
            std::vector<SideLetter> applied;
            for (int step = 0; step < cap; ++step) {
                cyc.flags.push_back({side, cur_rid});
                ridge_done[size_t(cur_copy) * rcount + cur_rid] = true;
                int s = gs.local_of(side);
                // Cross the ridge: apply the pairing map of the current side.
                applied.push_back(sp.letter_for_crossing(s));
                cyc.return_map = sp.maps[s].matrix() * cyc.return_map;
                const auto& rv = p.ridges()[cur_rid].vertices;
                int a = sp.vmap[s][rv[0]], b = sp.vmap[s][rv[1]], c = sp.vmap[s][rv[2]];
                if (a < 0 || b < 0 || c < 0)
                    throw std::logic_error("ridge cycle: ridge not on side");
                int next_rid = p.ridge_through(a, b, c);
                if (next_rid < 0)
                    throw std::logic_error("ridge cycle: image triple is not a ridge");
                int landed_side = sp.partner[s];
                int next_copy = gs.target_copy[cur_copy][s];
                int next_side_local = p.ridge_other_facet(next_rid, landed_side);
                if (next_side_local < 0)
                    throw std::logic_error("ridge cycle: image ridge not on landed side");
                cur_rid = next_rid;
                cur_copy = next_copy;
                side = gs.global_side(next_copy, next_side_local);
                cyc.length = step + 1;
                if (side == start_side && cur_rid == rid) break;
            }
            if (!(side == start_side && cur_rid == rid))
                throw std::logic_error("ridge cycle did not close");
            // Word as a left-to-right matrix product: first crossing rightmost.
            cyc.word.assign(applied.rbegin(), applied.rend());
            out.push_back(std::move(cyc));
        }
    }
    return out;
}

std::vector<std::vector<int>> gluing_vertex_cycles(const GluingSystem& gs) {
    const Polytope24& p = *gs.poly;
    int n = gs.copies * 24;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    for (int k = 0; k < gs.copies; ++k)
        for (int s = 0; s < 24; ++s)
            for (int v : p.facet(s)) {
                int a = find(k * 24 + v);
                int b = find(gs.glued_vertex(gs.global_side(k, s), k * 24 + v));
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
    std::map<int, std::vector<int>> orbits;
    for (int x = 0; x < n; ++x) orbits[find(x)].push_back(x);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : orbits) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

CuspGraph cusp_graph(const GluingSystem& gs, const std::vector<int>& cycle, int basepoint) {
    const Polytope24& p = *gs.poly;
    CuspGraph g;
    g.cubes = cycle;
    std::sort(g.cubes.begin(), g.cubes.end());
    g.basepoint = basepoint < 0 ? g.cubes.front() : basepoint;
    auto cube_index = [&](int gv) {
        auto it = std::lower_bound(g.cubes.begin(), g.cubes.end(), gv);
        if (it == g.cubes.end() || *it != gv)
            throw std::logic_error("cusp_graph: glued cube outside the cycle");
        return int(it - g.cubes.begin());
    };

    const int m = int(g.cubes.size());
    g.face_target.assign(m, {});
    g.face_target_face.assign(m, {});
    g.face_side.assign(m, {});
    for (int i = 0; i < m; ++i) {
        int gv = g.cubes[i];
        int copy = gv / 24, v = gv % 24;
        const auto& facets = p.facets_at_vertex(v);
        for (int f = 0; f < 6; ++f) {
            int s = facets[f];
            int gside = gs.global_side(copy, s);
            int gw = gs.glued_vertex(gside, gv);
            int j = cube_index(gw);
            int t = gs.base->partner[s];
            const auto& tf = p.facets_at_vertex(gw % 24);
            int fi = int(std::find(tf.begin(), tf.end(), t) - tf.begin());
            if (fi >= 6) throw std::logic_error("cusp_graph: landed facet not at image vertex");
            g.face_target[i][f] = j;
            g.face_target_face[i][f] = fi;
            g.face_side[i][f] = gside;
        }
    }

    // Spanning tree by BFS from the basepoint; every non-tree gluing yields a
    // loop generator through the tree.
    std::vector<int> tree_parent(m, -1), tree_face(m, -1);
    std::vector<bool> seen(m, false);
    std::vector<int> order;
    int base_idx = cube_index(g.basepoint);
    seen[base_idx] = true;
    order.push_back(base_idx);
    for (size_t q = 0; q < order.size(); ++q) {
        int i = order[q];
        for (int f = 0; f < 6; ++f) {
            int j = g.face_target[i][f];
            if (seen[j]) continue;
            seen[j] = true;
            tree_parent[j] = i;
            tree_face[j] = f;
            order.push_back(j);
        }
    }
    if (int(order.size()) != m) throw std::logic_error("cusp_graph: gluing graph disconnected");

    // Path word from basepoint to cube i, as crossings applied in order.
    auto path_to = [&](int i) {
        std::vector<std::pair<int, int>> rev; // (cube, face) crossings, reversed
        while (i != base_idx) {
            rev.push_back({tree_parent[i], tree_face[i]});
            i = tree_parent[i];
        }
        std::reverse(rev.begin(), rev.end());
        return rev;
    };

    auto letter_of = [&](int cube, int face) {
        int s = gs.local_of(g.face_side[cube][face]);
        return gs.base->letter_for_crossing(s);
    };
    auto matrix_of = [&](int cube, int face) {
        int s = gs.local_of(g.face_side[cube][face]);
        return gs.base->maps[s].matrix();
    };

    std::vector<std::vector<bool>> in_tree(m, std::vector<bool>(6, false));
    for (int j = 0; j < m; ++j)
        if (tree_parent[j] >= 0) {
            int i = tree_parent[j], f = tree_face[j];
            in_tree[i][f] = true;
            in_tree[j][g.face_target_face[i][f]] = true;
        }

    for (int i = 0; i < m; ++i)
        for (int f = 0; f < 6; ++f) {
            if (in_tree[i][f]) continue;
            int j = g.face_target[i][f];
            int fj = g.face_target_face[i][f];
            // Each non-tree gluing appears from both slots; keep one.
            if (std::make_pair(j, fj) < std::make_pair(i, f)) continue;
            // Loop: base -> i, cross f, then back j -> base along the tree.
            std::vector<std::pair<int, int>> crossings = path_to(i);
            crossings.push_back({i, f});
            std::vector<std::pair<int, int>> back = path_to(j); // base -> j
            // Reverse of base->j: cross each tree gluing from the far slot.
            for (auto it = back.rbegin(); it != back.rend(); ++it) {
                auto [ci, cf] = *it;
                crossings.push_back({g.face_target[ci][cf], g.face_target_face[ci][cf]});
            }
            CuspLoop loop;
            loop.matrix = ExactMatrix::identity();
            std::vector<SideLetter> applied;
            for (auto [ci, cf] : crossings) {
                applied.push_back(letter_of(ci, cf));
                loop.matrix = matrix_of(ci, cf) * loop.matrix;
            }
            loop.word.assign(applied.rbegin(), applied.rend());
            g.loops.push_back(std::move(loop));
        }
    return g;
}

std::optional<Rational> ray_scale_on(const ExactMatrix& g, const Vec5& v, const Vec5& w) {
    Vec5 gv = g.apply(v);
    int pivot = -1;
    for (int c = 0; c < 5; ++c)
        if (!w[c].is_zero()) { pivot = c; break; }
    if (pivot < 0) return std::nullopt;
    if (gv[pivot].is_zero()) return std::nullopt;
    Rational lam = gv[pivot] / w[pivot];
    for (int c = 0; c < 5; ++c)
        if (gv[c] != lam * w[c]) return std::nullopt;
    return lam;
}

std::optional<Rational> ray_scale(const ExactMatrix& g, const Vec5& v) {
    return ray_scale_on(g, v, v);
}

bool cusp_complete(const GluingSystem& gs, const std::vector<int>& cycle) {
    CuspGraph g = cusp_graph(gs, cycle);
    const Vec5& v = gs.poly->vertex(g.basepoint % 24);
    for (const CuspLoop& loop : g.loops) {
        auto lam = ray_scale(loop.matrix, v);
        if (!lam || *lam != Rational(1)) return false;
    }
    return true;
}

} // namespace cell24
