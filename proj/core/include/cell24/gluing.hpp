#pragma once

#include "cell24/pairing.hpp"

#include <vector>

namespace cell24 {

/// A side-glued complex of polytope copies: copy 0 alone is the base
/// manifold, several copies with a copy-shift rule form a finite cover.
/// Sides and vertices are addressed globally as copy*24 + index.
struct GluingSystem {
    const Polytope24* poly = nullptr;
    const SidePairing* base = nullptr;
    int copies = 1;
    std::vector<std::array<int, 24>> target_copy; // [copy][side] -> image copy

    static GluingSystem for_base(const SidePairing& sp, const Polytope24& p);

    int side_count() const { return copies * 24; }
    int global_side(int copy, int side) const { return copy * 24 + side; }
    int copy_of(int g) const { return g / 24; }
    int local_of(int g) const { return g % 24; }
    /// Image of global side under the gluing.
    int glued_side(int gside) const;
    /// Image of a global vertex when crossing a global side containing it.
    int glued_vertex(int gside, int gvertex) const;
    const LorentzIsometry& map_of(int gside) const { return base->maps[local_of(gside)]; }
};

struct GluingRidgeCycle {
    std::vector<std::pair<int, int>> flags; // (global side, base ridge index)
    std::vector<SideLetter> word;
    ExactMatrix return_map;
    int length = 0;
    bool pass() const;
};

std::vector<GluingRidgeCycle> gluing_ridge_cycles(const GluingSystem& gs);

/// Orbits of global vertices under all side transitions, each sorted; the
/// list is ordered by least member.
std::vector<std::vector<int>> gluing_vertex_cycles(const GluingSystem& gs);

/// One loop generator of a cusp's gluing graph: a closed path of side
/// crossings based at the cusp's basepoint cube.
struct CuspLoop {
    std::vector<SideLetter> word;
    ExactMatrix matrix;
};

struct CuspGraph {
    std::vector<int> cubes;          // global vertices of the cycle, sorted
    int basepoint = -1;              // global vertex (least by default)
    // face_target[i][f]: index into cubes of the cube glued to face f of cube
    // i, where f indexes facets_at_vertex of the base vertex.
    std::vector<std::array<int, 6>> face_target;
    std::vector<std::array<int, 6>> face_target_face;
    std::vector<std::array<int, 6>> face_side;   // global side crossed at that face
    std::vector<CuspLoop> loops;                 // one per non-tree gluing
};

/// basepoint = -1 picks the least vertex of the cycle.
CuspGraph cusp_graph(const GluingSystem& gs, const std::vector<int>& cycle, int basepoint = -1);

/// Scalar with g v = lambda w, empty if g v is not a multiple of w.
std::optional<Rational> ray_scale_on(const ExactMatrix& g, const Vec5& v, const Vec5& w);

/// Ray scalar of g at the vertex ray v: the factor with g v = lambda v.
/// Empty when g does not fix the ray.
std::optional<Rational> ray_scale(const ExactMatrix& g, const Vec5& v);

/// Cusp completeness: every loop of every vertex cycle returns with ray
/// scalar exactly 1.
bool cusp_complete(const GluingSystem& gs, const std::vector<int>& cycle);

} // namespace cell24
