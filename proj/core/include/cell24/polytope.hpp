#pragma once

#include "cell24/matrix.hpp"

#include <array>
#include <vector>

namespace cell24 {

// Lorentz product of two edge-adjacent ideal vertices, computed from the
// canonical vertex coordinates and frozen here. With all 24 vertices
// normalized to last coordinate 1, pair products take the values
// -1/2, -1, -3/2, -2; the minimal-magnitude value -1/2 occurs exactly for
// the 96 edges (each vertex meeting 8 of them).
inline const Rational kEdgeGram = Rational(-1, 2);

/// The ideal regular right-angled 24-cell: canonical vertex coordinates,
/// facets (sides) numbered to match the bundled pairing data, ridges, edges,
/// and the cube structure of each vertex link.
class Polytope24 {
public:
    struct Ridge {
        int facet_a, facet_b;         // adjacent sides, facet_a < facet_b
        std::array<int, 3> vertices;  // sorted
    };

    static Polytope24 build(); // throws std::logic_error on any count violation
    static const Polytope24& instance();

    const Vec5& vertex(int v) const { return vertices_[v]; }
    const std::vector<int>& facet(int f) const { return facets_[f]; }
    const Vec5& facet_normal(int f) const { return normals_[f]; }
    const std::vector<Ridge>& ridges() const { return ridges_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& facets_at_vertex(int v) const { return vertex_facets_[v]; }
    const std::vector<int>& neighbors(int v) const { return vertex_neighbors_[v]; }
    bool facet_contains(int f, int v) const;
    bool adjacent_vertices(int v, int w) const;
    /// The 4 neighbors of v lying on facet f (v must lie on f).
    std::vector<int> neighbors_in_facet(int v, int f) const;
    /// Ridge index for an adjacent facet pair, -1 if not adjacent.
    int ridge_between(int f, int g) const;
    /// Ridge index through vertices {v,a,b}, -1 if no such 2-face.
    int ridge_through(int v, int a, int b) const;
    /// The other facet containing ridge r besides f.
    int ridge_other_facet(int r, int f) const;
    /// The 8 ridges on a facet.
    const std::vector<int>& ridges_at_facet(int f) const { return facet_ridges_[f]; }

    Rational gram(int v, int w) const { return lorentz_form(vertices_[v], vertices_[w]); }

private:
    std::array<Vec5, 24> vertices_;
    std::array<std::vector<int>, 24> facets_;
    std::array<Vec5, 24> normals_;
    std::vector<Ridge> ridges_;
    std::vector<std::pair<int, int>> edges_;
    std::array<std::vector<int>, 24> vertex_facets_;
    std::array<std::vector<int>, 24> vertex_neighbors_;
    std::array<std::array<int, 24>, 24> ridge_of_facets_; // -1 if not adjacent
    std::array<std::vector<int>, 24> facet_ridges_;
};

/// One symmetry of the polytope: a Lorentz map permuting the vertex rays.
struct SymmetryElement {
    std::array<int, 24> vertex_perm; // image vertex of each vertex
    std::array<int, 24> facet_perm;  // induced permutation of sides
    ExactMatrix matrix;
    bool orientation_preserving;
};

/// The full symmetry group (order 1152), stored by vertex permutations with
/// one witness matrix each. Products compose as permutations.
class SymmetryGroup {
public:
    explicit SymmetryGroup(std::vector<SymmetryElement> elems);
    const std::vector<SymmetryElement>& elements() const { return elems_; }
    size_t size() const { return elems_.size(); }
    const SymmetryElement& operator[](size_t i) const { return elems_[i]; }
    /// Index of the element with the given vertex permutation, -1 if absent.
    int index_of(const std::array<int, 24>& vperm) const;

private:
    std::vector<SymmetryElement> elems_;
};

/// Adjacency relation between sides: true iff they share a ridge.
std::array<std::array<bool, 24>, 24> facet_adjacency(const Polytope24& p);

/// All Lorentz maps preserving the vertex set as rays (and the upper sheet).
SymmetryGroup symmetry_group(const Polytope24& p);

} // namespace cell24
