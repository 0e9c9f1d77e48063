#pragma once

#include "cell24/cw.hpp"
#include "cell24/gluing.hpp"
#include "cell24/grouppres.hpp"

#include <array>
#include <vector>

namespace cell24 {

enum class FlatType { F1 = 1, F2, F3, F4, F5, F6 };
const char* flat_type_name(FlatType t);

/// Orbit of ideal vertices under the vertex maps.
struct VertexCycle {
    std::vector<int> vertices; // global vertex ids, sorted
};

std::vector<VertexCycle> vertex_cycles(const GluingSystem& gs);

/// The glued complex of vertex-link cubes over one vertex cycle.
struct CuspComplex {
    const GluingSystem* gs = nullptr;
    VertexCycle cycle;
    CuspGraph graph; // cubes, face gluings, loop generators at the basepoint
};

CuspComplex cusp_complex(const VertexCycle& cycle, const GluingSystem& gs, int basepoint = -1);

/// Canonical frame for the horosphere quotient at an ideal vertex: lifts of a
/// basis of v-perp / <v>, its Gram matrix, and the frame's sign relative to
/// the ambient coordinate orientation.
struct HorosphereFrame {
    int vertex = -1; // base vertex id
    Vec5 apex;
    std::array<Vec5, 3> basis;
    std::array<std::array<Rational, 3>, 3> gram;
    int orientation = +1;
};

HorosphereFrame horosphere_frame(const Polytope24& p, int vertex);

using Mat3 = std::array<std::array<Rational, 3>, 3>;
using Vec3 = std::array<Rational, 3>;

/// Rotation and translation of a parabolic fixing the frame's apex, in frame
/// coordinates. Throws geometry_error("not parabolic") when the ray scalar
/// differs from 1.
struct EuclideanPart {
    Mat3 rotation;
    Vec3 translation;
};

EuclideanPart euclidean_part(const ExactMatrix& g, const HorosphereFrame& frame);

/// The cusp stabilizer: loop generators (words and matrices) at the basepoint.
struct ParabolicSubgroup {
    int basepoint = -1; // global vertex
    HorosphereFrame frame;
    std::vector<CuspLoop> generators;
    std::vector<EuclideanPart> parts;
};

ParabolicSubgroup parabolic_generators(const VertexCycle& cycle, const GluingSystem& gs,
                                       int basepoint);

/// Point group, translation lattice and screw data of a cusp, derived from
/// the parabolic subgroup by Schreier generators of the translation kernel.
struct CuspFrameData {
    std::vector<Mat3> point_group;    // closure of the rotational parts
    bool point_group_cyclic = false;
    std::array<Vec3, 3> lattice;      // translation lattice basis, frame coords
    std::array<std::vector<SideLetter>, 3> lattice_words;
    Rational covolume_sq;             // det Gram of the lattice basis
    Rational edge_sq = Rational(4);   // squared cube edge on the same horosphere
    // Chiral types only: a screw generator with rotation of maximal order and
    // minimal positive translation along its (oriented) axis.
    bool chiral = false;
    Mat3 screw_rotation;
    Vec3 screw_translation;
    Vec3 screw_axis;
    std::vector<SideLetter> screw_word; // primitive screw, minimal positive pitch
    // Basis words of the rank-2 sublattice of translations orthogonal to the
    // screw axis (chiral types only).
    std::array<std::vector<SideLetter>, 2> horizontal_words;
    int rotation_order = 1;
    int handedness = 0;
};

CuspFrameData cusp_frame_data(const ParabolicSubgroup& pg);

struct FlatClass {
    FlatType type;
    bool orientable = true;
    int handedness = 0; // +-1 for F3/F4/F5, 0 otherwise
    bool operator==(const FlatClass&) const = default;
};

/// H1 of the cube complex (all degrees computed; degree 1 is the fingerprint).
HomologyProfile cusp_section_homology(const CuspComplex& c);

/// Flat-type fingerprint by first homology, frozen from the abelianizations
/// of the six orientable flat 3-manifold groups.
FlatType flat_type_from_h1(const HomologyDegree& h1);

/// Classification cross-checked by two algorithms: the H1 fingerprint of the
/// cube complex and the point-group structure. Disagreement is a hard error.
FlatClass classify_flat(const CuspComplex& c);

/// Handedness of a chiral cusp (F3/F4/F5): the turning sense of the primitive
/// screw about its translation-oriented axis, in the frozen frame convention.
int handedness(const CuspComplex& c);

} // namespace cell24
