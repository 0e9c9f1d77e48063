#pragma once

#include "cell24/cusps.hpp"
#include "cell24/gluing.hpp"
#include "cell24/grouppres.hpp"
#include "cell24/homology.hpp"

#include <vector>

namespace cell24 {

/// Finite abelian cover data: target group Z/n x Z/m with a label per
/// generator (from h mod n and v mod m for the bundled manifold).
struct CoverSpec {
    const SidePairing* base = nullptr;
    const Polytope24* poly = nullptr;
    int n = 1, m = 1;
    std::vector<std::pair<int, int>> labels; // per generator side, (mod n, mod m)

    static CoverSpec from_homs(const SidePairing& sp, const Polytope24& p,
                               const IntHomomorphism& h, const IntHomomorphism& v, int n,
                               int m);
};

/// Indexed copies of the 24-cell glued by the shifted base pairing.
struct CoverComplex {
    GluingSystem gs;
    int n = 1, m = 1;
    int degree() const { return gs.copies; }
};

/// Throws geometry_error("relator not killed") when the labels do not kill
/// every relator, and ("disconnected") when they do not generate the group.
CoverComplex build_cover(const CoverSpec& spec);

struct CensusEntry {
    int least_vertex;      // least global vertex of the cycle
    int size;              // number of cubes
    FlatClass cls;
    int base_cycle_least;  // least base vertex of the projected cycle
    bool operator==(const CensusEntry&) const = default;
};

std::vector<CensusEntry> cusp_census(const CoverComplex& cc);

/// (sigma_signed, sigma_abs) from the census via the cusp-section eta values.
std::pair<Int, Int> signature(const std::vector<CensusEntry>& census);

struct GeographyReport {
    int degree = 1;
    int chi = 1;
    std::vector<CensusEntry> cusps;
    Int sigma_signed;
    Int sigma_abs;
    Rational slope;
    Rational volume_pi2_coeff; // volume = coeff * pi^2
    int cusp_count = 0;
    bool bounds_ok = false;
    bool operator==(const GeographyReport&) const = default;
};

/// Full report; the proof-chain bounds are asserted (violation is a hard
/// error, not a report field).
GeographyReport geography(const CoverComplex& cc);

/// Lifted Poincare verification: ridge cycles of the cover close with
/// identity return maps and all cusps are complete.
bool verify_cover(const CoverComplex& cc);

/// Two-stage construction (cover of the n-cover by the restriction of v)
/// for cross-checking against the one-stage kernel description.
CoverComplex build_cover_two_stage(const SidePairing& sp, const Polytope24& p,
                                   const IntHomomorphism& h, const IntHomomorphism& v, int n,
                                   int m);

} // namespace cell24
