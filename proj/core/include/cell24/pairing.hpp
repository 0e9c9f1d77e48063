#pragma once

#include "cell24/polytope.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cell24 {

/// A bijection from the vertices of one side onto the vertices of another.
struct Correspondence {
    int from_side = -1;
    int to_side = -1;
    std::array<int, 24> image; // image vertex, -1 off the source side

    /// Domain vertices in ascending order.
    std::vector<int> domain(const Polytope24& p) const;
    Correspondence inverse(const Polytope24& p) const;
};

/// Letter of a word over the side-pair generators: the generator is named by
/// the lower side of its pair, exponent +1 when crossing from that side.
struct SideLetter {
    int generator_side;
    int exponent; // +1 or -1
    bool operator==(const SideLetter&) const = default;
};

/// An involutive side pairing of the 24-cell with derived isometries.
struct SidePairing {
    std::array<int, 24> partner;                 // fixed-point free involution
    std::array<std::array<int, 24>, 24> vmap;    // vmap[side][vertex] image, -1 off side
    std::vector<LorentzIsometry> maps;           // one per side, maps[sigma(s)] = maps[s]^{-1}

    const LorentzIsometry& map_of(int side) const { return maps[side]; }
    bool is_generator_side(int side) const { return side < partner[side]; }
    /// Lower sides of the pairs, ascending: the generator labels.
    std::vector<int> generator_sides() const;
    SideLetter letter_for_crossing(int side) const;
    Correspondence correspondence(const Polytope24& p, int side) const;
};

struct RidgeCycle {
    std::vector<std::pair<int, int>> flags; // (side, ridge index) in traversal order
    std::vector<SideLetter> word;           // return map as left-to-right product
    ExactMatrix return_map;
    bool length_ok = false;   // exactly 4
    bool identity_ok = false; // return map is the identity
    bool pass() const { return length_ok && identity_ok; }
};

struct VerificationReport {
    bool proper = false;
    std::vector<RidgeCycle> ridge_cycles;
    bool ridge_ok = false;
    bool orientable = false;
    std::vector<std::pair<int, bool>> cusp_complete; // (least cycle vertex, complete)
    bool cusp_ok = false;
    std::string detail; // first failure explanation, empty if overall
    bool overall() const { return proper && ridge_ok && orientable && cusp_ok; }
};

/// The unique isometry realizing a side-to-side vertex correspondence with
/// the side-pairing convention (image polytope on the far side). Solves the
/// ray-scalar system from Gram ratios, then a linear system on 4 independent
/// vertices together with the normal condition g n_from = -n_to.
/// Throws geometry_error("not an isometry") or ("orientation-reversing").
LorentzIsometry derive_isometry(const Polytope24& p, const Correspondence& corr);

/// Same, but permits det = -1 so that verification can report orientability.
LorentzIsometry derive_side_map(const Polytope24& p, const Correspondence& corr);

/// Parses the pairing-v1 format. Throws parse_error on malformed input,
/// non-involutive data, vertices off their sides, or unrealizable
/// correspondences. Orientation-reversing pairings parse (verify flags them).
SidePairing parse_pairing(const std::string& text, const Polytope24& p);
SidePairing parse_pairing_file(const std::string& path, const Polytope24& p);
std::string serialize_pairing(const SidePairing& sp);

/// Builds a SidePairing from 12 correspondences (one per pair); the inverse
/// sides are filled in. Used by the search and by tests.
SidePairing pairing_from_correspondences(const Polytope24& p,
                                         const std::vector<Correspondence>& corrs);

std::vector<RidgeCycle> ridge_cycles(const SidePairing& sp, const Polytope24& p);

/// Poincare polytope-theorem verification: properness, ridge cycles,
/// orientability, and cusp completeness. Never throws on bad pairings;
/// failures land in the report.
VerificationReport verify_poincare(const SidePairing& sp, const Polytope24& p);

} // namespace cell24
