#pragma once

#include "cell24/covers.hpp"
#include "cell24/cusps.hpp"
#include "cell24/pairing.hpp"
#include "cell24/smith.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cell24 {

/// Growing side pairing during search; ridge-cycle constraints are enforced
/// incrementally (no partial cycle may exceed length 4 or close badly).
struct PartialPairing {
    std::array<int, 24> partner;
    std::array<std::array<int, 24>, 24> vmap;
    std::array<std::optional<LorentzIsometry>, 24> maps;

    static PartialPairing empty();
    bool assigned(int side) const { return partner[side] >= 0; }
    int least_unassigned() const;
    bool complete() const { return least_unassigned() < 0; }
    SidePairing freeze(const Polytope24& p) const;
};

/// Attempts to assign `corr` (lower side to partner). Returns false and
/// leaves the pairing untouched when a ridge-cycle constraint rejects it.
bool extend(PartialPairing& pp, const Correspondence& corr, const Polytope24& p);

/// Target cusp profile: exact per-type counts plus a type for the remaining
/// cusps; empty profile accepts everything.
struct CuspProfileFilter {
    std::map<FlatType, int> exact;
    std::optional<FlatType> rest;
    bool require_homs = false; // h-like and v-like maps must exist
    bool accepts(const std::vector<CensusEntry>& census) const;
};

struct SearchConfig {
    enum class Mode { Exhaustive, RandomRestart };
    Mode mode = Mode::Exhaustive;
    std::uint64_t seed = 0;
    double budget_seconds = -1.0;   // < 0: unlimited
    std::int64_t budget_nodes = -1; // < 0: unlimited
    int threads = 1;
    int max_results = -1;
    std::optional<CuspProfileFilter> filter;
    std::vector<Correspondence> prefix; // applied in canonical order
    bool symmetry_reduction = true;     // root-level orbit dedup (no prefix only)
};

/// Isometry-invariant certificate for deduplication.
struct Certificate {
    std::vector<std::pair<int, int>> cusp_profile; // (type, handedness), sorted
    AbelianGroup h1;
    int cusp_count = 0;
    std::map<int, int> relator_histogram;
    std::string encode() const;
    bool operator==(const Certificate&) const = default;
    bool operator<(const Certificate& o) const { return encode() < o.encode(); }
};

Certificate canonicalize(const SidePairing& sp, const Polytope24& p);

struct SearchResult {
    SidePairing pairing;
    Certificate certificate;
};

struct SearchOutcome {
    std::vector<SearchResult> results; // sorted by (certificate, pairing text)
    std::int64_t nodes_visited = 0;
    bool budget_exhausted = false;
};

/// Emits only pairings that pass the from-scratch verifier, deduplicated by
/// certificate; deterministic for a fixed seed at one thread, and
/// thread-count independent for completed exhaustive runs.
SearchOutcome search(const SearchConfig& cfg, const Polytope24& p);

/// h-like: some surjective hom vanishes on every chiral-cusp stabilizer;
/// v-like: some hom kills the horizontal lattice and sends the screw to 1.
bool admits_h_like(const SidePairing& sp, const Polytope24& p);
bool admits_v_like(const SidePairing& sp, const Polytope24& p);

/// A content-1 vector of the affine lattice, when a small search finds one.
std::optional<std::vector<Int>> primitive_element(const HomLattice& lat);

/// One representative per symmetry orbit of the possible side-1 assignments;
/// the root branching of reduced searches.
std::vector<Correspondence> reduced_root_candidates(const Polytope24& p);

} // namespace cell24
