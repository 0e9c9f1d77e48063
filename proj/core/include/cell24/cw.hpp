#pragma once

#include "cell24/matrix.hpp"
#include "cell24/smith.hpp"

#include <functional>
#include <map>
#include <vector>

namespace cell24 {

struct HomologyDegree {
    int rank = 0;
    std::vector<Int> torsion; // invariant factors > 1
    bool operator==(const HomologyDegree&) const = default;
};

struct HomologyProfile {
    std::vector<HomologyDegree> degrees; // index = dimension
    bool operator==(const HomologyProfile&) const = default;
    int euler_from_ranks() const;
};

namespace cw {

/// Identifies one cell slot of a glued polytopal complex.
struct CellKey {
    int type = 0, copy = 0, a = 0, b = 0;
    auto operator<=>(const CellKey&) const = default;
};

/// Quotient CW complex builder for side-glued polytopal complexes.
///
/// Cells carry ordered flag lists; every flag has exact coordinates, every
/// identification is (piecewise) affine on cells, so incidence numbers and
/// identification signs reduce to determinant signs in the flag coordinates.
/// A cell identified with itself by a nontrivial flag bijection makes the
/// naive quotient chain complex wrong, so it is a hard error (it cannot
/// happen for pairings whose quotient is a manifold).
class Builder {
public:
    /// flag id -> exact coordinates (copy-independent).
    explicit Builder(int top_dim, std::function<Vec5(int)> flag_point);

    int add_cell(int dim, CellKey key, std::vector<int> flags);
    bool has_cell(int dim, CellKey key) const;
    /// Declares `facet` a boundary facet of `cell` (both already added).
    void add_boundary(int dim, CellKey cell, CellKey facet);
    /// Identifies two cells via a bijection of flag ids.
    void identify(int dim, CellKey a, CellKey b, const std::map<int, int>& flag_map);

    struct Quotient {
        std::vector<int> cells;                // count per dimension
        std::vector<IntegerMatrix> boundary;   // boundary[d]: C_d -> C_{d-1}
        std::vector<std::vector<int>> orbit_size; // per dim, per quotient cell
    };

    /// Resolves identifications, computes signed boundary matrices and checks
    /// dd = 0. Throws std::logic_error on folded cells or sign inconsistency.
    Quotient quotient() const;

private:
    struct Slot {
        CellKey key;
        std::vector<int> flags;
        std::vector<int> facets; // slot indices one dimension down
    };
    struct Ident {
        int a, b;
        std::vector<int> perm; // position in b's flags of image of a's i-th flag
    };

    int top_;
    std::function<Vec5(int)> point_of_;
    std::vector<std::vector<Slot>> slots_;             // per dim
    std::vector<std::map<CellKey, int>> index_;        // per dim
    std::vector<std::vector<Ident>> idents_;           // per dim

    Vec5 point(int flag) const { return point_of_(flag); }
};

/// Homology in every degree from the quotient boundary maps.
HomologyProfile homology_of(const Builder::Quotient& q);

} // namespace cw
} // namespace cell24
