#pragma once

#include "cell24/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cell24 {

/// Dense r x c matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
    static IntegerMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

    std::vector<Int> apply(const std::vector<Int>& v) const;
    Int det() const; // Bareiss; square matrices only

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

/// U*A*V = D with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
struct SmithDecomposition {
    IntegerMatrix D;
    IntegerMatrix U;
    IntegerMatrix V;
    std::vector<Int> diagonal() const;          // min(r,c) entries
    std::vector<Int> invariant_factors() const; // nonzero diagonal entries
};

SmithDecomposition smith_normal_form(const IntegerMatrix& A);

/// Smith data plus the inverses of the transforms, for solving.
struct SmithTransforms {
    SmithDecomposition snf;
    IntegerMatrix U_inv;
    IntegerMatrix V_inv;
};

SmithTransforms smith_with_inverses(const IntegerMatrix& A);

/// Free rank and torsion invariant factors (>1) of coker(A) = Z^rows / col-space?
/// Cokernel here is taken row-wise: Z^cols / row-space(A), the abelian group
/// presented by one relation per row on cols generators.
struct AbelianGroup {
    int rank = 0;
    std::vector<Int> torsion; // invariant factors > 1, ascending divisibility
    bool operator==(const AbelianGroup&) const = default;
};

AbelianGroup cokernel(const IntegerMatrix& A);

/// Affine lattice of integer solutions of A x = b: particular + basis of the
/// homogeneous solution lattice. empty() when the system is inconsistent.
struct HomLattice {
    bool solvable = false;
    std::vector<Int> particular;
    std::vector<std::vector<Int>> basis;
    bool empty() const { return !solvable; }
    /// Membership test: x = particular + integer combination of basis.
    bool contains(const std::vector<Int>& x) const;
};

/// Solves A x = b where b is zero except at the rows listed in `fixed`
/// (index, value). Rows of A are relator/constraint exponent rows.
HomLattice solve_hom_lattice(const IntegerMatrix& A,
                             const std::vector<std::pair<int, Int>>& fixed);

} // namespace cell24
