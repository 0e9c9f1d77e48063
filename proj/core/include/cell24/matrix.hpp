#pragma once

#include "cell24/rational.hpp"

#include <array>
#include <initializer_list>
#include <vector>

namespace cell24 {

using Vec5 = std::array<Rational, 5>;

Rational lorentz_form(const Vec5& a, const Vec5& b); // x1y1+..+x4y4 - x5y5

/// 5x5 matrix of exact rationals, the carrier for Minkowski-space maps.
class ExactMatrix {
public:
    ExactMatrix() = default;
    static ExactMatrix identity();
    static ExactMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    Rational& at(int r, int c) { return e_[r * 5 + c]; }
    const Rational& at(int r, int c) const { return e_[r * 5 + c]; }

    ExactMatrix transpose() const;
    Rational det() const;
    ExactMatrix inverse() const; // throws std::domain_error if singular
    Vec5 apply(const Vec5& v) const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    bool is_identity() const;

private:
    std::array<Rational, 25> e_{};
};

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);

/// True iff g^T J g = J exactly, J = diag(1,1,1,1,-1).
bool lorentz_check(const ExactMatrix& g);

/// J g^T J; equals g^{-1} when lorentz_check(g) holds.
ExactMatrix lorentz_inverse(const ExactMatrix& g);

/// An element of O(4,1) preserving the upper sheet. det is +1 or -1;
/// orientation is recorded rather than enforced so that verification can
/// report orientation-reversing pairings instead of refusing to hold them.
class LorentzIsometry {
public:
    /// Throws std::invalid_argument unless g is in O(4,1) and sheet-preserving.
    explicit LorentzIsometry(ExactMatrix g);

    const ExactMatrix& matrix() const { return m_; }
    bool orientation_preserving() const { return det_plus_; }
    LorentzIsometry inverse() const;
    Vec5 apply(const Vec5& v) const { return m_.apply(v); }

    friend LorentzIsometry operator*(const LorentzIsometry& a, const LorentzIsometry& b);
    friend bool operator==(const LorentzIsometry& a, const LorentzIsometry& b) {
        return a.m_ == b.m_;
    }

private:
    ExactMatrix m_;
    bool det_plus_;
};

/// Dense dynamic matrix of rationals; workhorse for kernels and linear solves.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

    int rank() const;
    /// Basis of the right kernel, as columns.
    std::vector<std::vector<Rational>> kernel() const;
    /// Solves A x = b; empty optional if inconsistent. Requires full column rank
    /// for uniqueness; otherwise returns one solution.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

} // namespace cell24
