#include "cell24/matrix.hpp"

#include <stdexcept>

namespace cell24 {

Rational lorentz_form(const Vec5& a, const Vec5& b) {
    Rational s;
    for (int i = 0; i < 4; ++i) s += a[i] * b[i];
    s -= a[4] * b[4];
    return s;
}

ExactMatrix ExactMatrix::identity() {
    ExactMatrix m;
    for (int i = 0; i < 5; ++i) m.at(i, i) = Rational(1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    ExactMatrix m;
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (long x : row) m.at(r, c++) = Rational(x);
        ++r;
    }
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) t.at(c, r) = at(r, c);
    return t;
}

Vec5 ExactMatrix::apply(const Vec5& v) const {
    Vec5 out;
    for (int r = 0; r < 5; ++r) {
        Rational s;
        for (int c = 0; c < 5; ++c) s += at(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix p;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            Rational s;
            for (int k = 0; k < 5; ++k) s += a.at(r, k) * b.at(k, c);
            p.at(r, c) = s;
        }
    return p;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

bool ExactMatrix::is_identity() const { return *this == identity(); }

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) { return a * b; }

namespace {

// Fraction-free-ish Gaussian elimination on an augmented copy.
struct Gauss {
    int n;
    std::vector<Rational> a; // n x 2n, [A | I]
    explicit Gauss(const ExactMatrix& m) : n(5), a(size_t(5) * 10) {
        for (int r = 0; r < 5; ++r) {
            for (int c = 0; c < 5; ++c) at(r, c) = m.at(r, c);
            at(r, 5 + r) = Rational(1);
        }
    }
    Rational& at(int r, int c) { return a[size_t(r) * 2 * n + c]; }
};

} // namespace

Rational ExactMatrix::det() const {
    // Plain elimination; 5x5 so no pivot strategy needed.
    std::array<Rational, 25> w = e_;
    auto at = [&](int r, int c) -> Rational& { return w[r * 5 + c]; };
    Rational d(1);
    for (int col = 0; col < 5; ++col) {
        int piv = -1;
        for (int r = col; r < 5; ++r)
            if (!at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            for (int c = 0; c < 5; ++c) std::swap(at(piv, c), at(col, c));
            d = -d;
        }
        d *= at(col, col);
        Rational inv = at(col, col).inverse();
        for (int r = col + 1; r < 5; ++r) {
            if (at(r, col).is_zero()) continue;
            Rational f = at(r, col) * inv;
            for (int c = col; c < 5; ++c) at(r, c) -= f * at(col, c);
        }
    }
    return d;
}

ExactMatrix ExactMatrix::inverse() const {
    Gauss g(*this);
    for (int col = 0; col < 5; ++col) {
        int piv = -1;
        for (int r = col; r < 5; ++r)
            if (!g.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) throw std::domain_error("ExactMatrix::inverse: singular matrix");
        if (piv != col)
            for (int c = 0; c < 10; ++c) std::swap(g.at(piv, c), g.at(col, c));
        Rational inv = g.at(col, col).inverse();
        for (int c = 0; c < 10; ++c) g.at(col, c) *= inv;
        for (int r = 0; r < 5; ++r) {
            if (r == col || g.at(r, col).is_zero()) continue;
            Rational f = g.at(r, col);
            for (int c = 0; c < 10; ++c) g.at(r, c) -= f * g.at(col, c);
        }
    }
    ExactMatrix out;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) out.at(r, c) = g.at(r, 5 + c);
    return out;
}

bool lorentz_check(const ExactMatrix& g) {
    // g^T J g == J, evaluated entrywise.
    ExactMatrix gt = g.transpose();
    ExactMatrix jg = g;
    for (int c = 0; c < 5; ++c) jg.at(4, c) = -jg.at(4, c);
    ExactMatrix m = gt * jg;
    ExactMatrix j = ExactMatrix::identity();
    j.at(4, 4) = Rational(-1);
    return m == j;
}

ExactMatrix lorentz_inverse(const ExactMatrix& g) {
    ExactMatrix m = g.transpose();
    // J M J: negate last row and last column.
    for (int c = 0; c < 5; ++c) m.at(4, c) = -m.at(4, c);
    for (int r = 0; r < 5; ++r) m.at(r, 4) = -m.at(r, 4);
    return m;
}

LorentzIsometry::LorentzIsometry(ExactMatrix g) : m_(std::move(g)) {
    if (!lorentz_check(m_))
        throw std::invalid_argument("LorentzIsometry: matrix not in O(4,1)");
    if (m_.at(4, 4).sign() <= 0)
        throw std::invalid_argument("LorentzIsometry: not sheet-preserving");
    Rational d = m_.det();
    if (d != Rational(1) && d != Rational(-1))
        throw std::invalid_argument("LorentzIsometry: determinant not unit");
    det_plus_ = (d == Rational(1));
}

LorentzIsometry LorentzIsometry::inverse() const {
    return LorentzIsometry(lorentz_inverse(m_));
}

LorentzIsometry operator*(const LorentzIsometry& a, const LorentzIsometry& b) {
    return LorentzIsometry(a.m_ * b.m_);
}

namespace {

// Row echelon on a copy; returns pivot columns. Used by rank/kernel/solve.
int echelon(std::vector<Rational>& a, int rows, int cols, std::vector<int>& pivot_cols) {
    auto at = [&](int r, int c) -> Rational& { return a[size_t(r) * cols + c]; };
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = 0; c < cols; ++c) std::swap(at(piv, c), at(rank, c));
        Rational inv = at(rank, col).inverse();
        for (int c = col; c < cols; ++c) at(rank, c) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || at(r, col).is_zero()) continue;
            Rational f = at(r, col);
            for (int c = col; c < cols; ++c) at(r, c) -= f * at(rank, c);
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    return rank;
}

} // namespace

int RatMat::rank() const {
    std::vector<Rational> a = e_;
    std::vector<int> piv;
    return echelon(a, rows_, cols_, piv);
}

std::vector<std::vector<Rational>> RatMat::kernel() const {
    std::vector<Rational> a = e_;
    std::vector<int> piv;
    int rank = echelon(a, rows_, cols_, piv);
    auto at = [&](int r, int c) -> const Rational& { return a[size_t(r) * cols_ + c]; };
    std::vector<bool> is_pivot(cols_, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(cols_);
        v[fc] = Rational(1);
        for (int r = 0; r < rank; ++r) v[piv[r]] = -at(r, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> RatMat::solve(const std::vector<Rational>& b) const {
    int cols = cols_ + 1;
    std::vector<Rational> a(size_t(rows_) * cols);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) a[size_t(r) * cols + c] = at(r, c);
        a[size_t(r) * cols + cols_] = b[r];
    }
    std::vector<int> piv;
    int rank = echelon(a, rows_, cols, piv);
    auto val = [&](int r, int c) -> const Rational& { return a[size_t(r) * cols + c]; };
    for (int i = 0; i < rank; ++i)
        if (piv[i] == cols_) return std::nullopt; // pivot in augmented column
    std::vector<Rational> x(cols_);
    for (int i = 0; i < rank; ++i) x[piv[i]] = val(i, cols_);
    return x;
}

} // namespace cell24
