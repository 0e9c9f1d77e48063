#include "cell24/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace cell24 {

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("IntegerMatrix: shape mismatch");
    IntegerMatrix p(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& ark = a.at(r, k);
            if (ark == 0) continue;
            for (int c = 0; c < b.cols(); ++c) {
                const Int& bkc = b.at(k, c);
                if (bkc != 0) p.at(r, c) += ark * bkc;
            }
        }
    return p;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != b.at(r, c)) return false;
    return true;
}

std::vector<Int> IntegerMatrix::apply(const std::vector<Int>& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("IntegerMatrix::apply: size");
    std::vector<Int> out(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != 0) out[r] += at(r, c) * v[c];
    return out;
}

Int IntegerMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("IntegerMatrix::det: not square");
    // Bareiss fraction-free elimination.
    int n = rows_;
    std::vector<Int> a = e_;
    auto at = [&](int r, int c) -> Int& { return a[size_t(r) * n + c]; };
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (at(r, k) != 0) { piv = r; break; }
            if (piv < 0) return Int(0);
            for (int c = 0; c < n; ++c) std::swap(at(piv, c), at(k, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c) {
                at(r, c) = at(k, k) * at(r, c) - at(r, k) * at(k, c);
                at(r, c) /= prev; // exact by Bareiss
            }
        prev = at(k, k);
    }
    return sign > 0 ? at(n - 1, n - 1) : Int(-at(n - 1, n - 1));
}

std::vector<Int> SmithDecomposition::diagonal() const {
    int n = std::min(D.rows(), D.cols());
    std::vector<Int> d(n);
    for (int i = 0; i < n; ++i) d[i] = D.at(i, i);
    return d;
}

std::vector<Int> SmithDecomposition::invariant_factors() const {
    std::vector<Int> out;
    for (const Int& d : diagonal())
        if (d != 0) out.push_back(d);
    return out;
}

namespace {

// Mutable state for the reduction. B = U * A * V is maintained throughout;
// U_inv and V_inv track the inverse transforms so callers can solve systems.
struct SnfState {
    IntegerMatrix B, U, V, U_inv, V_inv;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < B.cols(); ++c) std::swap(B.at(i, c), B.at(j, c));
        for (int c = 0; c < U.cols(); ++c) std::swap(U.at(i, c), U.at(j, c));
        for (int r = 0; r < U_inv.rows(); ++r) std::swap(U_inv.at(r, i), U_inv.at(r, j));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < B.rows(); ++r) std::swap(B.at(r, i), B.at(r, j));
        for (int r = 0; r < V.rows(); ++r) std::swap(V.at(r, i), V.at(r, j));
        for (int c = 0; c < V_inv.cols(); ++c) std::swap(V_inv.at(i, c), V_inv.at(j, c));
    }
    // row i -= f * row j
    void row_sub(int i, int j, const Int& f) {
        if (f == 0) return;
        for (int c = 0; c < B.cols(); ++c)
            if (B.at(j, c) != 0) B.at(i, c) -= f * B.at(j, c);
        for (int c = 0; c < U.cols(); ++c)
            if (U.at(j, c) != 0) U.at(i, c) -= f * U.at(j, c);
        for (int r = 0; r < U_inv.rows(); ++r)
            if (U_inv.at(r, i) != 0) U_inv.at(r, j) += f * U_inv.at(r, i);
    }
    // col i -= f * col j
    void col_sub(int i, int j, const Int& f) {
        if (f == 0) return;
        for (int r = 0; r < B.rows(); ++r)
            if (B.at(r, j) != 0) B.at(r, i) -= f * B.at(r, j);
        for (int r = 0; r < V.rows(); ++r)
            if (V.at(r, j) != 0) V.at(r, i) -= f * V.at(r, j);
        for (int c = 0; c < V_inv.cols(); ++c)
            if (V_inv.at(i, c) != 0) V_inv.at(j, c) += f * V_inv.at(i, c);
    }
    void negate_row(int i) {
        for (int c = 0; c < B.cols(); ++c) B.at(i, c) = -B.at(i, c);
        for (int c = 0; c < U.cols(); ++c) U.at(i, c) = -U.at(i, c);
        for (int r = 0; r < U_inv.rows(); ++r) U_inv.at(r, i) = -U_inv.at(r, i);
    }
};

} // namespace

SmithTransforms smith_with_inverses(const IntegerMatrix& A) {
    const int rows = A.rows(), cols = A.cols();
    SnfState s{A, IntegerMatrix::identity(rows), IntegerMatrix::identity(cols),
               IntegerMatrix::identity(rows), IntegerMatrix::identity(cols)};
    IntegerMatrix& B = s.B;
    const int n = std::min(rows, cols);

    for (int t = 0; t < n; ++t) {
        // Pick the nonzero entry of minimal magnitude as pivot; keeps the
        // intermediate coefficients small on the incidence-style matrices
        // this is used for.
        int pr = -1, pc = -1;
        Int best;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c) {
                const Int& x = B.at(r, c);
                if (x == 0) continue;
                Int ax = abs(x);
                if (pr < 0 || ax < best) { pr = r; pc = c; best = ax; }
            }
        if (pr < 0) break; // remaining block is zero
        s.swap_rows(t, pr);
        s.swap_cols(t, pc);

        for (;;) {
            // Clear column t with division by the pivot; a nonzero remainder
            // becomes the new, smaller pivot.
            bool again = false;
            for (int r = t + 1; r < rows; ++r) {
                if (B.at(r, t) == 0) continue;
                Int q, rem;
                mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), B.at(r, t).get_mpz_t(),
                            B.at(t, t).get_mpz_t());
                s.row_sub(r, t, q);
                if (rem != 0) { s.swap_rows(t, r); again = true; break; }
            }
            if (again) continue;
            for (int c = t + 1; c < cols; ++c) {
                if (B.at(t, c) == 0) continue;
                Int q, rem;
                mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), B.at(t, c).get_mpz_t(),
                            B.at(t, t).get_mpz_t());
                s.col_sub(c, t, q);
                if (rem != 0) { s.swap_cols(t, c); again = true; break; }
            }
            if (again) continue;

            // Row and column are clear. Enforce the divisibility chain: if the
            // pivot misses an entry of the remaining block, fold that row in
            // and reduce again.
            bool divides_all = true;
            for (int r = t + 1; r < rows && divides_all; ++r)
                for (int c = t + 1; c < cols; ++c) {
                    if (B.at(r, c) == 0) continue;
                    if (!mpz_divisible_p(B.at(r, c).get_mpz_t(), B.at(t, t).get_mpz_t())) {
                        s.row_sub(t, r, Int(-1)); // row t += row r
                        divides_all = false;
                        break;
                    }
                }
            if (divides_all) break;
        }
        if (B.at(t, t) < 0) s.negate_row(t);
    }

    SmithTransforms out;
    out.snf.D = std::move(s.B);
    out.snf.U = std::move(s.U);
    out.snf.V = std::move(s.V);
    out.U_inv = std::move(s.U_inv);
    out.V_inv = std::move(s.V_inv);
    return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& A) {
    return smith_with_inverses(A).snf;
}

AbelianGroup cokernel(const IntegerMatrix& A) {
    SmithDecomposition snf = smith_normal_form(A);
    AbelianGroup g;
    auto d = snf.diagonal();
    int nonzero = 0;
    for (const Int& x : d) {
        if (x == 0) continue;
        ++nonzero;
        if (x > 1) g.torsion.push_back(x);
    }
    g.rank = A.cols() - nonzero;
    return g;
}

bool HomLattice::contains(const std::vector<Int>& x) const {
    if (!solvable || x.size() != particular.size()) return false;
    // Solve  x - particular = basis * t  over the integers. The basis columns
    // are a lattice basis, so SNF solving is exact.
    int n = int(x.size()), k = int(basis.size());
    IntegerMatrix M(n, std::max(k, 1));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) M.at(i, j) = basis[j][i];
    std::vector<Int> rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = x[i] - particular[i];
    SmithTransforms st = smith_with_inverses(M);
    std::vector<Int> ub = st.snf.U.apply(rhs);
    int m = std::min(M.rows(), M.cols());
    for (int i = 0; i < n; ++i) {
        if (i < m && st.snf.D.at(i, i) != 0) {
            if (!mpz_divisible_p(ub[i].get_mpz_t(), st.snf.D.at(i, i).get_mpz_t()))
                return false;
        } else if (ub[i] != 0) {
            return false;
        }
    }
    return true;
}

HomLattice solve_hom_lattice(const IntegerMatrix& A,
                             const std::vector<std::pair<int, Int>>& fixed) {
    std::vector<Int> b(A.rows());
    for (const auto& [row, val] : fixed) {
        if (row < 0 || row >= A.rows())
            throw std::invalid_argument("solve_hom_lattice: fixed row out of range");
        b[row] = val;
    }
    SmithTransforms st = smith_with_inverses(A);
    const IntegerMatrix& D = st.snf.D;
    std::vector<Int> ub = st.snf.U.apply(b);

    HomLattice out;
    int n = std::min(A.rows(), A.cols());
    std::vector<Int> y(A.cols());
    for (int i = 0; i < A.rows(); ++i) {
        const Int* d = (i < n) ? &D.at(i, i) : nullptr;
        if (d && *d != 0) {
            Int q, rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), ub[i].get_mpz_t(), d->get_mpz_t());
            if (rem != 0) return out; // no integer solution
            if (i < A.cols()) y[i] = q;
        } else if (ub[i] != 0) {
            return out; // inconsistent
        }
    }
    out.solvable = true;
    out.particular = st.snf.V.apply(y);
    for (int j = 0; j < A.cols(); ++j) {
        bool in_kernel = (j >= n) || (D.at(j, j) == 0);
        if (!in_kernel) continue;
        std::vector<Int> col(A.cols());
        for (int i = 0; i < A.cols(); ++i) col[i] = st.snf.V.at(i, j);
        out.basis.push_back(std::move(col));
    }
    return out;
}

} // namespace cell24
