#include "cell24/cw.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cell24 {

int HomologyProfile::euler_from_ranks() const {
    int chi = 0, sign = 1;
    for (const HomologyDegree& d : degrees) {
        chi += sign * d.rank;
        sign = -sign;
    }
    return chi;
}

namespace cw {

namespace {

void check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("cw: ") + msg);
}

using Tuple = std::vector<Vec5>;

// Coordinates of the columns of M in the affine basis of `frame` (points,
// first one the origin). Returns the determinant sign of the coordinate
// matrix; 0 when columns are not in the span or are dependent.
int det_sign_in_frame(const Tuple& frame, const std::vector<Vec5>& columns) {
    int d = int(frame.size()) - 1;
    check(int(columns.size()) == d, "frame/column size mismatch");
    RatMat basis(5, d);
    for (int j = 0; j < d; ++j)
        for (int r = 0; r < 5; ++r) basis.at(r, j) = frame[j + 1][r] - frame[0][r];
    RatMat coords(d, d);
    for (int c = 0; c < d; ++c) {
        std::vector<Rational> rhs(5);
        for (int r = 0; r < 5; ++r) rhs[r] = columns[c][r];
        auto sol = basis.solve(rhs);
        if (!sol) return 0;
        // solve() ignores inconsistent rows only when rank allows; verify.
        for (int r = 0; r < 5; ++r) {
            Rational acc;
            for (int j = 0; j < d; ++j) acc += basis.at(r, j) * (*sol)[j];
            if (acc != rhs[r]) return 0;
        }
        for (int j = 0; j < d; ++j) coords.at(j, c) = (*sol)[j];
    }
    // Determinant sign by elimination.
    int sign = 1;
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (int r = col; r < d; ++r)
            if (!coords.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int c = 0; c < d; ++c) std::swap(coords.at(piv, c), coords.at(col, c));
            sign = -sign;
        }
        if (coords.at(col, col).sign() < 0) sign = -sign;
        Rational inv = coords.at(col, col).inverse();
        for (int r = col + 1; r < d; ++r) {
            if (coords.at(r, col).is_zero()) continue;
            Rational f = coords.at(r, col) * inv;
            for (int c = col; c < d; ++c) coords.at(r, c) -= f * coords.at(col, c);
        }
    }
    return sign;
}

Vec5 barycenter(const Tuple& pts) {
    Vec5 b{};
    for (const Vec5& p : pts)
        for (int c = 0; c < 5; ++c) b[c] += p[c];
    Rational inv(1, long(pts.size()));
    for (int c = 0; c < 5; ++c) b[c] *= inv;
    return b;
}

} // namespace

Builder::Builder(int top_dim, std::function<Vec5(int)> flag_point)
    : top_(top_dim), point_of_(std::move(flag_point)) {
    slots_.resize(top_ + 1);
    index_.resize(top_ + 1);
    idents_.resize(top_ + 1);
}

int Builder::add_cell(int dim, CellKey key, std::vector<int> flags) {
    auto [it, fresh] = index_[dim].try_emplace(key, int(slots_[dim].size()));
    if (!fresh) return it->second;
    slots_[dim].push_back({key, std::move(flags), {}});
    return it->second;
}

bool Builder::has_cell(int dim, CellKey key) const { return index_[dim].count(key) > 0; }

void Builder::add_boundary(int dim, CellKey cell, CellKey facet) {
    auto ci = index_[dim].find(cell);
    auto fi = index_[dim - 1].find(facet);
    check(ci != index_[dim].end() && fi != index_[dim - 1].end(),
          "boundary references missing cell");
    slots_[dim][ci->second].facets.push_back(fi->second);
}

void Builder::identify(int dim, CellKey a, CellKey b, const std::map<int, int>& flag_map) {
    auto ai = index_[dim].find(a);
    auto bi = index_[dim].find(b);
    check(ai != index_[dim].end() && bi != index_[dim].end(),
          "identification references missing cell");
    const Slot& sa = slots_[dim][ai->second];
    const Slot& sb = slots_[dim][bi->second];
    check(sa.flags.size() == sb.flags.size(), "identified cells of different size");
    std::vector<int> perm(sa.flags.size());
    for (size_t i = 0; i < sa.flags.size(); ++i) {
        auto m = flag_map.find(sa.flags[i]);
        check(m != flag_map.end(), "identification does not cover a flag");
        auto pos = std::find(sb.flags.begin(), sb.flags.end(), m->second);
        check(pos != sb.flags.end(), "identified flag missing in target cell");
        perm[i] = int(pos - sb.flags.begin());
    }
    idents_[dim].push_back({ai->second, bi->second, std::move(perm)});
}

Builder::Quotient Builder::quotient() const {
    const int D = top_;

    // Union-find with flag bijections carried to the root.
    struct UF {
        std::vector<int> parent;
        std::vector<std::vector<int>> bij; // to parent
        std::pair<int, std::vector<int>> find(int x) {
            if (parent[x] == x) return {x, bij[x]};
            auto [root, up] = find(parent[x]);
            std::vector<int> comp(bij[x].size());
            for (size_t i = 0; i < bij[x].size(); ++i) comp[i] = up[bij[x][i]];
            parent[x] = root;
            bij[x] = comp;
            return {root, comp};
        }
    };

    std::vector<UF> uf(D + 1);
    for (int d = 0; d <= D; ++d) {
        int n = int(slots_[d].size());
        uf[d].parent.resize(n);
        std::iota(uf[d].parent.begin(), uf[d].parent.end(), 0);
        uf[d].bij.resize(n);
        for (int i = 0; i < n; ++i) {
            uf[d].bij[i].resize(slots_[d][i].flags.size());
            std::iota(uf[d].bij[i].begin(), uf[d].bij[i].end(), 0);
        }
        for (const Ident& id : idents_[d]) {
            auto [ra, pa] = uf[d].find(id.a);
            auto [rb, pb] = uf[d].find(id.b);
            // position map ra -> rb through a -> b: pb o perm o pa^{-1}
            std::vector<int> pa_inv(pa.size());
            for (size_t i = 0; i < pa.size(); ++i) pa_inv[pa[i]] = int(i);
            std::vector<int> through(pa.size());
            for (size_t i = 0; i < pa.size(); ++i) through[i] = pb[id.perm[pa_inv[i]]];
            if (ra == rb) {
                for (size_t i = 0; i < through.size(); ++i)
                    check(through[i] == int(i),
                          "cell identified with itself by a nontrivial symmetry");
                continue;
            }
            uf[d].parent[ra] = rb;
            uf[d].bij[ra] = through;
        }
    }

    // Quotient cell numbering: roots in slot order.
    std::vector<std::vector<int>> root_index(D + 1);
    std::vector<std::vector<int>> roots(D + 1);
    Quotient q;
    q.cells.resize(D + 1);
    q.orbit_size.resize(D + 1);
    for (int d = 0; d <= D; ++d) {
        root_index[d].assign(slots_[d].size(), -1);
        for (size_t i = 0; i < slots_[d].size(); ++i)
            if (uf[d].parent[i] == int(i)) {
                root_index[d][i] = int(roots[d].size());
                roots[d].push_back(int(i));
            }
        q.cells[d] = int(roots[d].size());
        q.orbit_size[d].assign(roots[d].size(), 0);
        for (size_t i = 0; i < slots_[d].size(); ++i) {
            auto [r, bij] = uf[d].find(int(i));
            ++q.orbit_size[d][root_index[d][r]];
        }
    }

    // Reference frames: greedy affinely independent flag tuples per slot.
    std::vector<std::vector<std::vector<int>>> frame(D + 1); // positions
    for (int d = 0; d <= D; ++d) {
        frame[d].resize(slots_[d].size());
        for (size_t i = 0; i < slots_[d].size(); ++i) {
            const Slot& s = slots_[d][i];
            std::vector<int>& fr = frame[d][i];
            RatMat probe(d, 5);
            for (size_t p = 0; p < s.flags.size() && int(fr.size()) < d + 1; ++p) {
                if (fr.empty()) { fr.push_back(int(p)); continue; }
                int k = int(fr.size()) - 1;
                Vec5 diff = point(s.flags[p]);
                Vec5 origin = point(s.flags[fr[0]]);
                for (int c = 0; c < 5; ++c) probe.at(k, c) = diff[c] - origin[c];
                RatMat sub(k + 1, 5);
                for (int r = 0; r <= k; ++r)
                    for (int c = 0; c < 5; ++c) sub.at(r, c) = probe.at(r, c);
                if (sub.rank() == k + 1) fr.push_back(int(p));
            }
            check(int(fr.size()) == d + 1, "cell is geometrically degenerate");
        }
    }

    auto frame_points = [&](int d, int slot) {
        Tuple t;
        for (int pos : frame[d][slot]) t.push_back(point(slots_[d][slot].flags[pos]));
        return t;
    };

    // Sign of the identification slot -> its root.
    std::vector<std::vector<int>> sign(D + 1);
    for (int d = 0; d <= D; ++d) {
        sign[d].assign(slots_[d].size(), 1);
        if (d == 0) continue;
        for (size_t i = 0; i < slots_[d].size(); ++i) {
            auto [r, bij] = uf[d].find(int(i));
            if (r == int(i)) continue;
            Tuple root_frame = frame_points(d, r);
            // Image of this slot's frame tuple inside the root cell.
            std::vector<Vec5> cols;
            Vec5 origin = point(slots_[d][r].flags[bij[frame[d][i][0]]]);
            for (int k = 1; k <= d; ++k) {
                Vec5 pt = point(slots_[d][r].flags[bij[frame[d][i][k]]]);
                for (int c = 0; c < 5; ++c) pt[c] -= origin[c];
                cols.push_back(pt);
            }
            // Orientation of the mapped tuple relative to the root frame.
            // The columns are difference vectors, so the base point of the
            // mapped tuple does not matter.
            int s_img = det_sign_in_frame(root_frame, cols);
            check(s_img != 0, "identified cell maps degenerately");
            sign[d][i] = s_img;
        }
    }

    // Boundary matrices with incidence numbers.
    q.boundary.resize(D + 1);
    for (int d = 0; d <= D; ++d) {
        int nr = (d == 0) ? 0 : q.cells[d - 1];
        q.boundary[d] = IntegerMatrix(nr, q.cells[d]);
        if (d == 0) continue;
        for (size_t ri = 0; ri < roots[d].size(); ++ri) {
            int slot = roots[d][size_t(ri)];
            const Slot& s = slots_[d][slot];
            Tuple cell_frame = frame_points(d, slot);
            Vec5 cbary;
            {
                Tuple all;
                for (int f : s.flags) all.push_back(point(f));
                cbary = barycenter(all);
            }
            for (int fslot : s.facets) {
                const Slot& f = slots_[d - 1][fslot];
                Tuple fpts;
                for (int fl : f.flags) fpts.push_back(point(fl));
                Vec5 fbary = barycenter(fpts);
                // Outward direction then the facet frame.
                std::vector<Vec5> cols;
                Vec5 u;
                for (int c = 0; c < 5; ++c) u[c] = fbary[c] - cbary[c];
                cols.push_back(u);
                Tuple ffr = frame_points(d - 1, fslot);
                for (size_t k = 1; k < ffr.size(); ++k) {
                    Vec5 diff;
                    for (int c = 0; c < 5; ++c) diff[c] = ffr[k][c] - ffr[0][c];
                    cols.push_back(diff);
                }
                int inc = det_sign_in_frame(cell_frame, cols);
                check(inc != 0, "degenerate incidence");
                auto [froot, fbij] = uf[d - 1].find(fslot);
                int col = root_index[d][slot];
                int row = root_index[d - 1][froot];
                q.boundary[d].at(row, col) += inc * sign[d - 1][fslot];
            }
        }
    }

    // dd = 0, asserted rather than assumed.
    for (int d = 1; d < D + 1; ++d) {
        if (d == 1) continue;
        IntegerMatrix prod = q.boundary[d - 1] * q.boundary[d];
        for (int r = 0; r < prod.rows(); ++r)
            for (int c = 0; c < prod.cols(); ++c)
                check(prod.at(r, c) == 0, "dd != 0");
    }
    return q;
}

HomologyProfile homology_of(const Builder::Quotient& q) {
    const int D = int(q.cells.size()) - 1;
    HomologyProfile prof;
    prof.degrees.resize(D + 1);
    for (int d = 0; d <= D; ++d) {
        int n = q.cells[d];
        if (n == 0) { prof.degrees[d] = {0, {}}; continue; }
        // Kernel of boundary[d] in the V-coordinates of its SNF.
        IntegerMatrix A = q.boundary[d]; // (n_{d-1} x n)
        SmithTransforms st = smith_with_inverses(A);
        int mn = std::min(A.rows(), A.cols());
        std::vector<int> kernel_idx;
        for (int j = 0; j < n; ++j)
            if (j >= mn || st.snf.D.at(j, j) == 0) kernel_idx.push_back(j);
        int z = int(kernel_idx.size());
        // Image of boundary[d+1], one relation row per (d+1)-cell.
        int m = (d + 1 <= D) ? q.cells[d + 1] : 0;
        IntegerMatrix rel(m, z);
        for (int c = 0; c < m; ++c) {
            std::vector<Int> col(n);
            for (int r = 0; r < n; ++r) col[r] = q.boundary[d + 1].at(r, c);
            std::vector<Int> y = st.V_inv.apply(col);
            for (int j = 0; j < n; ++j) {
                bool in_kernel = (j >= mn) || (st.snf.D.at(j, j) == 0);
                if (!in_kernel && y[j] != 0)
                    throw std::logic_error("cw: boundary image escapes the kernel");
            }
            for (int k = 0; k < z; ++k) rel.at(c, k) = y[kernel_idx[k]];
        }
        AbelianGroup g = cokernel(rel);
        prof.degrees[d] = {g.rank, g.torsion};
    }
    return prof;
}

} // namespace cw
} // namespace cell24
