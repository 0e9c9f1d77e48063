#include "cell24/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cell24 {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("Polytope24: ") + msg);
}

std::array<Vec5, 24> canonical_vertices() {
    std::array<Vec5, 24> v;
    // Vertices 0..15: (±1/2, ±1/2, ±1/2, ±1/2, 1), signs in binary order with
    // the first coordinate most significant and minus for 0.
    Rational half(1, 2);
    for (int i = 0; i < 16; ++i) {
        for (int c = 0; c < 4; ++c) {
            bool plus = (i >> (3 - c)) & 1;
            v[i][c] = plus ? half : -half;
        }
        v[i][4] = Rational(1);
    }
    // Vertices 16..23: (±e_c, 1) ordered e1, -e1, e2, -e2, e3, -e3, e4, -e4.
    for (int k = 0; k < 8; ++k) {
        int c = k / 2;
        int sign = (k % 2 == 0) ? 1 : -1;
        v[16 + k][c] = Rational(sign);
        v[16 + k][4] = Rational(1);
    }
    return v;
}

// Side numbering is fixed only implicitly by the bundled pairing data; each
// side is identified here by its outward normal. Derived facets are matched
// against this table and renumbered accordingly.
const std::array<std::array<int, 5>, 24> kSideNormals = {{
    {1, 1, 0, 0, 1},   {-1, 1, 0, 0, 1},  {1, -1, 0, 0, 1},  {-1, -1, 0, 0, 1},
    {1, 0, 1, 0, 1},   {-1, 0, 1, 0, 1},  {1, 0, -1, 0, 1},  {-1, 0, -1, 0, 1},
    {0, 1, 1, 0, 1},   {0, -1, 1, 0, 1},  {0, 1, -1, 0, 1},  {0, -1, -1, 0, 1},
    {1, 0, 0, 1, 1},   {-1, 0, 0, 1, 1},  {1, 0, 0, -1, 1},  {-1, 0, 0, -1, 1},
    {0, 1, 0, 1, 1},   {0, -1, 0, 1, 1},  {0, 1, 0, -1, 1},  {0, -1, 0, -1, 1},
    {0, 0, 1, 1, 1},   {0, 0, -1, 1, 1},  {0, 0, 1, -1, 1},  {0, 0, -1, -1, 1},
}};

} // namespace

Polytope24 Polytope24::build() {
    Polytope24 p;
    p.vertices_ = canonical_vertices();

    for (int i = 0; i < 24; ++i)
        require(lorentz_form(p.vertices_[i], p.vertices_[i]).is_zero() &&
                    p.vertices_[i][4] == Rational(1),
                "vertex not normalized light-like");

    // Edges: the minimal-magnitude Gram value class (see kEdgeGram).
    for (int i = 0; i < 24; ++i)
        for (int j = i + 1; j < 24; ++j)
            if (p.gram(i, j) == kEdgeGram) p.edges_.push_back({i, j});
    require(p.edges_.size() == 96, "edge count != 96");

    for (auto [a, b] : p.edges_) {
        p.vertex_neighbors_[a].push_back(b);
        p.vertex_neighbors_[b].push_back(a);
    }
    for (int v = 0; v < 24; ++v) {
        std::sort(p.vertex_neighbors_[v].begin(), p.vertex_neighbors_[v].end());
        require(p.vertex_neighbors_[v].size() == 8, "vertex degree != 8");
    }

    // Facets: Gram value -1 marks octahedron diagonals; the three diagonals of
    // a facet share their midpoint vector v+w, which groups the 72 such pairs
    // into the 24 facets.
    std::map<std::array<std::string, 5>, std::vector<std::pair<int, int>>> groups;
    auto key_of = [](const Vec5& x) {
        std::array<std::string, 5> k;
        for (int c = 0; c < 5; ++c) k[c] = x[c].str();
        return k;
    };
    for (int i = 0; i < 24; ++i)
        for (int j = i + 1; j < 24; ++j)
            if (p.gram(i, j) == Rational(-1)) {
                Vec5 mid;
                for (int c = 0; c < 5; ++c) mid[c] = p.vertices_[i][c] + p.vertices_[j][c];
                groups[key_of(mid)].push_back({i, j});
            }
    require(groups.size() == 24, "diagonal grouping does not give 24 facets");

    std::vector<std::vector<int>> raw_facets;
    std::vector<Vec5> raw_normals;
    for (const auto& [key, diags] : groups) {
        require(diags.size() == 3, "facet without exactly 3 diagonals");
        std::set<int> vs;
        for (auto [a, b] : diags) { vs.insert(a); vs.insert(b); }
        require(vs.size() == 6, "facet without exactly 6 vertices");
        std::vector<int> facet(vs.begin(), vs.end());

        // Normal: the Lorentz-orthogonal complement of the facet's span.
        RatMat m(6, 5);
        for (int r = 0; r < 6; ++r) {
            const Vec5& v = p.vertices_[facet[r]];
            for (int c = 0; c < 4; ++c) m.at(r, c) = v[c];
            m.at(r, 4) = -v[4];
        }
        auto ker = m.kernel();
        require(ker.size() == 1, "facet span is not a hyperplane");
        // Scale to a primitive integer vector.
        Int lcm(1);
        for (const Rational& x : ker[0])
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
        std::vector<Int> n(5);
        Int gcd(0);
        for (int c = 0; c < 5; ++c) {
            Rational scaled = ker[0][c] * Rational(lcm);
            n[c] = scaled.numerator();
            mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n[c].get_mpz_t());
        }
        for (int c = 0; c < 5; ++c) n[c] /= gcd;
        Vec5 normal;
        for (int c = 0; c < 5; ++c) normal[c] = Rational(n[c]);
        // Orient outward: every vertex off the facet on the negative side.
        int side_sign = 0;
        for (int v = 0; v < 24; ++v) {
            if (vs.count(v)) continue;
            int s = lorentz_form(p.vertices_[v], normal).sign();
            require(s != 0, "off-facet vertex on facet hyperplane");
            require(side_sign == 0 || side_sign == s, "facet hyperplane not supporting");
            side_sign = s;
        }
        if (side_sign > 0)
            for (int c = 0; c < 5; ++c) normal[c] = -normal[c];
        require(lorentz_form(normal, normal) == Rational(1),
                "facet normal not unit space-like");
        raw_facets.push_back(std::move(facet));
        raw_normals.push_back(normal);
    }

    // Renumber to the canonical side order.
    std::array<bool, 24> used{};
    for (size_t i = 0; i < raw_facets.size(); ++i) {
        int slot = -1;
        for (int s = 0; s < 24; ++s) {
            bool match = true;
            for (int c = 0; c < 5; ++c)
                if (raw_normals[i][c] != Rational(kSideNormals[s][c])) { match = false; break; }
            if (match) { slot = s; break; }
        }
        require(slot >= 0 && !used[slot], "derived facet does not match side table");
        used[slot] = true;
        p.facets_[slot] = raw_facets[i];
        p.normals_[slot] = raw_normals[i];
    }

    for (int f = 0; f < 24; ++f) {
        require(p.facets_[f].size() == 6, "facet vertex count != 6");
        for (int v : p.facets_[f]) p.vertex_facets_[v].push_back(f);
    }
    for (int v = 0; v < 24; ++v) {
        std::sort(p.vertex_facets_[v].begin(), p.vertex_facets_[v].end());
        require(p.vertex_facets_[v].size() == 6, "vertex not on exactly 6 facets");
    }

    // Ridges: adjacent facets share exactly 3 vertices.
    for (auto& row : p.ridge_of_facets_) row.fill(-1);
    for (int f = 0; f < 24; ++f)
        for (int g = f + 1; g < 24; ++g) {
            std::vector<int> common;
            std::set_intersection(p.facets_[f].begin(), p.facets_[f].end(),
                                  p.facets_[g].begin(), p.facets_[g].end(),
                                  std::back_inserter(common));
            require(common.size() <= 1 || common.size() == 3,
                    "facet pair shares an impossible vertex count");
            if (common.size() == 3) {
                Ridge r{f, g, {common[0], common[1], common[2]}};
                p.ridge_of_facets_[f][g] = p.ridge_of_facets_[g][f] = int(p.ridges_.size());
                p.ridges_.push_back(r);
            }
        }
    require(p.ridges_.size() == 96, "ridge count != 96");
    for (size_t r = 0; r < p.ridges_.size(); ++r) {
        p.facet_ridges_[p.ridges_[r].facet_a].push_back(int(r));
        p.facet_ridges_[p.ridges_[r].facet_b].push_back(int(r));
    }
    for (int f = 0; f < 24; ++f) {
        int cnt = 0;
        for (int g = 0; g < 24; ++g)
            if (p.ridge_of_facets_[f][g] >= 0) ++cnt;
        require(cnt == 8, "facet without exactly 8 ridges");
    }

    // Vertex links must be combinatorial cubes: 6 faces, 8 vertices, 12 edges,
    // every link face a quadrilateral, every link vertex on 3 faces.
    for (int v = 0; v < 24; ++v) {
        for (int f : p.vertex_facets_[v])
            require(p.neighbors_in_facet(v, f).size() == 4, "link face not a square");
        int ridge_count = 0;
        for (const Ridge& r : p.ridges_)
            if (r.vertices[0] == v || r.vertices[1] == v || r.vertices[2] == v) ++ridge_count;
        require(ridge_count == 12, "link edge count != 12");
        for (int w : p.vertex_neighbors_[v]) {
            int shared = 0;
            for (int f : p.vertex_facets_[v])
                if (p.facet_contains(f, w)) ++shared;
            require(shared == 3, "link vertex not on 3 faces");
        }
    }
    return p;
}

const Polytope24& Polytope24::instance() {
    static const Polytope24 p = build();
    return p;
}

bool Polytope24::facet_contains(int f, int v) const {
    return std::binary_search(facets_[f].begin(), facets_[f].end(), v);
}

bool Polytope24::adjacent_vertices(int v, int w) const {
    return std::binary_search(vertex_neighbors_[v].begin(), vertex_neighbors_[v].end(), w);
}

std::vector<int> Polytope24::neighbors_in_facet(int v, int f) const {
    std::vector<int> out;
    for (int w : vertex_neighbors_[v])
        if (facet_contains(f, w)) out.push_back(w);
    return out;
}

int Polytope24::ridge_between(int f, int g) const { return ridge_of_facets_[f][g]; }

int Polytope24::ridge_through(int v, int a, int b) const {
    std::array<int, 3> key{v, a, b};
    std::sort(key.begin(), key.end());
    for (size_t i = 0; i < ridges_.size(); ++i)
        if (ridges_[i].vertices == key) return int(i);
    return -1;
}

int Polytope24::ridge_other_facet(int r, int f) const {
    const Ridge& rd = ridges_[r];
    return rd.facet_a == f ? rd.facet_b : rd.facet_a;
}

std::array<std::array<bool, 24>, 24> facet_adjacency(const Polytope24& p) {
    std::array<std::array<bool, 24>, 24> adj{};
    for (int f = 0; f < 24; ++f)
        for (int g = 0; g < 24; ++g) adj[f][g] = (f != g) && p.ridge_between(f, g) >= 0;
    return adj;
}

SymmetryGroup::SymmetryGroup(std::vector<SymmetryElement> elems) : elems_(std::move(elems)) {}

int SymmetryGroup::index_of(const std::array<int, 24>& vperm) const {
    for (size_t i = 0; i < elems_.size(); ++i)
        if (elems_[i].vertex_perm == vperm) return int(i);
    return -1;
}

SymmetryGroup symmetry_group(const Polytope24& p) {
    // A symmetry is determined by the images of 5 linearly independent
    // vertices; enumerate images of a fixed base tuple consistent with the
    // Gram matrix, solve for the linear map, and keep it if it permutes the
    // whole vertex set and preserves the form.
    const std::array<int, 5> base = {0, 1, 2, 4, 8};
    RatMat bmat(5, 5);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) bmat.at(r, c) = p.vertex(base[r])[c];

    std::vector<SymmetryElement> elems;
    std::array<int, 5> img{};
    auto gram_ok = [&](int k) {
        for (int i = 0; i < k; ++i)
            if (p.gram(base[i], base[k]) != p.gram(img[i], img[k])) return false;
        return true;
    };

    std::vector<int> stack_choice;
    // Depth-first over image tuples.
    auto try_tuple = [&]() {
        // Solve g * v_{base[r]} = v_{img[r]}: five 5x5 systems, one per row of g.
        // Equivalent: g = W * B^{-1} with columns the vertex vectors; here solve
        // B^T x = rows. Build g column-wise via RatMat::solve on transposed data.
        RatMat bt(5, 5);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) bt.at(r, c) = p.vertex(base[c])[r];
        ExactMatrix g;
        for (int row = 0; row < 5; ++row) {
            // Row `row` of g satisfies  <row, v_base[c]> = v_img[c][row] for all c.
            RatMat sys(5, 5);
            for (int c = 0; c < 5; ++c)
                for (int k = 0; k < 5; ++k) sys.at(c, k) = p.vertex(base[c])[k];
            std::vector<Rational> rhs(5);
            for (int c = 0; c < 5; ++c) rhs[c] = p.vertex(img[c])[row];
            auto sol = sys.solve(rhs);
            if (!sol) return;
            for (int k = 0; k < 5; ++k) g.at(row, k) = (*sol)[k];
        }
        if (!lorentz_check(g)) return;
        if (g.at(4, 4).sign() <= 0) return;
        // Must permute the vertex set exactly (ray scalars are forced to 1).
        SymmetryElement e;
        e.matrix = g;
        for (int v = 0; v < 24; ++v) {
            Vec5 gv = g.apply(p.vertex(v));
            int target = -1;
            for (int w = 0; w < 24; ++w)
                if (gv == p.vertex(w)) { target = w; break; }
            if (target < 0) return;
            e.vertex_perm[v] = target;
        }
        // Induced facet permutation.
        for (int f = 0; f < 24; ++f) {
            std::vector<int> mapped;
            for (int v : p.facet(f)) mapped.push_back(e.vertex_perm[v]);
            std::sort(mapped.begin(), mapped.end());
            int target = -1;
            for (int h = 0; h < 24; ++h)
                if (p.facet(h) == mapped) { target = h; break; }
            if (target < 0) return;
            e.facet_perm[f] = target;
        }
        e.orientation_preserving = (g.det() == Rational(1));
        elems.push_back(std::move(e));
    };

    for (img[0] = 0; img[0] < 24; ++img[0]) {
        for (img[1] = 0; img[1] < 24; ++img[1]) {
            if (!gram_ok(1)) continue;
            for (img[2] = 0; img[2] < 24; ++img[2]) {
                if (!gram_ok(2)) continue;
                for (img[3] = 0; img[3] < 24; ++img[3]) {
                    if (!gram_ok(3)) continue;
                    for (img[4] = 0; img[4] < 24; ++img[4]) {
                        if (!gram_ok(4)) continue;
                        try_tuple();
                    }
                }
            }
        }
    }
    return SymmetryGroup(std::move(elems));
}

} // namespace cell24
