#include "cell24/cusps.hpp"

#include "cell24/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cell24 {

const char* flat_type_name(FlatType t) {
    switch (t) {
        case FlatType::F1: return "F1";
        case FlatType::F2: return "F2";
        case FlatType::F3: return "F3";
        case FlatType::F4: return "F4";
        case FlatType::F5: return "F5";
        case FlatType::F6: return "F6";
    }
    return "?";
}

std::vector<VertexCycle> vertex_cycles(const GluingSystem& gs) {
    std::vector<VertexCycle> out;
    for (auto& orbit : gluing_vertex_cycles(gs)) out.push_back({std::move(orbit)});
    return out;
}

CuspComplex cusp_complex(const VertexCycle& cycle, const GluingSystem& gs, int basepoint) {
    CuspComplex c;
    c.gs = &gs;
    c.cycle = cycle;
    c.graph = cusp_graph(gs, cycle.vertices, basepoint);
    return c;
}

HorosphereFrame horosphere_frame(const Polytope24& p, int vertex) {
    HorosphereFrame f;
    f.vertex = vertex;
    f.apex = p.vertex(vertex);
    // Functional x -> <x, apex>; its kernel is apex-perp.
    Vec5 c;
    for (int i = 0; i < 4; ++i) c[i] = f.apex[i];
    c[4] = -f.apex[4];
    int pivot = -1;
    for (int i = 0; i < 5; ++i)
        if (!c[i].is_zero()) { pivot = i; break; }
    if (pivot < 0) throw std::logic_error("horosphere_frame: zero apex");

    // Canonical kernel basis e_i - (c_i/c_p) e_p in index order; take the
    // first three that stay independent together with the apex.
    std::vector<Vec5> candidates;
    for (int i = 0; i < 5; ++i) {
        if (i == pivot) continue;
        Vec5 u{};
        u[i] = Rational(1);
        u[pivot] = -(c[i] / c[pivot]);
        candidates.push_back(u);
    }
    std::vector<Vec5> chosen;
    for (const Vec5& u : candidates) {
        if (chosen.size() == 3) break;
        RatMat m(int(chosen.size()) + 2, 5);
        for (size_t r = 0; r < chosen.size(); ++r)
            for (int k = 0; k < 5; ++k) m.at(int(r), k) = chosen[r][k];
        for (int k = 0; k < 5; ++k) m.at(int(chosen.size()), k) = u[k];
        for (int k = 0; k < 5; ++k) m.at(int(chosen.size()) + 1, k) = f.apex[k];
        if (m.rank() == int(chosen.size()) + 2) chosen.push_back(u);
    }
    if (chosen.size() != 3) throw std::logic_error("horosphere_frame: basis selection failed");
    for (int i = 0; i < 3; ++i) f.basis[i] = chosen[i];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) f.gram[i][j] = lorentz_form(f.basis[i], f.basis[j]);

    // Frame sign against the ambient coordinate orientation, completing with
    // the apex and the standard timelike vector.
    ExactMatrix m;
    Vec5 x0{};
    x0[4] = Rational(1);
    for (int r = 0; r < 5; ++r) {
        for (int i = 0; i < 3; ++i) m.at(r, i) = f.basis[i][r];
        m.at(r, 3) = f.apex[r];
        m.at(r, 4) = x0[r];
    }
    int s = m.det().sign();
    if (s == 0) throw std::logic_error("horosphere_frame: degenerate frame");
    f.orientation = s;
    return f;
}

namespace {

Mat3 mat3_identity() {
    Mat3 m{};
    for (int i = 0; i < 3; ++i) m[i][i] = Rational(1);
    return m;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 p{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) p[i][j] += a[i][k] * b[k][j];
    return p;
}

Vec3 mat3_apply(const Mat3& a, const Vec3& v) {
    Vec3 out{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) out[i] += a[i][k] * v[k];
    return out;
}

Rational det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 mat3_inverse(const Mat3& m) {
    Rational d = det3(m);
    if (d.is_zero()) throw std::logic_error("mat3_inverse: singular");
    Mat3 adj;
    adj[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    adj[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
    adj[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    adj[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    adj[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    adj[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
    adj[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    adj[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
    adj[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Rational inv = d.inverse();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) adj[i][j] *= inv;
    return adj;
}

std::vector<SideLetter> word_inverse(const std::vector<SideLetter>& w) {
    std::vector<SideLetter> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->generator_side, -it->exponent});
    return out;
}

// Affine isometry of the horosphere with the word that produced it.
struct Affine {
    Mat3 r;
    Vec3 t;
    std::vector<SideLetter> word;
};

Affine compose(const Affine& a, const Affine& b) { // apply b, then a
    Affine c;
    c.r = mat3_mul(a.r, b.r);
    c.t = mat3_apply(a.r, b.t);
    for (int i = 0; i < 3; ++i) c.t[i] += a.t[i];
    c.word = a.word;
    c.word.insert(c.word.end(), b.word.begin(), b.word.end());
    return c;
}

Affine inverse(const Affine& a) {
    Affine c;
    c.r = mat3_inverse(a.r);
    Vec3 rt = mat3_apply(c.r, a.t);
    for (int i = 0; i < 3; ++i) c.t[i] = -rt[i];
    c.word = word_inverse(a.word);
    return c;
}

Affine affine_power(const Affine& a, const Int& e) {
    Affine acc{mat3_identity(), {}, {}};
    Affine base = (e >= 0) ? a : inverse(a);
    Int n = abs(e);
    for (Int i(0); i < n; ++i) acc = compose(acc, base);
    return acc;
}

Rational form_g(const std::array<std::array<Rational, 3>, 3>& gram, const Vec3& x,
                const Vec3& y) {
    Rational s;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += x[i] * gram[i][j] * y[j];
    return s;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    // gcd on the additive subgroup aZ + bZ of Q: positive generator.
    Int den;
    mpz_lcm(den.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    Int na = a.numerator() * (den / a.denominator());
    Int nb = b.numerator() * (den / b.denominator());
    Int g;
    mpz_gcd(g.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
    return Rational(g, den);
}

Rational rational_mod(const Rational& a, const Rational& c) {
    // a mod c into [0, c), c > 0.
    Rational q = a / c;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
    return a - c * Rational(fl);
}

int element_order(const Mat3& m, int cap = 13) {
    Mat3 acc = m;
    for (int k = 1; k <= cap; ++k) {
        if (acc == mat3_identity()) return k;
        acc = mat3_mul(acc, m);
    }
    throw std::logic_error("point group element of unexpected order");
}

} // namespace

EuclideanPart euclidean_part(const ExactMatrix& g, const HorosphereFrame& frame) {
    auto lam = ray_scale(g, frame.apex);
    if (!lam)
        throw geometry_error("euclidean_part: matrix does not fix the cusp point");
    if (*lam != Rational(1))
        throw geometry_error("euclidean_part: not parabolic (similarity scale " + lam->str() +
                             ")");
    // Coordinates of a vector of apex-perp in (basis, apex).
    auto coords = [&](const Vec5& x) {
        RatMat m(5, 4);
        for (int r = 0; r < 5; ++r) {
            for (int i = 0; i < 3; ++i) m.at(r, i) = frame.basis[i][r];
            m.at(r, 3) = frame.apex[r];
        }
        std::vector<Rational> rhs(x.begin(), x.end());
        auto sol = m.solve(rhs);
        if (!sol) throw std::logic_error("euclidean_part: vector not in apex-perp span");
        // solve() does not reject inconsistent overdetermined systems; verify.
        for (int r = 0; r < 5; ++r) {
            Rational acc;
            for (int i = 0; i < 4; ++i) acc += m.at(r, i) * (*sol)[i];
            if (acc != x[r]) throw std::logic_error("euclidean_part: vector outside span");
        }
        return *sol;
    };
    EuclideanPart out;
    for (int i = 0; i < 3; ++i) {
        auto col = coords(g.apply(frame.basis[i]));
        for (int j = 0; j < 3; ++j) out.rotation[j][i] = col[j];
    }
    Vec5 x0{};
    x0[4] = Rational(1);
    Vec5 moved = g.apply(x0);
    for (int c = 0; c < 5; ++c) moved[c] -= x0[c];
    auto t = coords(moved);
    for (int j = 0; j < 3; ++j) out.translation[j] = t[j];
    return out;
}

ParabolicSubgroup parabolic_generators(const VertexCycle& cycle, const GluingSystem& gs,
                                       int basepoint) {
    ParabolicSubgroup pg;
    CuspGraph graph = cusp_graph(gs, cycle.vertices, basepoint);
    pg.basepoint = graph.basepoint;
    pg.frame = horosphere_frame(*gs.poly, graph.basepoint % 24);
    pg.generators = graph.loops;
    for (const CuspLoop& loop : pg.generators)
        pg.parts.push_back(euclidean_part(loop.matrix, pg.frame));
    return pg;
}

CuspFrameData cusp_frame_data(const ParabolicSubgroup& pg) {
    CuspFrameData data;

    // Point group: closure of the rotational parts.
    std::vector<Mat3> group{mat3_identity()};
    auto known = [&](const Mat3& m) {
        return std::find(group.begin(), group.end(), m) != group.end();
    };
    for (size_t q = 0; q < group.size(); ++q) {
        for (const EuclideanPart& part : pg.parts) {
            Mat3 prod = mat3_mul(part.rotation, group[q]);
            if (!known(prod)) {
                group.push_back(prod);
                if (group.size() > 48)
                    throw std::logic_error("cusp point group does not close");
            }
        }
    }
    data.point_group = group;
    int order = int(group.size());
    data.point_group_cyclic = false;
    data.rotation_order = 1;
    for (const Mat3& m : group)
        data.rotation_order = std::max(data.rotation_order, element_order(m));
    data.point_group_cyclic = (data.rotation_order == order);

    // Coset representatives indexed by rotation, then Schreier generators of
    // the translation kernel.
    std::map<std::vector<std::pair<std::string, std::string>>, int> rot_index;
    auto rot_key = [](const Mat3& m) {
        std::vector<std::pair<std::string, std::string>> k;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                k.push_back({m[i][j].numerator().get_str(), m[i][j].denominator().get_str()});
        return k;
    };
    std::vector<Affine> reps;
    std::vector<Mat3> rep_rot;
    auto rep_of = [&](const Mat3& m) -> int {
        auto it = rot_index.find(rot_key(m));
        return it == rot_index.end() ? -1 : it->second;
    };
    {
        Affine id{mat3_identity(), {}, {}};
        rot_index[rot_key(id.r)] = 0;
        reps.push_back(id);
        rep_rot.push_back(id.r);
    }
    std::vector<Affine> gens;
    for (size_t i = 0; i < pg.parts.size(); ++i)
        gens.push_back(
            {pg.parts[i].rotation, pg.parts[i].translation, pg.generators[i].word});
    for (size_t q = 0; q < reps.size(); ++q) {
        for (const Affine& g : gens) {
            Affine moved = compose(g, reps[q]);
            if (rep_of(moved.r) < 0) {
                rot_index[rot_key(moved.r)] = int(reps.size());
                reps.push_back(moved);
                rep_rot.push_back(moved.r);
            }
        }
    }
    if (int(reps.size()) != order)
        throw std::logic_error("cusp rotations do not cover the point group");

    std::vector<Affine> translations;
    for (size_t q = 0; q < reps.size(); ++q)
        for (const Affine& g : gens) {
            Affine moved = compose(g, reps[q]);
            Affine t = compose(inverse(reps[rep_of(moved.r)]), moved);
            if (!(t.r == mat3_identity()))
                throw std::logic_error("Schreier element is not a translation");
            translations.push_back(std::move(t));
        }

    // Lattice basis from the generating translations: with U M V = D, the
    // basis vectors are d_i U^{-1} e_i, and column i of V gives the
    // coefficients expressing each one in the generating translations.
    Int den(1);
    for (const Affine& t : translations)
        for (const Rational& x : t.t)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
    IntegerMatrix M(3, int(translations.size()));
    for (size_t c = 0; c < translations.size(); ++c)
        for (int r = 0; r < 3; ++r) {
            Rational scaled = translations[c].t[r] * Rational(den);
            M.at(r, int(c)) = scaled.numerator();
        }
    SmithTransforms st = smith_with_inverses(M);
    auto diag = st.snf.diagonal();
    int rank = 0;
    for (const Int& d : diag)
        if (d != 0) ++rank;
    if (rank != 3) throw std::logic_error("cusp translation lattice has rank != 3");
    std::array<Affine, 3> lattice_elems;
    for (int i = 0; i < 3; ++i) {
        for (int r = 0; r < 3; ++r)
            data.lattice[i][r] = Rational(diag[i] * st.U_inv.at(r, i), den);
        Affine acc{mat3_identity(), {}, {}};
        for (int j = 0; j < st.snf.V.rows(); ++j)
            acc = compose(acc, affine_power(translations[j], st.snf.V.at(j, i)));
        for (int r = 0; r < 3; ++r)
            if (acc.t[r] != data.lattice[i][r])
                throw std::logic_error("lattice word does not match basis vector");
        lattice_elems[i] = acc;
        data.lattice_words[i] = acc.word;
    }

    Mat3 lattice_gram;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            lattice_gram[i][j] = form_g(pg.frame.gram, data.lattice[i], data.lattice[j]);
    data.covolume_sq = det3(lattice_gram);

    // Chirality: cyclic point group of order 3, 4 or 6.
    data.chiral = data.point_group_cyclic && (order == 3 || order == 4 || order == 6);
    if (!data.chiral) return data;

    // A rotation of maximal order and its coset representative.
    Mat3 rot = mat3_identity();
    for (const Mat3& m : group)
        if (element_order(m) == order) { rot = m; break; }
    const Affine& screw = reps[rep_of(rot)];

    // Rotation axis: kernel of rot - id.
    Vec3 axis{};
    {
        RatMat m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                m.at(i, j) = rot[i][j] - (i == j ? Rational(1) : Rational(0));
        auto ker = m.kernel();
        if (ker.size() != 1) throw std::logic_error("screw rotation without a unique axis");
        for (int i = 0; i < 3; ++i) axis[i] = ker[0][i];
    }
    Rational axis_sq = form_g(pg.frame.gram, axis, axis);
    auto axial = [&](const Vec3& t) { return form_g(pg.frame.gram, t, axis) / axis_sq; };

    Rational c(0);
    for (int i = 0; i < 3; ++i) c = rational_gcd(c, axial(data.lattice[i]));
    if (c.is_zero()) throw std::logic_error("translation lattice misses the screw axis");
    Rational alpha = axial(screw.t);
    Rational m_fwd = rational_mod(alpha, c);
    if (m_fwd.is_zero()) throw std::logic_error("screw rotation with a fixed point");
    Rational m_bwd = c - m_fwd;
    if (m_fwd == m_bwd) throw std::logic_error("screw pitch is ambiguous");

    // Integer data of the axial functional on the lattice.
    std::array<Rational, 3> ax;
    Int aden(1);
    for (int i = 0; i < 3; ++i) {
        ax[i] = axial(data.lattice[i]);
        mpz_lcm(aden.get_mpz_t(), aden.get_mpz_t(), ax[i].denominator().get_mpz_t());
    }
    mpz_lcm(aden.get_mpz_t(), aden.get_mpz_t(), c.denominator().get_mpz_t());
    IntegerMatrix axrow(1, 3);
    for (int i = 0; i < 3; ++i) axrow.at(0, i) = (ax[i] * Rational(aden)).numerator();
    Int cg = (c * Rational(aden)).numerator();

    // A lattice element of axial exactly c, for normalizing the screw pitch.
    HomLattice pitch = solve_hom_lattice(axrow, {{0, cg}});
    if (pitch.empty()) throw std::logic_error("axial gcd element not found");
    Affine ell{mat3_identity(), {}, {}};
    for (int i = 0; i < 3; ++i) ell = compose(ell, affine_power(lattice_elems[i], pitch.particular[i]));

    Rational q = alpha / c;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
    Affine screw_norm = compose(screw, affine_power(ell, -fl));
    Affine primitive = (m_fwd < m_bwd) ? screw_norm : compose(ell, inverse(screw_norm));
    if (rational_mod(axial(primitive.t), c) != std::min(m_fwd, m_bwd))
        throw std::logic_error("screw normalization failed");

    // Horizontal sublattice: integer kernel of the axial functional.
    {
        HomLattice horiz = solve_hom_lattice(axrow, {});
        if (horiz.basis.size() != 2)
            throw std::logic_error("horizontal sublattice has rank != 2");
        for (int k = 0; k < 2; ++k) {
            Affine acc{mat3_identity(), {}, {}};
            for (int i = 0; i < 3; ++i)
                acc = compose(acc, affine_power(lattice_elems[i], horiz.basis[k][i]));
            if (!axial(acc.t).is_zero())
                throw std::logic_error("horizontal basis element has axial part");
            data.horizontal_words[k] = acc.word;
        }
    }

    // Turning sense of rot about the axis, oriented along the minimal
    // positive screw translation.
    Vec3 x{};
    int h = 0;
    for (int probe = 0; probe < 3 && h == 0; ++probe) {
        x = Vec3{};
        x[probe] = Rational(1);
        Mat3 trip;
        Vec3 rx = mat3_apply(rot, x);
        for (int i = 0; i < 3; ++i) {
            trip[i][0] = x[i];
            trip[i][1] = rx[i];
            trip[i][2] = axis[i];
        }
        h = det3(trip).sign();
    }
    if (h == 0) throw std::logic_error("handedness probe failed");
    h *= pg.frame.orientation;
    if (m_bwd < m_fwd) h = -h;

    data.screw_rotation = primitive.r;
    data.screw_translation = primitive.t;
    data.screw_axis = axis;
    data.screw_word = primitive.word;
    data.handedness = h;
    return data;
}

HomologyProfile cusp_section_homology(const CuspComplex& c) {
    const GluingSystem& gs = *c.gs;
    const Polytope24& p = *gs.poly;
    Rational t(1, 4); // truncation parameter; any value in (0,1) works
    auto flag_point = [&p, t](int gid) {
        int v = gid / 24, w = gid % 24;
        Vec5 pt = p.vertex(v);
        for (int k = 0; k < 5; ++k) pt[k] += t * (p.vertex(w)[k] - p.vertex(v)[k]);
        return pt;
    };
    cw::Builder b(3, flag_point);
    auto fid = [](int v, int w) { return v * 24 + w; };

    // Cells of each cube in the cycle.
    for (int gv : c.graph.cubes) {
        int copy = gv / 24, v = gv % 24;
        std::vector<int> cube_flags;
        for (int w : p.neighbors(v)) cube_flags.push_back(fid(v, w));
        b.add_cell(3, {0, copy, v, 0}, cube_flags);
        for (int w : p.neighbors(v)) b.add_cell(0, {3, copy, v, w}, {fid(v, w)});
        for (int s : p.facets_at_vertex(v)) {
            std::vector<int> sq;
            for (int w : p.neighbors_in_facet(v, s)) sq.push_back(fid(v, w));
            b.add_cell(2, {1, copy, v, s}, sq);
            b.add_boundary(3, {0, copy, v, 0}, {1, copy, v, s});
        }
        for (const auto& ridge : p.ridges()) {
            int rid = p.ridge_between(ridge.facet_a, ridge.facet_b);
            if (std::find(ridge.vertices.begin(), ridge.vertices.end(), v) ==
                ridge.vertices.end())
                continue;
            std::array<int, 2> others{};
            int k = 0;
            for (int u : ridge.vertices)
                if (u != v) others[k++] = u;
            b.add_cell(1, {2, copy, v, rid}, {fid(v, others[0]), fid(v, others[1])});
            b.add_boundary(1, {2, copy, v, rid}, {3, copy, v, others[0]});
            b.add_boundary(1, {2, copy, v, rid}, {3, copy, v, others[1]});
        }
        for (int s : p.facets_at_vertex(v)) {
            auto nb = p.neighbors_in_facet(v, s);
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j) {
                    if (!p.adjacent_vertices(nb[i], nb[j])) continue;
                    int rid = p.ridge_through(v, nb[i], nb[j]);
                    if (rid < 0) continue;
                    b.add_boundary(2, {1, copy, v, s}, {2, copy, v, rid});
                }
        }
    }

    // Identifications induced by the face gluings.
    for (int gv : c.graph.cubes) {
        int copy = gv / 24, v = gv % 24;
        for (int s : p.facets_at_vertex(v)) {
            int gside = gs.global_side(copy, s);
            int gw = gs.glued_vertex(gside, gv);
            int copy2 = gw / 24, v2 = gw % 24;
            int s2 = gs.base->partner[s];
            const auto& phi = gs.base->vmap[s];
            std::map<int, int> fm;
            for (int w : p.neighbors_in_facet(v, s)) fm[fid(v, w)] = fid(v2, phi[w]);
            b.identify(2, {1, copy, v, s}, {1, copy2, v2, s2}, fm);
            auto nb = p.neighbors_in_facet(v, s);
            for (size_t i = 0; i < nb.size(); ++i) {
                b.identify(0, {3, copy, v, nb[i]}, {3, copy2, v2, phi[nb[i]]}, fm);
                for (size_t j = i + 1; j < nb.size(); ++j) {
                    if (!p.adjacent_vertices(nb[i], nb[j])) continue;
                    int rid = p.ridge_through(v, nb[i], nb[j]);
                    int rid2 = p.ridge_through(v2, phi[nb[i]], phi[nb[j]]);
                    if (rid < 0 || rid2 < 0)
                        throw std::logic_error("cusp homology: ridge image missing");
                    b.identify(1, {2, copy, v, rid}, {2, copy2, v2, rid2}, fm);
                }
            }
        }
    }
    return cw::homology_of(b.quotient());
}

FlatType flat_type_from_h1(const HomologyDegree& h1) {
    const std::vector<Int> none;
    if (h1.rank == 3 && h1.torsion.empty()) return FlatType::F1;
    if (h1.rank == 1 && h1.torsion == std::vector<Int>{2, 2}) return FlatType::F2;
    if (h1.rank == 1 && h1.torsion == std::vector<Int>{3}) return FlatType::F3;
    if (h1.rank == 1 && h1.torsion == std::vector<Int>{2}) return FlatType::F4;
    if (h1.rank == 1 && h1.torsion.empty()) return FlatType::F5;
    if (h1.rank == 0 && h1.torsion == std::vector<Int>{4, 4}) return FlatType::F6;
    throw std::logic_error("H1 does not match any orientable flat 3-manifold");
}

namespace {

FlatType flat_type_from_point_group(const CuspFrameData& d) {
    int order = int(d.point_group.size());
    if (order == 1) return FlatType::F1;
    if (order == 2) return FlatType::F2;
    if (order == 3) return FlatType::F3;
    if (order == 4 && d.point_group_cyclic) return FlatType::F4;
    if (order == 6 && d.point_group_cyclic) return FlatType::F5;
    if (order == 4 && !d.point_group_cyclic) return FlatType::F6;
    throw std::logic_error("point group does not match any orientable flat 3-manifold");
}

} // namespace

FlatClass classify_flat(const CuspComplex& c) {
    HomologyProfile prof = cusp_section_homology(c);
    FlatType by_h1 = flat_type_from_h1(prof.degrees.at(1));

    ParabolicSubgroup pg = parabolic_generators(c.cycle, *c.gs, c.graph.basepoint);
    CuspFrameData data = cusp_frame_data(pg);
    FlatType by_group = flat_type_from_point_group(data);
    if (by_h1 != by_group)
        throw std::logic_error(std::string("flat classification mismatch: H1 says ") +
                               flat_type_name(by_h1) + ", point group says " +
                               flat_type_name(by_group));
    FlatClass out;
    out.type = by_h1;
    for (const Mat3& m : data.point_group)
        if (det3(m) != Rational(1)) { out.orientable = false; break; }
    out.handedness = data.handedness;
    return out;
}

int handedness(const CuspComplex& c) {
    ParabolicSubgroup pg = parabolic_generators(c.cycle, *c.gs, c.graph.basepoint);
    CuspFrameData data = cusp_frame_data(pg);
    if (!data.chiral) throw std::logic_error("handedness: cusp is not chiral");
    return data.handedness;
}

} // namespace cell24
