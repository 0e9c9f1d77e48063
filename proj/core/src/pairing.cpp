#include "cell24/pairing.hpp"

#include "cell24/errors.hpp"
#include "cell24/gluing.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cell24 {

std::vector<int> Correspondence::domain(const Polytope24& p) const {
    std::vector<int> d;
    for (int v = 0; v < 24; ++v)
        if (image[v] >= 0) d.push_back(v);
    (void)p;
    return d;
}

Correspondence Correspondence::inverse(const Polytope24& p) const {
    (void)p;
    Correspondence inv;
    inv.from_side = to_side;
    inv.to_side = from_side;
    inv.image.fill(-1);
    for (int v = 0; v < 24; ++v)
        if (image[v] >= 0) inv.image[image[v]] = v;
    return inv;
}

std::vector<int> SidePairing::generator_sides() const {
    std::vector<int> out;
    for (int s = 0; s < 24; ++s)
        if (s < partner[s]) out.push_back(s);
    return out;
}

SideLetter SidePairing::letter_for_crossing(int side) const {
    if (side < partner[side]) return {side, +1};
    return {partner[side], -1};
}

Correspondence SidePairing::correspondence(const Polytope24& p, int side) const {
    (void)p;
    Correspondence c;
    c.from_side = side;
    c.to_side = partner[side];
    c.image = vmap[side];
    return c;
}

namespace {

LorentzIsometry derive_impl(const Polytope24& p, const Correspondence& corr, bool strict) {
    if (corr.from_side < 0 || corr.from_side >= 24 || corr.to_side < 0 || corr.to_side >= 24)
        throw geometry_error("derive_isometry: side out of range");
    std::vector<int> dom = corr.domain(p);
    if (dom != p.facet(corr.from_side))
        throw geometry_error("derive_isometry: domain is not the source side's vertex set");
    std::vector<int> img;
    for (int v : dom) img.push_back(corr.image[v]);
    std::vector<int> img_sorted = img;
    std::sort(img_sorted.begin(), img_sorted.end());
    if (img_sorted != p.facet(corr.to_side))
        throw geometry_error("derive_isometry: image is not the target side's vertex set");

    // Ray scalars from Gram ratios: lambda_a lambda_b <w_a,w_b> = <v_a,v_b>.
    auto ratio = [&](int a, int b) {
        Rational num = p.gram(dom[a], dom[b]);
        Rational den = p.gram(img[a], img[b]);
        return num / den;
    };
    Rational l0sq = ratio(0, 1) * ratio(0, 2) / ratio(1, 2);
    auto l0 = exact_sqrt(l0sq);
    if (!l0 || l0->is_zero())
        throw geometry_error("derive_isometry: not an isometry (scalar system)");
    std::vector<Rational> lam(6);
    lam[0] = *l0;
    for (int b = 1; b < 6; ++b) lam[b] = ratio(0, b) / lam[0];
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            if (lam[a] * lam[b] != ratio(a, b))
                throw geometry_error("derive_isometry: not an isometry (scalar system)");
    for (const Rational& l : lam)
        if (l.sign() <= 0) throw geometry_error("derive_isometry: not an isometry (ray scalars)");

    // Four independent vertices span the side's hyperplane; the normal
    // condition g n_from = -n_to pins the remaining direction.
    std::vector<int> chosen;
    {
        RatMat probe(4, 5);
        int rank = 0;
        for (int k = 0; k < 6 && rank < 4; ++k) {
            for (int c = 0; c < 5; ++c) probe.at(rank, c) = p.vertex(dom[k])[c];
            RatMat sub(rank + 1, 5);
            for (int r = 0; r <= rank; ++r)
                for (int c = 0; c < 5; ++c) sub.at(r, c) = probe.at(r, c);
            if (sub.rank() == rank + 1) {
                chosen.push_back(k);
                ++rank;
            }
        }
        if (rank != 4) throw geometry_error("derive_isometry: degenerate side");
    }

    ExactMatrix C, T;
    for (int col = 0; col < 4; ++col) {
        int k = chosen[col];
        for (int r = 0; r < 5; ++r) {
            C.at(r, col) = p.vertex(dom[k])[r];
            T.at(r, col) = lam[k] * p.vertex(img[k])[r];
        }
    }
    for (int r = 0; r < 5; ++r) {
        C.at(r, 4) = p.facet_normal(corr.from_side)[r];
        T.at(r, 4) = -p.facet_normal(corr.to_side)[r];
    }
    ExactMatrix g = T * C.inverse();

    for (int k = 0; k < 6; ++k) {
        Vec5 gv = g.apply(p.vertex(dom[k]));
        Vec5 target = p.vertex(img[k]);
        for (int c = 0; c < 5; ++c) target[c] *= lam[k];
        if (gv != target)
            throw geometry_error("derive_isometry: not an isometry (vertex check)");
    }
    if (!lorentz_check(g))
        throw geometry_error("derive_isometry: not an isometry (Gram condition)");
    LorentzIsometry iso{g};
    if (strict && !iso.orientation_preserving())
        throw geometry_error("derive_isometry: orientation-reversing");
    return iso;
}

} // namespace

LorentzIsometry derive_isometry(const Polytope24& p, const Correspondence& corr) {
    return derive_impl(p, corr, /*strict=*/true);
}

LorentzIsometry derive_side_map(const Polytope24& p, const Correspondence& corr) {
    return derive_impl(p, corr, /*strict=*/false);
}

SidePairing pairing_from_correspondences(const Polytope24& p,
                                         const std::vector<Correspondence>& corrs) {
    std::array<std::optional<Correspondence>, 24> by_side;
    for (const Correspondence& c : corrs) {
        if (c.from_side == c.to_side)
            throw parse_error("pairing: side paired with itself");
        if (by_side[c.from_side])
            throw parse_error("pairing: duplicate side");
        by_side[c.from_side] = c;
        if (!by_side[c.to_side]) by_side[c.to_side] = c.inverse(p);
    }
    SidePairing sp;
    sp.vmap = {};
    for (auto& row : sp.vmap) row.fill(-1);
    for (int s = 0; s < 24; ++s) {
        if (!by_side[s]) throw parse_error("pairing: side " + std::to_string(s + 1) + " unassigned");
        const Correspondence& c = *by_side[s];
        sp.partner[s] = c.to_side;
        sp.vmap[s] = c.image;
    }
    for (int s = 0; s < 24; ++s) {
        if (sp.partner[s] == s) throw parse_error("pairing: side paired with itself");
        if (sp.partner[sp.partner[s]] != s) throw parse_error("pairing: pairing not involutive");
        for (int v = 0; v < 24; ++v) {
            int w = sp.vmap[s][v];
            if (w < 0) continue;
            if (sp.vmap[sp.partner[s]][w] != v)
                throw parse_error("pairing: vertex maps not mutually inverse");
        }
    }
    sp.maps.reserve(24);
    for (int s = 0; s < 24; ++s)
        sp.maps.push_back(derive_side_map(p, *by_side[s]));
    for (int s = 0; s < 24; ++s) {
        if (s > sp.partner[s]) continue;
        if (sp.maps[sp.partner[s]].matrix() != lorentz_inverse(sp.maps[s].matrix()))
            throw parse_error("pairing: inverse side map mismatch");
    }
    return sp;
}

namespace {

int parse_index(const std::string& tok, int line_no) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 1 || v > 24) throw std::invalid_argument("range");
        return v - 1;
    } catch (const std::exception&) {
        throw parse_error("pairing line " + std::to_string(line_no) + ": bad index '" + tok + "'");
    }
}

} // namespace

SidePairing parse_pairing(const std::string& text, const Polytope24& p) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<Correspondence> corrs;
    std::array<bool, 24> seen{};
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue; // blank
        if (tok != "side")
            throw parse_error("pairing line " + std::to_string(line_no) + ": expected 'side'");
        std::string si, arrow, sj, colon;
        if (!(ls >> si >> arrow >> sj >> colon) || arrow != "->" || colon != ":")
            throw parse_error("pairing line " + std::to_string(line_no) + ": malformed header");
        Correspondence c;
        c.from_side = parse_index(si, line_no);
        c.to_side = parse_index(sj, line_no);
        if (c.from_side == c.to_side)
            throw parse_error("pairing line " + std::to_string(line_no) +
                              ": side paired with itself");
        c.image.fill(-1);
        int prev = -1, count = 0;
        while (ls >> tok) {
            auto gt = tok.find('>');
            if (gt == std::string::npos)
                throw parse_error("pairing line " + std::to_string(line_no) +
                                  ": malformed vertex map '" + tok + "'");
            int a = parse_index(tok.substr(0, gt), line_no);
            int b = parse_index(tok.substr(gt + 1), line_no);
            if (a <= prev)
                throw parse_error("pairing line " + std::to_string(line_no) +
                                  ": domain vertices not ascending");
            prev = a;
            if (!p.facet_contains(c.from_side, a) || !p.facet_contains(c.to_side, b))
                throw parse_error("pairing line " + std::to_string(line_no) +
                                  ": vertex not on claimed side");
            c.image[a] = b;
            ++count;
        }
        if (count != 6)
            throw parse_error("pairing line " + std::to_string(line_no) +
                              ": expected 6 vertex pairs");
        if (seen[c.from_side])
            throw parse_error("pairing line " + std::to_string(line_no) + ": duplicate side");
        seen[c.from_side] = true;
        corrs.push_back(c);
    }
    if (corrs.size() != 24) throw parse_error("pairing: expected 24 data lines");
    // Both directions are present; check mutual inverseness, then build from
    // the 12 generator-side correspondences.
    std::vector<Correspondence> gens;
    for (const Correspondence& c : corrs) {
        const Correspondence* back = nullptr;
        for (const Correspondence& d : corrs)
            if (d.from_side == c.to_side) { back = &d; break; }
        if (!back || back->to_side != c.from_side)
            throw parse_error("pairing: pairing not involutive");
        for (int v = 0; v < 24; ++v)
            if (c.image[v] >= 0 && back->image[c.image[v]] != v)
                throw parse_error("pairing: vertex maps not mutually inverse");
        if (c.from_side < c.to_side) gens.push_back(c);
    }
    try {
        return pairing_from_correspondences(p, gens);
    } catch (const geometry_error& e) {
        throw parse_error(std::string("pairing: ") + e.what());
    }
}

SidePairing parse_pairing_file(const std::string& path, const Polytope24& p) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open pairing file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_pairing(ss.str(), p);
}

std::string serialize_pairing(const SidePairing& sp) {
    std::ostringstream out;
    for (int s = 0; s < 24; ++s) {
        out << "side " << (s + 1) << " -> " << (sp.partner[s] + 1) << " :";
        for (int v = 0; v < 24; ++v)
            if (sp.vmap[s][v] >= 0) out << ' ' << (v + 1) << '>' << (sp.vmap[s][v] + 1);
        out << '\n';
    }
    return out.str();
}

std::vector<RidgeCycle> ridge_cycles(const SidePairing& sp, const Polytope24& p) {
    GluingSystem gs = GluingSystem::for_base(sp, p);
    std::vector<RidgeCycle> out;
    for (GluingRidgeCycle& c : gluing_ridge_cycles(gs)) {
        RidgeCycle rc;
        for (auto [gside, rid] : c.flags) rc.flags.push_back({gside % 24, rid});
        rc.word = std::move(c.word);
        rc.return_map = c.return_map;
        rc.length_ok = (c.length == 4);
        rc.identity_ok = c.return_map.is_identity();
        out.push_back(std::move(rc));
    }
    return out;
}

VerificationReport verify_poincare(const SidePairing& sp, const Polytope24& p) {
    VerificationReport rep;
    auto fail = [&](const std::string& why) {
        if (rep.detail.empty()) rep.detail = why;
    };

    // Properness: involution without fixed points, vertex maps bijections
    // between the paired sides' vertex sets, mutually inverse, realized by the
    // stored isometries with positive ray scalars, and inverse maps exact.
    rep.proper = true;
    for (int s = 0; s < 24 && rep.proper; ++s) {
        int t = sp.partner[s];
        if (t < 0 || t >= 24 || t == s || sp.partner[t] != s) {
            rep.proper = false;
            fail("pairing involution broken at side " + std::to_string(s + 1));
            break;
        }
        for (int v = 0; v < 24; ++v) {
            bool on_side = p.facet_contains(s, v);
            int w = sp.vmap[s][v];
            if ((w >= 0) != on_side || (w >= 0 && !p.facet_contains(t, w)) ||
                (w >= 0 && sp.vmap[t][w] != v)) {
                rep.proper = false;
                fail("vertex map improper at side " + std::to_string(s + 1));
                break;
            }
            if (w >= 0) {
                auto lam = ray_scale_on(sp.maps[s].matrix(), p.vertex(v), p.vertex(w));
                if (!lam || lam->sign() <= 0) {
                    rep.proper = false;
                    fail("isometry does not realize the vertex map at side " +
                         std::to_string(s + 1));
                    break;
                }
            }
        }
        if (rep.proper && sp.maps[t].matrix() != lorentz_inverse(sp.maps[s].matrix())) {
            rep.proper = false;
            fail("side maps of a pair are not mutually inverse");
        }
    }

    // Structurally broken pairings (vertex maps that do not send ridges to
    // ridges, inconsistent side maps) cannot be traversed; that is a ridge
    // failure, not an error.
    try {
        rep.ridge_cycles = ridge_cycles(sp, p);
        rep.ridge_ok = true;
        for (const RidgeCycle& c : rep.ridge_cycles)
            if (!c.pass()) {
                rep.ridge_ok = false;
                fail("ridge cycle fails (length " + std::to_string(c.flags.size()) + ")");
                break;
            }
    } catch (const std::logic_error& e) {
        rep.ridge_ok = false;
        fail(std::string("ridge traversal broke down: ") + e.what());
    }

    rep.orientable = true;
    for (int s = 0; s < 24; ++s)
        if (!sp.maps[s].orientation_preserving()) {
            rep.orientable = false;
            fail("side map " + std::to_string(s + 1) + " reverses orientation");
            break;
        }

    GluingSystem gs = GluingSystem::for_base(sp, p);
    rep.cusp_ok = true;
    try {
        for (const auto& cycle : gluing_vertex_cycles(gs)) {
            bool complete = cusp_complete(gs, cycle);
            rep.cusp_complete.push_back({cycle.front(), complete});
            if (!complete) {
                rep.cusp_ok = false;
                fail("cusp at vertex " + std::to_string(cycle.front() + 1) + " incomplete");
            }
        }
    } catch (const std::logic_error& e) {
        rep.cusp_ok = false;
        fail(std::string("cusp link traversal broke down: ") + e.what());
    }
    return rep;
}

} // namespace cell24
