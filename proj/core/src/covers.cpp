#include "cell24/covers.hpp"

#include "cell24/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cell24 {

namespace {

// Global sign of the eta convention, frozen so that the bundled manifold gets
// sigma_signed = +1 (the ambient orientation convention of the horosphere
// frames determines the handedness signs; this constant calibrates the sum).
constexpr int kEtaGlobalSign = -1;

// eta(S) = weight(type) * handedness * global sign; types F1, F2, F6 weigh 0.
Rational eta_weight(FlatType t) {
    switch (t) {
        case FlatType::F3: return Rational(2, 3);
        case FlatType::F4: return Rational(1);
        case FlatType::F5: return Rational(4, 3);
        default: return Rational(0);
    }
}

int mod(int a, int n) { return ((a % n) + n) % n; }

} // namespace

CoverSpec CoverSpec::from_homs(const SidePairing& sp, const Polytope24& p,
                               const IntHomomorphism& h, const IntHomomorphism& v, int n,
                               int m) {
    CoverSpec spec;
    spec.base = &sp;
    spec.poly = &p;
    spec.n = n;
    spec.m = m;
    auto gens = sp.generator_sides();
    if (h.values.size() != gens.size() || v.values.size() != gens.size())
        throw std::invalid_argument("CoverSpec: homomorphism size mismatch");
    for (size_t i = 0; i < gens.size(); ++i) {
        Int hn = h.values[i] % n;
        Int vm = v.values[i] % m;
        spec.labels.push_back({mod(int(hn.get_si()), n), mod(int(vm.get_si()), m)});
    }
    return spec;
}

CoverComplex build_cover(const CoverSpec& spec) {
    const SidePairing& sp = *spec.base;
    const Polytope24& p = *spec.poly;
    const int n = spec.n, m = spec.m;
    auto gens = sp.generator_sides();
    if (spec.labels.size() != gens.size())
        throw std::invalid_argument("build_cover: one label per generator required");

    // Label of crossing an arbitrary side.
    auto label_of = [&](int side) -> std::pair<int, int> {
        SideLetter l = sp.letter_for_crossing(side);
        int gi = int(std::lower_bound(gens.begin(), gens.end(), l.generator_side) -
                     gens.begin());
        auto [a, b] = spec.labels[gi];
        if (l.exponent < 0) return {mod(-a, n), mod(-b, m)};
        return {a, b};
    };

    // Relators must map to the identity.
    GroupPresentation pres = presentation(sp, p);
    for (const Word& rel : pres.relators) {
        int a = 0, b = 0;
        for (auto [gen, exp] : rel.letters) {
            a = mod(a + exp * spec.labels[gen].first, n);
            b = mod(b + exp * spec.labels[gen].second, m);
        }
        if (a != 0 || b != 0) throw geometry_error("build_cover: relator not killed");
    }

    // Labels must generate Z/n x Z/m.
    {
        std::set<std::pair<int, int>> seen{{0, 0}};
        std::vector<std::pair<int, int>> queue{{0, 0}};
        for (size_t q = 0; q < queue.size(); ++q)
            for (auto [a, b] : spec.labels) {
                std::pair<int, int> next{mod(queue[q].first + a, n), mod(queue[q].second + b, m)};
                if (seen.insert(next).second) queue.push_back(next);
            }
        if (int(seen.size()) != n * m) throw geometry_error("build_cover: disconnected cover");
    }

    CoverComplex cc;
    cc.n = n;
    cc.m = m;
    cc.gs.poly = &p;
    cc.gs.base = &sp;
    cc.gs.copies = n * m;
    cc.gs.target_copy.resize(cc.gs.copies);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) {
            int k = a * m + b;
            for (int s = 0; s < 24; ++s) {
                auto [da, db] = label_of(s);
                cc.gs.target_copy[k][s] = mod(a + da, n) * m + mod(b + db, m);
            }
        }
    return cc;
}

std::vector<CensusEntry> cusp_census(const CoverComplex& cc) {
    // Base cycles, for reporting which base cusp each cover cusp lies over.
    GluingSystem base_gs = GluingSystem::for_base(*cc.gs.base, *cc.gs.poly);
    auto base_cycles = gluing_vertex_cycles(base_gs);
    auto base_cycle_of = [&](int base_vertex) {
        for (const auto& cyc : base_cycles)
            if (std::binary_search(cyc.begin(), cyc.end(), base_vertex)) return cyc.front();
        throw std::logic_error("cusp_census: vertex outside all base cycles");
    };

    std::vector<CensusEntry> out;
    for (const VertexCycle& cyc : vertex_cycles(cc.gs)) {
        CuspComplex c = cusp_complex(cyc, cc.gs);
        CensusEntry e;
        e.least_vertex = cyc.vertices.front();
        e.size = int(cyc.vertices.size());
        e.cls = classify_flat(c);
        e.base_cycle_least = base_cycle_of(cyc.vertices.front() % 24);
        out.push_back(e);
    }
    return out;
}

std::pair<Int, Int> signature(const std::vector<CensusEntry>& census) {
    Rational sum;
    for (const CensusEntry& e : census)
        sum += eta_weight(e.cls.type) * Rational(e.cls.handedness) * Rational(kEtaGlobalSign);
    Rational sigma = -sum;
    if (!sigma.is_integer())
        throw std::logic_error("signature: eta sum is not an integer");
    Int s = sigma.numerator();
    return {s, abs(s)};
}

GeographyReport geography(const CoverComplex& cc) {
    GeographyReport rep;
    rep.degree = cc.degree();
    rep.chi = cc.degree(); // chi multiplies along covers; the base has chi 1
    rep.cusps = cusp_census(cc);
    auto [ss, sa] = signature(rep.cusps);
    rep.sigma_signed = ss;
    rep.sigma_abs = sa;
    rep.cusp_count = int(rep.cusps.size());
    rep.slope = Rational(rep.sigma_signed, Int(rep.chi));
    rep.volume_pi2_coeff = Rational(4 * rep.chi, 3);

    // Proof-chain bounds, exact rational arithmetic; a violation would be a
    // genuine contradiction, so it is fatal.
    const Rational kCuspVolume(61293, 100000);   // Vol > 0.61293 * k
    const Rational kChiBound(3493, 100000);      // chi > 0.03493 * |sigma|
    const Rational kSlopeBound(2862869, 100000); // |slope| < 28.62869
    const Rational kPiLow(314159, 100000);       // pi > 3.14159

    Rational abs_sigma(rep.sigma_abs);
    bool ok = true;
    ok = ok && (Rational(4, 3) * Rational(rep.cusp_count) >= abs_sigma);
    ok = ok && (Rational(rep.chi) > kChiBound * abs_sigma);
    ok = ok && (rep.slope.abs() < kSlopeBound);
    ok = ok && (rep.volume_pi2_coeff * kPiLow * kPiLow > kCuspVolume * Rational(rep.cusp_count));
    if (!ok) throw std::logic_error("geography: bound violated");
    rep.bounds_ok = ok;
    return rep;
}

bool verify_cover(const CoverComplex& cc) {
    for (const GluingRidgeCycle& c : gluing_ridge_cycles(cc.gs))
        if (!c.pass()) return false;
    for (const auto& cyc : gluing_vertex_cycles(cc.gs))
        if (!cusp_complete(cc.gs, cyc)) return false;
    for (int s = 0; s < 24; ++s)
        if (!cc.gs.base->maps[s].orientation_preserving()) return false;
    return true;
}

CoverComplex build_cover_two_stage(const SidePairing& sp, const Polytope24& p,
                                   const IntHomomorphism& h, const IntHomomorphism& v, int n,
                                   int m) {
    // Stage one: the n-cover along h.
    CoverSpec spec1 = CoverSpec::from_homs(sp, p, h, v, n, 1);
    CoverComplex stage1 = build_cover(spec1);

    // v-value attached to each copy by a spanning tree of the copy graph.
    auto gens = sp.generator_sides();
    auto vvalue_of_side = [&](int side) -> Int {
        SideLetter l = sp.letter_for_crossing(side);
        int gi = int(std::lower_bound(gens.begin(), gens.end(), l.generator_side) -
                     gens.begin());
        return l.exponent > 0 ? v.values[gi] : -v.values[gi];
    };
    std::vector<bool> seen(stage1.gs.copies, false);
    std::vector<Int> vval(stage1.gs.copies);
    std::vector<int> queue{0};
    seen[0] = true;
    for (size_t q = 0; q < queue.size(); ++q) {
        int k = queue[q];
        for (int s = 0; s < 24; ++s) {
            int k2 = stage1.gs.target_copy[k][s];
            if (seen[k2]) continue;
            seen[k2] = true;
            vval[k2] = vval[k] + vvalue_of_side(s);
            queue.push_back(k2);
        }
    }

    // Stage two: m-cover of stage one; the label of side s at copy k is the
    // v-value of the corresponding generator of the cover's fundamental
    // domain, v(path_k) + v(g_s) - v(path_target).
    CoverComplex cc;
    cc.n = n;
    cc.m = m;
    cc.gs.poly = &p;
    cc.gs.base = &sp;
    cc.gs.copies = n * m;
    cc.gs.target_copy.resize(cc.gs.copies);
    for (int k = 0; k < n; ++k)
        for (int b = 0; b < m; ++b) {
            int idx = k * m + b;
            for (int s = 0; s < 24; ++s) {
                int k2 = stage1.gs.target_copy[k][s];
                Int mu = vval[k] + vvalue_of_side(s) - vval[k2];
                Int mu_m = mu % m;
                int shift = mod(int(mu_m.get_si()), m);
                cc.gs.target_copy[idx][s] = k2 * m + mod(b + shift, m);
            }
        }
    return cc;
}

} // namespace cell24
