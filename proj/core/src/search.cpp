#include "cell24/search.hpp"

#include "cell24/errors.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace cell24 {

PartialPairing PartialPairing::empty() {
    PartialPairing pp;
    pp.partner.fill(-1);
    for (auto& row : pp.vmap) row.fill(-1);
    return pp;
}

int PartialPairing::least_unassigned() const {
    for (int s = 0; s < 24; ++s)
        if (partner[s] < 0) return s;
    return -1;
}

SidePairing PartialPairing::freeze(const Polytope24& p) const {
    (void)p;
    if (!complete()) throw std::logic_error("freeze: pairing incomplete");
    SidePairing sp;
    sp.partner = partner;
    sp.vmap = vmap;
    sp.maps.reserve(24);
    for (int s = 0; s < 24; ++s) sp.maps.push_back(*maps[s]);
    return sp;
}

namespace {

// Partial ridge-cycle propagation. Any chain of crossings longer than 4, or
// a closure at length != 4 or with a non-identity return map, kills the
// branch. Matrices are only multiplied out for cycles touching check_sides.
bool ridge_constraints_ok(const PartialPairing& pp, const Polytope24& p,
                          std::array<int, 2> check_sides) {
    const int rcount = int(p.ridges().size());
    std::vector<bool> visited(size_t(24) * rcount, false);
    auto flag_id = [&](int side, int rid) { return size_t(side) * rcount + rid; };

    auto step = [&](int side, int rid, int& nside, int& nrid) {
        const auto& rv = p.ridges()[rid].vertices;
        int a = pp.vmap[side][rv[0]], b = pp.vmap[side][rv[1]], c = pp.vmap[side][rv[2]];
        nrid = p.ridge_through(a, b, c);
        if (nrid < 0) return false;
        nside = p.ridge_other_facet(nrid, pp.partner[side]);
        return true;
    };

    auto walk = [&](int side0, int rid0) -> bool {
        int side = side0, rid = rid0;
        bool touches = false;
        std::vector<std::pair<int, int>> path;
        for (int crossings = 0;; ++crossings) {
            if (crossings > 4) return false;
            visited[flag_id(side, rid)] = true;
            if (side == check_sides[0] || side == check_sides[1]) touches = true;
            // Open end: fine only while the chain still fits into a 4-cycle
            // (closing it needs at least one more crossing).
            if (!pp.assigned(side)) return path.size() < 4;
            path.push_back({side, rid});
            int nside, nrid;
            if (!step(side, rid, nside, nrid))
                return false; // image triple is not a ridge: malformed branch
            side = nside;
            rid = nrid;
            if (side == side0 && rid == rid0) {
                if (int(path.size()) != 4) return false;
                // Cycles untouched by the new assignment were checked when
                // they closed; skip the matrix product.
                if (!touches) return true;
                ExactMatrix m = ExactMatrix::identity();
                for (auto [s, r] : path) m = pp.maps[s]->matrix() * m;
                return m.is_identity();
            }
        }
    };

    // Open chains first: start where the predecessor crossing is unassigned.
    for (int side = 0; side < 24; ++side) {
        if (!pp.assigned(side)) continue;
        for (int rid : p.ridges_at_facet(side)) {
            int pred = p.ridge_other_facet(rid, side);
            if (pp.assigned(pred)) continue; // not a chain start
            if (visited[flag_id(side, rid)]) continue;
            if (!walk(side, rid)) return false;
        }
    }
    // Remaining unvisited assigned flags lie on fully closed cycles.
    for (int side = 0; side < 24; ++side) {
        if (!pp.assigned(side)) continue;
        for (int rid : p.ridges_at_facet(side)) {
            if (visited[flag_id(side, rid)]) continue;
            if (!walk(side, rid)) return false;
        }
    }
    return true;
}

} // namespace

namespace {

// Assignment with a precomputed isometry; used by the search inner loop.
bool extend_with_map(PartialPairing& pp, const Correspondence& corr,
                     const LorentzIsometry& fwd, const LorentzIsometry& bwd,
                     const Polytope24& p) {
    int i = corr.from_side, j = corr.to_side;
    if (pp.assigned(i) || pp.assigned(j)) return false;
    pp.partner[i] = j;
    pp.partner[j] = i;
    pp.vmap[i] = corr.image;
    for (int v = 0; v < 24; ++v)
        if (corr.image[v] >= 0) pp.vmap[j][corr.image[v]] = v;
    pp.maps[i] = fwd;
    pp.maps[j] = bwd;
    if (!ridge_constraints_ok(pp, p, {i, j})) {
        pp.partner[i] = pp.partner[j] = -1;
        pp.vmap[i].fill(-1);
        pp.vmap[j].fill(-1);
        pp.maps[i].reset();
        pp.maps[j].reset();
        return false;
    }
    return true;
}

} // namespace

bool extend(PartialPairing& pp, const Correspondence& corr, const Polytope24& p) {
    int i = corr.from_side, j = corr.to_side;
    if (i < 0 || j < 0 || i == j || pp.assigned(i) || pp.assigned(j)) return false;
    LorentzIsometry* fwd = nullptr;
    try {
        LorentzIsometry m = derive_side_map(p, corr);
        if (!m.orientation_preserving()) return false;
        pp.maps[i] = m;
        fwd = &*pp.maps[i];
    } catch (const geometry_error&) {
        return false;
    }
    pp.partner[i] = j;
    pp.partner[j] = i;
    pp.vmap[i] = corr.image;
    Correspondence inv = corr.inverse(p);
    pp.vmap[j] = inv.image;
    pp.maps[j] = LorentzIsometry(lorentz_inverse(fwd->matrix()));
    if (!ridge_constraints_ok(pp, p, {i, j})) {
        pp.partner[i] = pp.partner[j] = -1;
        pp.vmap[i].fill(-1);
        pp.vmap[j].fill(-1);
        pp.maps[i].reset();
        pp.maps[j].reset();
        return false;
    }
    return true;
}

bool CuspProfileFilter::accepts(const std::vector<CensusEntry>& census) const {
    std::map<FlatType, int> counts;
    for (const CensusEntry& e : census) ++counts[e.cls.type];
    for (auto [type, want] : exact) {
        auto it = counts.find(type);
        int have = (it == counts.end()) ? 0 : it->second;
        if (have != want) return false;
    }
    if (rest) {
        for (auto [type, have] : counts) {
            if (exact.count(type)) continue;
            if (type != *rest && have > 0) return false;
        }
    }
    return true;
}

std::string Certificate::encode() const {
    std::ostringstream s;
    s << "cusps=";
    for (auto [t, h] : cusp_profile) s << 'F' << t << (h > 0 ? "+" : h < 0 ? "-" : ".") << ';';
    s << "H1=Z^" << h1.rank;
    for (const Int& d : h1.torsion) s << "+Z/" << d.get_str();
    s << ";k=" << cusp_count << ";rel=";
    for (auto [len, n] : relator_histogram) s << len << ':' << n << ',';
    return s.str();
}

Certificate canonicalize(const SidePairing& sp, const Polytope24& p) {
    Certificate cert;
    GluingSystem gs = GluingSystem::for_base(sp, p);
    for (const VertexCycle& cyc : vertex_cycles(gs)) {
        CuspComplex c = cusp_complex(cyc, gs);
        FlatClass cls = classify_flat(c);
        cert.cusp_profile.push_back({int(cls.type), cls.handedness});
    }
    std::sort(cert.cusp_profile.begin(), cert.cusp_profile.end());
    cert.cusp_count = int(cert.cusp_profile.size());
    GroupPresentation pres = presentation(sp, p);
    cert.h1 = cokernel(abelianized_matrix(pres));
    for (const Word& rel : pres.relators) ++cert.relator_histogram[int(rel.letters.size())];
    return cert;
}

namespace {

struct CandidateTables {
    // candidates[i][j]: orientation-preserving side-pairing correspondences
    // from side i to side j (restrictions of the odd symmetries), with the
    // derived isometries precomputed.
    std::array<std::array<std::vector<Correspondence>, 24>, 24> candidates;
    std::array<std::array<std::vector<LorentzIsometry>, 24>, 24> maps;
    std::array<std::array<std::vector<LorentzIsometry>, 24>, 24> inverse_maps;
    const SymmetryGroup* sym = nullptr;
};

const CandidateTables& candidate_tables(const Polytope24& p) {
    static CandidateTables tables = [&p] {
        CandidateTables t;
        static SymmetryGroup group = symmetry_group(p);
        t.sym = &group;
        for (const SymmetryElement& e : group.elements()) {
            if (e.orientation_preserving) continue; // pairing map = reflection * s
            for (int i = 0; i < 24; ++i) {
                int j = e.facet_perm[i];
                Correspondence c;
                c.from_side = i;
                c.to_side = j;
                c.image.fill(-1);
                for (int v : p.facet(i)) c.image[v] = e.vertex_perm[v];
                t.candidates[i][j].push_back(c);
            }
        }
        for (int i = 0; i < 24; ++i)
            for (int j = 0; j < 24; ++j) {
                std::sort(t.candidates[i][j].begin(), t.candidates[i][j].end(),
                          [](const Correspondence& a, const Correspondence& b) {
                              return a.image < b.image;
                          });
                for (const Correspondence& c : t.candidates[i][j]) {
                    LorentzIsometry m = derive_side_map(p, c);
                    t.inverse_maps[i][j].push_back(LorentzIsometry(lorentz_inverse(m.matrix())));
                    t.maps[i][j].push_back(std::move(m));
                }
            }
        return t;
    }();
    return tables;
}

std::vector<int> encode_assignment(const Polytope24& p, const Correspondence& c) {
    std::vector<int> code{c.to_side};
    for (int v : p.facet(c.from_side)) code.push_back(c.image[v]);
    return code;
}

} // namespace

// Root-level symmetry reduction: keep one representative per orbit of the
// side-1 assignment under conjugation by the full symmetry group.
std::vector<Correspondence> reduced_root_candidates(const Polytope24& p) {
    static const std::vector<Correspondence> cached = [&p] {
    const CandidateTables& t = candidate_tables(p);
    std::vector<Correspondence> all;
    for (int j = 1; j < 24; ++j)
        for (const Correspondence& c : t.candidates[0][j]) all.push_back(c);

    auto conj = [&](const SymmetryElement& s, const Correspondence& c) {
        // s o c o s^{-1}: from s(side), applied to s-images.
        Correspondence out;
        out.from_side = s.facet_perm[c.from_side];
        out.to_side = s.facet_perm[c.to_side];
        out.image.fill(-1);
        for (int v = 0; v < 24; ++v)
            if (c.image[v] >= 0) out.image[s.vertex_perm[v]] = s.vertex_perm[c.image[v]];
        return out;
    };

    std::vector<Correspondence> kept;
    std::set<std::vector<int>> seen_canonical;
    for (const Correspondence& c : all) {
        std::vector<int> canon = encode_assignment(p, c);
        for (const SymmetryElement& s : t.sym->elements()) {
            Correspondence cc = conj(s, c);
            if (cc.from_side == 0)
                canon = std::min(canon, encode_assignment(p, cc));
            if (cc.to_side == 0)
                canon = std::min(canon, encode_assignment(p, cc.inverse(p)));
        }
        if (seen_canonical.insert(canon).second) kept.push_back(c);
    }
    return kept;
    }();
    return cached;
}

namespace {

struct Shared {
    std::mutex mu;
    std::map<std::string, SearchResult> results; // keyed by certificate encoding
    std::atomic<bool> exhausted{false};
    std::atomic<int> found{0};
};

struct Worker {
    const Polytope24* p;
    const SearchConfig* cfg;
    Shared* shared;
    std::mt19937_64 rng;
    std::int64_t node_budget; // < 0: unlimited
    std::chrono::steady_clock::time_point deadline;
    bool use_deadline = false;
    std::int64_t nodes = 0;

    bool out_of_budget() {
        if (node_budget >= 0 && nodes >= node_budget) return true;
        if (use_deadline && (nodes & 0xff) == 0 &&
            std::chrono::steady_clock::now() >= deadline)
            return true;
        if (cfg->max_results > 0 && shared->found.load() >= cfg->max_results) return true;
        return false;
    }

    void terminal(PartialPairing& pp) {
        SidePairing sp = pp.freeze(*p);
        // Independent verification from scratch; search state is not reused.
        VerificationReport rep = verify_poincare(sp, *p);
        if (!rep.overall()) return;
        if (cfg->filter) {
            GluingSystem gs = GluingSystem::for_base(sp, *p);
            CoverComplex trivial{gs, 1, 1};
            auto census = cusp_census(trivial);
            if (!cfg->filter->accepts(census)) return;
            if (cfg->filter->require_homs &&
                (!admits_h_like(sp, *p) || !admits_v_like(sp, *p)))
                return;
        }
        Certificate cert = canonicalize(sp, *p);
        std::lock_guard<std::mutex> lock(shared->mu);
        auto [it, fresh] = shared->results.try_emplace(cert.encode(), SearchResult{sp, cert});
        if (fresh) shared->found.fetch_add(1);
    }

    std::int64_t restart_cap = -1; // nodes left in the current restart

    bool restart_spent() { return restart_cap == 0; }

    void undo(PartialPairing& pp, int i) {
        int jj = pp.partner[i];
        pp.partner[i] = pp.partner[jj] = -1;
        pp.vmap[i].fill(-1);
        pp.vmap[jj].fill(-1);
        pp.maps[i].reset();
        pp.maps[jj].reset();
    }

    void dfs(PartialPairing& pp) {
        if (out_of_budget() || restart_spent()) return;
        int i = pp.least_unassigned();
        if (i < 0) {
            terminal(pp);
            return;
        }
        const CandidateTables& t = candidate_tables(*p);
        std::vector<std::pair<int, int>> order; // (partner, candidate index)
        for (int j = i + 1; j < 24; ++j) {
            if (pp.assigned(j)) continue;
            for (size_t c = 0; c < t.candidates[i][j].size(); ++c)
                order.push_back({j, int(c)});
        }
        if (cfg->mode == SearchConfig::Mode::RandomRestart)
            std::shuffle(order.begin(), order.end(), rng);
        for (auto [j, c] : order) {
            if (out_of_budget() || restart_spent()) return;
            ++nodes;
            if (restart_cap > 0) --restart_cap;
            if (extend_with_map(pp, t.candidates[i][j][c], t.maps[i][j][c],
                                t.inverse_maps[i][j][c], *p)) {
                dfs(pp);
                undo(pp, i);
            }
        }
    }

    // Random restarts: dive with random choices to a moderate depth, then
    // run a node-capped DFS below the dive; repeat until the budget is gone.
    // The first dive step draws from `roots` (symmetry-reduced when no
    // prefix pinned the frame).
    void random_restarts(const PartialPairing& root,
                         const std::vector<Correspondence>& roots, int dive_depth,
                         std::int64_t cap_per_restart) {
        const CandidateTables& t = candidate_tables(*p);
        // Root isometries derived once; restarts only shuffle and assign.
        std::vector<std::pair<LorentzIsometry, LorentzIsometry>> root_maps;
        for (const Correspondence& c : roots) {
            LorentzIsometry m = derive_side_map(*p, c);
            root_maps.push_back({m, LorentzIsometry(lorentz_inverse(m.matrix()))});
        }
        std::uniform_int_distribution<size_t> pick(0, roots.empty() ? 0 : roots.size() - 1);
        while (!out_of_budget()) {
            PartialPairing pp = root;
            int depth = 0;
            bool stuck = false;
            if (!roots.empty()) {
                size_t r = pick(rng);
                ++nodes;
                if (!extend_with_map(pp, roots[r], root_maps[r].first, root_maps[r].second, *p))
                    continue;
                ++depth;
            }
            while (depth < dive_depth) {
                int i = pp.least_unassigned();
                if (i < 0) break;
                std::vector<std::pair<int, int>> order;
                for (int j = i + 1; j < 24; ++j) {
                    if (pp.assigned(j)) continue;
                    for (size_t c = 0; c < t.candidates[i][j].size(); ++c)
                        order.push_back({j, int(c)});
                }
                std::shuffle(order.begin(), order.end(), rng);
                bool moved = false;
                for (auto [j, c] : order) {
                    if (out_of_budget()) return;
                    ++nodes;
                    if (extend_with_map(pp, t.candidates[i][j][c], t.maps[i][j][c],
                                        t.inverse_maps[i][j][c], *p)) {
                        ++depth;
                        moved = true;
                        break;
                    }
                }
                if (!moved) { stuck = true; break; }
            }
            if (stuck) continue;
            restart_cap = cap_per_restart;
            dfs(pp);
            restart_cap = -1;
        }
    }
};

} // namespace

SearchOutcome search(const SearchConfig& cfg, const Polytope24& p) {
    PartialPairing root = PartialPairing::empty();
    for (const Correspondence& c : cfg.prefix) {
        if (c.from_side != root.least_unassigned())
            throw parse_error("search prefix: assignments not in canonical order");
        if (!extend(root, c, p))
            throw parse_error("search prefix: assignment rejected");
    }

    // Root branching, symmetry-reduced only for empty prefixes.
    std::vector<Correspondence> roots;
    int i = root.least_unassigned();
    SearchOutcome outcome;
    if (i < 0) {
        // Prefix already complete.
        Shared shared;
        Worker w{&p, &cfg, &shared, std::mt19937_64(cfg.seed), -1, {}, false, 0};
        w.terminal(root);
        for (auto& [key, res] : shared.results) outcome.results.push_back(res);
        return outcome;
    }
    if (cfg.prefix.empty() && cfg.symmetry_reduction && i == 0) {
        roots = reduced_root_candidates(p);
    } else {
        const CandidateTables& t = candidate_tables(p);
        for (int j = i + 1; j < 24; ++j) {
            if (root.assigned(j)) continue;
            for (const Correspondence& c : t.candidates[i][j]) roots.push_back(c);
        }
    }

    int threads = std::max(1, cfg.threads);
    Shared shared;
    std::vector<std::thread> pool;
    std::vector<std::int64_t> node_counts(threads, 0);
    std::vector<bool> hit_budget(threads, false);
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(cfg.budget_seconds < 0 ? 0.0
                                                                             : cfg.budget_seconds));
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            Worker worker{&p,
                          &cfg,
                          &shared,
                          std::mt19937_64(cfg.seed + std::uint64_t(w) * 0x9e3779b97f4a7c15ull),
                          cfg.budget_nodes < 0 ? -1 : cfg.budget_nodes / threads,
                          deadline,
                          cfg.budget_seconds >= 0,
                          0};
            if (cfg.mode == SearchConfig::Mode::RandomRestart) {
                worker.random_restarts(root, roots, 6, 30000);
            } else {
                // Round-robin split of the root candidates.
                for (size_t r = w; r < roots.size(); r += threads) {
                    PartialPairing pp = root;
                    ++worker.nodes;
                    if (extend(pp, roots[r], p)) worker.dfs(pp);
                    if (worker.out_of_budget()) break;
                }
            }
            node_counts[w] = worker.nodes;
            hit_budget[w] = worker.out_of_budget();
        });
    }
    for (auto& th : pool) th.join();

    for (auto& [key, res] : shared.results) outcome.results.push_back(res);
    std::sort(outcome.results.begin(), outcome.results.end(),
              [](const SearchResult& a, const SearchResult& b) {
                  auto ka = a.certificate.encode(), kb = b.certificate.encode();
                  if (ka != kb) return ka < kb;
                  return serialize_pairing(a.pairing) < serialize_pairing(b.pairing);
              });
    for (int w = 0; w < threads; ++w) {
        outcome.nodes_visited += node_counts[w];
        if (hit_budget[w]) outcome.budget_exhausted = true;
    }
    return outcome;
}

std::optional<std::vector<Int>> primitive_element(const HomLattice& lat) {
    if (lat.empty()) return std::nullopt;
    Int content(0);
    auto fold = [&](const std::vector<Int>& v) {
        for (const Int& x : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    };
    fold(lat.particular);
    for (const auto& b : lat.basis) fold(b);
    if (content > 1) return std::nullopt; // every element shares this factor
    auto gcd_of = [](const std::vector<Int>& v) {
        Int g(0);
        for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        return g;
    };
    if (gcd_of(lat.particular) == 1) return lat.particular;
    int k = int(lat.basis.size());
    std::vector<int> t(k, -2);
    for (;;) {
        std::vector<Int> x = lat.particular;
        for (int i = 0; i < k; ++i)
            for (size_t c = 0; c < x.size(); ++c) x[c] += Int(t[i]) * lat.basis[i][c];
        if (gcd_of(x) == 1) return x;
        int i = 0;
        while (i < k && t[i] == 2) t[i++] = -2;
        if (i == k) return std::nullopt;
        ++t[i];
    }
}

namespace {

bool lattice_has_primitive(const HomLattice& lat) { return primitive_element(lat).has_value(); }

std::vector<std::pair<Word, Int>> chiral_cusp_constraints(const SidePairing& sp,
                                                          const Polytope24& p, bool for_v,
                                                          bool& found_chiral) {
    GluingSystem gs = GluingSystem::for_base(sp, p);
    GroupPresentation pres = presentation(sp, p);
    std::vector<std::pair<Word, Int>> constraints;
    found_chiral = false;
    for (const VertexCycle& cyc : vertex_cycles(gs)) {
        ParabolicSubgroup pg = parabolic_generators(cyc, gs, -1);
        CuspFrameData data = cusp_frame_data(pg);
        if (!data.chiral) continue;
        found_chiral = true;
        if (!for_v) {
            for (const CuspLoop& loop : pg.generators)
                constraints.push_back({pres.word_from_letters(loop.word), Int(0)});
        } else {
            constraints.push_back({pres.word_from_letters(data.screw_word), Int(1)});
            for (const auto& hw : data.horizontal_words)
                constraints.push_back({pres.word_from_letters(hw), Int(0)});
            break; // one chiral cusp carries the v-like structure
        }
    }
    return constraints;
}

} // namespace

bool admits_h_like(const SidePairing& sp, const Polytope24& p) {
    bool found = false;
    auto constraints = chiral_cusp_constraints(sp, p, false, found);
    if (!found) {
        // No chiral cusp: any surjection works; existence needs positive rank.
        GroupPresentation pres = presentation(sp, p);
        return cokernel(abelianized_matrix(pres)).rank > 0;
    }
    GroupPresentation pres = presentation(sp, p);
    return lattice_has_primitive(find_constrained_homs(pres, constraints));
}

bool admits_v_like(const SidePairing& sp, const Polytope24& p) {
    bool found = false;
    auto constraints = chiral_cusp_constraints(sp, p, true, found);
    if (!found) return false;
    GroupPresentation pres = presentation(sp, p);
    return lattice_has_primitive(find_constrained_homs(pres, constraints));
}

} // namespace cell24
