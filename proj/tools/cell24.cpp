// Command-line surface: verify / report / cusps / homology / cover /
// signature / search / export-cusp over pairing-v1 files.

#include "cell24/covers.hpp"
#include "cell24/cusps.hpp"
#include "cell24/errors.hpp"
#include "cell24/homology.hpp"
#include "cell24/grouppres.hpp"
#include "cell24/pairing.hpp"
#include "cell24/reports.hpp"
#include "cell24/search.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace cell24;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNoResults = 3;

#ifndef CELL24_DATA_DIR
#define CELL24_DATA_DIR "data"
#endif

std::string resolve_input(const std::string& arg) {
    if (!arg.empty()) return arg;
    const char* env = std::getenv("CELL24_DATA");
    fs::path dir = env ? fs::path(env) : fs::path(CELL24_DATA_DIR);
    return (dir / "m_paper.pairing").string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct LoadedPairing {
    std::string bytes;
    SidePairing sp;
};

LoadedPairing load(const std::string& arg) {
    std::string path = resolve_input(arg);
    LoadedPairing lp;
    lp.bytes = slurp(path);
    lp.sp = parse_pairing(lp.bytes, Polytope24::instance());
    return lp;
}

// Cover along the pairing's own h/v homomorphisms: h vanishes on the chiral
// cusp's stabilizer, v kills its horizontal lattice and sends the primitive
// screw to 1. Both are recovered from the constrained solver.
CoverComplex bundled_cover(const SidePairing& sp, const Polytope24& p, int n, int m) {
    GroupPresentation pres = presentation(sp, p);
    bool found = false;
    IntHomomorphism h, v;
    GluingSystem gs = GluingSystem::for_base(sp, p);
    std::vector<std::pair<Word, Int>> hc, vc;
    for (const VertexCycle& cyc : vertex_cycles(gs)) {
        ParabolicSubgroup pg = parabolic_generators(cyc, gs, -1);
        CuspFrameData data = cusp_frame_data(pg);
        if (!data.chiral) continue;
        found = true;
        for (const CuspLoop& loop : pg.generators)
            hc.push_back({pres.word_from_letters(loop.word), Int(0)});
        vc.push_back({pres.word_from_letters(data.screw_word), Int(1)});
        for (const auto& hw : data.horizontal_words)
            vc.push_back({pres.word_from_letters(hw), Int(0)});
        break;
    }
    if (!found) throw parse_error("cover: pairing has no chiral cusp to build along");
    HomLattice hl = find_constrained_homs(pres, hc);
    HomLattice vl = find_constrained_homs(pres, vc);
    auto hprim = primitive_element(hl);
    if (!hprim || vl.empty())
        throw parse_error("cover: no h/v homomorphisms exist for this pairing");
    h.values = *hprim;
    v.values = vl.particular;
    CoverSpec spec = CoverSpec::from_homs(sp, p, h, v, n, m);
    CoverComplex cc = build_cover(spec);
    if (!verify_cover(cc)) throw std::logic_error("cover: lifted verification failed");
    return cc;
}

int cmd_verify(const std::string& file, bool json_out) {
    LoadedPairing lp = load(file);
    VerificationReport rep = verify_poincare(lp.sp, Polytope24::instance());
    Json env = envelope("verify", lp.bytes, verification_json(rep));
    if (json_out)
        std::cout << env.dump(2) << "\n";
    else
        std::cout << (rep.overall() ? "PASS" : "FAIL: " + rep.detail) << "\n";
    return rep.overall() ? kExitOk : kExitVerifyFail;
}

int cmd_report(const std::string& file, int n, int m) {
    LoadedPairing lp = load(file);
    const Polytope24& p = Polytope24::instance();
    VerificationReport vrep = verify_poincare(lp.sp, p);
    if (!vrep.overall()) {
        std::cerr << "verification failed: " << vrep.detail << "\n";
        return kExitVerifyFail;
    }
    Json payload;
    if (n == 1 && m == 1) {
        GluingSystem gs = GluingSystem::for_base(lp.sp, p);
        CoverComplex trivial{gs, 1, 1};
        payload = geography_json(geography(trivial));
        payload["homology"] = homology_json(homology(truncated_complex(gs)));
    } else {
        CoverComplex cc = bundled_cover(lp.sp, p, n, m);
        payload = geography_json(geography(cc));
        payload["homology"] = homology_json(homology(truncated_complex(cc.gs)));
    }
    std::cout << envelope("report", lp.bytes, payload).dump(2) << "\n";
    return kExitOk;
}

int cmd_cusps(const std::string& file) {
    LoadedPairing lp = load(file);
    const Polytope24& p = Polytope24::instance();
    GluingSystem gs = GluingSystem::for_base(lp.sp, p);
    CoverComplex trivial{gs, 1, 1};
    Json payload = census_json(cusp_census(trivial));
    std::cout << envelope("cusps", lp.bytes, payload).dump(2) << "\n";
    return kExitOk;
}

int cmd_homology(const std::string& file) {
    LoadedPairing lp = load(file);
    GluingSystem gs = GluingSystem::for_base(lp.sp, Polytope24::instance());
    Json payload = homology_json(homology(truncated_complex(gs)));
    std::cout << envelope("homology", lp.bytes, payload).dump(2) << "\n";
    return kExitOk;
}

int cmd_cover(const std::string& file, int n, int m) {
    LoadedPairing lp = load(file);
    CoverComplex cc = bundled_cover(lp.sp, Polytope24::instance(), n, m);
    std::cout << envelope("cover", lp.bytes, geography_json(geography(cc))).dump(2) << "\n";
    return kExitOk;
}

int cmd_signature(const std::string& file, int n, int m) {
    LoadedPairing lp = load(file);
    const Polytope24& p = Polytope24::instance();
    GeographyReport geo;
    if (n == 1 && m == 1) {
        GluingSystem gs = GluingSystem::for_base(lp.sp, p);
        CoverComplex trivial{gs, 1, 1};
        geo = geography(trivial);
    } else {
        geo = geography(bundled_cover(lp.sp, p, n, m));
    }
    Json payload{{"sigma_signed", geo.sigma_signed.get_si()},
                 {"sigma_abs", geo.sigma_abs.get_si()}};
    std::cout << envelope("signature", lp.bytes, payload).dump(2) << "\n";
    return kExitOk;
}

int cmd_export_cusp(const std::string& file, int cycle_id) {
    LoadedPairing lp = load(file);
    const Polytope24& p = Polytope24::instance();
    GluingSystem gs = GluingSystem::for_base(lp.sp, p);
    auto cycles = vertex_cycles(gs);
    if (cycle_id < 0 || cycle_id >= int(cycles.size()))
        throw parse_error("unknown cycle id " + std::to_string(cycle_id) + " (have " +
                          std::to_string(cycles.size()) + " cusps)");
    const VertexCycle& cyc = cycles[cycle_id];
    CuspComplex c = cusp_complex(cyc, gs);
    FlatClass cls = classify_flat(c);
    ParabolicSubgroup pg = parabolic_generators(cyc, gs, -1);
    CuspFrameData data = cusp_frame_data(pg);

    std::cout << "cusp " << cycle_id << ": type " << flat_type_name(cls.type) << ", "
              << cyc.vertices.size() << " cubes\n";
    std::cout << "cubes (vertex ids):";
    for (int v : cyc.vertices) std::cout << ' ' << (v % 24) + 1 << "@copy" << v / 24;
    std::cout << "\n\nface gluings (cube.side -> cube.side):\n";
    for (size_t i = 0; i < c.graph.cubes.size(); ++i) {
        int gv = c.graph.cubes[i];
        const auto& facets = p.facets_at_vertex(gv % 24);
        for (int f = 0; f < 6; ++f) {
            int j = c.graph.face_target[i][f];
            int side = gs.local_of(c.graph.face_side[i][f]);
            int tf = c.graph.face_target_face[i][f];
            int tv = c.graph.cubes[j];
            std::cout << "  v" << (gv % 24) + 1 << ".s" << facets[f] + 1 << " -> v"
                      << (tv % 24) + 1 << ".s"
                      << p.facets_at_vertex(tv % 24)[tf] + 1 << "  (side " << side + 1
                      << ")\n";
        }
    }
    std::cout << "\ntranslation lattice (cube-edge units, edge^2 = " << data.edge_sq.str()
              << " in frame units):\n";
    for (int i = 0; i < 3; ++i) {
        std::cout << "  t" << i + 1 << " = (";
        for (int k = 0; k < 3; ++k) {
            Rational in_cubes = data.lattice[i][k] / Rational(2); // edge length is 2
            std::cout << in_cubes.str() << (k < 2 ? ", " : ")");
        }
        std::cout << "\n";
    }
    {
        auto cov = exact_sqrt(data.covolume_sq);
        std::cout << "lattice covolume: "
                  << (cov ? (*cov / Rational(8)).str() : std::string("irrational"))
                  << " cube units\n";
    }
    std::cout << "point group order: " << data.point_group.size() << "\n";
    if (data.chiral) {
        std::cout << "screw generator: rotation order " << data.rotation_order
                  << ", handedness " << (data.handedness > 0 ? "+1" : "-1") << "\n";
        std::cout << "  word:";
        for (const SideLetter& l : freely_reduce(data.screw_word))
            std::cout << " g" << l.generator_side + 1 << (l.exponent > 0 ? "" : "^-1");
        std::cout << "\n  axis (frame coords): (";
        for (int k = 0; k < 3; ++k)
            std::cout << data.screw_axis[k].str() << (k < 2 ? ", " : ")\n");
        std::cout << "  translation (cube-edge units): (";
        for (int k = 0; k < 3; ++k)
            std::cout << (data.screw_translation[k] / Rational(2)).str()
                      << (k < 2 ? ", " : ")\n");
    }
    return kExitOk;
}

FlatType parse_flat_type(const std::string& s) {
    if (s.size() == 2 && s[0] == 'F' && s[1] >= '1' && s[1] <= '6')
        return FlatType(s[1] - '0');
    throw parse_error("bad flat type '" + s + "' (expected F1..F6)");
}

CuspProfileFilter parse_filter(const std::string& text) {
    // Comma list of F<k>=<count>, plus optional rest=F<k> / all=F<k>, plus
    // homs (require h-like and v-like maps). Example: "F4=1,rest=F1,homs".
    CuspProfileFilter f;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        if (item == "homs") {
            f.require_homs = true;
            continue;
        }
        auto eq = item.find('=');
        if (eq == std::string::npos) throw parse_error("bad filter item '" + item + "'");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "rest" || key == "all") {
            f.rest = parse_flat_type(val);
        } else {
            f.exact[parse_flat_type(key)] = std::stoi(val);
        }
    }
    return f;
}

int cmd_search(std::uint64_t seed, double budget_s, std::int64_t budget_nodes,
               const std::string& filter_text, const std::string& prefix_file,
               const std::string& out_dir, const std::string& mode, int threads) {
    const Polytope24& p = Polytope24::instance();
    SearchConfig cfg;
    cfg.seed = seed;
    cfg.budget_seconds = budget_s;
    cfg.budget_nodes = budget_nodes;
    cfg.threads = threads;
    cfg.mode = (mode == "random") ? SearchConfig::Mode::RandomRestart
                                  : SearchConfig::Mode::Exhaustive;
    if (!filter_text.empty()) cfg.filter = parse_filter(filter_text);
    if (!prefix_file.empty()) {
        std::string text = slurp(prefix_file);
        // A prefix file holds pairing-v1 lines for the assigned sides only.
        std::istringstream in(text);
        std::string line;
        std::vector<Correspondence> corrs;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::istringstream ls(line);
            std::string tok, si, arrow, sj, colon;
            ls >> tok >> si >> arrow >> sj >> colon;
            if (tok != "side" || arrow != "->" || colon != ":")
                throw parse_error("prefix: malformed line: " + line);
            Correspondence c;
            c.from_side = std::stoi(si) - 1;
            c.to_side = std::stoi(sj) - 1;
            c.image.fill(-1);
            while (ls >> tok) {
                auto gt = tok.find('>');
                if (gt == std::string::npos) throw parse_error("prefix: bad map " + tok);
                c.image[std::stoi(tok.substr(0, gt)) - 1] = std::stoi(tok.substr(gt + 1)) - 1;
            }
            if (c.from_side < c.to_side) corrs.push_back(c);
        }
        cfg.prefix = corrs;
    }

    SearchOutcome out = search(cfg, p);
    Json index = Json::array();
    for (size_t i = 0; i < out.results.size(); ++i) {
        const SearchResult& r = out.results[i];
        std::string name = "pairing_" + std::to_string(i) + ".pairing";
        if (!out_dir.empty()) {
            fs::create_directories(out_dir);
            std::ofstream f(fs::path(out_dir) / name);
            f << serialize_pairing(r.pairing);
        }
        index.push_back(Json{{"file", name},
                             {"certificate", r.certificate.encode()},
                             {"cusps", r.certificate.cusp_count}});
    }
    Json payload{{"results", index},
                 {"nodes", out.nodes_visited},
                 {"budget_exhausted", out.budget_exhausted}};
    std::cout << envelope("search", "", payload).dump(2) << "\n";
    if (out.results.empty() && out.budget_exhausted) return kExitNoResults;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for 24-cell manifolds"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = int(std::thread::hardware_concurrency());
    app.add_option("--threads", threads, "worker threads (search)");

    std::string file;
    bool json_out = false;
    auto* verify = app.add_subcommand("verify", "Poincare verification of a pairing file");
    verify->add_option("file", file, "pairing-v1 file");
    verify->add_flag("--json", json_out, "emit the JSON report");

    int cover_n = 1, cover_m = 1;
    auto* report = app.add_subcommand("report", "combined geography/homology report");
    report->add_option("file", file);
    report->add_option("--n", cover_n, "cyclic cover degree along h");
    report->add_option("--m", cover_m, "cyclic cover degree along v");

    auto* cusps = app.add_subcommand("cusps", "cusp census as JSON");
    cusps->add_option("file", file);

    auto* homology = app.add_subcommand("homology", "integral homology profile as JSON");
    homology->add_option("file", file);

    auto* cover = app.add_subcommand("cover", "geography report of the (n,m)-cover");
    cover->add_option("file", file);
    cover->add_option("--n", cover_n, "cyclic degree along h")->required();
    cover->add_option("--m", cover_m, "cyclic degree along v")->required();

    auto* signature = app.add_subcommand("signature", "signature via the cusp census");
    signature->add_option("file", file);
    signature->add_option("--n", cover_n);
    signature->add_option("--m", cover_m);

    std::uint64_t seed = 0;
    double budget_s = -1;
    std::int64_t budget_nodes = -1;
    std::string filter_text, prefix_file, out_dir, mode = "random";
    auto* search_cmd = app.add_subcommand("search", "side-pairing search");
    search_cmd->add_option("--seed", seed, "rng seed");
    search_cmd->add_option("--budget", budget_s, "wall-clock budget in seconds");
    search_cmd->add_option("--budget-nodes", budget_nodes, "node budget");
    search_cmd->add_option("--filter", filter_text, "cusp profile, e.g. F4=1,rest=F1,homs");
    search_cmd->add_option("--prefix", prefix_file, "pairing-v1 prefix file");
    search_cmd->add_option("--out", out_dir, "directory for emitted pairing files");
    search_cmd->add_option("--mode", mode, "exhaustive | random");
    search_cmd->add_option("--threads", threads, "worker threads");

    int cycle_id = -1;
    auto* export_cusp = app.add_subcommand("export-cusp", "cusp cube complex description");
    export_cusp->add_option("file", file);
    export_cusp->add_option("--cycle", cycle_id, "cusp index (census order)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(file, json_out);
        if (report->parsed()) return cmd_report(file, cover_n, cover_m);
        if (cusps->parsed()) return cmd_cusps(file);
        if (homology->parsed()) return cmd_homology(file);
        if (cover->parsed()) return cmd_cover(file, cover_n, cover_m);
        if (signature->parsed()) return cmd_signature(file, cover_n, cover_m);
        if (search_cmd->parsed())
            return cmd_search(seed, budget_s, budget_nodes, filter_text, prefix_file, out_dir,
                              mode, threads);
        if (export_cusp->parsed()) return cmd_export_cusp(file, cycle_id);
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const geometry_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitInputError;
}
