#include "fixtures.hpp"

#include "cell24/errors.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fixtures {

#ifndef CELL24_DATA_DIR
#define CELL24_DATA_DIR "data"
#endif

std::string bundled_pairing_path() {
    const char* env = std::getenv("CELL24_DATA");
    std::filesystem::path dir = env ? std::filesystem::path(env)
                                    : std::filesystem::path(CELL24_DATA_DIR);
    return (dir / "m_paper.pairing").string();
}

std::string bundled_pairing_text() {
    std::ifstream in(bundled_pairing_path());
    if (!in) throw std::runtime_error("missing bundled pairing file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const SidePairing& bundled_pairing() {
    static SidePairing sp = parse_pairing(bundled_pairing_text(), Polytope24::instance());
    return sp;
}

const std::vector<GeneratorMatrix>& generator_matrices() {
    static std::vector<GeneratorMatrix> gens = [] {
        std::vector<GeneratorMatrix> v;
        auto add = [&](int side, std::initializer_list<std::initializer_list<long>> rows) {
            v.push_back({side, ExactMatrix::from_rows(rows)});
        };
        add(1, {{2, 1, 0, 0, -2},
                {-1, -2, 0, 0, 2},
                {0, 0, -1, 0, 0},
                {0, 0, 0, 1, 0},
                {-2, -2, 0, 0, 3}});
        add(3, {{2, -1, 0, 0, -2},
                {1, -2, 0, 0, -2},
                {0, 0, -1, 0, 0},
                {0, 0, 0, 1, 0},
                {-2, 2, 0, 0, 3}});
        add(5, {{2, 0, 1, 0, -2},
                {0, 0, 0, -1, 0},
                {0, 1, 0, 0, 0},
                {-1, 0, -2, 0, 2},
                {-2, 0, -2, 0, 3}});
        add(6, {{2, 0, -1, 0, 2},
                {0, 0, 0, 1, 0},
                {0, -1, 0, 0, 0},
                {1, 0, -2, 0, 2},
                {2, 0, -2, 0, 3}});
        add(7, {{2, 0, -1, 0, -2},
                {0, 0, 0, 1, 0},
                {0, -1, 0, 0, 0},
                {1, 0, -2, 0, -2},
                {-2, 0, 2, 0, 3}});
        add(8, {{2, 0, 1, 0, 2},
                {0, 0, 0, -1, 0},
                {0, 1, 0, 0, 0},
                {-1, 0, -2, 0, -2},
                {2, 0, 2, 0, 3}});
        add(9, {{0, 0, 0, -1, 0},
                {0, 2, 1, 0, -2},
                {1, 0, 0, 0, 0},
                {0, -1, -2, 0, 2},
                {0, -2, -2, 0, 3}});
        add(10, {{0, 0, 0, 1, 0},
                 {0, 2, -1, 0, 2},
                 {-1, 0, 0, 0, 0},
                 {0, 1, -2, 0, 2},
                 {0, 2, -2, 0, 3}});
        add(11, {{0, 0, 0, 1, 0},
                 {0, 2, -1, 0, -2},
                 {-1, 0, 0, 0, 0},
                 {0, 1, -2, 0, -2},
                 {0, -2, 2, 0, 3}});
        add(12, {{0, 0, 0, -1, 0},
                 {0, 2, 1, 0, 2},
                 {1, 0, 0, 0, 0},
                 {0, -1, -2, 0, -2},
                 {0, 2, 2, 0, 3}});
        add(21, {{0, -1, 0, 0, 0},
                 {1, 0, 0, 0, 0},
                 {0, 0, -1, -2, 2},
                 {0, 0, 2, 1, -2},
                 {0, 0, -2, -2, 3}});
        add(22, {{0, 1, 0, 0, 0},
                 {-1, 0, 0, 0, 0},
                 {0, 0, -1, 2, -2},
                 {0, 0, -2, 1, -2},
                 {0, 0, 2, -2, 3}});
        return v;
    }();
    return gens;
}

const ExactMatrix& generator_matrix(int side_1based) {
    for (const GeneratorMatrix& g : generator_matrices())
        if (g.side == side_1based) return g.matrix;
    throw std::out_of_range("no published matrix for that side");
}

const std::vector<LetterList>& published_relators() {
    static std::vector<LetterList> rels = {
        {{3, 1}, {10, -1}, {22, -1}, {8, 1}},  {{3, 1}, {5, -1}, {22, -1}, {12, 1}},
        {{7, 1}, {8, 1}, {12, -1}, {11, -1}},  {{3, 1}, {11, 1}, {22, -1}, {7, -1}},
        {{3, 1}, {8, 1}, {22, -1}, {11, -1}},  {{7, 1}, {11, -1}, {12, -1}, {8, 1}},
        {{1, 1}, {8, 1}, {22, 1}, {12, -1}},   {{1, 1}, {7, -1}, {22, 1}, {9, 1}},
        {{1, 1}, {12, 1}, {22, 1}, {7, -1}},   {{1, 1}, {11, -1}, {22, 1}, {6, 1}},
        {{3, 1}, {9, 1}, {21, 1}, {5, -1}},    {{3, 1}, {6, 1}, {21, 1}, {9, -1}},
        {{5, 1}, {6, 1}, {10, -1}, {9, -1}},   {{5, 1}, {10, -1}, {11, -1}, {8, 1}},
        {{6, 1}, {9, -1}, {12, -1}, {7, 1}},   {{3, 1}, {12, -1}, {21, 1}, {6, 1}},
        {{3, 1}, {7, -1}, {21, 1}, {10, 1}},   {{6, 1}, {7, 1}, {12, -1}, {9, -1}},
        {{5, 1}, {8, 1}, {11, -1}, {10, -1}},  {{1, 1}, {6, 1}, {21, -1}, {10, -1}},
        {{1, 1}, {5, -1}, {21, -1}, {11, 1}},  {{5, 1}, {9, -1}, {10, -1}, {6, 1}},
        {{1, 1}, {10, 1}, {21, -1}, {5, -1}},  {{1, 1}, {9, -1}, {21, -1}, {8, 1}},
    };
    return rels;
}

LetterList word_t1() { return {{5, -1}, {8, -1}, {12, 1}, {9, 1}}; }
LetterList word_t2() { return {{9, -1}, {10, -1}, {5, 1}, {6, 1}}; }
LetterList word_t3() { return {{21, 1}, {21, 1}, {21, 1}, {21, 1}}; }
LetterList word_a() { return {{21, 1}}; }

const ExactMatrix& matrix_t1() {
    static ExactMatrix m = ExactMatrix::from_rows({{1, 0, -4, 0, 4},
                                                   {0, 1, 4, 0, -4},
                                                   {4, -4, -15, 0, 16},
                                                   {0, 0, 0, 1, 0},
                                                   {4, -4, -16, 0, 17}});
    return m;
}

const ExactMatrix& matrix_t2() {
    static ExactMatrix m = ExactMatrix::from_rows({{1, 0, -4, 0, 4},
                                                   {0, 1, -4, 0, 4},
                                                   {4, 4, -15, 0, 16},
                                                   {0, 0, 0, 1, 0},
                                                   {4, 4, -16, 0, 17}});
    return m;
}

const ExactMatrix& matrix_t3() {
    static ExactMatrix m = ExactMatrix::from_rows({{1, 0, 0, 0, 0},
                                                   {0, 1, 0, 0, 0},
                                                   {0, 0, -31, -8, 32},
                                                   {0, 0, 8, 1, -8},
                                                   {0, 0, -32, -8, 33}});
    return m;
}

IntHomomorphism hom_h() {
    // Values on (g1, g3, g5, g6, g7, g8, g9, g10, g11, g12, g21, g22).
    IntHomomorphism h;
    for (long x : {1, 1, 2, 0, 2, 0, 1, 1, 1, 1, 0, 0}) h.values.push_back(Int(x));
    return h;
}

IntHomomorphism hom_v() {
    IntHomomorphism v;
    for (long x : {2, 0, 2, 0, 2, 0, 1, 1, 1, 1, 1, -1}) v.values.push_back(Int(x));
    return v;
}

const std::vector<Word>& cusp_group_relators() {
    // Alphabet (t1, t2, t3, a) = generator indices 0..3.
    static std::vector<Word> rels = [] {
        auto w = [](std::initializer_list<std::pair<int, int>> ls) {
            Word word;
            for (auto [g, e] : ls) word.letters.push_back({g, e});
            return word;
        };
        std::vector<Word> v;
        v.push_back(w({{3, 1}, {3, 1}, {3, 1}, {3, 1}, {2, -1}}));     // a^4 t3^-1
        v.push_back(w({{3, 1}, {0, 1}, {3, -1}, {1, -1}}));            // a t1 a^-1 t2^-1
        v.push_back(w({{3, 1}, {1, 1}, {3, -1}, {0, 1}}));             // a t2 a^-1 t1
        v.push_back(w({{3, 1}, {2, 1}, {3, -1}, {2, -1}}));            // a t3 a^-1 t3^-1
        v.push_back(w({{0, 1}, {1, 1}, {0, -1}, {1, -1}}));            // [t1, t2]
        v.push_back(w({{0, 1}, {2, 1}, {0, -1}, {2, -1}}));            // [t1, t3]
        v.push_back(w({{1, 1}, {2, 1}, {1, -1}, {2, -1}}));            // [t2, t3]
        return v;
    }();
    return rels;
}

Word to_word(const GroupPresentation& pres, const LetterList& letters) {
    Word w;
    for (auto [side, exp] : letters) {
        int idx = pres.generator_index(side - 1);
        if (idx < 0) throw std::runtime_error("fixture word uses a non-generator side");
        w.letters.push_back({idx, exp});
    }
    return w;
}

std::vector<SideLetter> to_letters(const LetterList& letters) {
    std::vector<SideLetter> out;
    for (auto [side, exp] : letters) out.push_back({side - 1, exp});
    return out;
}

SidePairing conjugate_pairing(const SidePairing& sp, const SymmetryElement& s,
                              const Polytope24& p) {
    std::vector<Correspondence> corrs;
    for (int side = 0; side < 24; ++side) {
        if (side > sp.partner[side]) continue;
        Correspondence c;
        c.from_side = s.facet_perm[side];
        c.to_side = s.facet_perm[sp.partner[side]];
        c.image.fill(-1);
        for (int v = 0; v < 24; ++v)
            if (sp.vmap[side][v] >= 0)
                c.image[s.vertex_perm[v]] = s.vertex_perm[sp.vmap[side][v]];
        if (c.from_side > c.to_side) c = c.inverse(p);
        corrs.push_back(c);
    }
    return pairing_from_correspondences(p, corrs);
}

const SymmetryGroup& cached_symmetries() {
    static SymmetryGroup g = symmetry_group(Polytope24::instance());
    return g;
}

} // namespace fixtures
