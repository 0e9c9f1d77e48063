#include "cell24/grouppres.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cell24 {

Word Word::inverse() const {
    Word w;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.push_back({it->first, -it->second});
    return w;
}

Word Word::concat(const Word& a, const Word& b) {
    Word w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

int GroupPresentation::generator_index(int side) const {
    auto it = std::lower_bound(generator_sides.begin(), generator_sides.end(), side);
    if (it == generator_sides.end() || *it != side) return -1;
    return int(it - generator_sides.begin());
}

Word GroupPresentation::word_from_letters(const std::vector<SideLetter>& letters) const {
    Word w;
    for (const SideLetter& l : letters) {
        int idx = generator_index(l.generator_side);
        if (idx < 0) throw std::logic_error("word_from_letters: unknown generator side");
        w.letters.push_back({idx, l.exponent});
    }
    return w;
}

GroupPresentation presentation(const SidePairing& sp, const Polytope24& p) {
    GroupPresentation pres;
    pres.generator_sides = sp.generator_sides();
    for (const RidgeCycle& c : ridge_cycles(sp, p))
        pres.relators.push_back(pres.word_from_letters(c.word));
    return pres;
}

ExactMatrix eval_word(const Word& w, const GroupPresentation& pres, const SidePairing& sp) {
    ExactMatrix m = ExactMatrix::identity();
    for (auto [gen, exp] : w.letters) {
        const LorentzIsometry& g = sp.maps[pres.generator_sides[gen]];
        m = m * (exp > 0 ? g.matrix() : lorentz_inverse(g.matrix()));
    }
    return m;
}

std::vector<Int> exponent_vector(const Word& w, int generators) {
    std::vector<Int> row(generators);
    for (auto [gen, exp] : w.letters) row[gen] += exp;
    return row;
}

IntegerMatrix abelianized_matrix(const GroupPresentation& pres) {
    IntegerMatrix m(int(pres.relators.size()), pres.generator_count());
    for (size_t r = 0; r < pres.relators.size(); ++r) {
        auto row = exponent_vector(pres.relators[r], pres.generator_count());
        for (int c = 0; c < pres.generator_count(); ++c) m.at(int(r), c) = row[c];
    }
    return m;
}

bool verify_hom(const IntHomomorphism& phi, const GroupPresentation& pres) {
    if (int(phi.values.size()) != pres.generator_count()) return false;
    for (const Word& rel : pres.relators) {
        Int sum(0);
        for (auto [gen, exp] : rel.letters) sum += exp * phi.values[gen];
        if (sum != 0) return false;
    }
    Int g(0);
    for (const Int& v : phi.values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g == 1;
}

std::vector<Int> hom_values_on(const IntHomomorphism& phi, const std::vector<Word>& words,
                               const GroupPresentation& pres) {
    (void)pres;
    std::vector<Int> out;
    for (const Word& w : words) {
        Int sum(0);
        for (auto [gen, exp] : w.letters) sum += exp * phi.values[gen];
        out.push_back(sum);
    }
    return out;
}

HomLattice find_constrained_homs(const GroupPresentation& pres,
                                 const std::vector<std::pair<Word, Int>>& constraints) {
    int rows = int(pres.relators.size() + constraints.size());
    IntegerMatrix A(rows, pres.generator_count());
    IntegerMatrix rel = abelianized_matrix(pres);
    for (int r = 0; r < rel.rows(); ++r)
        for (int c = 0; c < rel.cols(); ++c) A.at(r, c) = rel.at(r, c);
    std::vector<std::pair<int, Int>> fixed;
    for (size_t i = 0; i < constraints.size(); ++i) {
        auto row = exponent_vector(constraints[i].first, pres.generator_count());
        int r = rel.rows() + int(i);
        for (int c = 0; c < pres.generator_count(); ++c) A.at(r, c) = row[c];
        fixed.push_back({r, constraints[i].second});
    }
    return solve_hom_lattice(A, fixed);
}

Word freely_reduce(const Word& w) {
    Word out;
    for (auto [g, e] : w.letters) {
        if (!out.letters.empty() && out.letters.back().first == g &&
            out.letters.back().second == -e)
            out.letters.pop_back();
        else
            out.letters.push_back({g, e});
    }
    return out;
}

std::vector<SideLetter> freely_reduce(const std::vector<SideLetter>& w) {
    std::vector<SideLetter> out;
    for (const SideLetter& l : w) {
        if (!out.empty() && out.back().generator_side == l.generator_side &&
            out.back().exponent == -l.exponent)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word normalize_relator(const Word& w) {
    auto rotations = [](const Word& x) {
        std::vector<Word> out;
        int n = int(x.letters.size());
        for (int s = 0; s < n; ++s) {
            Word r;
            for (int i = 0; i < n; ++i) r.letters.push_back(x.letters[(s + i) % n]);
            out.push_back(std::move(r));
        }
        return out;
    };
    auto less = [](const Word& a, const Word& b) { return a.letters < b.letters; };
    Word best = w;
    for (const Word& cand : rotations(w))
        if (less(cand, best)) best = cand;
    for (const Word& cand : rotations(w.inverse()))
        if (less(cand, best)) best = cand;
    return best;
}

} // namespace cell24
