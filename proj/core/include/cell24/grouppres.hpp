#pragma once

#include "cell24/pairing.hpp"
#include "cell24/smith.hpp"

#include <vector>

namespace cell24 {

/// Word over the presentation's generators: (generator index, exponent +-1).
/// Words are stored unreduced; fixtures compare verbatim forms.
struct Word {
    std::vector<std::pair<int, int>> letters;
    bool operator==(const Word&) const = default;
    Word inverse() const;
    static Word concat(const Word& a, const Word& b);
};

struct GroupPresentation {
    std::vector<int> generator_sides; // ascending lower sides of the pairs
    std::vector<Word> relators;

    int generator_count() const { return int(generator_sides.size()); }
    /// Index of the generator attached to this (lower) side, -1 if none.
    int generator_index(int side) const;
    Word word_from_letters(const std::vector<SideLetter>& letters) const;
};

/// Integer homomorphism pi_1 -> Z given by values on the generators.
struct IntHomomorphism {
    std::vector<Int> values;
    bool operator==(const IntHomomorphism&) const = default;
};

/// Generators = free sides, relators = ridge-cycle words.
GroupPresentation presentation(const SidePairing& sp, const Polytope24& p);

ExactMatrix eval_word(const Word& w, const GroupPresentation& pres, const SidePairing& sp);

/// One row per relator, entries the signed exponent sums per generator.
IntegerMatrix abelianized_matrix(const GroupPresentation& pres);

/// Exponent vector of a word (column per generator).
std::vector<Int> exponent_vector(const Word& w, int generators);

/// All relators map to 0 and the generator values have gcd 1 (surjectivity).
bool verify_hom(const IntHomomorphism& phi, const GroupPresentation& pres);

std::vector<Int> hom_values_on(const IntHomomorphism& phi, const std::vector<Word>& words,
                               const GroupPresentation& pres);

/// Affine lattice of integer homomorphisms killing all relators and taking
/// the prescribed values on the constraint words.
HomLattice find_constrained_homs(const GroupPresentation& pres,
                                 const std::vector<std::pair<Word, Int>>& constraints);

/// Least cyclic rotation of the word or its inverse, for relator comparison
/// up to rotation and inversion.
Word normalize_relator(const Word& w);

/// Free reduction (cancel adjacent inverse letters). Words are stored
/// unreduced; this is the explicit normalization step.
Word freely_reduce(const Word& w);
std::vector<SideLetter> freely_reduce(const std::vector<SideLetter>& w);

} // namespace cell24
