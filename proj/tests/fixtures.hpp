#pragma once

#include "cell24/grouppres.hpp"
#include "cell24/pairing.hpp"
#include "cell24/smith.hpp"

#include <array>
#include <string>
#include <vector>

namespace fixtures {

using namespace cell24;

/// The bundled pairing file (path baked in at configure time, overridable
/// via CELL24_DATA).
std::string bundled_pairing_path();
std::string bundled_pairing_text();
const SidePairing& bundled_pairing();

/// The twelve published generator matrices, keyed by 1-based side number.
struct GeneratorMatrix {
    int side;
    ExactMatrix matrix;
};
const std::vector<GeneratorMatrix>& generator_matrices();
const ExactMatrix& generator_matrix(int side_1based);

/// The 24 published relators as (side, exponent) letter lists, 1-based sides.
using LetterList = std::vector<std::pair<int, int>>;
const std::vector<LetterList>& published_relators();

/// Cusp generator words over the pairing generators, 1-based sides.
LetterList word_t1();
LetterList word_t2();
LetterList word_t3();
LetterList word_a();

/// Published matrices for t1, t2, t3 (a equals the side-21 generator).
const ExactMatrix& matrix_t1();
const ExactMatrix& matrix_t2();
const ExactMatrix& matrix_t3();

/// The two published homomorphisms, values indexed like generator_sides().
IntHomomorphism hom_h();
IntHomomorphism hom_v();

/// Cusp-group relators over the alphabet (t1, t2, t3, a) = indices 0..3.
const std::vector<Word>& cusp_group_relators();

/// Converts a 1-based (side, exponent) list into a Word over a presentation.
Word to_word(const GroupPresentation& pres, const LetterList& letters);

/// Letters as SideLetter sequence (0-based sides).
std::vector<SideLetter> to_letters(const LetterList& letters);

/// The pairing conjugated by a polytope symmetry.
SidePairing conjugate_pairing(const SidePairing& sp, const SymmetryElement& s,
                              const Polytope24& p);

/// The cached full symmetry group (generation is a second or two).
const SymmetryGroup& cached_symmetries();

} // namespace fixtures
