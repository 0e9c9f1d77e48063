#pragma once

#include "cell24/cusps.hpp"
#include "cell24/cw.hpp"
#include "cell24/gluing.hpp"

namespace cell24 {

/// Cellular chain complex of the quotient: cell counts per dimension and
/// signed boundary maps, with dd = 0 already checked.
using CWComplex = cw::Builder::Quotient;

/// The compact manifold: every ideal vertex of every copy replaced by its
/// link cube, cells identified along the side pairings with signs.
CWComplex truncated_complex(const GluingSystem& gs);

/// Integral homology in every degree via Smith normal form.
HomologyProfile homology(const CWComplex& c);

int euler_characteristic(const CWComplex& c);

} // namespace cell24
