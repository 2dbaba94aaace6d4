#pragma once

#include "edc/representation.hpp"

namespace edc {

/// Principal-series representation of SL2(F8): induced from the character
/// lambda of the Borel subgroup with lambda(t) = zeta_7^m, realized on the 9
/// cosets of the Borel (the projective line over F8).  Conductor 7.
struct PrincipalSeries {
    const MatrixGroup* group = nullptr;
    unsigned m = 0; // character parameter, 1..6
    Representation rep;
};

PrincipalSeries principal_series_sl2_8(unsigned m, const MatrixGroup& sl2_8);

} // namespace edc
