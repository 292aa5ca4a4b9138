#pragma once

#include <vector>

#include "germcalc/poly.hpp"

namespace germcalc {

/// Result of dividing `p` by a list of divisors:
///   unit * p = sum_i cofactors[i] * divisors[i] + remainder
/// Global orders always produce unit == 1. Local orders run Mora's weak
/// normal-form algorithm, whose unit is guaranteed invertible (nonzero at 0).
struct DivisionResult {
    Poly remainder;
    std::vector<Poly> cofactors;
    Poly unit;
};

/// Raw division (no standard-basis preprocessing). For global orders every
/// remainder term is reduced; for local orders only leading-term reduction is
/// performed (weak normal form), which is what standard-basis theory needs.
DivisionResult divide(const Poly& p, const std::vector<Poly>& divisors,
                      const MonomialOrder& ord);

/// Same reduction, skipping cofactor/unit bookkeeping (faster inner loops).
Poly reduce_only(const Poly& p, const std::vector<Poly>& divisors, const MonomialOrder& ord);

}  // namespace germcalc
