#pragma once

#include <vector>

#include "monideal/ideal.hpp"

namespace monideal {

/// Ideal product: minimalized pairwise products of generators.
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& K);

/// Ordinary power I^s, s >= 0. I^0 is the unit ideal.
MonomialIdeal power(const MonomialIdeal& I, int s);

/// Frobenius power I^[s]: generated by m^s over the minimal generators m.
/// s >= 0; I^[0] is the unit ideal.
MonomialIdeal frobenius_power(const MonomialIdeal& I, int s);

/// Intersection of monomial ideals: minimalized pairwise lcms.
MonomialIdeal intersection(const MonomialIdeal& I, const MonomialIdeal& K);

/// Contraction of the localization inverting the variables outside P:
/// every exponent outside P is deleted, the images are minimalized and read
/// back in the full ring. `keep` holds the variable indices of P.
MonomialIdeal localize_contract(const MonomialIdeal& I, const std::vector<int>& keep);

}  // namespace monideal
