#pragma once

#include <optional>
#include <vector>

#include "monideal/ideal.hpp"
#include "monideal/rational.hpp"

namespace monideal {

/// Witness that an exponent vector lies in the Newton polyhedron of an ideal:
/// nonnegative weights on generator indices summing to 1 whose weighted
/// generator sum is componentwise <= the queried vector.
struct RationalCertificate {
  struct Term {
    int generator;  // index into the ideal's canonical generator list
    Rat64 weight;
  };
  std::vector<Term> terms;
};

struct NewtonMembership {
  bool inside = false;
  std::optional<RationalCertificate> certificate;  // present iff inside
};

/// Exact test whether a's exponent vector lies in the Newton polyhedron of I
/// (equivalently, whether x^a is integral over I). Throws std::domain_error
/// for the zero ideal.
NewtonMembership in_newton_polyhedron(const Monomial& a, const MonomialIdeal& I);

/// Checks a certificate against its defining inequalities, exactly.
bool certificate_is_valid(const RationalCertificate& cert, const Monomial& a,
                          const MonomialIdeal& I);

/// Integral closure of I^s: the ideal of all monomials in the Newton
/// polyhedron of I^s, generated by its minimal lattice points. Enumerates the
/// bounding box of the generators of I^s with exact LP membership tests.
MonomialIdeal integral_closure_of_power(const MonomialIdeal& I, int s);

}  // namespace monideal
