#pragma once

// Independent reference implementations used only by tests. Deliberately
// naive and structured differently from the library: Betti numbers come from
// a Taylor complex minimalized by consecutive cancellation, closure
// membership from powering, minimalization and vertex covers from exhaustive
// scans, and ideal counting from inclusion-exclusion.

#include <random>
#include <vector>

#include "monideal/betti.hpp"
#include "monideal/ideal.hpp"

namespace oracles {

/// Betti numbers of I via the Taylor complex on its minimal generators,
/// cancelling unit entries until the complex is minimal. Rational arithmetic.
monideal::BettiData taylor_betti(const monideal::MonomialIdeal& I);

/// Definition-level closure membership: exists r <= rmax with m^r in (I^s)^r.
bool brute_closure_member(const monideal::Monomial& m, const monideal::MonomialIdeal& I,
                          int s, int rmax = 6);

/// Quadratic all-pairs minimalization.
std::vector<monideal::Monomial> naive_minimalize(std::vector<monideal::Monomial> gens);

/// Minimal vertex covers of the generator supports by scanning all 2^n
/// subsets; sorted by size then lexicographically. Arity <= 20.
std::vector<std::vector<int>> naive_minimal_covers(const monideal::MonomialIdeal& I);

/// Number of degree-d monomials lying in I, by inclusion-exclusion over
/// generator subsets. Generator count <= 20.
long long inclusion_exclusion_count(const monideal::MonomialIdeal& I, int d);

/// Number of degree-d monomials lying in I, by enumerating all of them.
long long direct_count(const monideal::MonomialIdeal& I, int d);

monideal::Monomial random_monomial(const monideal::Ring& ring, std::mt19937& rng,
                                   int max_exponent, bool squarefree);

/// Nonzero proper ideal with 1..max_gens random nonunit generators.
monideal::MonomialIdeal random_ideal(const monideal::Ring& ring, std::mt19937& rng,
                                     int max_gens, int max_exponent, bool squarefree);

}  // namespace oracles
