#pragma once

#include <vector>

#include "monideal/arithmetic.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

/// The prime ideal generated by a nonempty subset of the ring variables.
struct MonomialPrime {
  Ring ring;
  std::vector<int> variables;  // sorted, distinct indices

  MonomialIdeal to_ideal() const;
  bool operator==(const MonomialPrime& other) const {
    return ring == other.ring && variables == other.variables;
  }
};

/// Minimal primes of a squarefree proper ideal: the minimal vertex covers of
/// the hypergraph whose edges are the generator supports. Sorted by size,
/// then lexicographically.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I);

/// The P-primary component of I^s at a minimal prime P of I, computed as the
/// localization-contraction of I^s at P.
MonomialIdeal primary_component_of_power(const MonomialIdeal& I, int s,
                                         const MonomialPrime& P);

/// Symbolic power of a squarefree proper ideal: intersection of the primary
/// components of I^s over all minimal primes.
MonomialIdeal symbolic_power(const MonomialIdeal& I, int s);

}  // namespace monideal
