#pragma once

#include <vector>

#include "monideal/monomial.hpp"
#include "monideal/ring.hpp"

namespace monideal {

/// A monomial ideal, held as its unique minimal generating set in canonical
/// order (degree, then lex). The zero ideal has no generators; the unit ideal
/// is generated by 1.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(Ring ring) : ring_(std::move(ring)) {}

  /// Minimalizes, deduplicates and sorts the given generators.
  MonomialIdeal(Ring ring, std::vector<Monomial> generators);

  static MonomialIdeal unit_ideal(Ring ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return generators_; }

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;
  bool is_squarefree() const;

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  /// Max total degree among the minimal generators (the invariant d(I)).
  /// Throws std::domain_error for the zero ideal.
  int max_gen_degree() const;

  bool operator==(const MonomialIdeal& other) const {
    return ring_ == other.ring_ && generators_ == other.generators_;
  }
  bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

private:
  friend MonomialIdeal minimalize(Ring ring, std::vector<Monomial> gens);

  Ring ring_;
  std::vector<Monomial> generators_;
};

/// The unique minimal generating set of the ideal generated by `gens`:
/// keeps exactly the monomials not strictly divisible by another element.
MonomialIdeal minimalize(Ring ring, std::vector<Monomial> gens);

}  // namespace monideal
