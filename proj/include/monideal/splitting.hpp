#pragma once

#include <string>
#include <vector>

#include "monideal/betti.hpp"
#include "monideal/field.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

/// A splitting homomorphism sends each source variable x_i to the product of
/// t_i fresh target variables. Target variables are named by suffixing the
/// source name: x -> x_1 * x_2 * ... * x_t. Applying the map to a monomial
/// replicates each exponent across the corresponding block.
class SplittingMap {
 public:
  SplittingMap(Ring source, std::vector<int> arities);

  static SplittingMap uniform(const Ring& source, int t);
  static SplittingMap identity(const Ring& source);

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  const std::vector<int>& arities() const { return arities_; }

  Monomial apply(const Monomial& m) const;
  MonomialIdeal apply(const MonomialIdeal& I) const;

  /// Pushes multigraded Betti data forward along the map: homological degrees
  /// are preserved and each multidegree a maps to apply(x^a)'s exponents.
  BettiData transfer(const BettiData& source_data) const;

  /// Regularity of apply(I) computed from source Betti data alone:
  /// max over beta_{i,a} != 0 of sum_j t_j*a_j - i.
  int regularity_via_transfer(const BettiData& source_data) const;

 private:
  Ring source_;
  Ring target_;
  std::vector<int> arities_;
  std::vector<int> offsets_;  // start of each block in the target ring
};

enum class Construction { power, frobenius_power, closure_of_power, symbolic_power };

MonomialIdeal apply_construction(Construction c, const MonomialIdeal& I, int s);

/// Checks sigma(op(I, s)) == op(sigma(I), s) by computing both sides.
bool commutes_with(const SplittingMap& sigma, Construction c,
                   const MonomialIdeal& I, int s);

std::string to_string(Construction c);

}  // namespace monideal
