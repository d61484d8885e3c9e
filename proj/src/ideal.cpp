#include "monideal/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace monideal {

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)) {
  for (const auto& g : generators)
    detail::require_same_ring(ring_, g.ring(), "MonomialIdeal");
  *this = minimalize(ring_, std::move(generators));
}

MonomialIdeal MonomialIdeal::unit_ideal(Ring ring) {
  Monomial one = Monomial::unit(ring);
  return MonomialIdeal(std::move(ring), {std::move(one)});
}

bool MonomialIdeal::is_unit() const {
  return generators_.size() == 1 && generators_[0].is_unit();
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : generators_)
    if (!g.is_squarefree()) return false;
  return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  detail::require_same_ring(ring_, m.ring(), "contains");
  for (const auto& g : generators_)
    if (detail::divides_vec(g.exponents(), m.exponents())) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  detail::require_same_ring(ring_, other.ring_, "contains");
  for (const auto& g : other.generators_)
    if (!contains(g)) return false;
  return true;
}

int MonomialIdeal::max_gen_degree() const {
  if (is_zero()) throw std::domain_error("max_gen_degree of the zero ideal");
  // Generators are in degree-then-lex order, so the last one is maximal.
  return generators_.back().degree();
}

MonomialIdeal minimalize(Ring ring, std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    // Any divisor of g precedes it in degree-then-lex order, so checking the
    // kept prefix suffices.
    bool redundant = false;
    for (const auto& k : kept)
      if (detail::divides_vec(k.exponents(), g.exponents())) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(g));
  }
  MonomialIdeal out;
  out.ring_ = std::move(ring);
  out.generators_ = std::move(kept);
  return out;
}

}  // namespace monideal
