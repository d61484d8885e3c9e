#include "monideal/arithmetic.hpp"

#include <stdexcept>

namespace monideal {

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& K) {
  detail::require_same_ring(I.ring(), K.ring(), "product");
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size() * K.generators().size());
  for (const auto& g : I.generators())
    for (const auto& h : K.generators()) gens.push_back(g * h);
  return minimalize(I.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, int s) {
  if (s < 0) throw std::invalid_argument("negative ideal power");
  if (s == 0) return MonomialIdeal::unit_ideal(I.ring());
  MonomialIdeal out = I;
  for (int k = 1; k < s; ++k) out = product(out, I);
  return out;
}

MonomialIdeal frobenius_power(const MonomialIdeal& I, int s) {
  if (s < 0) throw std::invalid_argument("negative Frobenius power");
  if (s == 0) return MonomialIdeal::unit_ideal(I.ring());
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(g.pow(s));
  return minimalize(I.ring(), std::move(gens));
}

MonomialIdeal intersection(const MonomialIdeal& I, const MonomialIdeal& K) {
  detail::require_same_ring(I.ring(), K.ring(), "intersection");
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size() * K.generators().size());
  for (const auto& g : I.generators())
    for (const auto& h : K.generators()) gens.push_back(lcm(g, h));
  return minimalize(I.ring(), std::move(gens));
}

MonomialIdeal localize_contract(const MonomialIdeal& I, const std::vector<int>& keep) {
  const int n = I.ring().arity();
  std::vector<char> keep_mask(static_cast<size_t>(n), 0);
  for (int j : keep) {
    if (j < 0 || j >= n) throw std::out_of_range("localize_contract: bad variable index");
    keep_mask[static_cast<size_t>(j)] = 1;
  }
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) {
    std::vector<int> e = g.exponents();
    for (int j = 0; j < n; ++j)
      if (!keep_mask[static_cast<size_t>(j)]) e[static_cast<size_t>(j)] = 0;
    gens.emplace_back(I.ring(), std::move(e));
  }
  return minimalize(I.ring(), std::move(gens));
}

}  // namespace monideal
