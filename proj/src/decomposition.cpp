#include "monideal/decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace monideal {

MonomialIdeal MonomialPrime::to_ideal() const {
  std::vector<Monomial> gens;
  gens.reserve(variables.size());
  for (int j : variables) {
    std::vector<int> e(static_cast<size_t>(ring.arity()), 0);
    e[static_cast<size_t>(j)] = 1;
    gens.emplace_back(ring, std::move(e));
  }
  return MonomialIdeal(ring, std::move(gens));
}

namespace {

// Enumerates covers of the edge hypergraph: branch on the vertices of the
// first uncovered edge, forbidding earlier branch vertices in later subtrees
// so no cover is produced twice. Non-minimal covers may appear; the caller
// filters them.
void enumerate_covers(const std::vector<uint32_t>& edges, uint32_t chosen,
                      uint32_t forbidden, std::set<uint32_t>& out) {
  const uint32_t* uncovered = nullptr;
  for (const auto& e : edges)
    if ((e & chosen) == 0) {
      uncovered = &e;
      break;
    }
  if (!uncovered) {
    out.insert(chosen);
    return;
  }
  uint32_t candidates = *uncovered & ~forbidden;
  if (candidates == 0) return;  // every extension repeats an earlier branch
  uint32_t local_forbidden = forbidden;
  while (candidates) {
    uint32_t v = candidates & (~candidates + 1u);  // lowest set bit
    candidates &= candidates - 1;
    enumerate_covers(edges, chosen | v, local_forbidden, out);
    local_forbidden |= v;
  }
}

}  // namespace

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::domain_error("minimal primes of the zero ideal");
  if (I.is_unit()) throw std::domain_error("minimal primes of the unit ideal");
  if (!I.is_squarefree())
    throw std::invalid_argument("minimal_primes requires a squarefree ideal");
  if (I.ring().arity() > 30)
    throw std::invalid_argument("minimal_primes supports at most 30 variables");

  std::vector<uint32_t> edges;
  edges.reserve(I.generators().size());
  for (const auto& g : I.generators()) {
    uint32_t e = 0;
    for (int j = 0; j < I.ring().arity(); ++j)
      if (g.exponent(j) > 0) e |= uint32_t(1) << j;
    edges.push_back(e);
  }

  std::set<uint32_t> covers;
  enumerate_covers(edges, 0, 0, covers);

  std::vector<uint32_t> minimal;
  for (uint32_t c : covers) {
    bool keep = true;
    for (uint32_t d : covers)
      if (d != c && (d & ~c) == 0) {
        keep = false;
        break;
      }
    if (keep) minimal.push_back(c);
  }

  std::vector<MonomialPrime> primes;
  primes.reserve(minimal.size());
  for (uint32_t mask : minimal) {
    MonomialPrime p;
    p.ring = I.ring();
    for (int j = 0; j < I.ring().arity(); ++j)
      if (mask & (uint32_t(1) << j)) p.variables.push_back(j);
    primes.push_back(std::move(p));
  }
  std::sort(primes.begin(), primes.end(),
            [](const MonomialPrime& a, const MonomialPrime& b) {
              if (a.variables.size() != b.variables.size())
                return a.variables.size() < b.variables.size();
              return a.variables < b.variables;
            });
  return primes;
}

MonomialIdeal primary_component_of_power(const MonomialIdeal& I, int s,
                                         const MonomialPrime& P) {
  detail::require_same_ring(I.ring(), P.ring, "primary_component_of_power");
  return localize_contract(power(I, s), P.variables);
}

MonomialIdeal symbolic_power(const MonomialIdeal& I, int s) {
  if (s < 0) throw std::invalid_argument("negative symbolic power");
  if (s == 0) return MonomialIdeal::unit_ideal(I.ring());
  if (!I.is_squarefree())
    throw std::invalid_argument("symbolic_power requires a squarefree ideal");
  const auto primes = minimal_primes(I);
  const MonomialIdeal Is = power(I, s);
  MonomialIdeal out;
  bool first = true;
  for (const auto& P : primes) {
    MonomialIdeal component = localize_contract(Is, P.variables);
    out = first ? component : intersection(out, component);
    first = false;
  }
  return out;
}

}  // namespace monideal
