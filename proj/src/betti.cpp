#include "monideal/betti.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <set>
#include <stdexcept>

#include "monideal/parallel.hpp"

namespace monideal {

void BettiData::add(int i, std::vector<int> multidegree, long long count) {
  if (count <= 0) throw std::invalid_argument("Betti counts must be positive");
  if (i < 0) throw std::invalid_argument("negative homological index");
  if (static_cast<int>(multidegree.size()) != ring_.arity())
    throw std::invalid_argument("multidegree length differs from ring arity");
  entries_[Key(i, std::move(multidegree))] += count;
}

int BettiData::regularity() const {
  if (entries_.empty()) throw std::domain_error("regularity of empty Betti data");
  int best = INT_MIN;
  for (const auto& [key, count] : entries_)
    best = std::max(best, detail::degree_vec(key.second) - key.first);
  return best;
}

int BettiData::projective_dimension() const {
  if (entries_.empty())
    throw std::domain_error("projective dimension of empty Betti data");
  int best = 0;
  for (const auto& [key, count] : entries_) best = std::max(best, key.first);
  return best;
}

long long BettiTable::at(int row, int col) const {
  auto it = entries_.find(Key(row, col));
  return it == entries_.end() ? 0 : it->second;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::domain_error("lcm lattice of the zero ideal");
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> work;
  for (const auto& g : I.generators())
    if (seen.insert(g.exponents()).second) work.push_back(g.exponents());
  while (!work.empty()) {
    std::vector<int> m = std::move(work.front());
    work.pop_front();
    for (const auto& g : I.generators()) {
      std::vector<int> l = detail::lcm_vec(m, g.exponents());
      if (seen.insert(l).second) work.push_back(std::move(l));
    }
  }
  std::vector<std::vector<int>> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), detail::canonical_less);
  std::vector<Monomial> out;
  out.reserve(sorted.size());
  for (auto& e : sorted) out.emplace_back(I.ring(), std::move(e));
  return out;
}

SimplicialComplex upper_koszul(const MonomialIdeal& I, const Monomial& a) {
  detail::require_same_ring(I.ring(), a.ring(), "upper_koszul");
  const int n = I.ring().arity();
  std::vector<int> vertex_of(static_cast<size_t>(n), -1);
  int vertices = 0;
  for (int j = 0; j < n; ++j)
    if (a.exponent(j) > 0) vertex_of[static_cast<size_t>(j)] = vertices++;
  if (vertices > 30)
    throw std::invalid_argument("upper_koszul supports supports of size <= 30");

  // Faces F satisfy x^(a - e_F) in I, so F ranges over the subsets of
  // T_g = {j in supp(a) : g_j <= a_j - 1} for the generators g dividing a.
  std::vector<uint32_t> facets;
  for (const auto& g : I.generators()) {
    if (!detail::divides_vec(g.exponents(), a.exponents())) continue;
    uint32_t mask = 0;
    for (int j = 0; j < n; ++j)
      if (a.exponent(j) > 0 && g.exponent(j) <= a.exponent(j) - 1)
        mask |= uint32_t(1) << vertex_of[static_cast<size_t>(j)];
    facets.push_back(mask);
  }
  return SimplicialComplex(vertices, std::move(facets));
}

BettiData betti_numbers(const MonomialIdeal& I, const Field& field) {
  if (I.is_zero()) throw std::domain_error("Betti numbers of the zero ideal");
  const std::vector<Monomial> lattice = lcm_lattice(I);
  // One result slot per lattice point keeps the parallel map deterministic.
  std::vector<std::vector<std::pair<int, long long>>> slots(lattice.size());
  parallel_for(lattice.size(), [&](size_t idx) {
    const SimplicialComplex complex = upper_koszul(I, lattice[idx]);
    if (complex.is_cone()) return;
    const auto ranks = reduced_homology_all(complex, field);
    // beta_{i,a} = rank Htilde_{i-1}, stored at ranks[i].
    for (size_t i = 0; i < ranks.size(); ++i)
      if (ranks[i] > 0) slots[idx].emplace_back(static_cast<int>(i), ranks[i]);
  });
  BettiData data(I.ring());
  for (size_t idx = 0; idx < lattice.size(); ++idx)
    for (const auto& [i, count] : slots[idx])
      data.add(i, lattice[idx].exponents(), count);
  return data;
}

BettiTable betti_table(const BettiData& data) {
  std::map<BettiTable::Key, long long> entries;
  for (const auto& [key, count] : data.entries())
    entries[BettiTable::Key(detail::degree_vec(key.second) - key.first, key.first)] += count;
  return BettiTable(std::move(entries));
}

BettiTable betti_table(const MonomialIdeal& I, const Field& field) {
  return betti_table(betti_numbers(I, field));
}

int regularity(const MonomialIdeal& I, const Field& field) {
  return betti_numbers(I, field).regularity();
}

int projdim(const MonomialIdeal& I, const Field& field) {
  return betti_numbers(I, field).projective_dimension();
}

}  // namespace monideal
