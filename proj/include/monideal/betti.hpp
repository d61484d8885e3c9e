#pragma once

#include <map>
#include <utility>
#include <vector>

#include "monideal/field.hpp"
#include "monideal/ideal.hpp"
#include "monideal/simplicial.hpp"

namespace monideal {

/// Multigraded Betti numbers: (homological index i, multidegree a) -> β_{i,a}.
/// Zero entries are never stored.
class BettiData {
public:
  using Key = std::pair<int, std::vector<int>>;

  BettiData() = default;
  explicit BettiData(Ring ring) : ring_(std::move(ring)) {}

  const Ring& ring() const { return ring_; }
  const std::map<Key, long long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  void add(int i, std::vector<int> multidegree, long long count);

  /// Castelnuovo–Mumford regularity: max |a| - i over nonzero entries.
  int regularity() const;
  /// max i with a nonzero entry.
  int projective_dimension() const;

  bool operator==(const BettiData& other) const {
    return ring_ == other.ring_ && entries_ == other.entries_;
  }

private:
  Ring ring_;
  std::map<Key, long long> entries_;
};

/// Macaulay2-style coarsening: (row = |a| - i, column = i) -> total count.
class BettiTable {
public:
  using Key = std::pair<int, int>;

  BettiTable() = default;
  explicit BettiTable(std::map<Key, long long> entries) : entries_(std::move(entries)) {}

  const std::map<Key, long long>& entries() const { return entries_; }
  long long at(int row, int col) const;

  bool operator==(const BettiTable& other) const { return entries_ == other.entries_; }

private:
  std::map<Key, long long> entries_;
};

/// Join-closure of the minimal generators under componentwise max, in
/// canonical order. The empty join is not included; the lattice of the unit
/// ideal is {1}. Throws std::domain_error for the zero ideal.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& I);

/// Upper-Koszul complex of I at multidegree a: the complex on supp(a) whose
/// faces are the F with x^(a - e_F) in I. Vertices are numbered by the
/// support of a in increasing variable order.
SimplicialComplex upper_koszul(const MonomialIdeal& I, const Monomial& a);

/// β_{i,a}(I) = rank H~_{i-1}(upper_koszul(I, a)) for a in the lcm lattice.
BettiData betti_numbers(const MonomialIdeal& I,
                        const Field& field = Field::rationals());

BettiTable betti_table(const BettiData& data);
BettiTable betti_table(const MonomialIdeal& I,
                       const Field& field = Field::rationals());

int regularity(const MonomialIdeal& I, const Field& field = Field::rationals());
int projdim(const MonomialIdeal& I, const Field& field = Field::rationals());

}  // namespace monideal
