#pragma once

#include <vector>

#include "monideal/ring.hpp"

namespace monideal {

/// A monomial x^a in a fixed ring, stored as the exponent vector a >= 0.
class Monomial {
public:
  Monomial() = default;
  Monomial(Ring ring, std::vector<int> exponents);

  static Monomial unit(Ring ring);

  const Ring& ring() const { return ring_; }
  const std::vector<int>& exponents() const { return exponents_; }
  int exponent(int i) const { return exponents_[static_cast<size_t>(i)]; }
  int degree() const;
  bool is_unit() const { return degree() == 0; }
  bool is_squarefree() const;

  Monomial pow(int s) const;

  bool operator==(const Monomial& other) const {
    return ring_ == other.ring_ && exponents_ == other.exponents_;
  }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

  /// Canonical order: total degree, then lexicographic on exponents.
  /// Only meaningful between monomials of the same ring.
  bool operator<(const Monomial& other) const;

private:
  Ring ring_;
  std::vector<int> exponents_;
};

bool divides(const Monomial& m, const Monomial& n);
Monomial lcm(const Monomial& m, const Monomial& n);
Monomial operator*(const Monomial& m, const Monomial& n);

namespace detail {
/// Throws std::invalid_argument unless both rings are equal.
void require_same_ring(const Ring& a, const Ring& b, const char* where);

inline bool divides_vec(const std::vector<int>& m, const std::vector<int>& n) {
  for (size_t j = 0; j < m.size(); ++j)
    if (m[j] > n[j]) return false;
  return true;
}
inline std::vector<int> lcm_vec(const std::vector<int>& m, const std::vector<int>& n) {
  std::vector<int> out(m.size());
  for (size_t j = 0; j < m.size(); ++j) out[j] = m[j] > n[j] ? m[j] : n[j];
  return out;
}
inline int degree_vec(const std::vector<int>& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}
/// Degree-then-lex compare used for all canonical generator orders.
inline bool canonical_less(const std::vector<int>& a, const std::vector<int>& b) {
  int da = degree_vec(a), db = degree_vec(b);
  if (da != db) return da < db;
  return a < b;
}
}  // namespace detail

}  // namespace monideal
