#include "monideal/monomial.hpp"

#include <stdexcept>

namespace monideal {

namespace detail {

void require_same_ring(const Ring& a, const Ring& b, const char* where) {
  if (a != b) throw std::invalid_argument(std::string(where) + ": ring mismatch");
}

}  // namespace detail

Monomial::Monomial(Ring ring, std::vector<int> exponents)
    : ring_(std::move(ring)), exponents_(std::move(exponents)) {
  if (static_cast<int>(exponents_.size()) != ring_.arity())
    throw std::invalid_argument("exponent vector length differs from ring arity");
  for (int e : exponents_)
    if (e < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::unit(Ring ring) {
  std::vector<int> zeros(static_cast<size_t>(ring.arity()), 0);
  return Monomial(std::move(ring), std::move(zeros));
}

int Monomial::degree() const { return detail::degree_vec(exponents_); }

bool Monomial::is_squarefree() const {
  for (int e : exponents_)
    if (e > 1) return false;
  return true;
}

Monomial Monomial::pow(int s) const {
  if (s < 0) throw std::invalid_argument("negative monomial power");
  std::vector<int> out(exponents_.size());
  for (size_t j = 0; j < exponents_.size(); ++j) out[j] = exponents_[j] * s;
  return Monomial(ring_, std::move(out));
}

bool Monomial::operator<(const Monomial& other) const {
  detail::require_same_ring(ring_, other.ring_, "Monomial::operator<");
  return detail::canonical_less(exponents_, other.exponents_);
}

bool divides(const Monomial& m, const Monomial& n) {
  detail::require_same_ring(m.ring(), n.ring(), "divides");
  return detail::divides_vec(m.exponents(), n.exponents());
}

Monomial lcm(const Monomial& m, const Monomial& n) {
  detail::require_same_ring(m.ring(), n.ring(), "lcm");
  return Monomial(m.ring(), detail::lcm_vec(m.exponents(), n.exponents()));
}

Monomial operator*(const Monomial& m, const Monomial& n) {
  detail::require_same_ring(m.ring(), n.ring(), "operator*");
  std::vector<int> out(m.exponents().size());
  for (size_t j = 0; j < out.size(); ++j) out[j] = m.exponent(static_cast<int>(j)) + n.exponent(static_cast<int>(j));
  return Monomial(m.ring(), std::move(out));
}

}  // namespace monideal
