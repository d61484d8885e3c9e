#include "monideal/field.hpp"

namespace monideal {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::fp(long p) {
  if (p >= (1l << 31)) throw std::invalid_argument("prime field modulus too large");
  if (!is_prime(p)) throw std::invalid_argument("prime field modulus must be prime");
  return Field{Kind::prime, p};
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "q") return rationals();
  if (text == "Fp" || text == "fp") return fp();
  constexpr std::string_view prefix = "Fp:";
  if (text.size() > prefix.size() &&
      (text.substr(0, prefix.size()) == prefix || text.substr(0, prefix.size()) == "fp:")) {
    std::string digits(text.substr(prefix.size()));
    long p = 0;
    bool parsed = false;
    try {
      size_t used = 0;
      p = std::stol(digits, &used);
      parsed = used == digits.size();
    } catch (const std::exception&) {
      parsed = false;
    }
    if (parsed) return fp(p);  // fp reports non-prime or oversized moduli
  }
  throw std::invalid_argument("unrecognized field '" + std::string(text) +
                              "' (expected Q, Fp or Fp:<prime>)");
}

}  // namespace monideal
