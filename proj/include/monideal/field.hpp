#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace monideal {

/// Coefficient field for homology ranks: exact rationals (the default, giving
/// characteristic-zero Betti numbers) or a prime field F_p.
struct Field {
  enum class Kind { rationals, prime };

  Kind kind = Kind::rationals;
  long p = 0;

  static Field rationals() { return Field{}; }

  /// Requires p prime and < 2^31 (entries are reduced with 64-bit products).
  static Field fp(long p = kDefaultPrime);

  /// Accepts "Q", "Fp" (default prime 32003) or "Fp:<p>".
  static Field parse(std::string_view text);

  std::string to_string() const {
    if (kind == Kind::rationals) return "Q";
    return "Fp:" + std::to_string(p);
  }

  bool operator==(const Field& other) const {
    return kind == other.kind && (kind == Kind::rationals || p == other.p);
  }

  static constexpr long kDefaultPrime = 32003;
};

}  // namespace monideal
