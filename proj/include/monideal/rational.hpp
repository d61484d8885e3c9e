#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace monideal {

/// Thrown when a Rat64 operation would leave the int64 range. Callers retry
/// with arbitrary-precision arithmetic.
struct RationalOverflow : std::overflow_error {
  RationalOverflow() : std::overflow_error("rational overflow") {}
};

/// Exact rational with 64-bit numerator and denominator, always normalized
/// (den > 0, gcd(num, den) = 1). Intermediate products run in 128 bits and
/// overflow raises RationalOverflow instead of wrapping.
class Rat64 {
public:
  constexpr Rat64() : num_(0), den_(1) {}
  Rat64(long long n) : num_(n), den_(1) {}
  Rat64(long long n, long long d) { assign(n, d); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  friend Rat64 operator+(const Rat64& a, const Rat64& b) {
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rat64 operator-(const Rat64& a, const Rat64& b) {
    return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rat64 operator*(const Rat64& a, const Rat64& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat64 operator/(const Rat64& a, const Rat64& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero rational");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat64 operator-() const {
    Rat64 r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat64& operator+=(const Rat64& b) { return *this = *this + b; }
  Rat64& operator-=(const Rat64& b) { return *this = *this - b; }
  Rat64& operator*=(const Rat64& b) { return *this = *this * b; }
  Rat64& operator/=(const Rat64& b) { return *this = *this / b; }

  friend bool operator==(const Rat64& a, const Rat64& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat64& a, const Rat64& b) { return !(a == b); }
  friend bool operator<(const Rat64& a, const Rat64& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rat64& a, const Rat64& b) { return b < a; }
  friend bool operator<=(const Rat64& a, const Rat64& b) { return !(b < a); }
  friend bool operator>=(const Rat64& a, const Rat64& b) { return !(a < b); }

  /// "p/q", or just "p" when q = 1.
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  using i128 = __int128;

  void assign(long long n, long long d) {
    if (d == 0) throw std::domain_error("zero denominator");
    *this = from128(n, d);
  }

  static Rat64 from128(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return Rat64();
    i128 g = gcd128(n < 0 ? -n : n, d);
    n /= g;
    d /= g;
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw RationalOverflow();
    Rat64 r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  long long num_;
  long long den_;
};

}  // namespace monideal
