#ifndef SYNLEX_RATIONAL_HPP
#define SYNLEX_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace synlex {

// Exact non-negative-friendly rational on int64 with __int128 intermediates.
// Always stored reduced with den > 0. Throws std::overflow_error if a reduced
// result no longer fits in int64.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    using I = __int128;
    return from128(I(a.num_) * b.den_ + I(b.num_) * a.den_,
                   I(a.den_) * b.den_);
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    using I = __int128;
    return from128(I(a.num_) * b.den_ - I(b.num_) * a.den_,
                   I(a.den_) * b.den_);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    using I = __int128;
    return from128(I(a.num_) * b.num_, I(a.den_) * b.den_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend bool operator<(const Rational& a, const Rational& b) {
    using I = __int128;
    return I(a.num_) * b.den_ < I(b.num_) * a.den_;
  }

  friend bool operator<=(const Rational& a, const Rational& b) {
    return a == b || a < b;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    *this = from128(n, d);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi)
      throw std::overflow_error("Rational: result exceeds int64");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace synlex

#endif
