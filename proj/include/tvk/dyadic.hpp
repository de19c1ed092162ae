#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "tvk/bigint.hpp"

namespace tvk {

// Exact dyadic rational numerator * 2^exponent, normalized so the numerator
// is odd (zero is stored as 0 * 2^0).
class Dyadic {
 public:
  Dyadic() = default;  // zero
  explicit Dyadic(BigInt integer_value) : Dyadic(std::move(integer_value), 0) {}
  Dyadic(BigInt numerator, long long exponent);

  // "p" or "p/q" with q a positive power of two.
  static Dyadic from_string(std::string_view text);

  const BigInt& numerator() const { return num_; }
  long long exponent() const { return exp_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return num_.is_zero() || exp_ >= 0; }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic operator-() const;

  Dyadic times_pow2(long long k) const;  // value * 2^k

  // Representative of the value modulo 2^k * Z, reduced into [0, 2^k).
  Dyadic mod_pow2(long long k) const;

  friend bool operator==(const Dyadic& a, const Dyadic& b);
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  std::string to_string() const;  // "5", "-3/8"

 private:
  BigInt num_;
  long long exp_ = 0;
};

}  // namespace tvk
