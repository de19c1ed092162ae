#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tvk {

// Signed arbitrary-precision integer, sign + little-endian base-2^32
// magnitude. Covers exactly what the exact-arithmetic modules need: ring
// operations, powers of two, shifts with floor semantics, decimal I/O.
class BigInt {
 public:
  BigInt() = default;  // zero
  BigInt(long long value);

  static BigInt from_decimal(std::string_view text);  // throws InputError
  static BigInt pow2(unsigned long long k);

  bool is_zero() const { return sign_ == 0; }
  bool is_odd() const;
  bool is_negative() const { return sign_ < 0; }

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt operator-() const;

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  BigInt shifted_left(unsigned long long bits) const;   // value * 2^bits
  BigInt floordiv_pow2(unsigned long long bits) const;  // floor(value / 2^bits)

  // Number of trailing zero bits of the magnitude; value must be nonzero.
  unsigned long long trailing_zero_bits() const;

  std::string to_decimal() const;
  long long to_int64() const;  // throws InputError when out of range

 private:
  static int compare_magnitudes(const std::vector<std::uint32_t>& a,
                                const std::vector<std::uint32_t>& b);
  void trim();

  int sign_ = 0;                    // -1, 0, +1
  std::vector<std::uint32_t> mag_;  // empty iff zero
};

}  // namespace tvk
