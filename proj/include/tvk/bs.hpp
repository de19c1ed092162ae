#pragma once

#include <string>
#include <utility>

#include "tvk/bigint.hpp"
#include "tvk/dyadic.hpp"

namespace tvk {

// Subgroup indices computed symbolically can be infinite; finite values are
// exact big integers.
class ExtendedIndex {
 public:
  static ExtendedIndex finite(BigInt value) { return ExtendedIndex(std::move(value), false); }
  static ExtendedIndex infinite() { return ExtendedIndex(BigInt{}, true); }

  bool is_infinite() const { return infinite_; }
  const BigInt& value() const;  // InternalError when infinite
  std::string to_string() const;

  friend bool operator==(const ExtendedIndex&, const ExtendedIndex&);

 private:
  ExtendedIndex(BigInt value, bool infinite)
      : value_(std::move(value)), infinite_(infinite) {}
  BigInt value_;
  bool infinite_;
};

// Element (q, n) of BS(1,2) = Z[1/2] ⋊ <b>, with a = (1, 0) and b = (0, 1);
// b acts on the normal factor by multiplication by 2. Multiplication is
// (q1, n1) (q2, n2) = (q1 + 2^n1 q2, n1 + n2).
struct BSElement {
  Dyadic q;
  long long n = 0;

  static BSElement identity() { return {}; }
  static BSElement a() { return {Dyadic(BigInt(1)), 0}; }
  static BSElement b() { return {Dyadic(), 1}; }

  friend bool operator==(const BSElement&, const BSElement&) = default;
  std::string to_string() const;  // "(q, n)"
};

BSElement bs_mul(const BSElement& x, const BSElement& y);
BSElement bs_inv(const BSElement& x);

// Largest twist exponent the symbolic index routines accept; 2^|n| must stay
// printable in a report.
inline constexpr long long kMaxTwistExponent = 4096;

// ([Z : Z ∩ xZx^-1], [Z : Z ∩ x^-1Zx]) for H = Z = <a> inside BS(1,2).
// Conjugation by x = (q, n) scales the standard copy of Z by 2^n, so the
// values are 2^max(n,0) and 2^max(-n,0).
std::pair<ExtendedIndex, ExtendedIndex> bs_indices(const BSElement& x);

struct BSDoubleCosetReport {
  BSElement element;
  ExtendedIndex left_count;
  ExtendedIndex right_count;
  bool index_condition_holds;
  std::string conclusion;
};

BSDoubleCosetReport bs_double_coset_report(const BSElement& x);

// The subgroup 2^scale * Z_2 in the fiber lattice of the 2-solenoid.
struct SolenoidSubgroup {
  long long scale = 0;
};

SolenoidSubgroup solenoid_intersect(SolenoidSubgroup a, SolenoidSubgroup b);

// [2^i Z_2 : 2^j Z_2] = 2^(j - i); requires j >= i, otherwise k is not a
// subgroup of h and this throws InputError.
BigInt solenoid_index(SolenoidSubgroup h, SolenoidSubgroup k);

// Indices of Z_2 against its conjugates by b^n, computed on the scale
// lattice: b^n shifts scale j to j + n.
std::pair<ExtendedIndex, ExtendedIndex> solenoid_indices(long long n);

}  // namespace tvk
