#include "tvk/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>

#include "tvk/errors.hpp"

namespace tvk {

namespace {

using Mag = std::vector<std::uint32_t>;

Mag add_mag(const Mag& a, const Mag& b) {
  Mag out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t sum = carry;
    if (i < a.size()) sum += a[i];
    if (i < b.size()) sum += b[i];
    out.push_back(static_cast<std::uint32_t>(sum));
    carry = sum >> 32;
  }
  if (carry) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

// Requires a >= b.
Mag sub_mag(const Mag& a, const Mag& b) {
  Mag out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow;
    if (i < b.size()) diff -= b[i];
    if (diff < 0) {
      diff += (std::int64_t{1} << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(diff));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Mag mul_mag(const Mag& a, const Mag& b) {
  if (a.empty() || b.empty()) return {};
  Mag out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = out[i + j] +
                          static_cast<std::uint64_t>(a[i]) * b[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// In-place multiply by a small factor then add a small addend.
void mul_add_small(Mag& mag, std::uint32_t factor, std::uint32_t addend) {
  std::uint64_t carry = addend;
  for (std::uint32_t& limb : mag) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
    limb = static_cast<std::uint32_t>(cur);
    carry = cur >> 32;
  }
  while (carry) {
    mag.push_back(static_cast<std::uint32_t>(carry));
    carry >>= 32;
  }
}

// In-place divide by a small divisor, returns the remainder.
std::uint32_t divmod_small(Mag& mag, std::uint32_t divisor) {
  std::uint64_t rem = 0;
  for (std::size_t i = mag.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | mag[i];
    mag[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  while (!mag.empty() && mag.back() == 0) mag.pop_back();
  return static_cast<std::uint32_t>(rem);
}

Mag shl_mag(const Mag& a, unsigned long long bits) {
  if (a.empty()) return {};
  const std::size_t limb_shift = static_cast<std::size_t>(bits / 32);
  const unsigned bit_shift = static_cast<unsigned>(bits % 32);
  Mag out(limb_shift, 0);
  std::uint32_t carry = 0;
  for (std::uint32_t limb : a) {
    if (bit_shift == 0) {
      out.push_back(limb);
    } else {
      out.push_back((limb << bit_shift) | carry);
      carry = static_cast<std::uint32_t>(limb >> (32 - bit_shift));
    }
  }
  if (bit_shift != 0 && carry) out.push_back(carry);
  return out;
}

// Truncating shift right; also reports whether any dropped bit was set.
Mag shr_mag(const Mag& a, unsigned long long bits, bool& dropped_nonzero) {
  dropped_nonzero = false;
  const std::size_t limb_shift = static_cast<std::size_t>(bits / 32);
  const unsigned bit_shift = static_cast<unsigned>(bits % 32);
  if (limb_shift >= a.size()) {
    for (std::uint32_t limb : a)
      if (limb) dropped_nonzero = true;
    return {};
  }
  for (std::size_t i = 0; i < limb_shift; ++i)
    if (a[i]) dropped_nonzero = true;
  Mag out(a.begin() + static_cast<std::ptrdiff_t>(limb_shift), a.end());
  if (bit_shift != 0) {
    if (out[0] & ((std::uint32_t{1} << bit_shift) - 1)) dropped_nonzero = true;
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] >>= bit_shift;
      if (i + 1 < out.size())
        out[i] |= out[i + 1] << (32 - bit_shift);
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

BigInt::BigInt(long long value) {
  if (value == 0) return;
  sign_ = value < 0 ? -1 : 1;
  // Negate via unsigned arithmetic so LLONG_MIN is handled.
  std::uint64_t mag = value < 0
                          ? ~static_cast<std::uint64_t>(value) + 1
                          : static_cast<std::uint64_t>(value);
  while (mag) {
    mag_.push_back(static_cast<std::uint32_t>(mag));
    mag >>= 32;
  }
}

BigInt BigInt::from_decimal(std::string_view text) {
  std::size_t pos = 0;
  int sign = 1;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') sign = -1;
    ++pos;
  }
  if (pos == text.size()) throw InputError("empty integer literal");
  BigInt out;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("invalid character in integer literal");
    mul_add_small(out.mag_, 10, static_cast<std::uint32_t>(c - '0'));
  }
  out.sign_ = out.mag_.empty() ? 0 : sign;
  return out;
}

BigInt BigInt::pow2(unsigned long long k) {
  BigInt out;
  out.sign_ = 1;
  out.mag_ = shl_mag({1}, k);
  return out;
}

bool BigInt::is_odd() const { return !mag_.empty() && (mag_[0] & 1); }

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_magnitudes(const Mag& a, const Mag& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt out;
  if (a.sign_ == b.sign_) {
    out.sign_ = a.sign_;
    out.mag_ = add_mag(a.mag_, b.mag_);
  } else {
    const int cmp = BigInt::compare_magnitudes(a.mag_, b.mag_);
    if (cmp == 0) return BigInt{};
    if (cmp > 0) {
      out.sign_ = a.sign_;
      out.mag_ = sub_mag(a.mag_, b.mag_);
    } else {
      out.sign_ = b.sign_;
      out.mag_ = sub_mag(b.mag_, a.mag_);
    }
  }
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt out;
  out.mag_ = mul_mag(a.mag_, b.mag_);
  out.sign_ = out.mag_.empty() ? 0 : a.sign_ * b.sign_;
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_)
    return a.sign_ < b.sign_ ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  const int cmp = BigInt::compare_magnitudes(a.mag_, b.mag_) * (a.sign_ < 0 ? -1 : 1);
  if (cmp < 0) return std::strong_ordering::less;
  if (cmp > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt BigInt::shifted_left(unsigned long long bits) const {
  BigInt out;
  out.sign_ = sign_;
  out.mag_ = shl_mag(mag_, bits);
  out.trim();
  return out;
}

BigInt BigInt::floordiv_pow2(unsigned long long bits) const {
  bool dropped = false;
  BigInt out;
  out.mag_ = shr_mag(mag_, bits, dropped);
  out.sign_ = out.mag_.empty() ? 0 : sign_;
  // Truncation rounds toward zero; floor of a negative value with a dropped
  // remainder is one lower.
  if (sign_ < 0 && dropped) out = out - BigInt(1);
  return out;
}

unsigned long long BigInt::trailing_zero_bits() const {
  if (is_zero()) throw InternalError("trailing_zero_bits of zero");
  unsigned long long bits = 0;
  for (std::uint32_t limb : mag_) {
    if (limb == 0) {
      bits += 32;
    } else {
      bits += static_cast<unsigned long long>(std::countr_zero(limb));
      break;
    }
  }
  return bits;
}

std::string BigInt::to_decimal() const {
  if (is_zero()) return "0";
  Mag work = mag_;
  std::vector<std::uint32_t> chunks;  // base 10^9, little-endian
  while (!work.empty()) chunks.push_back(divmod_small(work, 1000000000));
  std::string out = sign_ < 0 ? "-" : "";
  out += std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

long long BigInt::to_int64() const {
  std::uint64_t value = 0;
  if (mag_.size() > 2) throw InputError("value does not fit in 64 bits");
  for (std::size_t i = mag_.size(); i-- > 0;)
    value = (value << 32) | mag_[i];
  if (sign_ >= 0) {
    if (value > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
      throw InputError("value does not fit in 64 bits");
    return static_cast<long long>(value);
  }
  if (value > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()) + 1)
    throw InputError("value does not fit in 64 bits");
  return static_cast<long long>(~value + 1);
}

}  // namespace tvk
