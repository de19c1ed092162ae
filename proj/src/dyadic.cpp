#include "tvk/dyadic.hpp"

#include "tvk/errors.hpp"

namespace tvk {

Dyadic::Dyadic(BigInt numerator, long long exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  const unsigned long long shift = num_.trailing_zero_bits();
  if (shift) {
    num_ = num_.floordiv_pow2(shift);  // exact: trailing bits are zero
    exp_ += static_cast<long long>(shift);
  }
}

Dyadic Dyadic::from_string(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(BigInt::from_decimal(text));
  const BigInt numerator = BigInt::from_decimal(text.substr(0, slash));
  const BigInt denominator = BigInt::from_decimal(text.substr(slash + 1));
  if (denominator.is_zero() || denominator.is_negative())
    throw InputError("denominator must be a positive power of two");
  const unsigned long long t = denominator.trailing_zero_bits();
  if (denominator != BigInt::pow2(t))
    throw InputError("denominator must be a positive power of two");
  return Dyadic(numerator, -static_cast<long long>(t));
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long long e = std::min(a.exp_, b.exp_);
  const BigInt sum =
      a.num_.shifted_left(static_cast<unsigned long long>(a.exp_ - e)) +
      b.num_.shifted_left(static_cast<unsigned long long>(b.exp_ - e));
  return Dyadic(sum, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
}

Dyadic Dyadic::operator-() const {
  Dyadic out = *this;
  out.num_ = -out.num_;
  return out;
}

Dyadic Dyadic::times_pow2(long long k) const {
  if (is_zero()) return {};
  Dyadic out = *this;
  out.exp_ += k;
  return out;
}

Dyadic Dyadic::mod_pow2(long long k) const {
  // floor(value / 2^k), as an integer.
  BigInt quotient;
  const long long shift = exp_ - k;
  if (shift >= 0)
    quotient = num_.shifted_left(static_cast<unsigned long long>(shift));
  else
    quotient = num_.floordiv_pow2(static_cast<unsigned long long>(-shift));
  return *this - Dyadic(quotient, k);
}

bool operator==(const Dyadic& a, const Dyadic& b) {
  return a.exp_ == b.exp_ && a.num_ == b.num_;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const Dyadic diff = a - b;
  if (diff.num_.is_zero()) return std::strong_ordering::equal;
  return diff.num_.is_negative() ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
}

std::string Dyadic::to_string() const {
  if (is_integer())
    return num_.shifted_left(static_cast<unsigned long long>(exp_ >= 0 ? exp_ : 0))
        .to_decimal();
  return num_.to_decimal() + "/" +
         BigInt::pow2(static_cast<unsigned long long>(-exp_)).to_decimal();
}

}  // namespace tvk
