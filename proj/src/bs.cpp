#include "tvk/bs.hpp"

#include <algorithm>
#include <sstream>

#include "tvk/errors.hpp"

namespace tvk {

const BigInt& ExtendedIndex::value() const {
  if (infinite_) throw InternalError("extended index is infinite");
  return value_;
}

std::string ExtendedIndex::to_string() const {
  return infinite_ ? "infinite" : value_.to_decimal();
}

bool operator==(const ExtendedIndex& a, const ExtendedIndex& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::string BSElement::to_string() const {
  std::ostringstream os;
  os << '(' << q.to_string() << ", " << n << ')';
  return os.str();
}

BSElement bs_mul(const BSElement& x, const BSElement& y) {
  return {x.q + y.q.times_pow2(x.n), x.n + y.n};
}

BSElement bs_inv(const BSElement& x) {
  return {(-x.q).times_pow2(-x.n), -x.n};
}

namespace {

void require_twist_in_range(long long n) {
  if (n > kMaxTwistExponent || n < -kMaxTwistExponent)
    throw InputError("twist exponent n out of supported range");
}

ExtendedIndex pow2_index(long long k) {
  return ExtendedIndex::finite(
      k <= 0 ? BigInt(1) : BigInt::pow2(static_cast<unsigned long long>(k)));
}

}  // namespace

std::pair<ExtendedIndex, ExtendedIndex> bs_indices(const BSElement& x) {
  require_twist_in_range(x.n);
  // x Z x^-1 = 2^n Z and x^-1 Z x = 2^-n Z; intersecting with Z keeps the
  // nonnegative part of the scale.
  return {pow2_index(x.n), pow2_index(-x.n)};
}

BSDoubleCosetReport bs_double_coset_report(const BSElement& x) {
  BSDoubleCosetReport report{x, ExtendedIndex::finite(BigInt(1)),
                             ExtendedIndex::finite(BigInt(1)), true, {}};
  auto [left, right] = bs_indices(x);
  report.left_count = left;
  report.right_count = right;
  report.index_condition_holds = left == right;
  std::ostringstream os;
  if (report.index_condition_holds) {
    os << "index condition holds at x = " << x.to_string()
       << ": both conjugate intersections have index " << left.to_string()
       << " in Z";
  } else {
    os << "index condition fails at witness x = " << x.to_string()
       << ": [Z : Z ∩ xZx^-1] = " << left.to_string()
       << " but [Z : Z ∩ x^-1Zx] = " << right.to_string()
       << "; the double coset ZxZ contains " << left.to_string()
       << " left cosets and " << right.to_string()
       << " right cosets, so no common transversal for Z in BS(1,2) exists";
  }
  report.conclusion = os.str();
  return report;
}

SolenoidSubgroup solenoid_intersect(SolenoidSubgroup a, SolenoidSubgroup b) {
  return {std::max(a.scale, b.scale)};
}

BigInt solenoid_index(SolenoidSubgroup h, SolenoidSubgroup k) {
  if (k.scale < h.scale)
    throw InputError("not a subgroup: index undefined for coarser lattice");
  require_twist_in_range(k.scale - h.scale);
  return k.scale == h.scale
             ? BigInt(1)
             : BigInt::pow2(static_cast<unsigned long long>(k.scale - h.scale));
}

std::pair<ExtendedIndex, ExtendedIndex> solenoid_indices(long long n) {
  require_twist_in_range(n);
  const SolenoidSubgroup h{0};
  const SolenoidSubgroup left_conjugate{n};    // b^n Z_2 b^-n
  const SolenoidSubgroup right_conjugate{-n};  // b^-n Z_2 b^n
  return {
      ExtendedIndex::finite(solenoid_index(h, solenoid_intersect(h, left_conjugate))),
      ExtendedIndex::finite(solenoid_index(h, solenoid_intersect(h, right_conjugate)))};
}

}  // namespace tvk
