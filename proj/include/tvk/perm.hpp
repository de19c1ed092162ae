#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tvk {

inline constexpr int kMinDegree = 1;
inline constexpr int kMaxDegree = 255;

// Permutation of {1..degree}, stored 0-based internally.
//
// Composition is right-to-left project-wide: compose(p, q) applies q first,
// then p. Ordering is lexicographic on the image array; this is the canonical
// order every coset representative in the toolkit is the minimum of.
class Perm {
 public:
  // Empty placeholder (degree 0), for aggregate members that get assigned
  // before use; every factory below produces a valid permutation.
  Perm() = default;

  static Perm identity(int degree);

  // images are 1-based, as they appear in group spec files; throws InputError
  // unless they form a bijection on {1..degree} with degree in [1, 255].
  static Perm from_one_based(const std::vector<int>& images);

  int degree() const { return static_cast<int>(images_.size()); }

  // 0-based image of a 0-based point.
  int apply(int point) const { return images_[static_cast<std::size_t>(point)]; }

  bool is_identity() const;

  std::vector<int> one_based_images() const;
  std::string to_string() const;  // "[2,1,3]"

  friend Perm compose(const Perm& p, const Perm& q);
  friend Perm inverse(const Perm& p);

  bool operator==(const Perm&) const = default;
  std::strong_ordering operator<=>(const Perm&) const = default;

 private:
  explicit Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {}

  std::vector<std::uint8_t> images_;
};

// result(i) = p(q(i)); degrees must match.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);

}  // namespace tvk
