#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tvk/group.hpp"
#include "tvk/perm.hpp"
#include "tvk/tower.hpp"

namespace tvk::test {

// Deterministic test randomness; values come from mt19937_64 directly so
// sequences are identical on every platform.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(eng() % n); }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double unit() { return (static_cast<double>(eng() >> 11) * 0x1.0p-53); }
};

inline Perm random_perm(int degree, Rng& rng) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  for (std::size_t i = images.size(); i > 1; --i)
    std::swap(images[i - 1], images[rng.below(i)]);
  return Perm::from_one_based(images);
}

inline FiniteGroup make_s3() {
  return FiniteGroup::generate(
      3, {Perm::from_one_based({2, 1, 3}), Perm::from_one_based({2, 3, 1})});
}

inline FiniteGroup make_s4() {
  return FiniteGroup::generate(
      4, {Perm::from_one_based({2, 1, 3, 4}), Perm::from_one_based({2, 3, 4, 1})});
}

inline FiniteGroup make_d8() {
  return FiniteGroup::generate(
      4, {Perm::from_one_based({2, 3, 4, 1}), Perm::from_one_based({3, 2, 1, 4})});
}

// Quaternion group in its left-regular representation on the element list
// {1, -1, i, -i, j, -j, k, -k}.
inline FiniteGroup make_q8() {
  return FiniteGroup::generate(8, {Perm::from_one_based({3, 4, 2, 1, 7, 8, 6, 5}),
                                   Perm::from_one_based({5, 6, 8, 7, 2, 1, 3, 4})});
}

inline std::vector<int> cycle_images(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % m + 1;
  return images;
}

inline std::vector<int> cycle_power_images(int m, long long power) {
  const long long p = ((power % m) + m) % m;
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    images[static_cast<std::size_t>(i)] = static_cast<int>((i + p) % m) + 1;
  return images;
}

inline FiniteGroup make_z12() { return FiniteGroup::generate(12, {Perm::from_one_based(cycle_images(12))}); }

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

inline std::vector<NamedGroup> suite_groups() {
  std::vector<NamedGroup> out;
  out.push_back({"S3", make_s3()});
  out.push_back({"S4", make_s4()});
  out.push_back({"D8", make_d8()});
  out.push_back({"Q8", make_q8()});
  out.push_back({"Z12", make_z12()});
  return out;
}

// Tower spec for Z/2 <- Z/4 <- ... <- Z/2^k, as cyclic permutation groups
// with reduction maps given by the generator-image shorthand. H is the full
// top level, K is generated by the 2^j-th power of the top cycle (j = k gives
// the trivial subgroup).
inline TowerRunSpec cyclic2_tower_spec(int k, int j) {
  TowerRunSpec spec;
  for (int i = 1; i <= k; ++i)
    spec.levels.push_back({1 << i, {cycle_images(1 << i)}});
  for (int i = 1; i < k; ++i) {
    TowerMapSpec map;
    map.by_generators = true;
    map.generator_images = {cycle_images(1 << i)};
    spec.maps.push_back(std::move(map));
  }
  const int top = 1 << k;
  spec.h_generators = {cycle_images(top)};
  spec.k_generators = {cycle_power_images(top, 1LL << j)};
  return spec;
}

}  // namespace tvk::test
