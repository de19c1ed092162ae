#include "tvk/perm.hpp"

#include <doctest.h>

#include "support.hpp"
#include "tvk/errors.hpp"

using namespace tvk;

TEST_CASE("compose applies the right factor first") {
  const Perm p = Perm::from_one_based({2, 1, 3});
  const Perm q = Perm::from_one_based({3, 2, 1});
  CHECK(compose(p, q) == Perm::from_one_based({3, 1, 2}));
  CHECK(compose(Perm::identity(3), q) == q);
  const Perm c = Perm::from_one_based({2, 3, 1});
  CHECK(compose(c, c) == Perm::from_one_based({3, 1, 2}));
}

TEST_CASE("inverse") {
  CHECK(inverse(Perm::from_one_based({2, 1, 3})) == Perm::from_one_based({2, 1, 3}));
  CHECK(inverse(Perm::identity(5)) == Perm::identity(5));
  CHECK(inverse(Perm::from_one_based({2, 3, 1})) == Perm::from_one_based({3, 1, 2}));
}

TEST_CASE("compose and inverse satisfy the group laws on random inputs") {
  test::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = static_cast<int>(rng.range(1, 9));
    const Perm a = test::random_perm(degree, rng);
    const Perm b = test::random_perm(degree, rng);
    const Perm c = test::random_perm(degree, rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, inverse(a)) == Perm::identity(degree));
    CHECK(compose(inverse(a), a) == Perm::identity(degree));
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(Perm::from_one_based({1, 1, 3}), InputError);
  CHECK_THROWS_AS(Perm::from_one_based({0, 1, 2}), InputError);
  CHECK_THROWS_AS(Perm::from_one_based({}), InputError);
  CHECK_THROWS_AS(Perm::identity(0), InputError);
  CHECK_THROWS_AS(Perm::identity(256), InputError);
  CHECK_THROWS_AS(compose(Perm::identity(3), Perm::identity(4)), InputError);
  CHECK(Perm::identity(255).degree() == 255);
}

TEST_CASE("ordering is lexicographic on images and identity is minimal") {
  const Perm id = Perm::identity(3);
  const Perm swap = Perm::from_one_based({2, 1, 3});
  CHECK(id < swap);
  CHECK(Perm::from_one_based({1, 3, 2}) < swap);
  CHECK(swap.to_string() == "[2,1,3]");
  CHECK(swap.one_based_images() == std::vector<int>{2, 1, 3});
}
