#include "tvk/group.hpp"

#include <doctest.h>

#include "support.hpp"
#include "tvk/errors.hpp"

using namespace tvk;

TEST_CASE("closure of standard generating sets") {
  CHECK(test::make_s3().order() == 6);
  CHECK(test::make_s4().order() == 24);
  CHECK(test::make_d8().order() == 8);
  CHECK(test::make_q8().order() == 8);
  CHECK(test::make_z12().order() == 12);

  const FiniteGroup z4 =
      FiniteGroup::generate(4, {Perm::from_one_based({2, 3, 4, 1})});
  CHECK(z4.order() == 4);

  const FiniteGroup trivial = FiniteGroup::generate(3, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.element(0) == Perm::identity(3));
}

TEST_CASE("closure cap") {
  CHECK_THROWS_AS(FiniteGroup::generate(
                      4, {Perm::from_one_based({2, 1, 3, 4}),
                          Perm::from_one_based({2, 3, 4, 1})},
                      10),
                  CapacityError);
  CHECK_THROWS_WITH_AS(FiniteGroup::generate(
                           3, {Perm::from_one_based({2, 3, 1})}, 2),
                       "closure exceeded cap of 2 elements", CapacityError);
}

TEST_CASE("element list is canonical and deterministic") {
  const FiniteGroup a = test::make_s3();
  const FiniteGroup b = test::make_s3();
  CHECK(a.elements() == b.elements());
  for (std::size_t i = 1; i < a.order(); ++i)
    CHECK(a.element(i - 1) < a.element(i));
  CHECK(a.element(0) == Perm::identity(3));  // identity is lex-minimal
  CHECK(a.index_of(Perm::from_one_based({2, 1, 3})).has_value());
  CHECK_FALSE(a.index_of(Perm::from_one_based({1, 2, 4, 3})).has_value());
}

TEST_CASE("group laws hold exhaustively on the small suite") {
  for (const auto& [name, g] : test::suite_groups()) {
    CAPTURE(name);
    for (std::size_t a = 0; a < g.order(); ++a) {
      CHECK(g.compose_indices(a, g.identity_index()) == a);
      CHECK(g.compose_indices(g.identity_index(), a) == a);
      CHECK(g.compose_indices(a, g.inverse_index(a)) == g.identity_index());
    }
  }
}

TEST_CASE("subgroups") {
  const FiniteGroup s3 = test::make_s3();
  const SubgroupHandle h =
      subgroup_from_generators(s3, {Perm::from_one_based({2, 1, 3})});
  CHECK(h.order() == 2);
  CHECK(subgroup_from_generators(s3, {}).order() == 1);
  CHECK(subgroup_from_generators(s3, {Perm::from_one_based({2, 3, 1})}).order() == 3);
  CHECK_THROWS_AS(subgroup_from_generators(s3, {Perm::from_one_based({2, 1, 4, 3})}),
                  InputError);
  // {e, (123)} misses (132): not closed.
  const std::size_t three_cycle = *s3.index_of(Perm::from_one_based({2, 3, 1}));
  CHECK_THROWS_AS(SubgroupHandle(s3, {0, three_cycle}), InputError);
}

TEST_CASE("Lagrange and subgroup enumeration") {
  // Subgroup counts pinned from the classical lattices.
  const FiniteGroup s4 = test::make_s4();
  CHECK(all_subgroups(s4).size() == 30);
  CHECK(all_subgroups(test::make_s3()).size() == 6);
  CHECK(all_subgroups(test::make_d8()).size() == 10);
  CHECK(all_subgroups(test::make_q8()).size() == 6);
  CHECK(all_subgroups(test::make_z12()).size() == 6);

  for (const auto& [name, g] : test::suite_groups()) {
    CAPTURE(name);
    for (const SubgroupHandle& h : all_subgroups(g))
      CHECK(g.order() % h.order() == 0);
  }
}
