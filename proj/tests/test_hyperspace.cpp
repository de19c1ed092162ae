#include "tvk/hyperspace.hpp"

#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "tvk/errors.hpp"

using namespace tvk;

namespace {

PointSet line(std::initializer_list<double> coords) {
  std::vector<std::vector<double>> points;
  for (double c : coords) points.push_back({c});
  return PointSet(1, std::move(points));
}

PointSet random_plane_set(test::Rng& rng, std::size_t max_points = 6) {
  std::vector<std::vector<double>> points;
  const std::size_t count = 1 + rng.below(max_points);
  for (std::size_t i = 0; i < count; ++i)
    points.push_back({rng.unit() * 4.0 - 2.0, rng.unit() * 4.0 - 2.0});
  return PointSet(2, std::move(points));
}

}  // namespace

TEST_CASE("point set construction") {
  CHECK_THROWS_AS(PointSet(1, {}), InputError);
  CHECK_THROWS_AS(PointSet(2, {{1.0}}), InputError);
  CHECK_THROWS_AS(PointSet(1, {{std::nan("")}}), InputError);
  const PointSet deduped(1, {{0.0}, {0.0}, {1.0}, {1.0 + 1e-13}});
  CHECK(deduped.size() == 2);
  CHECK(PointSet::singleton({3.0, 4.0}).dim() == 2);
}

TEST_CASE("hausdorff distance on closed forms") {
  CHECK(hausdorff(line({0.0}), line({1.0})) == 1.0);
  const PointSet a = line({-0.5, 0.25, 1.0});
  CHECK(hausdorff(a, a) == 0.0);
  CHECK(hausdorff(line({-1.0 / 3.0, 1.0 / 3.0}), line({0.0})) == 1.0 / 3.0);
  CHECK_THROWS_AS(hausdorff(line({0.0}), PointSet::singleton({0.0, 0.0})),
                  InputError);
}

TEST_CASE("wijsman profiles") {
  CHECK(wijsman_profile(line({0.0}), {{-1.0}, {0.0}, {2.0}}) ==
        std::vector<double>{1.0, 0.0, 2.0});

  // d(t, {±1/n}) = min(|t - 1/n|, |t + 1/n|)
  for (int n = 1; n <= 8; ++n) {
    const PointSet f = line({-1.0 / n, 1.0 / n});
    for (double t : {-0.9, -0.3, 0.0, 0.4, 1.0}) {
      const double expected = std::min(std::abs(t - 1.0 / n), std::abs(t + 1.0 / n));
      CHECK(wijsman_profile(f, {{t}})[0] == expected);
    }
  }

  const PointSet a = line({0.5, 2.0});
  CHECK(wijsman_profile(a, {{0.5}})[0] == 0.0);
  CHECK_THROWS_AS(wijsman_profile(a, {}), InputError);
}

TEST_CASE("metric axioms on random plane sets") {
  test::Rng rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    const PointSet a = random_plane_set(rng);
    const PointSet b = random_plane_set(rng);
    const PointSet c = random_plane_set(rng);
    const double ab = hausdorff(a, b);
    CHECK(ab == hausdorff(b, a));  // symmetric, exactly
    CHECK(ab >= 0.0);
    CHECK(hausdorff(a, c) <= ab + hausdorff(b, c) + 1e-12);
    CHECK(hausdorff(a, a) == 0.0);
    if (ab == 0.0) CHECK(a == b);
  }
}

TEST_CASE("lipschitz bridge and monotone containment") {
  test::Rng rng(78);
  for (int trial = 0; trial < 200; ++trial) {
    const PointSet a = random_plane_set(rng);
    const PointSet b = random_plane_set(rng);
    const double delta = hausdorff(a, b);
    std::vector<double> x = {rng.unit() * 6.0 - 3.0, rng.unit() * 6.0 - 3.0};
    CHECK(std::abs(distance_to_set(a, x) - distance_to_set(b, x)) <=
          delta + 1e-12);

    // A ⊆ A ∪ B pushes distances down, with the exact same arithmetic.
    std::vector<std::vector<double>> merged = a.points();
    for (const auto& p : b.points()) merged.push_back(p);
    const PointSet u(2, merged);
    CHECK(distance_to_set(u, x) <= distance_to_set(a, x));
  }
}

TEST_CASE("cardinality-bounded limits") {
  SUBCASE("two-point sets collapsing to one point") {
    std::vector<PointSet> sequence;
    for (int k = 1; k <= 10; ++k) sequence.push_back(line({-1.0 / k, 1.0 / k}));
    const CardBoundLimitReport report =
        check_card_bound_limit(sequence, 2, 0.1);
    CHECK(report.cluster_count == 1);
    CHECK(report.max_tail_cardinality == 2);
    CHECK(report.cardinality_dropped);
    REQUIRE(report.limit.size() == 1);
    CHECK(report.limit[0][0] == 0.0);  // symmetric contributions cancel
  }

  SUBCASE("constant sequence keeps its two points") {
    std::vector<PointSet> sequence(5, line({0.25, 1.5}));
    const CardBoundLimitReport report =
        check_card_bound_limit(sequence, 2, 1e-6);
    CHECK(report.cluster_count == 2);
    CHECK_FALSE(report.cardinality_dropped);
    CHECK(report.limit[0][0] == 0.25);
    CHECK(report.limit[1][0] == 1.5);
  }

  SUBCASE("one-point sets converge to the origin") {
    std::vector<PointSet> sequence;
    for (int k = 1; k <= 40; ++k) sequence.push_back(line({1.0 / k}));
    const CardBoundLimitReport report =
        check_card_bound_limit(sequence, 2, 0.01);
    CHECK(report.cluster_count == 1);
    CHECK_FALSE(report.cardinality_dropped);
    CHECK(std::abs(report.limit[0][0]) <= 0.05);
  }

  SUBCASE("violations are rejected") {
    CHECK_THROWS_AS(
        check_card_bound_limit({line({0.0})}, 2, 0.1), DiagnosticError);
    CHECK_THROWS_AS(check_card_bound_limit(
                        {line({0.0}), line({5.0}), line({-5.0})}, 2, 0.1),
                    DiagnosticError);
    CHECK_THROWS_AS(check_card_bound_limit(
                        {line({0.0, 1.0, 2.0}), line({0.0})}, 2, 0.1),
                    InputError);
  }
}

TEST_CASE("hausdorff convergence controls wijsman profiles") {
  std::vector<std::vector<double>> samples;
  for (int i = -20; i <= 20; ++i) samples.push_back({i / 20.0});

  SUBCASE("one-sided sequence") {
    std::vector<PointSet> sequence;
    for (int k = 1; k <= 20; ++k) sequence.push_back(line({1.0 / k}));
    const AgreementReport report = hausdorff_wijsman_agreement(
        sequence, line({0.0}), samples, 1.0 / 20.0);
    CHECK(report.all_lipschitz_ok);
    CHECK(report.final_within_tol);
    for (std::size_t k = 0; k < report.rows.size(); ++k)
      CHECK(report.rows[k].max_profile_deviation <=
            1.0 / static_cast<double>(k + 1) + 1e-12);
  }

  SUBCASE("symmetric counterexample sequence") {
    std::vector<PointSet> sequence;
    for (int k = 1; k <= 20; ++k) sequence.push_back(line({-1.0 / k, 1.0 / k}));
    const AgreementReport report = hausdorff_wijsman_agreement(
        sequence, line({0.0}), samples, 1.0 / 20.0);
    CHECK(report.all_lipschitz_ok);
    CHECK(report.final_within_tol);
  }

  SUBCASE("constant sequence has zero deviation") {
    const std::vector<PointSet> sequence(3, line({0.5}));
    const AgreementReport report =
        hausdorff_wijsman_agreement(sequence, line({0.5}), samples, 1e-9);
    for (const AgreementRow& row : report.rows) {
      CHECK(row.hausdorff_to_target == 0.0);
      CHECK(row.max_profile_deviation == 0.0);
    }
  }
}
