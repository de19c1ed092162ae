#include "tvk/hyperspace.hpp"

#include <algorithm>
#include <cmath>

#include "tvk/errors.hpp"

namespace tvk {

PointSet::PointSet(int dim, std::vector<std::vector<double>> points)
    : dim_(dim) {
  if (dim < 1) throw InputError("point set dimension must be positive");
  if (points.empty()) throw InputError("point set must be nonempty");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim)
      throw InputError("point has wrong dimension");
    for (double c : p)
      if (!std::isfinite(c)) throw InputError("point coordinates must be finite");
  }
  std::sort(points.begin(), points.end());
  for (const auto& p : points) {
    bool duplicate = false;
    for (const auto& kept : points_)
      if (euclidean_distance(kept, p) <= kDuplicateTol) {
        duplicate = true;
        break;
      }
    if (!duplicate) points_.push_back(p);
  }
}

PointSet PointSet::singleton(std::vector<double> point) {
  const int dim = static_cast<int>(point.size());
  return PointSet(dim, {std::move(point)});
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double distance_to_set(const PointSet& a, std::span<const double> x) {
  if (static_cast<int>(x.size()) != a.dim())
    throw InputError("sample point has wrong dimension");
  double best = euclidean_distance(a.points().front(), x);
  for (std::size_t i = 1; i < a.size(); ++i)
    best = std::min(best, euclidean_distance(a.points()[i], x));
  return best;
}

double hausdorff(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) throw InputError("dimension mismatch");
  double worst = 0.0;
  for (const auto& p : a.points()) worst = std::max(worst, distance_to_set(b, p));
  for (const auto& q : b.points()) worst = std::max(worst, distance_to_set(a, q));
  return worst;
}

std::vector<double> wijsman_profile(
    const PointSet& a, const std::vector<std::vector<double>>& samples) {
  if (samples.empty()) throw InputError("need at least one sample point");
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& x : samples) out.push_back(distance_to_set(a, x));
  return out;
}

CardBoundLimitReport check_card_bound_limit(const std::vector<PointSet>& sequence,
                                            std::size_t n, double tol) {
  if (sequence.size() < 2)
    throw DiagnosticError("sequence too short to witness a Cauchy tail");
  if (tol <= 0.0) throw InputError("tolerance must be positive");
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i].dim() != sequence[0].dim())
      throw InputError("sequence mixes ambient dimensions");
    if (sequence[i].size() > n)
      throw InputError("sequence entry " + std::to_string(i) +
                       " has more than n points");
  }

  // Cauchy tail: the maximal suffix within tol of the final set.
  const PointSet& last = sequence.back();
  std::size_t tail_start = sequence.size() - 1;
  while (tail_start > 0 && hausdorff(sequence[tail_start - 1], last) <= tol)
    --tail_start;
  if (tail_start == sequence.size() - 1)
    throw DiagnosticError(
        "sequence is not Cauchy within the tolerance: no trailing set is "
        "within tol of the last");

  std::vector<std::vector<double>> pool;
  std::size_t max_cardinality = 0;
  for (std::size_t i = tail_start; i < sequence.size(); ++i) {
    max_cardinality = std::max(max_cardinality, sequence[i].size());
    for (const auto& p : sequence[i].points()) pool.push_back(p);
  }

  // Single-linkage components at radius 3*tol.
  std::vector<std::size_t> component(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) component[i] = i;
  const auto root = [&component](std::size_t i) {
    while (component[i] != i) {
      component[i] = component[component[i]];
      i = component[i];
    }
    return i;
  };
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      if (euclidean_distance(pool[i], pool[j]) <= 3.0 * tol)
        component[root(i)] = root(j);

  // Centroid per component, in order of first appearance.
  std::vector<std::size_t> roots;
  std::vector<std::vector<double>> sums;
  std::vector<std::size_t> counts;
  const std::size_t dim = static_cast<std::size_t>(sequence[0].dim());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const std::size_t r = root(i);
    std::size_t slot = roots.size();
    for (std::size_t k = 0; k < roots.size(); ++k)
      if (roots[k] == r) {
        slot = k;
        break;
      }
    if (slot == roots.size()) {
      roots.push_back(r);
      sums.emplace_back(dim, 0.0);
      counts.push_back(0);
    }
    for (std::size_t c = 0; c < dim; ++c) sums[slot][c] += pool[i][c];
    ++counts[slot];
  }
  CardBoundLimitReport report;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    std::vector<double> centroid(dim);
    for (std::size_t c = 0; c < dim; ++c)
      centroid[c] = sums[k][c] / static_cast<double>(counts[k]);
    report.limit.push_back(std::move(centroid));
  }
  std::sort(report.limit.begin(), report.limit.end());
  report.cluster_count = roots.size();
  report.bound = n;
  report.max_tail_cardinality = max_cardinality;
  report.cardinality_dropped = report.cluster_count < max_cardinality;
  report.tail_start = tail_start;
  if (report.cluster_count > n)
    throw InternalError("cluster count exceeded the cardinality bound");
  return report;
}

AgreementReport hausdorff_wijsman_agreement(
    const std::vector<PointSet>& sequence, const PointSet& target,
    const std::vector<std::vector<double>>& samples, double tol) {
  if (sequence.empty()) throw InputError("sequence must be nonempty");
  const std::vector<double> target_profile = wijsman_profile(target, samples);
  AgreementReport report;
  report.all_lipschitz_ok = true;
  for (const PointSet& set : sequence) {
    AgreementRow row;
    row.hausdorff_to_target = hausdorff(set, target);
    const std::vector<double> profile = wijsman_profile(set, samples);
    row.max_profile_deviation = 0.0;
    for (std::size_t i = 0; i < profile.size(); ++i)
      row.max_profile_deviation = std::max(
          row.max_profile_deviation, std::abs(profile[i] - target_profile[i]));
    row.lipschitz_ok =
        row.max_profile_deviation <= row.hausdorff_to_target + kDuplicateTol;
    report.all_lipschitz_ok = report.all_lipschitz_ok && row.lipschitz_ok;
    report.rows.push_back(row);
  }
  report.final_within_tol = report.rows.back().hausdorff_to_target <= tol;
  return report;
}

}  // namespace tvk
