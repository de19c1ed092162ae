#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tvk {

inline constexpr double kDuplicateTol = 1e-12;

// Nonempty finite point set in R^d with the Euclidean metric. Points are
// stored sorted lexicographically and deduplicated at kDuplicateTol, so equal
// sets compare equal. The empty set is rejected: these sets stand in for
// nonempty closed subsets.
class PointSet {
 public:
  PointSet(int dim, std::vector<std::vector<double>> points);

  static PointSet singleton(std::vector<double> point);

  int dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::vector<double>>& points() const { return points_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int dim_;
  std::vector<std::vector<double>> points_;
};

double euclidean_distance(std::span<const double> a, std::span<const double> b);

// min over the set of the distance to x.
double distance_to_set(const PointSet& a, std::span<const double> x);

// max{ max_{a in A} d(a, B), max_{b in B} d(b, A) }; dimensions must agree.
double hausdorff(const PointSet& a, const PointSet& b);

// d(x, A) for each sample x.
std::vector<double> wijsman_profile(const PointSet& a,
                                    const std::vector<std::vector<double>>& samples);

struct CardBoundLimitReport {
  std::vector<std::vector<double>> limit;  // cluster centroids
  std::size_t cluster_count;
  std::size_t bound;                 // the n the clusters are checked against
  std::size_t max_tail_cardinality;  // largest set size within the tail
  bool cardinality_dropped;          // cluster_count < max_tail_cardinality
  std::size_t tail_start;            // first index of the Cauchy tail
};

// Extracts a limit candidate from a Hausdorff-Cauchy sequence of sets, each
// with at most n points: the tail (every trailing set within tol of the last)
// is merged and single-linkage clustered at radius 3*tol; the centroids are
// the limit candidate. The cluster count never exceeds n on valid input.
// Throws DiagnosticError when the sequence is not Cauchy within tol.
CardBoundLimitReport check_card_bound_limit(const std::vector<PointSet>& sequence,
                                            std::size_t n, double tol);

struct AgreementRow {
  double hausdorff_to_target;
  double max_profile_deviation;  // sup over samples of |d(x,A_k) - d(x,target)|
  bool lipschitz_ok;             // deviation <= hausdorff distance
};

struct AgreementReport {
  std::vector<AgreementRow> rows;
  bool all_lipschitz_ok;
  bool final_within_tol;  // last set within tol of the target
};

// Checks the 1-Lipschitz bridge |d(x,A) - d(x,B)| <= hausdorff(A,B) on every
// sample, for every set of the sequence against the target. This is the
// finite content of Hausdorff convergence controlling Wijsman convergence.
AgreementReport hausdorff_wijsman_agreement(
    const std::vector<PointSet>& sequence, const PointSet& target,
    const std::vector<std::vector<double>>& samples, double tol);

}  // namespace tvk
