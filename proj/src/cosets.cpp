#include "tvk/cosets.hpp"

#include <algorithm>

#include "tvk/errors.hpp"

namespace tvk {

namespace {

void require_subgroup_of(const FiniteGroup& g, const SubgroupHandle& h) {
  if (!h.same_parent(g))
    throw InputError("subgroup handle belongs to a different group");
}

std::size_t require_member(const FiniteGroup& g, const Perm& x) {
  auto idx = g.index_of(x);
  if (!idx) throw InputError("element is not a member of the group");
  return *idx;
}

// Sorted index set of x H x^-1 ∩ H.
std::vector<std::size_t> conjugate_intersection(const FiniteGroup& g,
                                                const SubgroupHandle& h,
                                                std::size_t x_index) {
  const std::size_t x_inv = g.inverse_index(x_index);
  std::vector<std::size_t> out;
  for (std::size_t m : h.members()) {
    const std::size_t conj = g.compose_indices(g.compose_indices(x_index, m), x_inv);
    if (h.contains_index(conj)) out.push_back(conj);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of left cosets t*K inside H, for K a subgroup of H, counted by
// explicit enumeration.
std::size_t coset_count_within(const FiniteGroup& g, const SubgroupHandle& h,
                               const std::vector<std::size_t>& k_members) {
  std::vector<bool> assigned(g.order(), false);
  std::size_t count = 0;
  for (std::size_t t : h.members()) {
    if (assigned[t]) continue;
    ++count;
    for (std::size_t k : k_members) assigned[g.compose_indices(t, k)] = true;
  }
  return count;
}

CosetList one_sided_cosets(const FiniteGroup& g, const SubgroupHandle& h,
                           Side side) {
  require_subgroup_of(g, h);
  CosetList out;
  out.side = side;
  std::vector<bool> assigned(g.order(), false);
  for (std::size_t e = 0; e < g.order(); ++e) {
    if (assigned[e]) continue;
    std::vector<std::size_t> block;
    block.reserve(h.order());
    for (std::size_t m : h.members()) {
      const std::size_t member = side == Side::Left ? g.compose_indices(e, m)
                                                    : g.compose_indices(m, e);
      assigned[member] = true;
      block.push_back(member);
    }
    std::sort(block.begin(), block.end());
    // Scanning in canonical order makes e the minimum of its block.
    out.representatives.push_back(g.element(e));
    out.blocks.push_back(std::move(block));
  }
  return out;
}

}  // namespace

CosetList left_cosets(const FiniteGroup& g, const SubgroupHandle& h) {
  return one_sided_cosets(g, h, Side::Left);
}

CosetList right_cosets(const FiniteGroup& g, const SubgroupHandle& h) {
  return one_sided_cosets(g, h, Side::Right);
}

std::pair<std::size_t, std::size_t> conjugate_intersection_indices(
    const FiniteGroup& g, const SubgroupHandle& h, const Perm& x) {
  require_subgroup_of(g, h);
  const std::size_t xi = require_member(g, x);
  const std::size_t left =
      coset_count_within(g, h, conjugate_intersection(g, h, xi));
  const std::size_t right =
      coset_count_within(g, h, conjugate_intersection(g, h, g.inverse_index(xi)));
  return {left, right};
}

DoubleCosetDecomposition double_cosets(const FiniteGroup& g,
                                       const SubgroupHandle& h) {
  require_subgroup_of(g, h);
  DoubleCosetDecomposition out;
  std::vector<bool> assigned(g.order(), false);
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (assigned[a]) continue;
    std::vector<std::size_t> members;
    for (std::size_t h1 : h.members()) {
      const std::size_t h1a = g.compose_indices(h1, a);
      for (std::size_t h2 : h.members()) {
        const std::size_t m = g.compose_indices(h1a, h2);
        if (!assigned[m]) {
          assigned[m] = true;
          members.push_back(m);
        }
      }
    }
    std::sort(members.begin(), members.end());

    const auto left_intersection = conjugate_intersection(g, h, a);
    const auto right_intersection =
        conjugate_intersection(g, h, g.inverse_index(a));
    DoubleCoset coset;
    coset.representative = g.element(a);
    coset.left_count = coset_count_within(g, h, left_intersection);
    coset.right_count = coset_count_within(g, h, right_intersection);
    coset.index_condition_holds = coset.left_count == coset.right_count;

    // |HaH| * |H ∩ aHa^-1| = |H|^2, and the mirrored identity on the right.
    const std::size_t h_sq = h.order() * h.order();
    if (members.size() * left_intersection.size() != h_sq ||
        members.size() * right_intersection.size() != h_sq)
      throw InternalError("double-coset counting identity violated");

    coset.members = std::move(members);
    out.cosets.push_back(std::move(coset));
  }
  return out;
}

std::optional<Perm> common_representative(const FiniteGroup& g,
                                          const SubgroupHandle& h,
                                          const Perm& x, const Perm& y) {
  require_subgroup_of(g, h);
  const std::size_t xi = require_member(g, x);
  const std::size_t yi = require_member(g, y);
  std::vector<std::size_t> left_coset;   // xH
  std::vector<std::size_t> right_coset;  // Hy
  for (std::size_t m : h.members()) {
    left_coset.push_back(g.compose_indices(xi, m));
    right_coset.push_back(g.compose_indices(m, yi));
  }
  std::sort(left_coset.begin(), left_coset.end());
  std::sort(right_coset.begin(), right_coset.end());
  std::vector<std::size_t> both;
  std::set_intersection(left_coset.begin(), left_coset.end(),
                        right_coset.begin(), right_coset.end(),
                        std::back_inserter(both));
  if (both.empty()) return std::nullopt;
  return g.element(both.front());
}

IndexConditionReport check_index_condition(const FiniteGroup& g,
                                           const SubgroupHandle& h) {
  require_subgroup_of(g, h);
  IndexConditionReport report;
  report.holds = true;
  for (std::size_t e = 0; e < g.order(); ++e) {
    const auto [left, right] =
        conjugate_intersection_indices(g, h, g.element(e));
    if (left != right) {
      report.holds = false;
      if (report.witnesses.size() < kMaxWitnesses)
        report.witnesses.push_back({g.element(e), left, right});
    }
  }
  return report;
}

}  // namespace tvk
