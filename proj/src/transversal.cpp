#include "tvk/transversal.hpp"

#include <algorithm>

#include "tvk/errors.hpp"

namespace tvk {

namespace {

void require_subgroup_of(const FiniteGroup& g, const SubgroupHandle& h) {
  if (!h.same_parent(g))
    throw InputError("subgroup handle belongs to a different group");
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

// Canonical minima of the cosets t*K (left) or K*t (right) inside H,
// ascending. Scanning H in canonical order makes each unassigned element the
// minimum of its coset.
std::vector<std::size_t> section_within(const FiniteGroup& g,
                                        const SubgroupHandle& h,
                                        const std::vector<std::size_t>& k_members,
                                        Side side) {
  std::vector<bool> assigned(g.order(), false);
  std::vector<std::size_t> reps;
  for (std::size_t t : h.members()) {
    if (assigned[t]) continue;
    reps.push_back(t);
    for (std::size_t k : k_members) {
      const std::size_t member = side == Side::Left ? g.compose_indices(t, k)
                                                    : g.compose_indices(k, t);
      assigned[member] = true;
    }
  }
  return reps;
}

// Minimum element index of H x H.
std::size_t double_coset_minimum(const FiniteGroup& g, const SubgroupHandle& h,
                                 std::size_t x_index) {
  std::size_t best = g.order();
  for (std::size_t h1 : h.members()) {
    const std::size_t h1x = g.compose_indices(h1, x_index);
    for (std::size_t h2 : h.members())
      best = std::min(best, g.compose_indices(h1x, h2));
  }
  return best;
}

// Exhaustive check that {q*H : q ∈ Q} (or {H*q}) partitions exactly the
// member set `target`.
bool partitions_exactly(const FiniteGroup& g, const SubgroupHandle& h,
                        const std::vector<std::size_t>& q_indices,
                        const std::vector<std::size_t>& target, Side side) {
  std::vector<std::size_t> covered;
  covered.reserve(target.size());
  for (std::size_t q : q_indices)
    for (std::size_t m : h.members())
      covered.push_back(side == Side::Left ? g.compose_indices(q, m)
                                           : g.compose_indices(m, q));
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end())
    return false;  // some coset hit twice
  return covered == target;
}

}  // namespace

DoubleCosetTransversal double_coset_transversal(const FiniteGroup& g,
                                                const SubgroupHandle& h,
                                                const Perm& x) {
  require_subgroup_of(g, h);
  auto xi = g.index_of(x);
  if (!xi) throw InputError("element is not a member of the group");
  const std::size_t rep = double_coset_minimum(g, h, *xi);

  const auto left_intersection = conjugate_intersection(g, h, rep);
  const auto right_intersection =
      conjugate_intersection(g, h, g.inverse_index(rep));
  const auto t_indices = section_within(g, h, left_intersection, Side::Left);
  const auto s_indices = section_within(g, h, right_intersection, Side::Right);
  if (t_indices.size() != s_indices.size())
    throw InternalError("left and right section sizes differ on a finite group");

  DoubleCosetTransversal out;
  out.matching.double_coset_rep = g.element(rep);
  std::vector<std::size_t> q_indices;
  for (std::size_t i = 0; i < t_indices.size(); ++i) {
    out.matching.left_section.push_back(g.element(t_indices[i]));
    out.matching.right_section.push_back(g.element(s_indices[i]));
    const std::size_t q =
        g.compose_indices(g.compose_indices(t_indices[i], rep), s_indices[i]);
    q_indices.push_back(q);
    out.elements.push_back(g.element(q));
  }

  // Q must split HxH both ways; recompute the member set and check.
  std::vector<std::size_t> members;
  for (std::size_t h1 : h.members()) {
    const std::size_t h1r = g.compose_indices(h1, rep);
    for (std::size_t h2 : h.members()) members.push_back(g.compose_indices(h1r, h2));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!partitions_exactly(g, h, q_indices, members, Side::Left) ||
      !partitions_exactly(g, h, q_indices, members, Side::Right))
    throw InternalError("matched set fails to split its double coset");

  return out;
}

CommonTransversal common_transversal(const FiniteGroup& g,
                                     const SubgroupHandle& h) {
  require_subgroup_of(g, h);
  CommonTransversal out;
  const DoubleCosetDecomposition decomposition = double_cosets(g, h);
  for (const DoubleCoset& coset : decomposition.cosets) {
    DoubleCosetTransversal part =
        double_coset_transversal(g, h, coset.representative);
    for (std::size_t i = 0; i < part.elements.size(); ++i) {
      out.elements.push_back(part.elements[i]);
      out.provenance.push_back({part.elements[i],
                                part.matching.double_coset_rep,
                                part.matching.left_section[i],
                                part.matching.right_section[i]});
    }
  }
  const TransversalReport report = verify_transversal(g, h, out.elements);
  if (!report.is_common)
    throw InternalError("assembled transversal failed verification");
  return out;
}

TransversalReport verify_transversal(const FiniteGroup& g,
                                     const SubgroupHandle& h,
                                     std::span<const Perm> candidate) {
  require_subgroup_of(g, h);
  std::vector<std::size_t> indices;
  indices.reserve(candidate.size());
  for (const Perm& p : candidate) {
    auto idx = g.index_of(p);
    if (!idx) throw InputError("transversal candidate contains a non-member");
    indices.push_back(*idx);
  }

  TransversalReport report;
  report.defects.clear();
  auto check_side = [&](Side side) {
    const CosetList cosets =
        side == Side::Left ? left_cosets(g, h) : right_cosets(g, h);
    // element index -> coset block
    std::vector<std::size_t> block_of(g.order());
    for (std::size_t b = 0; b < cosets.blocks.size(); ++b)
      for (std::size_t m : cosets.blocks[b]) block_of[m] = b;
    std::vector<std::size_t> hits(cosets.count(), 0);
    for (std::size_t e : indices) ++hits[block_of[e]];
    bool ok = true;
    for (std::size_t b = 0; b < hits.size(); ++b) {
      if (hits[b] == 1) continue;
      ok = false;
      if (report.defects.size() < kMaxDefects)
        report.defects.push_back(
            {side,
             hits[b] == 0 ? TransversalDefect::Kind::Missed
                          : TransversalDefect::Kind::Duplicate,
             cosets.representatives[b], hits[b]});
    }
    return ok;
  };
  report.is_left = check_side(Side::Left);
  report.is_right = check_side(Side::Right);
  report.is_common = report.is_left && report.is_right;
  return report;
}

}  // namespace tvk
