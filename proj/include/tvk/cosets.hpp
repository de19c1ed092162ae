#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tvk/group.hpp"
#include "tvk/perm.hpp"

namespace tvk {

inline constexpr std::size_t kMaxWitnesses = 10;

enum class Side { Left, Right };

// One-sided coset decomposition of a group by a subgroup. blocks[i] is the
// sorted member-index list of the coset whose representative is
// representatives[i]; every representative is the canonical minimum of its
// block and representatives are listed in ascending canonical order.
struct CosetList {
  Side side;
  std::vector<Perm> representatives;
  std::vector<std::vector<std::size_t>> blocks;

  std::size_t count() const { return representatives.size(); }
};

struct DoubleCoset {
  Perm representative;               // canonical minimum of the double coset
  std::vector<std::size_t> members;  // sorted element indices
  std::size_t left_count;            // [H : H ∩ aHa^-1]
  std::size_t right_count;           // [H : H ∩ a^-1Ha]
  bool index_condition_holds;
};

struct DoubleCosetDecomposition {
  std::vector<DoubleCoset> cosets;  // ascending by representative
};

CosetList left_cosets(const FiniteGroup& g, const SubgroupHandle& h);
CosetList right_cosets(const FiniteGroup& g, const SubgroupHandle& h);

// ([H : H ∩ xHx^-1], [H : H ∩ x^-1Hx]), both by explicit intersection and
// coset enumeration. This deliberately avoids shortcut formulas; it is the
// oracle the rest of the toolkit is checked against. Throws InputError if x
// is not a member of g.
std::pair<std::size_t, std::size_t> conjugate_intersection_indices(
    const FiniteGroup& g, const SubgroupHandle& h, const Perm& x);

// Full double-coset decomposition with per-coset counts. Also re-verifies the
// counting identity |HaH| * |H ∩ aHa^-1| = |H|^2 on every coset and throws
// InternalError if it fails.
DoubleCosetDecomposition double_cosets(const FiniteGroup& g,
                                       const SubgroupHandle& h);

// Canonical minimum of xH ∩ Hy, or nullopt when the intersection is empty.
// It is nonempty exactly when x and y lie in the same double coset.
std::optional<Perm> common_representative(const FiniteGroup& g,
                                          const SubgroupHandle& h,
                                          const Perm& x, const Perm& y);

struct IndexConditionWitness {
  Perm x;
  std::size_t left_index;
  std::size_t right_index;
};

struct IndexConditionReport {
  bool holds;
  std::vector<IndexConditionWitness> witnesses;  // at most kMaxWitnesses
};

// Checks [H : H ∩ xHx^-1] = [H : H ∩ x^-1Hx] for every x in g. On finite
// groups this always holds; the scan is kept exhaustive so the report is an
// honest computation, not an assumption.
IndexConditionReport check_index_condition(const FiniteGroup& g,
                                           const SubgroupHandle& h);

}  // namespace tvk
