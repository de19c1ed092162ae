#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tvk/group.hpp"
#include "tvk/perm.hpp"

namespace tvk {

// A finite chain of groups G_1, G_2, ..., G_k together with surjective
// connecting homomorphisms pi_i : G_{i+1} -> G_i, given element-to-element.
// Every map is checked to be a surjective homomorphism (exhaustively, on all
// pairs) at construction; bad maps are an input error, never a silent wrong
// quotient.
class Tower {
 public:
  Tower(std::vector<FiniteGroup> levels,
        std::vector<std::vector<std::size_t>> maps);

  std::size_t depth() const { return levels_.size(); }
  const FiniteGroup& level(std::size_t i) const { return levels_[i]; }  // 0-based
  const FiniteGroup& top() const { return levels_.back(); }

  // Image at to_level of the element with the given index at from_level;
  // composes the connecting maps. Requires to_level <= from_level.
  std::size_t project_index(std::size_t from_level, std::size_t to_level,
                            std::size_t element_index) const;

  // Sorted, deduplicated image of a top-level member set at the given level.
  std::vector<std::size_t> project_members(
      std::size_t to_level, const std::vector<std::size_t>& top_members) const;

 private:
  std::vector<FiniteGroup> levels_;
  std::vector<std::vector<std::size_t>> maps_;  // maps_[i]: level i+1 -> level i
};

// A nested pair K <= H of subgroups of the top level of a tower.
struct TowerSubgroupPair {
  SubgroupHandle h;
  SubgroupHandle k;
};

// Validates K <= H; both generator lists live in t.top().
TowerSubgroupPair make_tower_pair(const Tower& t,
                                  const std::vector<Perm>& h_generators,
                                  const std::vector<Perm>& k_generators);

struct ProjectedLevel {
  std::size_t level;                  // 1-based, ascending
  std::vector<std::size_t> h_image;   // element indices at this level
  std::vector<std::size_t> k_image;
  std::size_t index;                  // [pi(H) : pi(K)], explicit coset count
};

// Index sequence c_i = [pi_i(H) : pi_i(K)] for every level. The sequence is
// asserted monotone nondecreasing and bounded by the top-level index; a
// violation would be a bug, not bad input.
std::vector<ProjectedLevel> project_pair(const Tower& t,
                                         const TowerSubgroupPair& pair);

struct LimitClassification {
  enum class Kind { Stabilized, Diverging } kind;
  std::size_t value = 0;  // meaningful when stabilized

  bool stabilized() const { return kind == Kind::Stabilized; }
};

// Classifies a monotone nondecreasing positive sequence by its last two
// entries: equal -> stabilized at that value, strictly increasing ->
// diverging. Needs at least two entries; non-monotone input is rejected.
LimitClassification classify_limit(const std::vector<std::size_t>& sequence);

struct ClosureIndexReport {
  std::size_t top_index;
  std::vector<ProjectedLevel> sequence;
  LimitClassification classification;
  bool stabilized_matches_top;  // false whenever diverging
  std::string verdict;
};

// Compares the top-level index [H : K] with the stabilized level index, when
// stabilization is observed within the tower depth. Stabilization inside a
// finite tower is reported as evidence of the limit, never proof.
ClosureIndexReport closure_index_check(const Tower& t,
                                       const TowerSubgroupPair& pair);

// --- tower spec files -------------------------------------------------------

struct TowerLevelSpec {
  int degree;
  std::vector<std::vector<int>> generators;  // 1-based image arrays
};

// A connecting map is either a full element-index map (0-based indices into
// the canonical element list of the lower level) or a generator-image
// shorthand that is expanded multiplicatively and then checked.
struct TowerMapSpec {
  std::vector<std::size_t> element_map;              // used when !by_generators
  std::vector<std::vector<int>> generator_images;    // 1-based image arrays
  bool by_generators = false;
};

struct TowerRunSpec {
  std::vector<TowerLevelSpec> levels;
  std::vector<TowerMapSpec> maps;
  std::vector<std::vector<int>> h_generators;
  std::vector<std::vector<int>> k_generators;
  std::optional<std::size_t> cap;
};

// Parses the JSON document {"levels": [...], "maps": [...], "H": [...],
// "K": [...]}. Errors carry the path of the offending entry.
TowerRunSpec parse_tower_spec(const std::string& text);

Tower build_tower(const TowerRunSpec& spec);
TowerSubgroupPair build_tower_pair(const Tower& t, const TowerRunSpec& spec);

// First new_depth levels of t, with connecting maps; new_depth >= 1.
Tower truncate_tower(const Tower& t, std::size_t new_depth);

}  // namespace tvk
