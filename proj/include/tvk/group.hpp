#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tvk/perm.hpp"

namespace tvk {

inline constexpr std::size_t kDefaultClosureCap = 100000;

// A finite permutation group given by its full, canonically sorted element
// list. All types here are immutable after construction and safe to share
// across threads.
class FiniteGroup {
 public:
  // Closes the generators under composition. Throws CapacityError if the
  // closure grows past cap, InputError on degree mismatches.
  static FiniteGroup generate(int degree, std::vector<Perm> generators,
                              std::size_t cap = kDefaultClosureCap);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& element(std::size_t index) const { return elements_[index]; }

  // Position in the canonical element list, or nullopt if not a member.
  std::optional<std::size_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }

  // elements()[0] is always the identity (it is lexicographically minimal).
  std::size_t identity_index() const { return 0; }

  std::size_t compose_indices(std::size_t a, std::size_t b) const;
  std::size_t inverse_index(std::size_t a) const;

 private:
  FiniteGroup(int degree, std::vector<Perm> generators, std::vector<Perm> elements)
      : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {}

  int degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;  // sorted, unique
};

// A subgroup of a FiniteGroup, stored as a sorted list of indices into the
// parent's element list. Holds a non-owning pointer to the parent, which must
// outlive the handle. Subgroup axioms are verified at construction.
class SubgroupHandle {
 public:
  SubgroupHandle(const FiniteGroup& parent, std::vector<std::size_t> members);

  const FiniteGroup& parent() const { return *parent_; }
  bool same_parent(const FiniteGroup& g) const { return parent_ == &g; }
  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains_index(std::size_t element_index) const;

 private:
  const FiniteGroup* parent_;
  std::vector<std::size_t> members_;
};

// Closure of gens inside G; every generator must be a member of G.
SubgroupHandle subgroup_from_generators(const FiniteGroup& g,
                                        const std::vector<Perm>& gens);

SubgroupHandle trivial_subgroup(const FiniteGroup& g);
SubgroupHandle full_subgroup(const FiniteGroup& g);

// Every subgroup of g, found by closing each known subgroup with one extra
// element until no new subgroup appears. Deterministic order: by order, then
// lexicographically on the member index lists. Intended for desk-scale groups.
std::vector<SubgroupHandle> all_subgroups(const FiniteGroup& g);

}  // namespace tvk
