#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tvk/cosets.hpp"
#include "tvk/group.hpp"
#include "tvk/perm.hpp"

namespace tvk {

inline constexpr std::size_t kMaxDefects = 10;

// Matching data for a single double coset HxH: the left section T of
// H/(H ∩ xHx^-1), the right section S of (H ∩ x^-1Hx)\H, and the rank
// pairing T[i] <-> S[i]. Both sections are canonical coset minima inside H,
// listed in ascending order, so the pairing is deterministic.
struct MatchingRecord {
  Perm double_coset_rep;
  std::vector<Perm> left_section;   // T, inside H
  std::vector<Perm> right_section;  // S, inside H
};

struct DoubleCosetTransversal {
  MatchingRecord matching;
  std::vector<Perm> elements;  // Q[i] = T[i] * rep * S[i]
};

// Builds Q for the double coset of x and verifies exhaustively that Q splits
// the double coset into left cosets and right cosets simultaneously. The
// input x is canonicalized to the minimum of HxH first, so equal double
// cosets always produce identical output.
DoubleCosetTransversal double_coset_transversal(const FiniteGroup& g,
                                                const SubgroupHandle& h,
                                                const Perm& x);

struct ProvenanceEntry {
  Perm element;          // t * rep * s
  Perm double_coset_rep;
  Perm left_factor;      // t ∈ H
  Perm right_factor;     // s ∈ H
};

struct CommonTransversal {
  std::vector<Perm> elements;
  std::vector<ProvenanceEntry> provenance;  // aligned with elements
};

// Assembles the per-double-coset transversals over the whole group, in
// canonical double-coset order. The result is simultaneously a left and a
// right transversal of h in g (re-verified before returning).
CommonTransversal common_transversal(const FiniteGroup& g,
                                     const SubgroupHandle& h);

struct TransversalDefect {
  Side side;
  enum class Kind { Missed, Duplicate } kind;
  Perm coset_representative;
  std::size_t hits;
};

struct TransversalReport {
  bool is_left;
  bool is_right;
  bool is_common;
  std::vector<TransversalDefect> defects;  // at most kMaxDefects
};

// Checks whether candidate meets every left (resp. right) coset of h exactly
// once. Elements outside g are an input error.
TransversalReport verify_transversal(const FiniteGroup& g,
                                     const SubgroupHandle& h,
                                     std::span<const Perm> candidate);

}  // namespace tvk
