#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvk/group.hpp"

namespace tvk {

// Parsed form of the JSON group spec:
//   { "degree": n, "generators": [[...1-based images...], ...],
//     "subgroup": [[...], ...], "cap": 100000 }
// "subgroup" and "cap" are optional.
struct GroupSpec {
  int degree = 0;
  std::vector<std::vector<int>> generators;
  std::vector<std::vector<int>> subgroup;
  std::optional<std::size_t> cap;
};

// Validates shape and bijectivity; errors carry the path of the offending
// entry, e.g. "not a bijection at generators[0]".
GroupSpec parse_group_spec(const std::string& text);

FiniteGroup build_group(const GroupSpec& spec,
                        std::optional<std::size_t> cap_override = std::nullopt);

// Closure of the spec's subgroup generators inside g; the trivial subgroup
// when the spec lists none.
SubgroupHandle build_subgroup(const FiniteGroup& g, const GroupSpec& spec);

}  // namespace tvk
