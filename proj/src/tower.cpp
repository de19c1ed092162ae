#include "tvk/tower.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tvk/errors.hpp"

namespace tvk {

namespace {

std::size_t coset_count(const FiniteGroup& g,
                        const std::vector<std::size_t>& h_members,
                        const std::vector<std::size_t>& k_members) {
  std::vector<bool> assigned(g.order(), false);
  std::size_t count = 0;
  for (std::size_t t : h_members) {
    if (assigned[t]) continue;
    ++count;
    for (std::size_t k : k_members) assigned[g.compose_indices(t, k)] = true;
  }
  return count;
}

}  // namespace

Tower::Tower(std::vector<FiniteGroup> levels,
             std::vector<std::vector<std::size_t>> maps)
    : levels_(std::move(levels)), maps_(std::move(maps)) {
  if (levels_.empty()) throw InputError("tower needs at least one level");
  if (maps_.size() + 1 != levels_.size())
    throw InputError("tower needs exactly one connecting map per adjacent pair");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const FiniteGroup& upper = levels_[i + 1];
    const FiniteGroup& lower = levels_[i];
    const auto& map = maps_[i];
    std::ostringstream where;
    where << "maps[" << i << "]";
    if (map.size() != upper.order())
      throw InputError(where.str() + ": length must equal the order of level " +
                       std::to_string(i + 2));
    std::vector<bool> hit(lower.order(), false);
    for (std::size_t v : map) {
      if (v >= lower.order())
        throw InputError(where.str() + ": image index out of range");
      hit[v] = true;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
      throw InputError(where.str() + ": map is not surjective");
    for (std::size_t a = 0; a < upper.order(); ++a)
      for (std::size_t b = 0; b < upper.order(); ++b)
        if (map[upper.compose_indices(a, b)] !=
            lower.compose_indices(map[a], map[b]))
          throw InputError(where.str() + ": map is not a homomorphism");
  }
}

std::size_t Tower::project_index(std::size_t from_level, std::size_t to_level,
                                 std::size_t element_index) const {
  if (to_level > from_level || from_level >= depth())
    throw InputError("invalid tower level");
  std::size_t idx = element_index;
  for (std::size_t i = from_level; i > to_level; --i) idx = maps_[i - 1][idx];
  return idx;
}

std::vector<std::size_t> Tower::project_members(
    std::size_t to_level, const std::vector<std::size_t>& top_members) const {
  std::vector<std::size_t> out;
  out.reserve(top_members.size());
  for (std::size_t m : top_members)
    out.push_back(project_index(depth() - 1, to_level, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TowerSubgroupPair make_tower_pair(const Tower& t,
                                  const std::vector<Perm>& h_generators,
                                  const std::vector<Perm>& k_generators) {
  SubgroupHandle h = subgroup_from_generators(t.top(), h_generators);
  SubgroupHandle k = subgroup_from_generators(t.top(), k_generators);
  for (std::size_t m : k.members())
    if (!h.contains_index(m)) throw InputError("K is not contained in H");
  return {std::move(h), std::move(k)};
}

std::vector<ProjectedLevel> project_pair(const Tower& t,
                                         const TowerSubgroupPair& pair) {
  if (!pair.h.same_parent(t.top()) || !pair.k.same_parent(t.top()))
    throw InputError("subgroup pair does not live on the tower's top level");
  const std::size_t top_index =
      coset_count(t.top(), pair.h.members(), pair.k.members());
  std::vector<ProjectedLevel> out;
  for (std::size_t i = 0; i < t.depth(); ++i) {
    ProjectedLevel row;
    row.level = i + 1;
    row.h_image = t.project_members(i, pair.h.members());
    row.k_image = t.project_members(i, pair.k.members());
    row.index = coset_count(t.level(i), row.h_image, row.k_image);
    out.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].index > top_index ||
        (i + 1 < out.size() && out[i].index > out[i + 1].index))
      throw InternalError("tower index sequence is not monotone");
  }
  return out;
}

LimitClassification classify_limit(const std::vector<std::size_t>& sequence) {
  if (sequence.size() < 2)
    throw InputError("need at least two levels to classify a limit");
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i] < 1) throw InputError("index sequence entries must be positive");
    if (i > 0 && sequence[i] < sequence[i - 1])
      throw InputError("index sequence must be monotone nondecreasing");
  }
  const std::size_t last = sequence[sequence.size() - 1];
  const std::size_t prev = sequence[sequence.size() - 2];
  if (last == prev) return {LimitClassification::Kind::Stabilized, last};
  return {LimitClassification::Kind::Diverging, 0};
}

ClosureIndexReport closure_index_check(const Tower& t,
                                       const TowerSubgroupPair& pair) {
  ClosureIndexReport report;
  report.sequence = project_pair(t, pair);
  report.top_index = coset_count(t.top(), pair.h.members(), pair.k.members());
  std::vector<std::size_t> indices;
  for (const ProjectedLevel& row : report.sequence) indices.push_back(row.index);
  report.classification = classify_limit(indices);
  std::ostringstream os;
  if (report.classification.stabilized()) {
    report.stabilized_matches_top =
        report.classification.value == report.top_index;
    os << "index sequence stabilizes at " << report.classification.value
       << " within the tower; top-level index is " << report.top_index
       << (report.stabilized_matches_top ? " (matches)" : " (MISMATCH)");
  } else {
    report.stabilized_matches_top = false;
    os << "no stabilization within the tower depth; the index is still "
          "climbing at the top and may be infinite in the limit";
  }
  report.verdict = os.str();
  return report;
}

// --- tower spec files -------------------------------------------------------

namespace {

using nlohmann::json;

std::vector<std::vector<int>> parse_perm_array(const json& node,
                                               const std::string& where) {
  if (!node.is_array()) throw InputError(where + ": expected an array");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const json& entry = node[i];
    if (!entry.is_array())
      throw InputError(where + "[" + std::to_string(i) +
                       "]: expected an image array");
    std::vector<int> images;
    for (const json& v : entry) {
      if (!v.is_number_integer())
        throw InputError(where + "[" + std::to_string(i) +
                         "]: images must be integers");
      images.push_back(v.get<int>());
    }
    out.push_back(std::move(images));
  }
  return out;
}

}  // namespace

TowerRunSpec parse_tower_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("tower spec must be a JSON object");
  TowerRunSpec spec;

  if (!doc.contains("levels") || !doc["levels"].is_array() ||
      doc["levels"].empty())
    throw InputError("levels: expected a nonempty array");
  for (std::size_t i = 0; i < doc["levels"].size(); ++i) {
    const json& level = doc["levels"][i];
    const std::string where = "levels[" + std::to_string(i) + "]";
    if (!level.is_object() || !level.contains("degree") ||
        !level["degree"].is_number_integer())
      throw InputError(where + ": expected {\"degree\": n, \"generators\": [...]}");
    TowerLevelSpec ls;
    ls.degree = level["degree"].get<int>();
    ls.generators = parse_perm_array(level.value("generators", json::array()),
                                     where + ".generators");
    spec.levels.push_back(std::move(ls));
  }

  if (!doc.contains("maps") || !doc["maps"].is_array())
    throw InputError("maps: expected an array");
  for (std::size_t i = 0; i < doc["maps"].size(); ++i) {
    const json& m = doc["maps"][i];
    const std::string where = "maps[" + std::to_string(i) + "]";
    TowerMapSpec ms;
    if (m.is_array()) {
      for (const json& v : m) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
          throw InputError(where + ": element map entries must be nonnegative integers");
        ms.element_map.push_back(v.get<std::size_t>());
      }
    } else if (m.is_object() && m.contains("generator_images")) {
      ms.by_generators = true;
      ms.generator_images =
          parse_perm_array(m["generator_images"], where + ".generator_images");
    } else {
      throw InputError(where +
                       ": expected an element-index array or {\"generator_images\": [...]}");
    }
    spec.maps.push_back(std::move(ms));
  }

  spec.h_generators =
      parse_perm_array(doc.value("H", json::array()), "H");
  spec.k_generators =
      parse_perm_array(doc.value("K", json::array()), "K");
  if (doc.contains("cap")) {
    if (!doc["cap"].is_number_integer() || doc["cap"].get<long long>() < 1)
      throw InputError("cap: expected a positive integer");
    spec.cap = doc["cap"].get<std::size_t>();
  }
  return spec;
}

namespace {

std::vector<Perm> perms_from_images(const std::vector<std::vector<int>>& lists,
                                    const std::string& where) {
  std::vector<Perm> out;
  for (std::size_t i = 0; i < lists.size(); ++i) {
    try {
      out.push_back(Perm::from_one_based(lists[i]));
    } catch (const InputError& e) {
      throw InputError(e.what() + std::string(" at ") + where + "[" +
                       std::to_string(i) + "]");
    }
  }
  return out;
}

// Expands generator images to a full element map by following the closure
// BFS: image(e * g_j) = image(e) * image(g_j). Consistency is enforced by the
// homomorphism check in the Tower constructor.
std::vector<std::size_t> expand_generator_images(const FiniteGroup& upper,
                                                 const FiniteGroup& lower,
                                                 const std::vector<Perm>& images,
                                                 const std::string& where) {
  if (images.size() != upper.generators().size())
    throw InputError(where + ": need one image per generator of the upper level");
  std::vector<std::size_t> gen_indices;
  std::vector<std::size_t> image_indices;
  for (std::size_t j = 0; j < images.size(); ++j) {
    auto gi = upper.index_of(upper.generators()[j]);
    auto li = lower.index_of(images[j]);
    if (!li)
      throw InputError(where + ": generator image is not an element of the lower level");
    gen_indices.push_back(*gi);
    image_indices.push_back(*li);
  }
  const std::size_t unset = lower.order();
  std::vector<std::size_t> map(upper.order(), unset);
  map[upper.identity_index()] = lower.identity_index();
  std::vector<std::size_t> frontier{upper.identity_index()};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t e : frontier)
      for (std::size_t j = 0; j < gen_indices.size(); ++j) {
        const std::size_t target = upper.compose_indices(e, gen_indices[j]);
        if (map[target] != unset) continue;
        map[target] = lower.compose_indices(map[e], image_indices[j]);
        next.push_back(target);
      }
    frontier = std::move(next);
  }
  if (std::find(map.begin(), map.end(), unset) != map.end())
    throw InternalError("generator expansion failed to reach every element");
  return map;
}

}  // namespace

Tower build_tower(const TowerRunSpec& spec) {
  const std::size_t cap = spec.cap.value_or(kDefaultClosureCap);
  std::vector<FiniteGroup> levels;
  for (std::size_t i = 0; i < spec.levels.size(); ++i) {
    const std::string where = "levels[" + std::to_string(i) + "]";
    levels.push_back(FiniteGroup::generate(
        spec.levels[i].degree,
        perms_from_images(spec.levels[i].generators, where + ".generators"),
        cap));
  }
  if (spec.maps.size() + 1 != levels.size())
    throw InputError("maps: need exactly one map per adjacent level pair");
  std::vector<std::vector<std::size_t>> maps;
  for (std::size_t i = 0; i < spec.maps.size(); ++i) {
    const std::string where = "maps[" + std::to_string(i) + "]";
    if (spec.maps[i].by_generators) {
      maps.push_back(expand_generator_images(
          levels[i + 1], levels[i],
          perms_from_images(spec.maps[i].generator_images,
                            where + ".generator_images"),
          where));
    } else {
      maps.push_back(spec.maps[i].element_map);
    }
  }
  return Tower(std::move(levels), std::move(maps));
}

TowerSubgroupPair build_tower_pair(const Tower& t, const TowerRunSpec& spec) {
  return make_tower_pair(t, perms_from_images(spec.h_generators, "H"),
                         perms_from_images(spec.k_generators, "K"));
}

Tower truncate_tower(const Tower& t, std::size_t new_depth) {
  if (new_depth < 1 || new_depth > t.depth())
    throw InputError("truncation depth out of range");
  std::vector<FiniteGroup> levels;
  std::vector<std::vector<std::size_t>> maps;
  for (std::size_t i = 0; i < new_depth; ++i) levels.push_back(t.level(i));
  for (std::size_t i = 0; i + 1 < new_depth; ++i) {
    std::vector<std::size_t> map(t.level(i + 1).order());
    for (std::size_t e = 0; e < map.size(); ++e)
      map[e] = t.project_index(i + 1, i, e);
    maps.push_back(std::move(map));
  }
  return Tower(std::move(levels), std::move(maps));
}

}  // namespace tvk
