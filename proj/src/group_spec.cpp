#include "tvk/group_spec.hpp"

#include <json.hpp>

#include "tvk/errors.hpp"

namespace tvk {

namespace {

using nlohmann::json;

std::vector<std::vector<int>> parse_image_lists(const json& node,
                                                const std::string& key) {
  if (!node.is_array()) throw InputError("expected an array at " + key);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string where = key + "[" + std::to_string(i) + "]";
    if (!node[i].is_array()) throw InputError("expected an image array at " + where);
    std::vector<int> images;
    for (const json& v : node[i]) {
      if (!v.is_number_integer())
        throw InputError("images must be integers at " + where);
      images.push_back(v.get<int>());
    }
    out.push_back(std::move(images));
  }
  return out;
}

// Validate early so parse errors point into the document, not at a later
// group construction.
void validate_image_lists(int degree, const std::vector<std::vector<int>>& lists,
                          const std::string& key) {
  for (std::size_t i = 0; i < lists.size(); ++i) {
    const std::string where = key + "[" + std::to_string(i) + "]";
    if (static_cast<int>(lists[i].size()) != degree)
      throw InputError("image list length must equal degree at " + where);
    try {
      Perm::from_one_based(lists[i]);
    } catch (const InputError& e) {
      throw InputError(std::string(e.what()) + " at " + where);
    }
  }
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("group spec must be a JSON object");
  if (!doc.contains("degree") || !doc["degree"].is_number_integer())
    throw InputError("expected an integer at degree");
  GroupSpec spec;
  spec.degree = doc["degree"].get<int>();
  if (spec.degree < kMinDegree || spec.degree > kMaxDegree)
    throw InputError("degree out of range");
  spec.generators =
      parse_image_lists(doc.value("generators", json::array()), "generators");
  spec.subgroup =
      parse_image_lists(doc.value("subgroup", json::array()), "subgroup");
  if (doc.contains("cap")) {
    if (!doc["cap"].is_number_integer() || doc["cap"].get<long long>() < 1)
      throw InputError("expected a positive integer at cap");
    spec.cap = doc["cap"].get<std::size_t>();
  }
  validate_image_lists(spec.degree, spec.generators, "generators");
  validate_image_lists(spec.degree, spec.subgroup, "subgroup");
  return spec;
}

FiniteGroup build_group(const GroupSpec& spec,
                        std::optional<std::size_t> cap_override) {
  std::vector<Perm> gens;
  for (const auto& images : spec.generators)
    gens.push_back(Perm::from_one_based(images));
  const std::size_t cap =
      cap_override.value_or(spec.cap.value_or(kDefaultClosureCap));
  return FiniteGroup::generate(spec.degree, std::move(gens), cap);
}

SubgroupHandle build_subgroup(const FiniteGroup& g, const GroupSpec& spec) {
  std::vector<Perm> gens;
  for (const auto& images : spec.subgroup)
    gens.push_back(Perm::from_one_based(images));
  return subgroup_from_generators(g, gens);
}

}  // namespace tvk
