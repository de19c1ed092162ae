#include "tvk/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tvk/errors.hpp"

namespace tvk {

FiniteGroup FiniteGroup::generate(int degree, std::vector<Perm> generators,
                                  std::size_t cap) {
  if (degree < kMinDegree || degree > kMaxDegree)
    throw InputError("degree out of range");
  if (cap < 1) throw InputError("closure cap must be at least 1");
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw InputError("generator degree does not match group degree");

  // BFS closure under right multiplication by generators. In a finite group
  // this reaches inverses as well, so no inverse generators are needed.
  std::set<Perm> seen;
  std::vector<Perm> frontier;
  seen.insert(Perm::identity(degree));
  frontier.push_back(Perm::identity(degree));
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& e : frontier) {
      for (const Perm& g : generators) {
        Perm candidate = compose(e, g);
        if (seen.insert(candidate).second) {
          if (seen.size() > cap) {
            std::ostringstream os;
            os << "closure exceeded cap of " << cap << " elements";
            throw CapacityError(os.str());
          }
          next.push_back(std::move(candidate));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<Perm> elements(seen.begin(), seen.end());  // already sorted
  return FiniteGroup(degree, std::move(generators), std::move(elements));
}

std::optional<std::size_t> FiniteGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t FiniteGroup::compose_indices(std::size_t a, std::size_t b) const {
  auto idx = index_of(compose(elements_[a], elements_[b]));
  if (!idx) throw InternalError("group not closed under composition");
  return *idx;
}

std::size_t FiniteGroup::inverse_index(std::size_t a) const {
  auto idx = index_of(inverse(elements_[a]));
  if (!idx) throw InternalError("group not closed under inversion");
  return *idx;
}

SubgroupHandle::SubgroupHandle(const FiniteGroup& parent,
                               std::vector<std::size_t> members)
    : parent_(&parent), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw InputError("subgroup must contain the identity");
  for (std::size_t m : members_)
    if (m >= parent.order()) throw InputError("subgroup member index out of range");
  // Closure, identity and inverses, verified exhaustively.
  if (!contains_index(parent.identity_index()))
    throw InputError("subgroup must contain the identity");
  for (std::size_t a : members_) {
    if (!contains_index(parent.inverse_index(a)))
      throw InputError("member set is not closed under inverses");
    for (std::size_t b : members_)
      if (!contains_index(parent.compose_indices(a, b)))
        throw InputError("member set is not closed under composition");
  }
}

bool SubgroupHandle::contains_index(std::size_t element_index) const {
  return std::binary_search(members_.begin(), members_.end(), element_index);
}

namespace {

// Closure of a seed index set inside g, in index space.
std::vector<std::size_t> close_indices(const FiniteGroup& g,
                                       std::vector<std::size_t> seed) {
  std::set<std::size_t> seen(seed.begin(), seed.end());
  seen.insert(g.identity_index());
  std::vector<std::size_t> frontier(seen.begin(), seen.end());
  std::vector<std::size_t> gens(seed.begin(), seed.end());
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t e : frontier)
      for (std::size_t gen : gens) {
        std::size_t c = g.compose_indices(e, gen);
        if (seen.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

SubgroupHandle subgroup_from_generators(const FiniteGroup& g,
                                        const std::vector<Perm>& gens) {
  std::vector<std::size_t> seed;
  for (const Perm& p : gens) {
    auto idx = g.index_of(p);
    if (!idx) throw InputError("subgroup generator is not an element of the group");
    seed.push_back(*idx);
  }
  return SubgroupHandle(g, close_indices(g, std::move(seed)));
}

SubgroupHandle trivial_subgroup(const FiniteGroup& g) {
  return SubgroupHandle(g, {g.identity_index()});
}

SubgroupHandle full_subgroup(const FiniteGroup& g) {
  std::vector<std::size_t> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return SubgroupHandle(g, std::move(all));
}

std::vector<SubgroupHandle> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<std::size_t>> found;
  found.insert({g.identity_index()});
  std::vector<std::vector<std::size_t>> worklist(found.begin(), found.end());
  while (!worklist.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& base : worklist) {
      for (std::size_t e = 0; e < g.order(); ++e) {
        if (std::binary_search(base.begin(), base.end(), e)) continue;
        std::vector<std::size_t> seed = base;
        seed.push_back(e);
        auto closed = close_indices(g, std::move(seed));
        if (found.insert(closed).second) next.push_back(std::move(closed));
      }
    }
    worklist = std::move(next);
  }
  std::vector<std::vector<std::size_t>> ordered(found.begin(), found.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::vector<SubgroupHandle> out;
  out.reserve(ordered.size());
  for (auto& members : ordered) out.emplace_back(g, std::move(members));
  return out;
}

}  // namespace tvk
