#include "orbitcert/action.hpp"

#include <algorithm>
#include <map>

#include "orbitcert/error.hpp"

namespace orbitcert {

std::vector<Permutation> small_generating_set(const Subgroup& subgroup) {
  const int degree = subgroup.degree();
  std::vector<Permutation> generators;
  std::vector<Permutation> closure{Permutation::identity(degree)};
  for (const auto& element : subgroup.elements()) {
    if (std::binary_search(closure.begin(), closure.end(), element)) continue;
    generators.push_back(element);
    closure = enumerate_elements(degree, generators, subgroup.order());
    if (closure.size() == subgroup.order()) break;
  }
  if (generators.empty()) generators.push_back(Permutation::identity(degree));
  return generators;
}

PermutationGroup group_from(const Subgroup& subgroup) {
  return PermutationGroup(subgroup.degree(), small_generating_set(subgroup));
}

GroupAction::GroupAction(std::shared_ptr<const PermutationGroup> group, int point_count,
                         std::function<int(const Permutation&, int)> action_map)
    : group_(std::move(group)), point_count_(point_count), map_(std::move(action_map)) {
  induced_.assign(group_->order(), {});
  for (int x = 0; x < point_count_; ++x)
    if (map_(group_->identity(), x) != x)
      fail(ErrorCode::InputError, "identity does not act trivially");
  for (const auto& g : group_->generators())
    for (const auto& h : group_->generators()) {
      Permutation gh = g * h;
      for (int x = 0; x < point_count_; ++x)
        if (map_(gh, x) != map_(g, map_(h, x)))
          fail(ErrorCode::InputError, "action map incompatible with composition");
    }
}

GroupAction GroupAction::natural(std::shared_ptr<const PermutationGroup> group) {
  int n = group->degree();
  return GroupAction(std::move(group), n,
                     [](const Permutation& g, int x) { return g(x); });
}

GroupAction GroupAction::conjugation_on_subgroups(
    std::shared_ptr<const PermutationGroup> group, std::vector<Subgroup> subgroups) {
  auto table = std::make_shared<std::map<Subgroup, int>>();
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    (*table)[subgroups[i]] = static_cast<int>(i);
  auto list = std::make_shared<std::vector<Subgroup>>(std::move(subgroups));
  int n = static_cast<int>(list->size());
  return GroupAction(std::move(group), n, [table, list](const Permutation& g, int x) {
    auto it = table->find((*list)[x].conjugate(g));
    if (it == table->end())
      fail(ErrorCode::InvarianceViolation, "subgroup list not closed under conjugation");
    return it->second;
  });
}

GroupAction GroupAction::trivial_group(int point_count) {
  auto group = std::make_shared<PermutationGroup>(1, std::vector<Permutation>{});
  return GroupAction(std::move(group), point_count,
                     [](const Permutation&, int x) { return x; });
}

const std::vector<int>& GroupAction::induced(int element_index) const {
  auto& cached = induced_[element_index];
  if (cached.empty() && point_count_ > 0) {
    const Permutation& g = group_->elements()[element_index];
    cached.resize(point_count_);
    for (int x = 0; x < point_count_; ++x) cached[x] = map_(g, x);
  }
  return cached;
}

std::vector<std::vector<int>> orbits(const GroupAction& action) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(action.point_count(), 0);
  for (int start = 0; start < action.point_count(); ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& g : action.group().generators()) {
        int image = action.apply(g, orbit[i]);
        if (!seen[image]) {
          seen[image] = 1;
          orbit.push_back(image);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<int> orbit_index_map(const GroupAction& action) {
  std::vector<int> index(action.point_count(), -1);
  auto parts = orbits(action);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int point : parts[i]) index[point] = static_cast<int>(i);
  return index;
}

Subgroup stabilizer(const GroupAction& action, int point) {
  std::vector<Permutation> elements;
  for (const auto& g : action.group().elements())
    if (action.apply(g, point) == point) elements.push_back(g);
  return Subgroup(std::move(elements));
}

Subgroup setwise_stabilizer(const GroupAction& action, const std::vector<int>& points) {
  std::vector<int> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Permutation> elements;
  std::vector<int> image;
  for (const auto& g : action.group().elements()) {
    image.clear();
    for (int x : sorted) image.push_back(action.apply(g, x));
    std::sort(image.begin(), image.end());
    if (image == sorted) elements.push_back(g);
  }
  return Subgroup(std::move(elements));
}

bool is_transitive_on(const GroupAction& action, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  for (int x : sorted)
    for (const auto& g : action.group().generators())
      if (!std::binary_search(sorted.begin(), sorted.end(), action.apply(g, x)))
        fail(ErrorCode::InvarianceViolation, "subset is not action-invariant");
  std::vector<int> orbit{sorted[0]};
  std::vector<char> seen(action.point_count(), 0);
  seen[sorted[0]] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& g : action.group().generators()) {
      int image = action.apply(g, orbit[i]);
      if (!seen[image]) { seen[image] = 1; orbit.push_back(image); }
    }
  return orbit.size() == sorted.size();
}

}  // namespace orbitcert
