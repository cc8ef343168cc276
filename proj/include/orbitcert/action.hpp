#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "orbitcert/group.hpp"

namespace orbitcert {

/// A greedy small generating set for a subgroup given by its elements.
std::vector<Permutation> small_generating_set(const Subgroup& subgroup);

/// The subgroup as a stand-alone PermutationGroup (same degree).
PermutationGroup group_from(const Subgroup& subgroup);

/// Action of a permutation group on an indexed ground set {0..n-1}.
/// Construction spot-checks that the identity fixes everything and that the
/// map is compatible with composition on generators.
class GroupAction {
 public:
  GroupAction() = default;
  GroupAction(std::shared_ptr<const PermutationGroup> group, int point_count,
              std::function<int(const Permutation&, int)> action_map);

  /// Natural action on {0..degree-1}.
  static GroupAction natural(std::shared_ptr<const PermutationGroup> group);
  /// Conjugation action on a list of subgroups; the list must be closed under
  /// conjugation by the group.
  static GroupAction conjugation_on_subgroups(std::shared_ptr<const PermutationGroup> group,
                                              std::vector<Subgroup> subgroups);
  /// Trivial action of the trivial group.
  static GroupAction trivial_group(int point_count);

  const PermutationGroup& group() const { return *group_; }
  std::shared_ptr<const PermutationGroup> group_ptr() const { return group_; }
  int point_count() const { return point_count_; }

  int apply(const Permutation& g, int point) const { return map_(g, point); }
  /// Induced point map of the group element with the given index; cached.
  const std::vector<int>& induced(int element_index) const;

 private:
  std::shared_ptr<const PermutationGroup> group_;
  int point_count_ = 0;
  std::function<int(const Permutation&, int)> map_;
  mutable std::vector<std::vector<int>> induced_;
};

/// Orbit partition; orbits sorted by least point, points ascending.
std::vector<std::vector<int>> orbits(const GroupAction& action);

/// Orbit index per point, numbered in orbits() order.
std::vector<int> orbit_index_map(const GroupAction& action);

Subgroup stabilizer(const GroupAction& action, int point);

/// Elements mapping the point set onto itself.
Subgroup setwise_stabilizer(const GroupAction& action, const std::vector<int>& points);

/// Transitivity on an invariant subset; throws INVARIANCE_VIOLATION when the
/// subset is not action-invariant.
bool is_transitive_on(const GroupAction& action, const std::vector<int>& subset);

}  // namespace orbitcert
