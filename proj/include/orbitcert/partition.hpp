#pragma once

#include <compare>
#include <string>
#include <vector>

namespace orbitcert {

/// Integer partition with weakly decreasing positive parts. The empty
/// partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses a comma-separated part list ("4,2,1"); "" is the empty partition.
  static Partition parse(const std::string& text);
  std::string to_string() const;

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int row_count() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Cell (row, col) membership, 0-indexed.
  bool contains_cell(int row, int col) const;
  /// Diagram containment (other fits inside this).
  bool contains(const Partition& other) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Beta-set (first-column hook word) view of a partition on an e-runner
/// abacus. bead_count is always the least positive multiple of runner_count
/// that accommodates the requested number of beads, so views are canonical.
struct AbacusView {
  int bead_count = 0;
  std::vector<int> beta_set;  // strictly decreasing, non-negative
  int runner_count = 1;

  /// Canonical view: least positive multiple of e >= max(#parts, 1) beads.
  static AbacusView of(const Partition& p, int e);
  /// View with at least min_beads beads (rounded up to a multiple of e).
  static AbacusView of(const Partition& p, int e, int min_beads);

  Partition to_partition() const;
  /// Bead level sets per runner, each sorted increasing.
  std::vector<std::vector<int>> runner_levels() const;
};

struct HookRemoval {
  Partition result;
  int leg_parity = 0;  // leg length mod 2

  auto operator<=>(const HookRemoval&) const = default;
};

/// All partitions obtained by deleting one rim hook of length e, with the
/// parity of the hook's leg. Empty when no rim e-hook exists.
std::vector<HookRemoval> remove_e_hooks(const Partition& p, int e);

/// All partitions obtained by adding one rim hook of length e. Never empty.
std::vector<Partition> add_e_hooks(const Partition& p, int e);

/// The hook-free partition reached by repeated rim e-hook removal (computed
/// by abacus bead sliding; order-independence is a tested property).
Partition e_core(const Partition& p, int e);

/// (|p| - |e_core(p, e)|) / e.
int e_weight(const Partition& p, int e);

/// Runner-wise quotient partitions; sum of sizes equals e_weight(p, e).
std::vector<Partition> e_quotient(const Partition& p, int e);

/// True iff mu is obtained from alpha by successively adding rim e-hooks.
/// Decided on a common abacus: same e-core and componentwise domination of
/// sorted bead levels on every runner (equivalent to BFS over add_e_hooks;
/// the equivalence itself is a tested property, core equality alone is not
/// sufficient).
bool reachable(const Partition& alpha, const Partition& mu, int e);

/// All partitions of n, sorted.
std::vector<Partition> partitions_of(int n);

}  // namespace orbitcert
