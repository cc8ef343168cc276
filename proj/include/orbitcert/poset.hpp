#pragma once

#include <string>
#include <utility>
#include <vector>

namespace orbitcert {

/// Finite poset stored as a transitively closed strict order. Input relations
/// need not be closed; construction closes them and rejects cycles.
class Poset {
 public:
  Poset() = default;
  Poset(std::vector<std::string> labels,
        const std::vector<std::pair<int, int>>& strict_pairs);

  int size() const { return static_cast<int>(labels_.size()); }
  bool less(int a, int b) const { return less_[static_cast<std::size_t>(a) * labels_.size() + b] != 0; }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index_of(const std::string& label) const;  // -1 if absent

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  /// All strict pairs (a, b) with a < b, sorted.
  std::vector<std::pair<int, int>> strict_pairs() const;
  /// Covering pairs (a, b): a < b with nothing in between.
  std::vector<std::pair<int, int>> cover_pairs() const;

 private:
  std::vector<std::string> labels_;
  std::vector<char> less_;  // row-major adjacency of the closed strict order
};

}  // namespace orbitcert
