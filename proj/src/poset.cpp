#include "orbitcert/poset.hpp"

#include <algorithm>

#include "orbitcert/error.hpp"

namespace orbitcert {

Poset::Poset(std::vector<std::string> labels,
             const std::vector<std::pair<int, int>>& strict_pairs)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  less_.assign(n * n, 0);
  for (auto [a, b] : strict_pairs) {
    if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n))
      fail(ErrorCode::InputError, "poset relation index out of range");
    if (a == b) fail(ErrorCode::InputError, "poset relation must be irreflexive");
    less_[static_cast<std::size_t>(a) * n + b] = 1;
  }
  // Warshall closure; the stored relation is always transitively closed.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!less_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (less_[k * n + j]) less_[i * n + j] = 1;
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (less_[i * n + i])
      fail(ErrorCode::InputError, "relation has a cycle through '" + labels_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (less_[i * n + j] && less_[j * n + i])
        fail(ErrorCode::InputError, "relation is not antisymmetric");
  }
}

int Poset::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool minimal = true;
    for (int j = 0; j < size() && minimal; ++j)
      if (less(j, i)) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool maximal = true;
    for (int j = 0; j < size() && maximal; ++j)
      if (less(i, j)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<int, int>> Poset::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (less(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < size() && cover; ++c)
        if (less(a, c) && less(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

}  // namespace orbitcert
