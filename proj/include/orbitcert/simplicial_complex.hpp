#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitcert/digraph.hpp"
#include "orbitcert/poset.hpp"

namespace orbitcert {

/// Orders simplices by (dimension, lexicographic vertex list).
struct SimplexOrder {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Finite abstract simplicial complex stored by its facets (maximal
/// simplices). Every vertex belongs to at least one facet; isolated vertices
/// become singleton facets at construction.
class SimplicialComplex {
 public:
  static constexpr std::size_t kDefaultSimplexCap = 4'000'000;

  SimplicialComplex() = default;
  static SimplicialComplex from_facets(int vertex_count,
                                       std::vector<std::vector<int>> facets,
                                       std::vector<std::string> labels = {});

  int vertex_count() const { return vertex_count_; }
  bool empty() const { return vertex_count_ == 0; }
  /// Dimension of the complex; -1 when empty.
  int dimension() const;

  const std::vector<std::vector<int>>& facets() const { return facets_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }

  bool has_simplex(const std::vector<int>& simplex) const;

  /// Every simplex, sorted by (dimension, lex). Throws BOUND_EXCEEDED past cap.
  std::vector<std::vector<int>> all_simplices(std::size_t cap = kDefaultSimplexCap) const;
  /// Simplex counts per dimension (index d = number of d-simplices).
  std::vector<std::size_t> simplex_counts(std::size_t cap = kDefaultSimplexCap) const;

  long long euler_characteristic(std::size_t cap = kDefaultSimplexCap) const;

  /// A vertex contained in every facet (equivalently, joined to every simplex
  /// not containing it), smallest index if several.
  std::optional<int> cone_apex() const;

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<int>> facets_;
  std::vector<std::string> labels_;
};

/// Order complex of a poset: simplices are the finite chains; facets are the
/// maximal chains. Built directly from the order relation, independently of
/// the flag-complex route.
SimplicialComplex order_complex(const Poset& poset);

/// Flag (clique) complex of a digraph: simplices are the cliques.
SimplicialComplex flag_complex(const Digraph& g);

}  // namespace orbitcert
