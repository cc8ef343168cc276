#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitcert/poset.hpp"

namespace orbitcert {

/// Finite directed graph without self-loops. An arrow (src, dst) is an edge
/// starting at src and pointing at dst, written dst <- src.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::vector<std::string> labels,
          std::vector<std::pair<int, int>> arrows);

  int size() const { return static_cast<int>(labels_.size()); }
  bool arrow(int src, int dst) const {
    return adj_[static_cast<std::size_t>(src) * labels_.size() + dst] != 0;
  }
  /// Edge in at least one direction.
  bool connected_pair(int a, int b) const { return arrow(a, b) || arrow(b, a); }

  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  std::vector<int> out_neighbors(int v) const;
  int out_degree(int v) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> arrows_;
  std::vector<char> adj_;
};

/// A clique: sorted vertex set, every distinct pair connected in at least one
/// direction.
using Clique = std::vector<int>;

bool is_clique(const Digraph& g, const Clique& clique);

/// Comparability graph of a poset: arrow v -> u (that is, u <- v) iff u < v.
Digraph comparability_graph(const Poset& poset);

/// True iff the digraph has no directed cycle.
bool is_well_founded(const Digraph& g);

/// Vertices with no outgoing arrow.
std::vector<int> minimal_vertices(const Digraph& g);

struct InducedSubgraph {
  Digraph graph;
  std::vector<int> vertices;  // original vertex ids, sorted; graph vertex i = vertices[i]
};

/// Induced subgraph on the vertices that receive an arrow from every vertex
/// of the clique. Rejects non-cliques.
InducedSubgraph descending_subgraph(const Digraph& g, const Clique& clique);

/// The unique m in the clique with m <- u for every other u, if it exists;
/// throws NO_UNIQUE_MINIMUM otherwise.
int minimum_of_clique(const Digraph& g, const Clique& clique);

/// All non-empty cliques up to max_size vertices, sorted by (size, lex).
/// Sets *truncated when some clique was cut off at the cap.
std::vector<Clique> all_cliques(const Digraph& g, int max_size, bool* truncated = nullptr);

}  // namespace orbitcert
