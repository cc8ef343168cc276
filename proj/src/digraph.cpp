#include "orbitcert/digraph.hpp"

#include <algorithm>

#include "orbitcert/error.hpp"

namespace orbitcert {

Digraph::Digraph(std::vector<std::string> labels,
                 std::vector<std::pair<int, int>> arrows)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  adj_.assign(n * n, 0);
  std::sort(arrows.begin(), arrows.end());
  arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
  for (auto [src, dst] : arrows) {
    if (src < 0 || dst < 0 || src >= static_cast<int>(n) || dst >= static_cast<int>(n))
      fail(ErrorCode::InputError, "digraph arrow index out of range");
    if (src == dst) fail(ErrorCode::InputError, "digraph must have no self-loops");
    adj_[static_cast<std::size_t>(src) * n + dst] = 1;
  }
  arrows_ = std::move(arrows);
}

std::vector<int> Digraph::out_neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < size(); ++u)
    if (arrow(v, u)) out.push_back(u);
  return out;
}

int Digraph::out_degree(int v) const {
  int d = 0;
  for (int u = 0; u < size(); ++u)
    if (arrow(v, u)) ++d;
  return d;
}

bool is_clique(const Digraph& g, const Clique& clique) {
  for (std::size_t i = 0; i < clique.size(); ++i) {
    int v = clique[i];
    if (v < 0 || v >= g.size()) return false;
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      if (clique[j] == v) return false;
      if (!g.connected_pair(v, clique[j])) return false;
    }
  }
  return true;
}

Digraph comparability_graph(const Poset& poset) {
  std::vector<std::pair<int, int>> arrows;
  for (auto [a, b] : poset.strict_pairs()) arrows.emplace_back(b, a);  // a <- b since a < b
  return Digraph(poset.labels(), std::move(arrows));
}

bool is_well_founded(const Digraph& g) {
  // Iterative three-color DFS for a directed cycle.
  enum { White, Grey, Black };
  std::vector<char> color(g.size(), White);
  for (int root = 0; root < g.size(); ++root) {
    if (color[root] != White) continue;
    std::vector<std::pair<int, int>> stack{{root, 0}};
    color[root] = Grey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto neighbors = g.out_neighbors(v);
      if (next < static_cast<int>(neighbors.size())) {
        int u = neighbors[next++];
        if (color[u] == Grey) return false;
        if (color[u] == White) {
          color[u] = Grey;
          stack.emplace_back(u, 0);
        }
      } else {
        color[v] = Black;
        stack.pop_back();
      }
    }
  }
  return true;
}

std::vector<int> minimal_vertices(const Digraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v)
    if (g.out_degree(v) == 0) out.push_back(v);
  return out;
}

InducedSubgraph descending_subgraph(const Digraph& g, const Clique& clique) {
  if (!is_clique(g, clique)) fail(ErrorCode::NotAClique, "descending_subgraph needs a clique");
  std::vector<int> vertices;
  for (int v = 0; v < g.size(); ++v) {
    bool below_all = true;
    for (int u : clique)
      if (!g.arrow(u, v)) { below_all = false; break; }
    if (below_all) vertices.push_back(v);
  }
  std::vector<int> position(g.size(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    position[vertices[i]] = static_cast<int>(i);
    labels.push_back(g.label(vertices[i]));
  }
  std::vector<std::pair<int, int>> arrows;
  for (auto [src, dst] : g.arrows())
    if (position[src] >= 0 && position[dst] >= 0)
      arrows.emplace_back(position[src], position[dst]);
  return InducedSubgraph{Digraph(std::move(labels), std::move(arrows)), std::move(vertices)};
}

int minimum_of_clique(const Digraph& g, const Clique& clique) {
  if (clique.empty()) fail(ErrorCode::NotAClique, "empty clique has no minimum");
  if (!is_clique(g, clique)) fail(ErrorCode::NotAClique, "minimum_of_clique needs a clique");
  int found = -1;
  for (int candidate : clique) {
    bool receives_all = true;
    for (int u : clique) {
      if (u == candidate) continue;
      if (!g.arrow(u, candidate)) { receives_all = false; break; }
    }
    if (receives_all) {
      if (found >= 0)
        fail(ErrorCode::NoUniqueMinimum, "clique has more than one minimum candidate");
      found = candidate;
    }
  }
  if (found < 0) fail(ErrorCode::NoUniqueMinimum, "clique has no minimum");
  return found;
}

namespace {

void extend_cliques(const Digraph& g, Clique& current, int from, int max_size,
                    std::vector<Clique>& out, bool* truncated) {
  if (static_cast<int>(current.size()) == max_size) {
    if (truncated) {
      for (int v = from; v < g.size(); ++v) {
        bool compatible = true;
        for (int u : current)
          if (!g.connected_pair(u, v)) { compatible = false; break; }
        if (compatible) { *truncated = true; break; }
      }
    }
    return;
  }
  for (int v = from; v < g.size(); ++v) {
    bool compatible = true;
    for (int u : current)
      if (!g.connected_pair(u, v)) { compatible = false; break; }
    if (!compatible) continue;
    current.push_back(v);
    out.push_back(current);
    extend_cliques(g, current, v + 1, max_size, out, truncated);
    current.pop_back();
  }
}

}  // namespace

std::vector<Clique> all_cliques(const Digraph& g, int max_size, bool* truncated) {
  if (truncated) *truncated = false;
  std::vector<Clique> out;
  Clique current;
  extend_cliques(g, current, 0, max_size, out, truncated);
  std::sort(out.begin(), out.end(), [](const Clique& a, const Clique& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace orbitcert
