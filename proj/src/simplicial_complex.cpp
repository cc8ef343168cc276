#include "orbitcert/simplicial_complex.hpp"

#include <algorithm>
#include <set>

#include "orbitcert/error.hpp"

namespace orbitcert {

SimplicialComplex SimplicialComplex::from_facets(int vertex_count,
                                                 std::vector<std::vector<int>> facets,
                                                 std::vector<std::string> labels) {
  SimplicialComplex complex;
  complex.vertex_count_ = vertex_count;
  if (labels.empty()) {
    labels.reserve(vertex_count);
    for (int v = 0; v < vertex_count; ++v) labels.push_back(std::to_string(v));
  }
  if (static_cast<int>(labels.size()) != vertex_count)
    fail(ErrorCode::InputError, "label count does not match vertex count");
  complex.labels_ = std::move(labels);

  std::vector<char> covered(vertex_count, 0);
  for (auto& facet : facets) {
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    if (facet.empty()) fail(ErrorCode::InputError, "empty facet");
    for (int v : facet) {
      if (v < 0 || v >= vertex_count)
        fail(ErrorCode::InputError, "facet vertex out of range");
      covered[v] = 1;
    }
  }
  for (int v = 0; v < vertex_count; ++v)
    if (!covered[v]) facets.push_back({v});

  // Drop facets contained in others; sort by (dim, lex).
  std::sort(facets.begin(), facets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  for (const auto& facet : facets) {
    bool contained = false;
    for (const auto& kept : complex.facets_) {
      if (std::includes(kept.begin(), kept.end(), facet.begin(), facet.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) complex.facets_.push_back(facet);
  }
  std::sort(complex.facets_.begin(), complex.facets_.end(), SimplexOrder{});
  return complex;
}

int SimplicialComplex::dimension() const {
  int dim = -1;
  for (const auto& facet : facets_)
    dim = std::max(dim, static_cast<int>(facet.size()) - 1);
  return dim;
}

bool SimplicialComplex::has_simplex(const std::vector<int>& simplex) const {
  if (simplex.empty()) return false;
  std::vector<int> sorted = simplex;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& facet : facets_)
    if (std::includes(facet.begin(), facet.end(), sorted.begin(), sorted.end()))
      return true;
  return false;
}

std::vector<std::vector<int>> SimplicialComplex::all_simplices(std::size_t cap) const {
  std::set<std::vector<int>> seen;
  std::vector<int> subset;
  for (const auto& facet : facets_) {
    const std::size_t k = facet.size();
    // Non-empty subsets by bitmask; facet dimensions stay small at desk scale.
    if (k > 25) fail(ErrorCode::BoundExceeded, "facet dimension too large to expand");
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      subset.clear();
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) subset.push_back(facet[i]);
      seen.insert(subset);
      if (seen.size() > cap)
        fail(ErrorCode::BoundExceeded, "simplex enumeration exceeds cap");
    }
  }
  std::vector<std::vector<int>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), SimplexOrder{});
  return out;
}

std::vector<std::size_t> SimplicialComplex::simplex_counts(std::size_t cap) const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(std::max(dimension() + 1, 0)), 0);
  for (const auto& simplex : all_simplices(cap)) ++counts[simplex.size() - 1];
  return counts;
}

long long SimplicialComplex::euler_characteristic(std::size_t cap) const {
  long long chi = 0;
  int sign = 1;
  for (std::size_t count : simplex_counts(cap)) {
    chi += sign * static_cast<long long>(count);
    sign = -sign;
  }
  return chi;
}

std::optional<int> SimplicialComplex::cone_apex() const {
  if (facets_.empty()) return std::nullopt;
  std::vector<int> common = facets_[0];
  for (const auto& facet : facets_) {
    std::vector<int> next;
    std::set_intersection(common.begin(), common.end(), facet.begin(), facet.end(),
                          std::back_inserter(next));
    common = std::move(next);
    if (common.empty()) return std::nullopt;
  }
  return common.front();
}

SimplicialComplex order_complex(const Poset& poset) {
  const int n = poset.size();
  // Covers, minimal and maximal flags for the maximal-chain DFS.
  std::vector<std::vector<int>> covers(n);
  for (auto [a, b] : poset.cover_pairs()) covers[a].push_back(b);
  std::vector<char> is_minimal(n, 1), is_maximal(n, 1);
  for (auto [a, b] : poset.strict_pairs()) {
    is_minimal[b] = 0;
    is_maximal[a] = 0;
  }

  std::vector<std::vector<int>> facets;
  std::vector<int> chain;
  auto grow = [&](auto&& self, int top) -> void {
    chain.push_back(top);
    if (is_maximal[top]) {
      std::vector<int> facet = chain;
      std::sort(facet.begin(), facet.end());
      facets.push_back(std::move(facet));
    } else {
      for (int next : covers[top]) self(self, next);
    }
    chain.pop_back();
  };
  for (int v = 0; v < n; ++v)
    if (is_minimal[v]) grow(grow, v);

  return SimplicialComplex::from_facets(n, std::move(facets), poset.labels());
}

namespace {

// Bron-Kerbosch with pivoting on the symmetrized adjacency.
void maximal_cliques(const Digraph& g, std::vector<int>& r, std::vector<int> p,
                     std::vector<int> x, std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    std::vector<int> clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  int pivot = !p.empty() ? p.front() : x.front();
  std::size_t best = 0;
  for (int candidate : p) {
    std::size_t count = 0;
    for (int v : p)
      if (g.connected_pair(candidate, v)) ++count;
    if (count >= best) { best = count; pivot = candidate; }
  }
  std::vector<int> candidates;
  for (int v : p)
    if (!g.connected_pair(pivot, v)) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> p2, x2;
    for (int u : p)
      if (g.connected_pair(v, u)) p2.push_back(u);
    for (int u : x)
      if (g.connected_pair(v, u)) x2.push_back(u);
    r.push_back(v);
    maximal_cliques(g, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::remove(p.begin(), p.end(), v), p.end());
    x.push_back(v);
  }
}

}  // namespace

SimplicialComplex flag_complex(const Digraph& g) {
  std::vector<int> all(g.size());
  for (int v = 0; v < g.size(); ++v) all[v] = v;
  std::vector<std::vector<int>> facets;
  std::vector<int> r;
  if (g.size() > 0) maximal_cliques(g, r, all, {}, facets);
  return SimplicialComplex::from_facets(g.size(), std::move(facets), g.labels());
}

}  // namespace orbitcert
