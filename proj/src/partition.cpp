#include "orbitcert/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "orbitcert/error.hpp"

namespace orbitcert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) fail(ErrorCode::InputError, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      fail(ErrorCode::InputError, "partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t begin = token.find_first_not_of(" \t");
    if (begin == std::string::npos) {
      if (parts.empty() && in.eof()) break;
      fail(ErrorCode::InputError, "empty part in partition '" + text + "'");
    }
    std::size_t end = token.find_last_not_of(" \t");
    try {
      parts.push_back(std::stoi(token.substr(begin, end - begin + 1)));
    } catch (const std::exception&) {
      fail(ErrorCode::InputError, "bad partition part '" + token + "'");
    }
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool Partition::contains_cell(int row, int col) const {
  return row >= 0 && row < row_count() && col >= 0 && col < parts_[row];
}

bool Partition::contains(const Partition& other) const {
  if (other.row_count() > row_count()) return false;
  for (int i = 0; i < other.row_count(); ++i)
    if (other.parts()[i] > parts_[i]) return false;
  return true;
}

AbacusView AbacusView::of(const Partition& p, int e) { return of(p, e, p.row_count()); }

AbacusView AbacusView::of(const Partition& p, int e, int min_beads) {
  if (e < 1) fail(ErrorCode::InputError, "runner count must be >= 1");
  int wanted = std::max({min_beads, p.row_count(), 1});
  int beads = ((wanted + e - 1) / e) * e;
  AbacusView view;
  view.bead_count = beads;
  view.runner_count = e;
  view.beta_set.reserve(beads);
  for (int i = 0; i < beads; ++i) {
    int part = i < p.row_count() ? p.parts()[i] : 0;
    view.beta_set.push_back(part + beads - 1 - i);
  }
  return view;
}

Partition AbacusView::to_partition() const {
  std::vector<int> beta = beta_set;
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  std::vector<int> parts;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int part = beta[i] - (static_cast<int>(beta.size()) - 1 - static_cast<int>(i));
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

std::vector<std::vector<int>> AbacusView::runner_levels() const {
  std::vector<std::vector<int>> levels(runner_count);
  for (int x : beta_set) levels[x % runner_count].push_back(x / runner_count);
  for (auto& runner : levels) std::sort(runner.begin(), runner.end());
  return levels;
}

std::vector<HookRemoval> remove_e_hooks(const Partition& p, int e) {
  if (e < 1) fail(ErrorCode::InputError, "hook length must be >= 1");
  AbacusView view = AbacusView::of(p, e);
  std::set<int> beta(view.beta_set.begin(), view.beta_set.end());
  std::set<HookRemoval> out;
  for (int x : view.beta_set) {
    if (x - e < 0 || beta.count(x - e)) continue;
    AbacusView moved = view;
    for (int& b : moved.beta_set)
      if (b == x) b = x - e;
    // Leg length of the removed hook = beads strictly between landing and
    // start positions.
    int leg = 0;
    for (int y : view.beta_set)
      if (y > x - e && y < x) ++leg;
    out.insert(HookRemoval{moved.to_partition(), leg & 1});
  }
  return {out.begin(), out.end()};
}

std::vector<Partition> add_e_hooks(const Partition& p, int e) {
  if (e < 1) fail(ErrorCode::InputError, "hook length must be >= 1");
  // Adding a hook can create up to e new rows; pad the abacus accordingly.
  AbacusView view = AbacusView::of(p, e, p.row_count() + e);
  std::set<int> beta(view.beta_set.begin(), view.beta_set.end());
  std::set<Partition> out;
  for (int x : view.beta_set) {
    if (beta.count(x + e)) continue;
    AbacusView moved = view;
    for (int& b : moved.beta_set)
      if (b == x) b = x + e;
    out.insert(moved.to_partition());
  }
  return {out.begin(), out.end()};
}

Partition e_core(const Partition& p, int e) {
  if (e < 1) fail(ErrorCode::InputError, "hook length must be >= 1");
  AbacusView view = AbacusView::of(p, e);
  auto levels = view.runner_levels();
  AbacusView core;
  core.bead_count = view.bead_count;
  core.runner_count = e;
  for (int runner = 0; runner < e; ++runner)
    for (std::size_t j = 0; j < levels[runner].size(); ++j)
      core.beta_set.push_back(runner + e * static_cast<int>(j));
  std::sort(core.beta_set.begin(), core.beta_set.end(), std::greater<int>());
  return core.to_partition();
}

int e_weight(const Partition& p, int e) {
  return (p.size() - e_core(p, e).size()) / e;
}

std::vector<Partition> e_quotient(const Partition& p, int e) {
  if (e < 1) fail(ErrorCode::InputError, "hook length must be >= 1");
  auto levels = AbacusView::of(p, e).runner_levels();
  std::vector<Partition> quotient;
  quotient.reserve(e);
  for (int runner = 0; runner < e; ++runner) {
    AbacusView component;
    component.bead_count = static_cast<int>(levels[runner].size());
    component.runner_count = 1;
    component.beta_set.assign(levels[runner].rbegin(), levels[runner].rend());
    quotient.push_back(component.to_partition());
  }
  return quotient;
}

bool reachable(const Partition& alpha, const Partition& mu, int e) {
  if (e < 1) fail(ErrorCode::InputError, "hook length must be >= 1");
  if (mu.size() < alpha.size()) return false;
  if ((mu.size() - alpha.size()) % e != 0) return false;
  int beads = std::max({alpha.row_count(), mu.row_count(), 1});
  auto from = AbacusView::of(alpha, e, beads).runner_levels();
  auto to = AbacusView::of(mu, e, beads).runner_levels();
  for (int runner = 0; runner < e; ++runner) {
    if (from[runner].size() != to[runner].size()) return false;  // different e-core
    for (std::size_t j = 0; j < from[runner].size(); ++j)
      if (from[runner][j] > to[runner][j]) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) fail(ErrorCode::InputError, "partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, n, n == 0 ? 1 : n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace orbitcert
