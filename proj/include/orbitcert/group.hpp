#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "orbitcert/permutation.hpp"
#include "orbitcert/poset.hpp"

namespace orbitcert {

/// Breadth-first closure of a generating set. Throws BOUND_EXCEEDED when the
/// closure grows past the bound. The result is sorted (canonical order).
std::vector<Permutation> enumerate_elements(int degree,
                                            const std::vector<Permutation>& generators,
                                            std::size_t bound);

/// Finite permutation group with its full element set cached. Desk-scale by
/// design: exactness and simplicity over scale.
class PermutationGroup {
 public:
  static constexpr std::size_t kDefaultBound = 100'000;

  PermutationGroup(int degree, std::vector<Permutation> generators,
                   std::size_t bound = kDefaultBound);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Permutation& p) const;
  /// Index into elements(); -1 if absent.
  int element_index(const Permutation& p) const;
  const Permutation& identity() const;

 private:
  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;  // sorted
};

/// Subgroup given by its full element set (sorted). Equality is element-set
/// equality; ordering is (order, lex elements), which fixes canonical
/// representatives.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(std::vector<Permutation> elements);
  static Subgroup generated(int degree, const std::vector<Permutation>& generators,
                            std::size_t bound = PermutationGroup::kDefaultBound);
  static Subgroup trivial(int degree);

  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  int degree() const { return elements_.empty() ? 0 : elements_[0].degree(); }
  bool contains(const Permutation& p) const;
  bool subset_of(const Subgroup& other) const;
  Subgroup conjugate(const Permutation& g) const;

  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }
  bool operator<(const Subgroup& other) const {
    if (order() != other.order()) return order() < other.order();
    return elements_ < other.elements_;
  }

 private:
  std::vector<Permutation> elements_;
};

Subgroup centralizer(const PermutationGroup& g, const Subgroup& x);
Subgroup normalizer(const PermutationGroup& g, const Subgroup& x);

struct EllSubgroups {
  std::vector<Subgroup> subgroups;  // canonical order: (order, lex)
  Poset poset;                      // strict inclusion, labels "o<order>.<i>"
  bool ell_divides_order = true;    // false: empty poset, vacuous case
};

/// All non-trivial ell-subgroups of g under strict inclusion: one Sylow by
/// iterated normalizer climb, all its subgroups by maximal-extension search,
/// closed under conjugation.
EllSubgroups all_ell_subgroups(const PermutationGroup& g, int ell,
                               std::size_t sylow_bound = 1024,
                               std::size_t subgroup_bound = 50'000);

/// Exact arithmetic in GF(p^k), q <= 16, via fixed irreducible polynomials.
/// Field elements are encoded as 0..q-1 (base-p digit vectors of polynomial
/// coefficients).
class GaloisField {
 public:
  static GaloisField make(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;
  /// A generator of the multiplicative group.
  int primitive_element() const;

 private:
  GaloisField() = default;
  int p_ = 0, k_ = 0, q_ = 0;
  std::vector<int> add_, mul_, neg_;
};

struct FiniteMatrixGroupDescriptor {
  int p = 2;
  int k = 1;
  int dim = 1;
  /// Generator matrices, row-major, entries are field codes 0..q-1.
  std::vector<std::vector<std::vector<int>>> generators;
};

/// Standard generating set for GL_n(q): a transvection, the basis n-cycle and
/// swap, and a primitive diagonal when q > 2.
FiniteMatrixGroupDescriptor gl_descriptor(int n, int p, int k);

/// Faithful action on the nonzero vectors of F_q^dim, enumerated
/// lexicographically on coordinate tuples.
PermutationGroup matrix_to_permutation(const FiniteMatrixGroupDescriptor& descriptor,
                                       std::size_t bound = PermutationGroup::kDefaultBound);

/// |GL_n(q)| = prod_{i<n} (q^n - q^i).
std::uint64_t gl_order(int n, int q);

}  // namespace orbitcert
