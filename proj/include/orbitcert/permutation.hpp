#pragma once

#include <compare>
#include <string>
#include <vector>

namespace orbitcert {

/// Permutation of {0..degree-1} stored by its image list.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);
  /// Parses disjoint-cycle notation, e.g. "(0 1)(2 3 4)"; fixed points may be
  /// omitted. "()" or "" is the identity.
  static Permutation parse_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  int order() const;
  Permutation inverse() const;
  /// Composition: (p * q)(x) = p(q(x)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation power(long long exponent) const;

  std::string cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace orbitcert
