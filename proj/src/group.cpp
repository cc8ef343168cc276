#include "orbitcert/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "orbitcert/error.hpp"

namespace orbitcert {

std::vector<Permutation> enumerate_elements(int degree,
                                            const std::vector<Permutation>& generators,
                                            std::size_t bound) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      fail(ErrorCode::InputError, "generator degree mismatch");
  std::set<Permutation> elements{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& element : frontier)
      for (const auto& generator : generators) {
        Permutation product = element * generator;
        if (elements.insert(product).second) {
          if (elements.size() > bound)
            fail(ErrorCode::BoundExceeded, "group closure exceeds bound " + std::to_string(bound));
          next.push_back(std::move(product));
        }
      }
    frontier = std::move(next);
  }
  return {elements.begin(), elements.end()};
}

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators,
                                   std::size_t bound)
    : degree_(degree), generators_(std::move(generators)) {
  elements_ = enumerate_elements(degree, generators_, bound);
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

int PermutationGroup::element_index(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements_.begin());
}

const Permutation& PermutationGroup::identity() const {
  // The identity image list (0,1,...,n-1) is lexicographically least.
  return elements_.front();
}

Subgroup::Subgroup(std::vector<Permutation> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty()) fail(ErrorCode::InputError, "subgroup must contain the identity");
  // Closure and identity checks keep the invariant cheap to trust later.
  if (!contains(Permutation::identity(elements_[0].degree())))
    fail(ErrorCode::InputError, "subgroup must contain the identity");
  for (const auto& a : elements_) {
    if (!contains(a.inverse()))
      fail(ErrorCode::InputError, "subgroup not closed under inverse");
  }
}

Subgroup Subgroup::generated(int degree, const std::vector<Permutation>& generators,
                             std::size_t bound) {
  return Subgroup(enumerate_elements(degree, generators, bound));
}

Subgroup Subgroup::trivial(int degree) {
  return Subgroup({Permutation::identity(degree)});
}

bool Subgroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool Subgroup::subset_of(const Subgroup& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

Subgroup Subgroup::conjugate(const Permutation& g) const {
  std::vector<Permutation> conjugated;
  conjugated.reserve(elements_.size());
  Permutation inverse = g.inverse();
  for (const auto& x : elements_) conjugated.push_back(g * x * inverse);
  return Subgroup(std::move(conjugated));
}

Subgroup centralizer(const PermutationGroup& g, const Subgroup& x) {
  std::vector<Permutation> out;
  for (const auto& candidate : g.elements()) {
    bool commutes = true;
    for (const auto& element : x.elements())
      if (!(candidate * element == element * candidate)) { commutes = false; break; }
    if (commutes) out.push_back(candidate);
  }
  return Subgroup(std::move(out));
}

Subgroup normalizer(const PermutationGroup& g, const Subgroup& x) {
  std::vector<Permutation> out;
  for (const auto& candidate : g.elements())
    if (x.conjugate(candidate) == x) out.push_back(candidate);
  return Subgroup(std::move(out));
}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// All subgroups of the ell-group sylow (including trivial and sylow itself),
// by extending each subgroup of order ell^k with normalizing elements whose
// ell-th power falls inside.
std::vector<Subgroup> subgroups_of_ell_group(const Subgroup& sylow, int ell,
                                             std::size_t subgroup_bound) {
  const int degree = sylow.degree();
  std::set<Subgroup> all;
  std::vector<Subgroup> level{Subgroup::trivial(degree)};
  all.insert(level[0]);
  while (!level.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : level) {
      for (const auto& x : sylow.elements()) {
        if (h.contains(x)) continue;
        if (!(h.conjugate(x) == h)) continue;  // x must normalize h
        if (!h.contains(x.power(ell))) continue;
        std::vector<Permutation> generators = h.elements();
        generators.push_back(x);
        Subgroup extended = Subgroup::generated(degree, generators);
        if (all.insert(extended).second) {
          if (all.size() > subgroup_bound)
            fail(ErrorCode::BoundExceeded, "too many subgroups of the Sylow subgroup");
          next.push_back(std::move(extended));
        }
      }
    }
    level = std::move(next);
  }
  return {all.begin(), all.end()};
}

}  // namespace

EllSubgroups all_ell_subgroups(const PermutationGroup& g, int ell,
                               std::size_t sylow_bound, std::size_t subgroup_bound) {
  if (!is_prime(ell)) fail(ErrorCode::InputError, "ell must be prime");
  EllSubgroups result;
  if (g.order() % ell != 0) {
    result.ell_divides_order = false;
    result.poset = Poset({}, {});
    return result;
  }

  std::size_t sylow_order = 1;
  for (std::size_t n = g.order(); n % ell == 0; n /= ell) sylow_order *= ell;
  if (sylow_order > sylow_bound)
    fail(ErrorCode::BoundExceeded, "Sylow subgroup order exceeds bound");

  // Seed: an element of order ell (Cauchy), taken in canonical element order.
  Subgroup sylow = Subgroup::trivial(g.degree());
  for (const auto& element : g.elements()) {
    int n = element.order();
    if (n % ell == 0) {
      sylow = Subgroup::generated(g.degree(), {element.power(n / ell)});
      break;
    }
  }
  // Normalizer climb: while proper in a Sylow, N_G(P) contains an ell-element
  // outside P; adjoin the first one found.
  while (sylow.order() < sylow_order) {
    Subgroup n = normalizer(g, sylow);
    bool grown = false;
    for (const auto& x : n.elements()) {
      int ord = x.order();
      bool ell_power = true;
      for (int m = ord; m > 1; m /= ell)
        if (m % ell != 0) { ell_power = false; break; }
      if (!ell_power || sylow.contains(x)) continue;
      std::vector<Permutation> generators = sylow.elements();
      generators.push_back(x);
      sylow = Subgroup::generated(g.degree(), generators);
      grown = true;
      break;
    }
    if (!grown) fail(ErrorCode::Internal, "normalizer climb stalled below Sylow order");
  }

  // All subgroups of the Sylow, then closure under G-conjugation.
  std::set<Subgroup> all;
  for (auto& h : subgroups_of_ell_group(sylow, ell, subgroup_bound))
    if (h.order() > 1) all.insert(std::move(h));
  std::vector<Subgroup> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : frontier)
      for (const auto& generator : g.generators()) {
        Subgroup conjugated = h.conjugate(generator);
        if (all.insert(conjugated).second) {
          if (all.size() > subgroup_bound)
            fail(ErrorCode::BoundExceeded, "too many ell-subgroups");
          next.push_back(std::move(conjugated));
        }
      }
    frontier = std::move(next);
  }

  result.subgroups.assign(all.begin(), all.end());
  std::vector<std::string> labels;
  std::size_t previous_order = 0, counter = 0;
  for (const auto& h : result.subgroups) {
    if (h.order() != previous_order) { previous_order = h.order(); counter = 0; }
    labels.push_back("o" + std::to_string(h.order()) + "." + std::to_string(counter++));
  }
  std::vector<std::pair<int, int>> strict;
  for (std::size_t a = 0; a < result.subgroups.size(); ++a)
    for (std::size_t b = 0; b < result.subgroups.size(); ++b)
      if (a != b && result.subgroups[a].order() < result.subgroups[b].order() &&
          result.subgroups[a].subset_of(result.subgroups[b]))
        strict.emplace_back(static_cast<int>(a), static_cast<int>(b));
  result.poset = Poset(std::move(labels), strict);
  return result;
}

GaloisField GaloisField::make(int p, int k) {
  if (!is_prime(p)) fail(ErrorCode::InputError, "field characteristic must be prime");
  if (k < 1) fail(ErrorCode::InputError, "field extension degree must be >= 1");
  int q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > 16) fail(ErrorCode::InputError, "field size must be <= 16");
  }
  // Fixed irreducible polynomials (monic, little-endian coefficients) for the
  // extensions that fit under q <= 16.
  std::vector<int> modulus;
  if (k == 1) {
    modulus = {0, 1};  // x
  } else if (p == 2 && k == 2) {
    modulus = {1, 1, 1};  // x^2 + x + 1
  } else if (p == 2 && k == 3) {
    modulus = {1, 1, 0, 1};  // x^3 + x + 1
  } else if (p == 2 && k == 4) {
    modulus = {1, 1, 0, 0, 1};  // x^4 + x + 1
  } else if (p == 3 && k == 2) {
    modulus = {1, 0, 1};  // x^2 + 1
  } else {
    fail(ErrorCode::InputError, "no irreducible polynomial table entry for this field");
  }

  GaloisField field;
  field.p_ = p;
  field.k_ = k;
  field.q_ = q;
  auto digits = [&](int code) {
    std::vector<int> out(k, 0);
    for (int i = 0; i < k; ++i) { out[i] = code % p; code /= p; }
    return out;
  };
  auto code_of = [&](const std::vector<int>& poly) {
    int code = 0;
    for (int i = k - 1; i >= 0; --i) code = code * p + poly[i];
    return code;
  };
  field.add_.resize(q * q);
  field.mul_.resize(q * q);
  field.neg_.resize(q);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a);
    std::vector<int> negated(k);
    for (int i = 0; i < k; ++i) negated[i] = (p - da[i]) % p;
    field.neg_[a] = code_of(negated);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<int> sum(k);
      for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
      field.add_[a * q + b] = code_of(sum);
      // Polynomial product reduced mod the irreducible polynomial.
      std::vector<int> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (int d = 2 * k - 2; d >= k; --d) {
        int coefficient = prod[d];
        if (coefficient == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < k; ++i)
          prod[d - k + i] = ((prod[d - k + i] - coefficient * modulus[i]) % p + p * p) % p;
      }
      prod.resize(k);
      field.mul_[a * q + b] = code_of(prod);
    }
  }
  return field;
}

int GaloisField::inv(int a) const {
  if (a == 0) fail(ErrorCode::InputError, "zero has no inverse");
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  fail(ErrorCode::Internal, "field inverse not found");
}

int GaloisField::primitive_element() const {
  for (int candidate = 1; candidate < q_; ++candidate) {
    int value = candidate, steps = 1;
    while (value != 1) { value = mul(value, candidate); ++steps; }
    if (steps == q_ - 1) return candidate;
  }
  fail(ErrorCode::Internal, "no primitive element found");
}

FiniteMatrixGroupDescriptor gl_descriptor(int n, int p, int k) {
  if (n < 1) fail(ErrorCode::InputError, "GL dimension must be >= 1");
  GaloisField field = GaloisField::make(p, k);
  FiniteMatrixGroupDescriptor descriptor;
  descriptor.p = p;
  descriptor.k = k;
  descriptor.dim = n;
  auto identity = [&]() {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  };
  if (n >= 2) {
    auto transvection = identity();
    transvection[0][1] = 1;
    descriptor.generators.push_back(transvection);
    std::vector<std::vector<int>> cycle(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) cycle[(i + 1) % n][i] = 1;
    descriptor.generators.push_back(cycle);
    if (n > 2) {
      auto swap01 = identity();
      swap01[0][0] = swap01[1][1] = 0;
      swap01[0][1] = swap01[1][0] = 1;
      descriptor.generators.push_back(swap01);
    }
  }
  if (field.q() > 2) {
    auto diagonal = identity();
    diagonal[0][0] = field.primitive_element();
    descriptor.generators.push_back(diagonal);
  }
  if (descriptor.generators.empty()) descriptor.generators.push_back(identity());
  return descriptor;
}

PermutationGroup matrix_to_permutation(const FiniteMatrixGroupDescriptor& descriptor,
                                       std::size_t bound) {
  GaloisField field = GaloisField::make(descriptor.p, descriptor.k);
  const int n = descriptor.dim;
  const int q = field.q();
  std::uint64_t point_count = 1;
  for (int i = 0; i < n; ++i) {
    point_count *= q;
    if (point_count - 1 > bound)
      fail(ErrorCode::BoundExceeded, "too many nonzero vectors for the degree bound");
  }
  const int degree = static_cast<int>(point_count - 1);

  // Vector with big-endian lex value v has index value-1; index 0 is
  // (0,...,0,1).
  auto vector_of = [&](int index) {
    std::vector<int> coordinates(n, 0);
    int value = index + 1;
    for (int i = n - 1; i >= 0; --i) { coordinates[i] = value % q; value /= q; }
    return coordinates;
  };
  auto index_of = [&](const std::vector<int>& coordinates) {
    long long value = 0;
    for (int i = 0; i < n; ++i) value = value * q + coordinates[i];
    return static_cast<int>(value - 1);
  };

  std::vector<Permutation> generators;
  for (const auto& matrix : descriptor.generators) {
    if (static_cast<int>(matrix.size()) != n)
      fail(ErrorCode::InputError, "generator matrix has wrong dimension");
    std::vector<int> images(degree, -1);
    for (int index = 0; index < degree; ++index) {
      auto v = vector_of(index);
      std::vector<int> w(n, 0);
      for (int i = 0; i < n; ++i) {
        if (static_cast<int>(matrix[i].size()) != n)
          fail(ErrorCode::InputError, "generator matrix has wrong dimension");
        for (int j = 0; j < n; ++j) {
          if (matrix[i][j] < 0 || matrix[i][j] >= q)
            fail(ErrorCode::InputError, "matrix entry out of field range");
          w[i] = field.add(w[i], field.mul(matrix[i][j], v[j]));
        }
      }
      long long image_value = 0;
      for (int i = 0; i < n; ++i) image_value = image_value * q + w[i];
      if (image_value == 0)
        fail(ErrorCode::InputError, "generator matrix is singular");
      images[index] = index_of(w);
    }
    generators.emplace_back(std::move(images));  // bijectivity checked here
  }
  return PermutationGroup(degree, std::move(generators), bound);
}

std::uint64_t gl_order(int n, int q) {
  std::uint64_t order = 1;
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  std::uint64_t qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= (qn - qi);
    qi *= q;
  }
  return order;
}

}  // namespace orbitcert
