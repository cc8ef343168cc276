#include "orbitcert/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "orbitcert/error.hpp"

namespace orbitcert {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int image : images_) {
    if (image < 0 || image >= degree() || seen[image])
      fail(ErrorCode::InputError, "image list is not a permutation");
    seen[image] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) { ++pos; continue; }
    if (text[pos] != '(')
      fail(ErrorCode::InputError, "expected '(' in cycle string '" + text + "'");
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos)
      fail(ErrorCode::InputError, "unbalanced cycle string '" + text + "'");
    std::istringstream in(text.substr(pos + 1, close - pos - 1));
    std::vector<int> cycle;
    std::string token;
    while (in >> token) {
      // Tolerate comma separators.
      token.erase(std::remove(token.begin(), token.end(), ','), token.end());
      if (token.empty()) continue;
      try {
        cycle.push_back(std::stoi(token));
      } catch (const std::exception&) {
        fail(ErrorCode::InputError, "bad point '" + token + "' in cycle string");
      }
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        fail(ErrorCode::InputError, "cycle point out of range in '" + text + "'");
      images[from] = to;
    }
    pos = close + 1;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::order() const {
  int result = 1;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    int length = 0, point = start;
    do {
      seen[point] = 1;
      point = images_[point];
      ++length;
    } while (point != start);
    result = static_cast<int>(std::lcm(result, length));
  }
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int i = 0; i < degree(); ++i) images[images_[i]] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<int> images(images_.size());
  for (int i = 0; i < degree(); ++i) images[i] = images_[rhs.images_[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::power(long long exponent) const {
  int n = order();
  long long e = ((exponent % n) + n) % n;
  Permutation result = identity(degree());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) { seen[start] = 1; continue; }
    out += '(';
    int point = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(point);
      seen[point] = 1;
      point = images_[point];
      first = false;
    } while (point != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace orbitcert
