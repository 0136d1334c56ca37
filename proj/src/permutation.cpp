#include "ed2/permutation.hpp"

#include <numeric>
#include <sstream>

namespace ed2 {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v]) throw RangeError("Permutation: images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  if (a < 0 || b < 0 || a >= degree || b >= degree || a == b)
    throw RangeError("transposition: bad points");
  Permutation p = identity(degree);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::cycle(int degree, const std::vector<int>& pts) {
  Permutation p = identity(degree);
  if (pts.size() < 2) return p;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    int from = pts[i];
    int to = pts[(i + 1) % pts.size()];
    if (from < 0 || from >= degree) throw RangeError("cycle: point out of range");
    p.images_[from] = to;
  }
  // Re-validate: repeated points would break bijectivity.
  return Permutation(std::move(p.images_));
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw RangeError("compose: degree mismatch");
  std::vector<int> im(images_.size());
  for (int x = 0; x < degree(); ++x) im[x] = images_[rhs.images_[x]];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int x = 0; x < degree(); ++x) im[images_[x]] = x;
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

bool Permutation::commutes_with(const Permutation& o) const {
  return compose(o) == o.compose(*this);
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) s.push_back(x);
  return s;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    any = true;
    os << "(";
    int y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = 1;
      if (!first) os << " ";
      os << (y + 1);
      first = false;
      y = images_[y];
    }
    os << ")";
  }
  if (!any) return "()";
  return os.str();
}

std::size_t Permutation::Hash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace ed2
