#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ed2/errors.hpp"

namespace ed2 {

/// Bijection of {0..n-1}, stored as the image sequence. Points are 0-based
/// internally; all text rendering is 1-based cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  static Permutation transposition(int degree, int a, int b);
  // Cyclic permutation sending pts[0] -> pts[1] -> ... -> pts.back() -> pts[0].
  static Permutation cycle(int degree, const std::vector<int>& pts);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }

  // Function composition: (a.compose(b))(x) = a(b(x)), i.e. b acts first.
  Permutation compose(const Permutation& rhs) const;
  Permutation operator*(const Permutation& rhs) const { return compose(rhs); }
  Permutation inverse() const;

  bool is_identity() const;
  bool commutes_with(const Permutation& o) const;
  // Points moved by the permutation.
  std::vector<int> support() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  const std::vector<int>& images() const { return images_; }

  // 1-based disjoint-cycle rendering, e.g. "(1 2)(3 4)"; identity is "()".
  std::string cycle_string() const;

  struct Hash {
    std::size_t operator()(const Permutation& p) const;
  };

 private:
  std::vector<int> images_;
};

}  // namespace ed2
